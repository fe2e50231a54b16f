// Prints one PASS/FAIL line per acceptance criterion and exits non-zero if
// any criterion fails.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <string>

#include "targets.hpp"

namespace {

const std::map<int, std::string> kTitles = {
    {1, "operad dimensions and Hilbert series of SAs"},
    {2, "Koszulity residuals"},
    {3, "Koszul dual table"},
    {4, "free bases and SAs normal form"},
    {5, "consequences of shift associativity"},
    {6, "nice indices"},
    {7, "inclusions CAs < SAs < CAs!"},
    {8, "classification corpus"},
    {9, "Peirce and Wedderburn structure"},
    {10, "mutations, Kantor squares, hulls, scalar mutations"},
    {11, "orbit dimensions, degeneration certificates, closed set"},
    {12, "pencil invariant separates the family a2"},
};

struct Tally {
    int pass = 0, total = 0;
    std::string first_failure;
};

}  // namespace

int main(int argc, char** argv) {
    const std::string corpus_dir = argc > 1 ? argv[1] : NASSOC_CORPUS_DIR;
    const auto start = std::chrono::steady_clock::now();
    auto corpus = nassoc::Corpus::load(corpus_dir);
    std::map<int, Tally> tally;
    for (const auto& row : nassoc::cli::run_targets(corpus, {}, 0)) {
        auto& t = tally[row.criterion];
        ++t.total;
        if (row.ok) ++t.pass;
        else if (t.first_failure.empty()) t.first_failure = row.name + (row.detail.empty() ? "" : " (" + row.detail + ")");
    }
    int failed = 0;
    for (const auto& [k, title] : kTitles) {
        const auto& t = tally[k];
        bool ok = t.total > 0 && t.pass == t.total;
        failed += !ok;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << k << ": " << title << " [" << t.pass << "/"
                  << t.total << "]";
        if (!ok) std::cout << " first failure: " << (t.total ? t.first_failure : "no checks ran");
        std::cout << "\n";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%d/%zu criteria passed in %.1f s\n", static_cast<int>(kTitles.size()) - failed, kTitles.size(), secs);
    return failed ? 1 : 0;
}

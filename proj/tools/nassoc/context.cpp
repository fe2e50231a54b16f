#include "context.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

namespace nassoc::cli {

void Report::verdict(std::string name, bool ok, std::string detail) {
    verdicts_.push_back({std::move(name), ok, std::move(detail)});
}

bool Report::ok() const {
    for (const auto& v : verdicts_)
        if (!v.ok) return false;
    return true;
}

std::string Report::render(bool as_json, double elapsed_ms) const {
    if (as_json) {
        json j;
        j["command"] = command_;
        j["ok"] = ok();
        j["verdicts"] = json::array();
        for (const auto& v : verdicts_) j["verdicts"].push_back({{"name", v.name}, {"ok", v.ok}, {"detail", v.detail}});
        j["data"] = data_;
        j["output"] = lines_;
        j["elapsed_ms"] = elapsed_ms;
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    for (const auto& l : lines_) os << l << "\n";
    for (const auto& v : verdicts_) {
        os << (v.ok ? "PASS " : "FAIL ") << v.name;
        if (!v.detail.empty()) os << ": " << v.detail;
        os << "\n";
    }
    return os.str();
}

const Corpus& Context::corpus() {
    if (!corpus_) corpus_ = Corpus::load(corpus_dir.empty() ? default_corpus_dir() : corpus_dir);
    return *corpus_;
}

std::map<std::string, Rational> Context::params() const {
    std::map<std::string, Rational> out;
    for (const auto& p : param_args) {
        auto eq = p.find('=');
        if (eq == std::string::npos) throw ParseError("--param expects name=value, got '" + p + "'", 0);
        out[p.substr(0, eq)] = Rational::parse(p.substr(eq + 1));
    }
    return out;
}

AlgebraStructure Context::algebra(const std::string& spec, bool specialize) {
    std::filesystem::path p(spec);
    auto a = std::filesystem::is_regular_file(p) ? load_algebra(p) : corpus().get(spec);
    return specialize ? a.specialize(params()) : a;
}

void Context::run(const std::string& command, const std::function<void(Report&)>& body) {
    Report report(command);
    const auto start = std::chrono::steady_clock::now();
    try {
        body(report);
    } catch (const VerificationFailed& e) {
        report.verdict("verification", false, e.what());
    } catch (const SingularForAllT& e) {
        report.verdict("invertible basis", false, e.what());
    } catch (const Error& e) {
        std::cerr << "nassoc " << command << ": " << e.what() << "\n";
        exit_code = exit_usage;
        return;
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::cout << report.render(json, ms);
    exit_code = report.ok() ? exit_ok : exit_failed;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

std::string default_corpus_dir() {
    if (const char* env = std::getenv("NASSOC_CORPUS")) return env;
    if (std::filesystem::is_directory("corpus")) return "corpus";
    return NASSOC_DEFAULT_CORPUS;
}

MatrixQ parse_rational_matrix(const std::string& text) {
    std::vector<std::vector<Rational>> rows;
    std::string rows_text = text;
    std::replace(rows_text.begin(), rows_text.end(), '|', ';');
    std::stringstream rs(rows_text);
    std::string row;
    while (std::getline(rs, row, ';')) {
        std::vector<Rational> r;
        std::stringstream es(row);
        std::string entry;
        while (es >> entry) {
            if (entry.back() == ',') entry.pop_back();
            if (!entry.empty()) r.push_back(Rational::parse(entry));
        }
        if (!r.empty()) rows.push_back(std::move(r));
    }
    if (rows.empty()) throw ParseError("empty matrix", 0);
    return MatrixQ::from_rows(rows);
}

std::string describe(const CheckResult& r) {
    return r ? "holds" : r.counterexample->to_string();
}

}  // namespace nassoc::cli

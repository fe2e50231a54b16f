#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nassoc/nassoc.hpp"

namespace nassoc::cli {

using nlohmann::json;

// One command's output.  Text and JSON renderings are produced from the same
// verdict list.
class Report {
public:
    explicit Report(std::string command) : command_(std::move(command)) {}

    // Text line plus an optional JSON field.
    void line(std::string text) { lines_.push_back(std::move(text)); }
    json& data() { return data_; }
    void verdict(std::string name, bool ok, std::string detail = {});
    bool ok() const;

    std::string render(bool as_json, double elapsed_ms) const;

private:
    struct Verdict {
        std::string name;
        bool ok;
        std::string detail;
    };
    std::string command_;
    std::vector<std::string> lines_;
    std::vector<Verdict> verdicts_;
    json data_ = json::object();
};

enum ExitCode : int { exit_ok = 0, exit_failed = 1, exit_usage = 2 };

struct Context {
    bool json = false;
    std::uint64_t seed = 0;
    std::string corpus_dir;
    std::vector<std::string> param_args;
    int exit_code = exit_ok;

    const Corpus& corpus();
    std::map<std::string, Rational> params() const;
    // Path or corpus name, specialized by --param unless told otherwise.
    AlgebraStructure algebra(const std::string& spec, bool specialize = true);

    // Runs body, renders the report and records the exit code.
    void run(const std::string& command, const std::function<void(Report&)>& body);

private:
    std::optional<Corpus> corpus_;
};

std::string join(const std::vector<std::string>& parts, const std::string& sep);
std::string default_corpus_dir();
MatrixQ parse_rational_matrix(const std::string& text);  // rows split by ';' or '|'
std::string describe(const CheckResult& r);

}  // namespace nassoc::cli

#include "nassoc/moduli/certificate_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nassoc/error.hpp"

namespace nassoc {

namespace {

using nlohmann::json;

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
}

}  // namespace

CertificateFile parse_certificate_json(std::string_view text, const Corpus& corpus,
                                       const std::map<std::string, Rational>& params) {
    const json j = parse_json(text);
    try {
        AlgebraStructure source = resolve_algebra(j.at("from").get<std::string>(), corpus);
        AlgebraStructure target = resolve_algebra(j.at("to").get<std::string>(), corpus).specialize(params);
        ParamBasis basis;
        if (j.contains("subst"))
            for (const auto& [name, value] : j.at("subst").items())
                basis.subst.emplace(name, RatFunT::parse(value.get<std::string>(), params));
        std::map<std::string, Rational> fixed;
        for (const auto& [name, value] : params)
            if (!basis.subst.count(name)) fixed.emplace(name, value);
        source = source.specialize(fixed);
        const auto& cols = j.at("basis");
        const std::size_t n = source.dim();
        if (cols.size() != n) throw DimensionMismatch("certificate basis must have one column per basis vector");
        basis.columns = MatrixT(n, n);
        for (std::size_t c = 0; c < n; ++c) {
            if (cols[c].size() != n) throw DimensionMismatch("certificate basis column has the wrong length");
            for (std::size_t r = 0; r < n; ++r) basis.columns(r, c) = RatFunT::parse(cols[c][r].get<std::string>(), params);
        }
        return {std::move(source), std::move(target), std::move(basis), j.value("note", std::string{})};
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed certificate: ") + e.what(), 0);
    }
}

CertificateFile load_certificate(const std::filesystem::path& path, const Corpus& corpus,
                                 const std::map<std::string, Rational>& params) {
    return parse_certificate_json(read_file(path), corpus, params);
}

ClosedSetSpec parse_closed_set_json(std::string_view text) {
    const json j = parse_json(text);
    try {
        return ClosedSetSpec::from_strings(j.value("contain", std::vector<std::string>{}),
                                           j.value("equations", std::vector<std::string>{}));
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed closed-set file: ") + e.what(), 0);
    }
}

ClosedSetSpec load_closed_set(const std::filesystem::path& path) {
    return parse_closed_set_json(read_file(path));
}

}  // namespace nassoc

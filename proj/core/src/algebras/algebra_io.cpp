#include "nassoc/algebras/algebra_io.hpp"

#include <algorithm>
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

Element parse_value(const AlgebraStructure& a, const json& value) {
    Element out = a.zero_element();
    for (const auto& term : value) {
        if (!term.is_array() || term.size() != 2)
            throw ParseError("product value terms must be [coefficient, label] pairs", 0);
        std::size_t k = a.basis_index(term[1].get<std::string>());
        out[k] += PolyQ::parse(term[0].get<std::string>());
    }
    return out;
}

json value_to_json(const AlgebraStructure& a, const Element& e) {
    json out = json::array();
    for (std::size_t k = 0; k < e.size(); ++k)
        if (!e[k].is_zero()) out.push_back({e[k].to_string(), a.basis()[k]});
    return out;
}

}  // namespace

AlgebraStructure parse_algebra_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
    try {
        auto basis = j.value("basis", std::vector<std::string>{});
        AlgebraStructure a(j.at("name").get<std::string>(), j.at("dim").get<std::size_t>(),
                           j.value("parameters", std::vector<std::string>{}), std::move(basis));
        for (const auto& p : j.at("products")) {
            std::size_t l = a.basis_index(p.at("left").get<std::string>());
            std::size_t r = a.basis_index(p.at("right").get<std::string>());
            a.set_product(l, r, add(a.product(l, r), parse_value(a, p.at("value"))));
        }
        a.set_claims(j.value("claims", std::vector<std::string>{}));
        a.set_description(j.value("description", std::string{}));
        std::vector<Element> idem;
        if (j.contains("idempotents"))
            for (const auto& e : j.at("idempotents")) idem.push_back(parse_value(a, e));
        a.set_idempotents(std::move(idem));
        return a;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed algebra file: ") + e.what(), 0);
    }
}

AlgebraStructure load_algebra(const std::filesystem::path& path) {
    return parse_algebra_json(read_file(path));
}

std::string algebra_to_json(const AlgebraStructure& a) {
    json j;
    j["name"] = a.name();
    j["dim"] = a.dim();
    j["basis"] = a.basis();
    j["parameters"] = a.parameters();
    json products = json::array();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t k = 0; k < a.dim(); ++k) {
            const Element& p = a.product(i, k);
            if (is_zero(p)) continue;
            products.push_back({{"left", a.basis()[i]}, {"right", a.basis()[k]}, {"value", value_to_json(a, p)}});
        }
    j["products"] = std::move(products);
    if (!a.claims().empty()) j["claims"] = a.claims();
    if (!a.idempotents().empty()) {
        json idem = json::array();
        for (const auto& e : a.idempotents()) idem.push_back(value_to_json(a, e));
        j["idempotents"] = std::move(idem);
    }
    if (!a.description().empty()) j["description"] = a.description();
    return j.dump(2);
}

Corpus Corpus::load(const std::filesystem::path& root) {
    Corpus c;
    c.root_ = root;
    if (!std::filesystem::is_directory(root)) throw Error("corpus directory not found: " + root.string());
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::recursive_directory_iterator(root))
        if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
        std::string text = read_file(f);
        json j = json::parse(text, nullptr, false);
        if (j.is_discarded() || !j.is_object() || !j.contains("products")) continue;
        AlgebraStructure a = parse_algebra_json(text);
        if (c.contains(a.name())) throw Error("duplicate corpus algebra name " + a.name());
        c.algebras_.push_back(std::move(a));
        c.paths_.push_back(f);
    }
    return c;
}

bool Corpus::contains(std::string_view name) const {
    return std::any_of(algebras_.begin(), algebras_.end(),
                       [&](const AlgebraStructure& a) { return a.name() == name; });
}

const AlgebraStructure& Corpus::get(std::string_view name) const {
    for (const auto& a : algebras_)
        if (a.name() == name) return a;
    throw Error("unknown corpus algebra '" + std::string(name) + "'");
}

const std::filesystem::path& Corpus::path_of(std::string_view name) const {
    for (std::size_t i = 0; i < algebras_.size(); ++i)
        if (algebras_[i].name() == name) return paths_[i];
    throw Error("unknown corpus algebra '" + std::string(name) + "'");
}

AlgebraStructure resolve_algebra(std::string_view spec, const Corpus& corpus) {
    std::filesystem::path p(spec);
    if (std::filesystem::is_regular_file(p)) return load_algebra(p);
    if (corpus.contains(spec)) return corpus.get(spec);
    throw Error("no algebra file or corpus entry named '" + std::string(spec) + "'");
}

}  // namespace nassoc

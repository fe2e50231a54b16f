#include "nassoc/terms/systems.hpp"

#include <array>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <utility>

#include "nassoc/error.hpp"
#include "nassoc/terms/parse.hpp"

namespace nassoc {

namespace {

// First associative type (x1 x2) x3 = x_s1 (x_s2 x_s3).
const std::array<std::pair<std::string_view, std::string_view>, 16> kSystems{{
    {"as", "((x1 x2) x3) = (x1 (x2 x3))"},
    {"sas", "((x1 x2) x3) = (x2 (x3 x1))"},
    {"a123", "((x1 x2) x3) = (x2 (x3 x1))"},
    {"cas", "((x1 x2) x3) = (x1 (x2 x3))\n(x1 (x2 x3)) = (x2 (x3 x1))"},
    {"com-as", "(x1 x2) = (x2 x1)\n((x1 x2) x3) = (x1 (x2 x3))"},
    {"a12", "((x1 x2) x3) = (x2 (x1 x3))"},
    {"a13", "((x1 x2) x3) = (x3 (x2 x1))"},
    {"a23", "((x1 x2) x3) = (x1 (x3 x2))"},
    {"a132", "((x1 x2) x3) = (x3 (x1 x2))"},
    {"cas-dual", "(x1,x2,x3) + (x2,x3,x1) + (x3,x1,x2) = 0"},
    {"free", ""},
    {"lie", "(x1 x2) + (x2 x1) = 0\n((x1 x2) x3) + ((x2 x3) x1) + ((x3 x1) x2) = 0"},
    {"jordan", "(x1 x2) = (x2 x1)\n(((x1 x1) x2) x1) = ((x1 x1) (x2 x1))"},
    {"swap", "((x1 x2) (x3 x4)) = ((x2 x1) (x4 x3))"},
    {"two-step", "((x1,x2,x3),x4,x5) = 0"},
    {"anti-poisson-jordan",
     "(x3 o [x1,x2]) + (x2 o [x1,x3]) = [x3,(x1 o x2)] + [x2,(x1 o x3)]\n"
     "[(x1 o x2),x3] + (x1 o [x2,x3]) + ([x1,x3] o x2) = 0\n"
     "[x1,(x2 o x3)] + [x3,(x1 o x2)] + [x2,(x1 o x3)] = 0\n"
     "(((x1 o x1) o x2) o x1) = ((x1 o x1) o (x2 o x1))\n"
     "[[x1,x2],x3] + [[x2,x3],x1] + [[x3,x1],x2] = 0"},
}};

}  // namespace

std::vector<std::string> builtin_system_names() {
    std::vector<std::string> out;
    for (const auto& s : kSystems) out.emplace_back(s.first);
    return out;
}

bool is_builtin_system(std::string_view name) {
    for (const auto& s : kSystems)
        if (s.first == name) return true;
    return false;
}

std::string builtin_system_text(std::string_view name) {
    for (const auto& s : kSystems)
        if (s.first == name) return std::string(s.second);
    throw Error("unknown identity system '" + std::string(name) + "'");
}

IdentitySystem builtin_system(std::string_view name) {
    return parse_system(builtin_system_text(name), std::string(name));
}

IdentitySystem load_system(std::string_view name_or_path) {
    if (is_builtin_system(name_or_path)) return builtin_system(name_or_path);
    std::filesystem::path p{std::string(name_or_path)};
    std::ifstream in(p);
    if (!in) throw Error("unknown identity system or unreadable file '" + std::string(name_or_path) + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_system(buf.str(), p.stem().string());
}

}  // namespace nassoc

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "nassoc/algebras/algebra.hpp"

namespace nassoc {

// JSON algebra format: name, dim, basis, parameters, products[{left, right,
// value: [[coefficient, label], ...]}]; optional claims, idempotents,
// description.  Omitted products are zero.
AlgebraStructure parse_algebra_json(std::string_view text);
AlgebraStructure load_algebra(const std::filesystem::path& path);
std::string algebra_to_json(const AlgebraStructure& a);

// Every algebra file below a directory, keyed by name.  Files that are not
// algebras (certificates, closed sets) are skipped.
class Corpus {
public:
    Corpus() = default;
    static Corpus load(const std::filesystem::path& root);

    const std::filesystem::path& root() const { return root_; }
    const std::vector<AlgebraStructure>& algebras() const { return algebras_; }
    bool contains(std::string_view name) const;
    const AlgebraStructure& get(std::string_view name) const;
    const std::filesystem::path& path_of(std::string_view name) const;

private:
    std::filesystem::path root_;
    std::vector<AlgebraStructure> algebras_;
    std::vector<std::filesystem::path> paths_;
};

// A path to an algebra file, or a corpus name.
AlgebraStructure resolve_algebra(std::string_view spec, const Corpus& corpus);

}  // namespace nassoc

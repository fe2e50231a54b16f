#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "nassoc/algebras/algebra.hpp"
#include "nassoc/algebras/algebra_io.hpp"
#include "nassoc/moduli/closed_set.hpp"
#include "nassoc/moduli/transform.hpp"

namespace nassoc {

struct CertificateFile {
    AlgebraStructure source;
    AlgebraStructure target;
    ParamBasis basis;
    std::string note;
};

// {"from": name-or-path, "subst": {param: f(t)}, "basis": [column, ...],
//  "to": name-or-path, "note": text}.  `params` fixes constants used in the
// entries (e.g. alpha) and specializes the target; source parameters without
// a substitution are specialized from `params` as well.
CertificateFile parse_certificate_json(std::string_view text, const Corpus& corpus,
                                       const std::map<std::string, Rational>& params = {});
CertificateFile load_certificate(const std::filesystem::path& path, const Corpus& corpus,
                                 const std::map<std::string, Rational>& params = {});

// {"contain": ["A1*A1<=A3"], "equations": ["..."]}.
ClosedSetSpec parse_closed_set_json(std::string_view text);
ClosedSetSpec load_closed_set(const std::filesystem::path& path);

}  // namespace nassoc

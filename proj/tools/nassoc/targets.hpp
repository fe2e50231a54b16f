#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "nassoc/nassoc.hpp"

namespace nassoc::cli {

// One reproduction target.  `criterion` numbers the acceptance criteria 1..12.
struct TargetRow {
    int criterion = 0;
    std::string group;
    std::string name;
    bool ok = false;
    std::string detail;
};

inline const std::vector<std::string>& target_groups() {
    static const std::vector<std::string> groups = {"operads",   "identities",   "classification",
                                                    "structure", "constructions", "geometry"};
    return groups;
}

// Runs the selected groups (all when empty).  `on_row` sees rows as they
// finish; the full list is returned as well.
std::vector<TargetRow> run_targets(const Corpus& corpus, const std::set<std::string>& groups, std::uint64_t seed,
                                   const std::function<void(const TargetRow&)>& on_row = {});

}  // namespace nassoc::cli

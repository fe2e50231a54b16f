#include "nassoc/terms/polarize.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "nassoc/error.hpp"

namespace nassoc {

namespace {

// Sum over all ways of replacing the occurrences of each variable by
// distinct fresh variables of its block.
Expr polarize_component(const Expr& component, const std::vector<int>& multiplicity) {
    const std::size_t nv = multiplicity.size();
    std::vector<int> block_start(nv + 1, 1);
    for (std::size_t v = 1; v < nv; ++v) block_start[v + 1] = block_start[v] + multiplicity[v];

    Expr out;
    for (const auto& [w, c] : component.terms()) {
        const auto& leaves = w.leaves();
        // positions of each variable, in order
        std::vector<std::vector<std::size_t>> pos(nv);
        for (std::size_t i = 0; i < leaves.size(); ++i) pos[static_cast<std::size_t>(leaves[i])].push_back(i);
        std::vector<std::vector<int>> perms(nv);
        for (std::size_t v = 1; v < nv; ++v) {
            perms[v].resize(static_cast<std::size_t>(multiplicity[v]));
            std::iota(perms[v].begin(), perms[v].end(), block_start[v]);
        }
        // Odometer over the product of symmetric groups, one per variable.
        for (;;) {
            std::vector<int> l(leaves.size());
            for (std::size_t v = 1; v < nv; ++v)
                for (std::size_t k = 0; k < pos[v].size(); ++k) l[pos[v][k]] = perms[v][k];
            out.add(w.with_leaves(std::move(l)), c);
            std::size_t v = 1;
            for (; v < nv; ++v) {
                if (std::next_permutation(perms[v].begin(), perms[v].end())) break;
            }
            if (v == nv) break;
        }
    }
    return out;
}

}  // namespace

std::vector<Identity> multilinearize(const Identity& id) {
    if (id.expr.is_zero()) return {};
    if (!id.expr.degree()) throw NotHomogeneous("identity is not homogeneous in total degree: " + id.to_string());
    if (id.is_multilinear()) return {id};

    const int nv = id.expr.max_variable();
    std::map<std::vector<int>, Expr> components;
    for (const auto& [w, c] : id.expr.terms()) {
        std::vector<int> md(static_cast<std::size_t>(nv) + 1, 0);
        for (int v : w.leaves()) ++md[static_cast<std::size_t>(v)];
        components[md].add(w, c);
    }
    std::vector<Identity> out;
    for (const auto& [md, comp] : components) {
        Expr p = polarize_component(comp, md);
        if (!p.is_zero()) out.push_back(Identity::from_expr(p, id.source));
    }
    return out;
}

IdentitySystem multilinearize(const IdentitySystem& sys) {
    IdentitySystem out{sys.name, {}};
    for (const auto& id : sys.identities)
        for (auto& m : multilinearize(id)) out.identities.push_back(std::move(m));
    return out;
}

}  // namespace nassoc

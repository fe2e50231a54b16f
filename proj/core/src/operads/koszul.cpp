#include "nassoc/operads/koszul.hpp"

#include <map>

#include "nassoc/error.hpp"
#include "nassoc/operads/consequences.hpp"
#include "nassoc/terms/systems.hpp"

namespace nassoc {

namespace {
const MultilinearSpace& space3() {
    static const MultilinearSpace s(3);
    return s;
}

EchelonBasis closed_basis(const std::vector<SparseVec>& rows) {
    const auto& sp = space3();
    EchelonBasis b(sp.dim());
    for (const auto& r : rows) {
        Expr e = sp.to_expr(r);
        for (const auto& p : Permutation::all(3)) b.insert(sp.to_vector(apply_permutation(e, p)));
    }
    b.finalize();
    return b;
}
}  // namespace

OperadPresentation::OperadPresentation() : basis_(space3().dim()) { basis_.finalize(); }

OperadPresentation::OperadPresentation(const std::vector<SparseVec>& relations) : basis_(closed_basis(relations)) {}

std::vector<Expr> OperadPresentation::relation_exprs() const {
    std::vector<Expr> out;
    for (const auto& r : basis_.rows()) out.push_back(space3().to_expr(r));
    return out;
}

OperadPresentation presentation_of(const IdentitySystem& sys) {
    std::vector<SparseVec> rows;
    for (const auto& id : sys.identities) {
        if (!id.is_multilinear() || id.degree != 3)
            throw NotQuadratic("not a binary quadratic identity: " + id.to_string());
        rows.push_back(space3().to_vector(id.expr));
    }
    return OperadPresentation(rows);
}

OperadPresentation koszul_dual(const OperadPresentation& p) {
    const auto& sp = space3();
    const EchelonBasis& R = p.relations();

    // J = sum over cyclic (i,j,k) of [[X_i, X_j], X_k] with [X,Y] = XY - YX.
    // Each summand is w(a,b,c) (x) w(u,v,w) for one word shape and labelling,
    // so J is recorded by the coefficient of the common word.
    Expr J;
    const int cyc[3][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
    for (const auto& c : cyc) {
        Expr xi = Expr::var(c[0]), xj = Expr::var(c[1]), xk = Expr::var(c[2]);
        Expr br = xi * xj - xj * xi;
        J += br * xk - xk * br;
    }

    // E_beta = sum_w J_w * N(w)_beta * w_U, with N(w) the reduction of the
    // S-side word modulo R onto the free columns beta.
    std::map<std::uint32_t, Expr> E;
    for (const auto& [w, jw] : J.terms()) {
        std::uint32_t col = sp.column(w);
        SparseVec nf = R.reduce({{col, Rational(1)}});
        for (const auto& [beta, coef] : nf) E[beta].add(w, jw * coef);
    }
    std::vector<SparseVec> rows;
    for (const auto& [beta, e] : E)
        if (!e.is_zero()) rows.push_back(sp.to_vector(e));
    return OperadPresentation(rows);
}

IdentitySystem system_from_presentation(const OperadPresentation& p, std::string name) {
    IdentitySystem sys{std::move(name), {}};
    for (const auto& e : p.relation_exprs()) sys.identities.push_back(Identity::from_expr(e));
    return sys;
}

IdentitySystem dual_system(const IdentitySystem& sys) {
    return system_from_presentation(koszul_dual(presentation_of(sys)), sys.name + "!");
}

IdentitySystem resolve_system(std::string_view spec) {
    if (!spec.empty() && spec.back() == '!') return dual_system(resolve_system(spec.substr(0, spec.size() - 1)));
    return load_system(spec);
}

}  // namespace nassoc

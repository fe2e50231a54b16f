#include <memory>

#include "commands.hpp"

namespace nassoc::cli {

namespace {

std::vector<std::string> table_lines(const AlgebraStructure& a) {
    std::vector<std::string> out;
    std::string t = a.table();
    std::size_t start = 0;
    while (start < t.size()) {
        auto end = t.find('\n', start);
        if (end == std::string::npos) end = t.size();
        if (end > start) out.push_back(t.substr(start, end - start));
        start = end + 1;
    }
    return out;
}

void emit_algebra(Report& r, const AlgebraStructure& a) {
    auto lines = table_lines(a);
    for (const auto& l : lines) r.line(l);
    r.data()["algebra"] = json::parse(algebra_to_json(a));
}

// "auto" checks basis tuples when the constants are rational, generic elements otherwise.
CheckMode parse_mode(const std::string& m, const AlgebraStructure& a) {
    if (m == "auto") return a.is_parametric() ? CheckMode::symbolic : CheckMode::multilinear;
    if (m == "symbolic") return CheckMode::symbolic;
    if (m == "multilinear") return CheckMode::multilinear;
    throw Error("unknown check mode '" + m + "'");
}

void verdict_check(Report& r, const AlgebraStructure& a, const std::string& system, CheckMode mode) {
    auto res = check_identity(a, resolve_system(system), mode);
    r.verdict(a.name() + " satisfies " + system, static_cast<bool>(res), describe(res));
}

std::string subspace_text(const Subspace& s, const AlgebraStructure& a) {
    if (s.is_zero()) return "0";
    std::vector<std::string> parts;
    for (const auto& v : s.basis()) parts.push_back(to_string(to_element(v), a.basis()));
    return "<" + join(parts, ", ") + ">";
}

struct AlgebraOpt {
    std::string algebra;
    std::string check;
    std::string mode = "auto";
};

CLI::App* algebra_sub(CLI::App& app, const std::string& name, const std::string& desc, AlgebraOpt& o) {
    auto* sub = app.add_subcommand(name, desc);
    sub->add_option("--algebra", o.algebra, "algebra JSON path or corpus name")->required();
    return sub;
}

}  // namespace

void register_algebra_commands(CLI::App& app, Context& ctx) {
    {
        auto o = std::make_shared<AlgebraOpt>();
        auto ident = std::make_shared<std::string>();
        auto* sub = algebra_sub(app, "check-identity", "check identities on an algebra", *o);
        sub->add_option("--system", o->check, "system name or path (default: the algebra's claims)");
        sub->add_option("--identity", *ident, "single identity in the DSL");
        sub->add_option("--mode", o->mode, "auto, symbolic or multilinear")->capture_default_str();
        sub->callback([&ctx, o, ident] {
            ctx.run("check-identity", [&](Report& r) {
                auto a = ctx.algebra(o->algebra);
                auto mode = parse_mode(o->mode, a);
                if (!ident->empty()) {
                    auto res = check_identity(a, parse_identity(*ident), mode);
                    r.verdict(a.name() + " satisfies " + *ident, static_cast<bool>(res), describe(res));
                }
                if (!o->check.empty()) verdict_check(r, a, o->check, mode);
                if (ident->empty() && o->check.empty()) {
                    if (a.claims().empty()) throw Error("give --system or --identity; the algebra lists no claims");
                    for (const auto& c : a.claims()) verdict_check(r, a, c, mode);
                }
            });
        });
    }
    {
        auto o = std::make_shared<AlgebraOpt>();
        auto p = std::make_shared<std::string>(), q = std::make_shared<std::string>();
        auto* sub = algebra_sub(app, "mutate", "mutation x *_{p,q} y = (xp)y - (yq)x", *o);
        sub->add_option("--p", *p, "element p, e.g. e1 or 'a*e1 + e2'")->required();
        sub->add_option("--q", *q, "element q")->required();
        sub->add_option("--check", o->check, "system the result must satisfy")->default_val("cas");
        sub->callback([&ctx, o, p, q] {
            ctx.run("mutate", [&](Report& r) {
                auto a = ctx.algebra(o->algebra);
                auto m = mutation(a, a.parse_element(*p), a.parse_element(*q));
                emit_algebra(r, m);
                if (!o->check.empty()) verdict_check(r, m, o->check, CheckMode::symbolic);
            });
        });
    }
    {
        auto o = std::make_shared<AlgebraOpt>();
        auto p = std::make_shared<std::string>();
        auto* sub = algebra_sub(app, "kantor", "Kantor square x *_p y = p(xy) - (px)y - x(py)", *o);
        sub->add_option("--p", *p, "element p")->required();
        sub->add_option("--check", o->check, "system the result must satisfy")->default_val("cas");
        sub->callback([&ctx, o, p] {
            ctx.run("kantor", [&](Report& r) {
                auto a = ctx.algebra(o->algebra);
                auto k = kantor_square(a, a.parse_element(*p));
                emit_algebra(r, k);
                if (!o->check.empty()) verdict_check(r, k, o->check, CheckMode::symbolic);
            });
        });
    }
    {
        auto o = std::make_shared<AlgebraOpt>();
        auto* sub = algebra_sub(app, "hull", "unital hull A + Q u", *o);
        sub->add_option("--check", o->check, "system to test on the hull");
        sub->callback([&ctx, o] {
            ctx.run("hull", [&](Report& r) {
                auto h = unital_hull(ctx.algebra(o->algebra));
                emit_algebra(r, h);
                if (!o->check.empty()) verdict_check(r, h, o->check, CheckMode::symbolic);
            });
        });
    }
    {
        auto dot = std::make_shared<std::string>(), star = std::make_shared<std::string>();
        auto* sub = app.add_subcommand("compatible", "are two products on one space compatible shift associative");
        sub->add_option("--dot", *dot, "first algebra")->required();
        sub->add_option("--star", *star, "second algebra")->required();
        sub->callback([&ctx, dot, star] {
            ctx.run("compatible", [&](Report& r) {
                auto a = ctx.algebra(*dot), b = ctx.algebra(*star);
                auto res = compatible_check(a, b);
                r.verdict(a.name() + " and " + b.name() + " compatible", static_cast<bool>(res), describe(res));
            });
        });
    }
    {
        auto o = std::make_shared<AlgebraOpt>();
        auto* sub = algebra_sub(app, "derivations", "derivation algebra Der(A)", *o);
        sub->callback([&ctx, o] {
            ctx.run("derivations", [&](Report& r) {
                auto d = derivation_algebra(ctx.algebra(o->algebra));
                r.line("dim " + std::to_string(d.dim));
                json maps = json::array();
                for (const auto& m : d.basis) {
                    r.line(to_string(m));
                    maps.push_back(to_string(m));
                }
                r.data()["dim"] = d.dim;
                r.data()["basis"] = maps;
            });
        });
    }
    {
        auto o = std::make_shared<AlgebraOpt>();
        auto map = std::make_shared<std::string>();
        auto degree = std::make_shared<int>(3);
        auto shape = std::make_shared<std::string>();
        auto* sub = algebra_sub(app, "leibniz", "is a linear map a Leibniz derivation of degree n", *o);
        sub->add_option("--map", *map, "matrix rows split by ';' or '|' (column j is the image of e_j)")->required();
        sub->add_option("--degree", *degree, "arity n")->capture_default_str();
        sub->add_option("--shape", *shape, "bracketing shape code (default: all)");
        sub->callback([&ctx, o, map, degree, shape] {
            ctx.run("leibniz", [&](Report& r) {
                auto a = ctx.algebra(o->algebra);
                auto d = parse_rational_matrix(*map);
                std::optional<std::string> s;
                if (!shape->empty()) s = *shape;
                r.verdict("Leibniz derivation of degree " + std::to_string(*degree),
                          is_leibniz_derivation(a, d, *degree, s));
            });
        });
    }
    {
        auto o = std::make_shared<AlgebraOpt>();
        auto* sub = algebra_sub(app, "powers", "lower and derived power chains", *o);
        sub->callback([&ctx, o] {
            ctx.run("powers", [&](Report& r) {
                auto a = ctx.algebra(o->algebra);
                auto p = powers_and_nilpotency(a);
                std::vector<std::string> lower, derived;
                for (const auto& s : p.lower) lower.push_back(std::to_string(s.dim()));
                for (const auto& s : p.derived) derived.push_back(std::to_string(s.dim()));
                r.line("lower " + join(lower, " "));
                r.line("derived " + join(derived, " "));
                r.line(std::string("nilpotent ") + (p.nilpotent ? "yes" : "no") +
                       (p.nilpotency_class ? " class " + std::to_string(*p.nilpotency_class) : ""));
                r.line(std::string("solvable ") + (p.solvable ? "yes" : "no"));
                r.data()["lower"] = lower;
                r.data()["derived"] = derived;
                r.data()["nilpotent"] = p.nilpotent;
                r.data()["solvable"] = p.solvable;
                r.data()["nilpotency_class"] = p.nilpotency_class ? json(*p.nilpotency_class) : json(nullptr);
            });
        });
    }
    {
        auto o = std::make_shared<AlgebraOpt>();
        auto idem = std::make_shared<std::vector<std::string>>();
        auto* sub = algebra_sub(app, "peirce", "Peirce decomposition relative to an idempotent", *o);
        sub->add_option("--idempotent", *idem, "idempotent element (default: the algebra's listed ones)");
        sub->callback([&ctx, o, idem] {
            ctx.run("peirce", [&](Report& r) {
                auto a = ctx.algebra(o->algebra);
                std::vector<Element> es;
                for (const auto& s : *idem) es.push_back(a.parse_element(s));
                if (es.empty()) es = a.idempotents();
                if (es.empty()) throw Error("give --idempotent; the algebra lists none");
                for (const auto& e : es) {
                    auto label = to_string(e, a.basis());
                    auto p = peirce(a, e);
                    r.line(label + ": A0 = " + subspace_text(p.a0, a) + ", A1/2 = " + subspace_text(p.a_half, a) +
                           ", A1 = " + subspace_text(p.a1, a));
                    r.verdict("decomposition for " + label, p.decomposes());
                    r.verdict("e x = x e for " + label, p.e_commutes);
                }
            });
        });
    }
    {
        auto o = std::make_shared<AlgebraOpt>();
        auto* sub = algebra_sub(app, "wedderburn", "split A = S + R with verification", *o);
        sub->callback([&ctx, o] {
            ctx.run("wedderburn", [&](Report& r) {
                auto a = ctx.algebra(o->algebra);
                auto w = wedderburn_report(a);
                r.line("S = " + subspace_text(w.s, a));
                r.line("R = " + subspace_text(w.r, a));
                std::vector<std::string> idems;
                for (const auto& e : w.idempotents) idems.push_back(to_string(to_element(e), a.basis()));
                r.line("idempotents " + (idems.empty() ? std::string("none") : join(idems, ", ")));
                r.data()["s_dim"] = w.s.dim();
                r.data()["r_dim"] = w.r.dim();
                r.data()["idempotents"] = idems;
                r.verdict("R ideal", w.r_ideal);
                r.verdict("R nilpotent", w.r_nilpotent);
                r.verdict("S closed", w.s_closed);
                r.verdict("S commutative associative", w.s_commutative_associative);
                r.verdict("A = S + R", w.direct_sum);
            });
        });
    }
    {
        auto lie = std::make_shared<std::string>();
        auto forms = std::make_shared<std::vector<std::string>>();
        auto check = std::make_shared<std::string>("sas");
        auto expect = std::make_shared<std::string>();
        auto* sub = app.add_subcommand("cocycle", "x . y = theta(x, y) + [x, y] on a Lie algebra");
        sub->add_option("--lie", *lie, "Lie algebra JSON path or corpus name")->required();
        sub->add_option("--form", *forms, "component 'e3=D11 + alpha*D22'; Dij is the symmetric form e_i^* e_j^*")
            ->required();
        sub->add_option("--check", *check, "system the result must satisfy")->capture_default_str();
        sub->add_option("--expect", *expect, "algebra the result must equal");
        sub->callback([&ctx, lie, forms, check, expect] {
            ctx.run("cocycle", [&](Report& r) {
                auto l = ctx.algebra(*lie);
                CocycleSpec theta(l.dim());
                for (const auto& f : *forms) {
                    auto eq = f.find('=');
                    if (eq == std::string::npos) throw Error("--form expects label=form, got '" + f + "'");
                    theta.add_form(l.basis_index(f.substr(0, eq)), PolyQ::parse(f.substr(eq + 1)));
                }
                auto a = algebra_from_cocycle(l, theta).specialize(ctx.params());
                emit_algebra(r, a);
                if (!check->empty()) verdict_check(r, a, *check, CheckMode::symbolic);
                if (!expect->empty()) r.verdict("equals " + *expect, a == ctx.algebra(*expect));
            });
        });
    }
    {
        auto algebras = std::make_shared<std::vector<std::string>>();
        auto* sub = app.add_subcommand("fingerprint", "isomorphism invariants");
        sub->add_option("--algebra", *algebras, "algebra paths or corpus names")->required();
        sub->callback([&ctx, algebras] {
            ctx.run("fingerprint", [&](Report& r) {
                for (const auto& s : *algebras) {
                    auto a = ctx.algebra(s);
                    auto f = fingerprint(a).to_string();
                    r.line(a.name() + ": " + f);
                    r.data()[a.name()] = f;
                }
            });
        });
    }
}

}  // namespace nassoc::cli

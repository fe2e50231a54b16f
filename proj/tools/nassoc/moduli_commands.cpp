#include <algorithm>
#include <memory>
#include <random>
#include <sstream>

#include "commands.hpp"

namespace nassoc::cli {

namespace {

// Rows split by ';' or '|', entries by ','; entries are rational functions of t.
MatrixT parse_ratfun_matrix(const std::string& text, const std::map<std::string, Rational>& params) {
    std::vector<std::vector<RatFunT>> rows;
    std::string rows_text = text;
    std::replace(rows_text.begin(), rows_text.end(), '|', ';');
    std::stringstream rs(rows_text);
    std::string row;
    while (std::getline(rs, row, ';')) {
        std::vector<RatFunT> r;
        std::stringstream es(row);
        std::string entry;
        while (std::getline(es, entry, ','))
            if (entry.find_first_not_of(" \t") != std::string::npos) r.push_back(RatFunT::parse(entry, params));
        if (!r.empty()) rows.push_back(std::move(r));
    }
    if (rows.empty()) throw Error("empty basis matrix");
    return MatrixT::from_rows(rows);
}

void emit_certificate(Report& r, const DegenerationCertificate& c) {
    json entries = json::array();
    for (const auto& e : c.entries) {
        if (e.value.is_zero() && e.expected.is_zero()) continue;
        std::string name = "c[" + std::to_string(e.i + 1) + "][" + std::to_string(e.j + 1) + "][" +
                           std::to_string(e.k + 1) + "]";
        std::string limit = e.limit ? e.limit->to_string() : "pole";
        r.line(name + "(t) = " + e.value.to_string() + " -> " + limit + " (expected " + e.expected.to_string() + ")");
        entries.push_back({{"entry", name}, {"value", e.value.to_string()}, {"limit", limit},
                           {"expected", e.expected.to_string()}, {"ok", e.ok}});
    }
    r.data()["entries"] = entries;
    r.verdict(c.source + " -> " + c.target, c.verdict, c.failure);
}

}  // namespace

void register_moduli_commands(CLI::App& app, Context& ctx) {
    {
        auto algebra = std::make_shared<std::string>(), basis = std::make_shared<std::string>();
        auto* sub = app.add_subcommand("transform", "structure constants in a new basis");
        sub->add_option("--algebra", *algebra, "algebra JSON path or corpus name")->required();
        sub->add_option("--basis", *basis, "invertible matrix, rows split by ';' or '|'; column i is the new E_i")
            ->required();
        sub->callback([&ctx, algebra, basis] {
            ctx.run("transform", [&](Report& r) {
                auto b = change_basis(ctx.algebra(*algebra), parse_rational_matrix(*basis));
                std::istringstream t(b.table());
                for (std::string l; std::getline(t, l);)
                    if (!l.empty()) r.line(l);
                r.data()["algebra"] = json::parse(algebra_to_json(b));
            });
        });
    }
    {
        struct Opts {
            std::string cert, from, to, basis;
            bool search = false, necessary = false;
            int max_exponent = 6;
        };
        auto o = std::make_shared<Opts>();
        auto* sub = app.add_subcommand("degenerate", "verify a degeneration A -> B");
        sub->add_option("--cert", o->cert, "certificate JSON");
        sub->add_option("--from", o->from, "source algebra");
        sub->add_option("--to", o->to, "target algebra");
        sub->add_option("--basis", o->basis, "basis over Q(t), rows split by ';' or '|', entries by ','");
        sub->add_flag("--search", o->search, "search diagonal monomial bases t^k");
        sub->add_option("--max-exponent", o->max_exponent, "largest exponent for --search")->capture_default_str();
        sub->add_flag("--necessary", o->necessary, "also report invariant-based necessary conditions");
        sub->callback([&ctx, o] {
            ctx.run("degenerate", [&](Report& r) {
                std::optional<AlgebraStructure> a, b;
                if (!o->cert.empty()) {
                    auto cert = load_certificate(o->cert, ctx.corpus(), ctx.params());
                    if (!cert.note.empty()) r.line(cert.note);
                    emit_certificate(r, degeneration_check(cert.source, cert.basis, cert.target));
                    a = cert.source.specialize(ctx.params());
                    b = cert.target;
                } else {
                    if (o->from.empty() || o->to.empty()) throw Error("give --cert, or --from and --to");
                    a = ctx.algebra(o->from);
                    b = ctx.algebra(o->to);
                    if (!o->basis.empty()) {
                        ParamBasis p{parse_ratfun_matrix(o->basis, ctx.params()), {}};
                        emit_certificate(r, degeneration_check(*a, p, *b));
                    } else if (o->search) {
                        auto found = search_monomial_basis(*a, *b, o->max_exponent);
                        if (found) {
                            r.line("basis " + to_string(found->columns));
                            emit_certificate(r, degeneration_check(*a, *found, *b));
                        } else {
                            r.verdict("monomial basis found", false, "no diagonal t^k basis up to the exponent bound");
                        }
                    } else if (!o->necessary) {
                        throw Error("give --basis, --search or --necessary");
                    }
                }
                if (o->necessary) {
                    if (a->is_parametric() || b->is_parametric())
                        throw ParametricNotSupported("necessary conditions need --param values");
                    auto n = degeneration_necessary(*a, *b);
                    for (const auto& c : n.checks)
                        r.verdict("necessary: " + c.name, c.passes, c.detail);
                }
            });
        });
    }
    {
        auto algebra = std::make_shared<std::string>();
        auto family = std::make_shared<bool>(false);
        auto* sub = app.add_subcommand("orbit-dim", "n^2 - dim Der(A), or the family orbit dimension");
        sub->add_option("--algebra", *algebra, "algebra JSON path or corpus name")->required();
        sub->add_flag("--family", *family, "count the parameters as well; --param gives the sample point");
        sub->callback([&ctx, algebra, family] {
            ctx.run("orbit-dim", [&](Report& r) {
                std::size_t d = *family ? family_orbit_dim(ctx.algebra(*algebra, false), ctx.params())
                                        : orbit_dim(ctx.algebra(*algebra));
                r.line(std::to_string(d));
                r.data()["orbit_dim"] = d;
            });
        });
    }
    {
        auto spec = std::make_shared<std::string>();
        auto algebras = std::make_shared<std::vector<std::string>>();
        auto expect = std::make_shared<std::string>();
        auto borel = std::make_shared<std::size_t>(0);
        auto* sub = app.add_subcommand("closed-set", "membership in a closed set given by containments and equations");
        sub->add_option("--spec", *spec, "closed-set JSON")->required();
        sub->add_option("--algebra", *algebras, "algebra JSON paths or corpus names")->required();
        sub->add_option("--expect", *expect, "member or non-member; turns the result into a verdict")
            ->check(CLI::IsMember({"member", "non-member"}));
        sub->add_option("--borel", *borel, "number of seeded lower-triangular basis changes to test");
        sub->callback([&ctx, spec, algebras, expect, borel] {
            ctx.run("closed-set", [&](Report& r) {
                auto s = load_closed_set(*spec);
                for (const auto& name : *algebras) {
                    auto a = ctx.algebra(name);
                    auto m = closed_set_report(s, a);
                    r.line(a.name() + ": " + (m.member ? "member" : "not a member"));
                    for (const auto& v : m.violations) r.line("  " + v);
                    r.data()[a.name()] = m.member;
                    if (!expect->empty())
                        r.verdict(a.name() + " " + *expect, m.member == (*expect == "member"));
                    if (*borel > 0) {
                        auto ev = borel_stability_evidence(s, a, *borel, ctx.seed);
                        r.verdict(a.name() + " membership stable under Borel samples", ev.agreeing == ev.samples,
                                  std::to_string(ev.agreeing) + "/" + std::to_string(ev.samples));
                    }
                }
            });
        });
    }
    {
        auto algebra = std::make_shared<std::string>();
        auto samples = std::make_shared<std::size_t>(0);
        auto* sub = app.add_subcommand("pencil-invariant", "det of the symmetric part over the squared structure constant");
        sub->add_option("--algebra", *algebra, "3-dim algebra with 1-dim square")->required();
        sub->add_option("--samples", *samples, "also check invariance under seeded random basis changes");
        sub->callback([&ctx, algebra, samples] {
            ctx.run("pencil-invariant", [&](Report& r) {
                auto a = ctx.algebra(*algebra);
                auto v = pencil_invariant(a);
                r.line(v.to_string());
                r.data()["invariant"] = v.to_string();
                if (*samples == 0) return;
                std::mt19937_64 rng(ctx.seed);
                std::uniform_int_distribution<int> dist(-3, 3);
                std::size_t agree = 0;
                for (std::size_t s = 0; s < *samples; ++s) {
                    MatrixQ p(a.dim(), a.dim());
                    do {
                        for (std::size_t i = 0; i < a.dim(); ++i)
                            for (std::size_t j = 0; j < a.dim(); ++j) p(i, j) = Rational(dist(rng));
                    } while (determinant(p).is_zero());
                    if (pencil_invariant(change_basis(a, p)) == v) ++agree;
                }
                r.verdict("invariant under basis changes", agree == *samples,
                          std::to_string(agree) + "/" + std::to_string(*samples));
            });
        });
    }
}

}  // namespace nassoc::cli

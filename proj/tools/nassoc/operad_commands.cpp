#include <memory>

#include "commands.hpp"

namespace nassoc::cli {

namespace {

struct SystemOpts {
    std::string system = "sas";
    int max_degree = 5;
};

void add_system(CLI::App* sub, SystemOpts& o) {
    sub->add_option("--system", o.system, "built-in name or DSL path; a trailing ! takes the Koszul dual")
        ->capture_default_str();
}

// Degree-wise operations need multilinear identities.
IdentitySystem operad_system(const std::string& spec) { return multilinearize(resolve_system(spec)); }

std::vector<std::string> identity_lines(const IdentitySystem& sys) {
    std::vector<std::string> out;
    for (const auto& id : sys.identities) out.push_back(id.to_string());
    return out;
}

}  // namespace

void register_operad_commands(CLI::App& app, Context& ctx) {
    {
        auto o = std::make_shared<SystemOpts>();
        auto* sub = app.add_subcommand("dims", "dimensions of the multilinear components P(1..N)");
        add_system(sub, *o);
        sub->add_option("--max-degree", o->max_degree, "largest degree N")->capture_default_str();
        sub->callback([&ctx, o] {
            ctx.run("dims", [&](Report& r) {
                auto sys = operad_system(o->system);
                std::vector<std::string> dims;
                for (int n = 1; n <= o->max_degree; ++n) dims.push_back(std::to_string(multilinear_dim(sys, n)));
                r.line(join(dims, " "));
                r.data()["system"] = o->system;
                r.data()["dims"] = dims;
            });
        });
    }
    {
        auto o = std::make_shared<SystemOpts>();
        auto* sub = app.add_subcommand("hilbert", "exponential generating series sum -dim P(n) (-t)^n / n!");
        add_system(sub, *o);
        sub->add_option("--max-degree", o->max_degree, "truncation order")->capture_default_str();
        sub->callback([&ctx, o] {
            ctx.run("hilbert", [&](Report& r) {
                auto s = hilbert(operad_system(o->system), o->max_degree).to_string();
                r.line(s);
                r.data()["series"] = s;
            });
        });
    }
    {
        auto o = std::make_shared<SystemOpts>();
        auto dual = std::make_shared<std::string>();
        auto* sub = app.add_subcommand("koszulity", "residual of g_P(-g_Q(-t)) - t (zero for Koszul pairs)");
        add_system(sub, *o);
        sub->add_option("--dual", *dual, "second system (default: the Koszul dual of --system)");
        sub->add_option("--max-degree", o->max_degree, "truncation order")->capture_default_str();
        sub->callback([&ctx, o, dual] {
            ctx.run("koszulity", [&](Report& r) {
                auto p = operad_system(o->system);
                auto q = operad_system(dual->empty() ? o->system + "!" : *dual);
                auto res = koszulity_residual(p, q, o->max_degree);
                r.line(res.to_string());
                r.data()["residual"] = res.to_string();
            });
        });
    }
    {
        auto o = std::make_shared<SystemOpts>();
        auto expect = std::make_shared<std::string>();
        auto* sub = app.add_subcommand("dual", "Koszul dual of a quadratic system");
        add_system(sub, *o);
        sub->add_option("--expect", *expect, "system whose relation space the dual must equal");
        sub->callback([&ctx, o, expect] {
            ctx.run("dual", [&](Report& r) {
                auto sys = resolve_system(o->system);
                auto d = dual_system(sys);
                auto lines = identity_lines(d);
                for (const auto& l : lines) r.line(l);
                r.data()["identities"] = lines;
                if (!expect->empty()) {
                    bool same = koszul_dual(presentation_of(sys)) == presentation_of(resolve_system(*expect));
                    r.verdict("dual equals " + *expect, same);
                }
            });
        });
    }
    {
        auto o = std::make_shared<SystemOpts>();
        auto target = std::make_shared<std::string>();
        auto degrees = std::make_shared<std::vector<int>>(std::vector<int>{3, 4});
        auto* sub = app.add_subcommand("implies", "every identity of --target follows from --system");
        add_system(sub, *o);
        sub->add_option("--target", *target, "system to derive")->required();
        sub->add_option("--degree", *degrees, "degrees to compare")->capture_default_str();
        sub->callback([&ctx, o, target, degrees] {
            ctx.run("implies", [&](Report& r) {
                auto a = operad_system(o->system), b = operad_system(*target);
                for (int n : *degrees)
                    r.verdict(o->system + " implies " + *target + " in degree " + std::to_string(n), implies(a, b, n));
            });
        });
    }
    {
        auto o = std::make_shared<SystemOpts>();
        auto exprs = std::make_shared<std::vector<std::string>>();
        auto file = std::make_shared<std::string>();
        auto* sub = app.add_subcommand("prove-zero", "decide whether expressions vanish in the free algebra");
        add_system(sub, *o);
        sub->add_option("--expr", *exprs, "expression or identity in the DSL, repeatable")->allow_extra_args(false);
        sub->add_option("--file", *file, "file of identities, one per line");
        sub->callback([&ctx, o, exprs, file] {
            ctx.run("prove-zero", [&](Report& r) {
                auto sys = operad_system(o->system);
                std::vector<Identity> ids;
                for (const auto& e : *exprs) ids.push_back(parse_identity(e));
                if (!file->empty())
                    for (auto& id : load_system(*file).identities) ids.push_back(std::move(id));
                if (ids.empty()) throw Error("give --expr or --file");
                for (const auto& id : ids) r.verdict(id.to_string(), prove_zero(id.expr, sys));
            });
        });
    }
    {
        auto o = std::make_shared<SystemOpts>();
        auto kmax = std::make_shared<int>(6);
        auto* sub = app.add_subcommand("nice-index", "least k such that the variety is k-nice");
        add_system(sub, *o);
        sub->add_option("--max-k", *kmax, "largest degree searched")->capture_default_str();
        sub->callback([&ctx, o, kmax] {
            ctx.run("nice-index", [&](Report& r) {
                auto k = nice_index(operad_system(o->system), *kmax);
                r.line(k ? std::to_string(*k) : "none");
                r.data()["index"] = k ? json(*k) : json(nullptr);
            });
        });
    }
    {
        auto variety = std::make_shared<std::string>("sas");
        auto expr = std::make_shared<std::string>();
        auto* sub = app.add_subcommand("normal-form", "rewrite into the free-algebra basis");
        sub->add_option("--variety", *variety, "sas or cas")->capture_default_str();
        sub->add_option("--expr", *expr, "expression in the DSL")->required();
        sub->callback([&ctx, variety, expr] {
            ctx.run("normal-form", [&](Report& r) {
                auto nf = normal_form(parse_variety(*variety), parse_expr(*expr));
                r.line(nf.to_string());
                r.data()["normal_form"] = nf.to_string();
            });
        });
    }
    {
        auto variety = std::make_shared<std::string>("sas");
        auto degree = std::make_shared<int>(4);
        auto gens = std::make_shared<int>(0);
        auto multilinear = std::make_shared<bool>(false);
        auto* sub = app.add_subcommand("free-basis", "basis of the degree-n part of the free algebra");
        sub->add_option("--variety", *variety, "sas or cas")->capture_default_str();
        sub->add_option("--degree", *degree, "degree n")->capture_default_str();
        sub->add_option("--generators", *gens, "number of generators (default n)");
        sub->add_flag("--multilinear", *multilinear, "only words using x1..xn once each");
        sub->callback([&ctx, variety, degree, gens, multilinear] {
            ctx.run("free-basis", [&](Report& r) {
                int k = *gens > 0 ? *gens : *degree;
                auto b = free_basis(parse_variety(*variety), *degree, k, *multilinear);
                std::vector<std::string> labels;
                for (const auto& l : b.labels) labels.push_back(l.to_string());
                for (const auto& l : labels) r.line(l);
                r.line("count " + std::to_string(b.count));
                r.data()["labels"] = labels;
                r.data()["count"] = b.count;
            });
        });
    }
    {
        auto ident = std::make_shared<std::string>();
        auto system = std::make_shared<std::string>();
        auto* sub = app.add_subcommand("polarize", "full multilinearization of identities");
        sub->add_option("--identity", *ident, "identity in the DSL");
        sub->add_option("--system", *system, "system name or path");
        sub->callback([&ctx, ident, system] {
            ctx.run("polarize", [&](Report& r) {
                IdentitySystem sys;
                if (!ident->empty()) sys.identities.push_back(parse_identity(*ident));
                if (!system->empty()) {
                    auto s = resolve_system(*system);
                    sys.identities.insert(sys.identities.end(), s.identities.begin(), s.identities.end());
                }
                if (sys.identities.empty()) throw Error("give --identity or --system");
                auto lines = identity_lines(multilinearize(sys));
                for (const auto& l : lines) r.line(l);
                r.data()["identities"] = lines;
            });
        });
    }
}

}  // namespace nassoc::cli

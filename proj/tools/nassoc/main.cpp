#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
    using namespace nassoc::cli;
    CLI::App app{"nassoc: exact verification for shift associative algebras and their operads"};
    app.require_subcommand(1);
    Context ctx;
    app.add_flag("--json", ctx.json, "machine-readable output");
    app.add_option("--seed", ctx.seed, "seed for randomized invariance sampling")->capture_default_str();
    app.add_option("--corpus", ctx.corpus_dir, "corpus directory");
    app.add_option("--param", ctx.param_args, "parameter value name=rational, repeatable");
    app.fallthrough();

    register_operad_commands(app, ctx);
    register_algebra_commands(app, ctx);
    register_moduli_commands(app, ctx);
    register_reproduce_command(app, ctx);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }
    return ctx.exit_code;
}

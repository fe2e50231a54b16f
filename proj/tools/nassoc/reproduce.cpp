#include <map>
#include <memory>

#include "commands.hpp"
#include "targets.hpp"

namespace nassoc::cli {

void register_reproduce_command(CLI::App& app, Context& ctx) {
    auto only = std::make_shared<std::vector<std::string>>();
    auto* sub = app.add_subcommand("reproduce-paper", "run every reproduction target and print a pass/fail matrix");
    sub->add_option("--only", *only, "restrict to groups")->check(CLI::IsMember(target_groups()));
    sub->callback([&ctx, only] {
        ctx.run("reproduce-paper", [&](Report& r) {
            std::set<std::string> groups(only->begin(), only->end());
            auto rows = run_targets(ctx.corpus(), groups, ctx.seed);
            std::map<std::string, std::pair<int, int>> tally;
            json matrix = json::array();
            for (const auto& row : rows) {
                r.verdict("[" + row.group + "] " + row.name, row.ok, row.detail);
                auto& [pass, total] = tally[row.group];
                pass += row.ok;
                ++total;
                matrix.push_back({{"criterion", row.criterion}, {"group", row.group}, {"name", row.name},
                                  {"ok", row.ok}, {"detail", row.detail}});
            }
            for (const auto& g : target_groups())
                if (auto it = tally.find(g); it != tally.end())
                    r.line(g + ": " + std::to_string(it->second.first) + "/" + std::to_string(it->second.second) +
                           " passed");
            r.data()["rows"] = matrix;
        });
    });
}

}  // namespace nassoc::cli

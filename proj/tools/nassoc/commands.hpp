#pragma once

#include <CLI11.hpp>

#include "context.hpp"

namespace nassoc::cli {

void register_operad_commands(CLI::App& app, Context& ctx);
void register_algebra_commands(CLI::App& app, Context& ctx);
void register_moduli_commands(CLI::App& app, Context& ctx);
void register_reproduce_command(CLI::App& app, Context& ctx);

}  // namespace nassoc::cli

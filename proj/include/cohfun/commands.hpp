#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cohfun/parallel.hpp"
#include "cohfun/workspace.hpp"

namespace cohfun {

struct CommandOptions {
    BaseRing ring;
    std::uint64_t seed = 0;
    std::size_t cases = 100;
    std::string battery;       // empty: the standard battery
    std::string kind = "functor";  // for `random`
    Execution execution = Execution::Parallel;
};

struct CommandResult {
    int exit_code = 0;  // 0 ok, 1 a check failed
    std::string output;
};

struct CommandInfo {
    std::string name;
    std::string usage;    // positional arguments
    std::string summary;
    std::size_t min_args;
    std::size_t max_args;
    bool needs_input;
};

const std::vector<CommandInfo>& command_table();

/// Runs one subcommand. Throws InputError for unknown names, missing
/// arguments or a missing workspace.
CommandResult run_command(const std::string& name, const std::vector<std::string>& args,
                          const std::optional<Workspace>& workspace, const CommandOptions& options);

/// Generator coordinates of m rewritten in the Smith bases of its source and
/// target, restricted to the non-trivial summands (free summands first) and
/// reduced modulo each target summand order.
Matrix canonical_matrix(const ModMorphism& m);

}  // namespace cohfun

#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace cohfun {

enum class Execution { Serial, Parallel };

struct CaseFailure {
    std::size_t index;
    std::string message;
};

/// Runs body(i) for i in [0, n). A body returns a failure message or
/// nullopt; exceptions count as failures. Failures come back ordered by
/// index regardless of the execution mode.
std::vector<CaseFailure> run_cases(std::size_t n, Execution mode,
                                   const std::function<std::optional<std::string>(std::size_t)>& body);

}  // namespace cohfun

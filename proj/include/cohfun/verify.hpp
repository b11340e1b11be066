#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cohfun/brute.hpp"
#include "cohfun/exactness.hpp"
#include "cohfun/parallel.hpp"
#include "cohfun/random.hpp"

namespace cohfun {

struct VerifyOptions {
    BaseRing ring;
    std::uint64_t seed = 0;
    std::size_t cases = 100;
    std::vector<FpModule> battery;  // empty: the standard battery of the ring
    Execution execution = Execution::Parallel;
    Bounds bounds;
    BruteLimits limits;

    std::vector<FpModule> probes() const;
};

/// One randomized property. `run_case` returns a failure description or
/// nullopt; case i draws from Rng::for_case(seed, name, i).
struct TheoremCheck {
    std::string name;
    std::string summary;
    std::function<std::optional<std::string>(const VerifyOptions&, std::size_t)> run_case;
};

const std::vector<TheoremCheck>& theorem_checks();
const TheoremCheck& find_check(const std::string& name);

CheckReport run_check(const TheoremCheck& check, const VerifyOptions& options);
/// Runs the named checks, or all of them when `names` is empty.
std::vector<CheckReport> verify_theorems(const VerifyOptions& options, const std::vector<std::string>& names = {});

/// Exact determinant by fraction-free elimination.
Int bareiss_determinant(const Matrix& m);

/// One-line description of a presentation, e.g. "[[1]] : Z^1 -> Z/2".
std::string describe(const CoherentFunctor& f);

}  // namespace cohfun

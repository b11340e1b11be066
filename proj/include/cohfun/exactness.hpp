#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cohfun/functor.hpp"

namespace cohfun {

/// Test objects for pointwise checks, plus the seed and case count shared by
/// the randomized checks that use them.
struct ProbeBattery {
    std::vector<FpModule> probes;
    std::uint64_t seed = 0;
    std::size_t cases = 100;

    /// Z, Z/2, Z/3, Z/4, Z/6, Z+Z/2, Z/8, Z/9 over Z; F, F^2, F^3 over F_p.
    static ProbeBattery standard(const BaseRing& ring);
    /// Comma separated summand lists, e.g. "Z,Z/2,Z^2+Z/4"; over F_p the free
    /// part may also be written with the ring name ("F5^2").
    static ProbeBattery parse(const BaseRing& ring, const std::string& list);

    /// The probes plus Z/p^k for every elementary divisor p^k occurring in
    /// the presentations of the given functors, without duplicates.
    std::vector<FpModule> for_functors(const std::vector<CoherentFunctor>& fs) const;
};

struct CheckReport {
    std::string name;
    bool pass = true;
    std::size_t cases = 0;
    double seconds = 0;
    std::string counterexample;  // empty when passing
    std::string note;
};

/// Pointwise exactness of F_0 -> F_1 -> ... -> F_n at each probe. With
/// `augmented`, the complex is read as 0 -> F_0 -> ... -> F_n -> 0.
CheckReport check_exact(const std::vector<NatMorphism>& complex, const std::vector<FpModule>& probes,
                        bool augmented = true);

/// Functors occurring in a composable complex, in order.
std::vector<CoherentFunctor> complex_functors(const std::vector<NatMorphism>& complex);

}  // namespace cohfun

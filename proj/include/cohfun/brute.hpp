#pragma once

#include <cstdint>
#include <stdexcept>

#include "cohfun/functor.hpp"

namespace cohfun {

/// Enumeration caps for the brute-force oracle.
struct BruteLimits {
    std::uint64_t max_order = 4096;            // |A|
    std::uint64_t max_candidates = 1u << 22;   // |A|^gens per Hom enumeration
};

class OracleSizeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Isomorphism type of Hom(X, A) for finite A, found by listing every
/// assignment of generator images and counting p^k-torsion. Shares no code
/// with the Smith-form machinery: A is normalized with its own Hermite form.
CanonicalForm brute_hom(const FpModule& x, const FpModule& a, const BruteLimits& limits = {});

/// F(A) for finite A by literal enumeration of Hom(X, A), Hom(Y, A) and the
/// set quotient, returned as the diagonal module of its isomorphism type.
FpModule brute_eval(const CoherentFunctor& f, const FpModule& a, const BruteLimits& limits = {});

}  // namespace cohfun

#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "cohfun/functor.hpp"

namespace cohfun {

/// mt19937_64 with a bounded draw that does not depend on the standard
/// library's distribution implementations, so streams are portable.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    /// Independent stream for one case of one named check.
    static Rng for_case(std::uint64_t seed, std::string_view stream, std::uint64_t index);

    std::uint64_t next() { return engine_(); }
    /// Uniform on [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(n) - 1)); }

private:
    std::mt19937_64 engine_;
};

struct Bounds {
    std::size_t max_gens = 4;
    std::size_t max_rels = 4;
    std::int64_t max_entry = 4;
};

/// A functor F' isomorphic to F with the two mutually inverse comparison maps.
struct Representation {
    CoherentFunctor functor;
    NatMorphism to;    // F -> F'
    NatMorphism from;  // F' -> F
};

struct ShortExact {
    CoherentFunctor sub, middle, quotient;
    NatMorphism inclusion;   // sub -> middle
    NatMorphism projection;  // middle -> quotient
};

/// Seeded random instances within Bounds. Morphisms and transformations
/// are drawn as random elements of the computed Hom and Nat groups, so they
/// are well defined by construction.
class InstanceGenerator {
public:
    InstanceGenerator(BaseRing ring, Rng rng, Bounds bounds = {}) : ring_(ring), rng_(rng), bounds_(bounds) {}

    const BaseRing& ring() const { return ring_; }
    Rng& rng() { return rng_; }

    Int entry();
    Matrix matrix(std::size_t rows, std::size_t cols);
    FpModule module();
    /// Rejection-sampled finite module with 1 < |A| <= max_order (over a
    /// prime field: dimension at most log_p(max_order)).
    FpModule finite_module(std::uint64_t max_order);
    ModMorphism morphism(const FpModule& a, const FpModule& b);
    CoherentFunctor functor();
    NatMorphism nat(const CoherentFunctor& f, const CoherentFunctor& g);
    /// 0 -> im(alpha) -> G -> coker(alpha) -> 0 for a random alpha : F -> G.
    ShortExact ses();
    /// A random epimorphism out of a random functor.
    NatMorphism epi();

    /// Unimodular change of generators and relations on both ends, plus a
    /// split summand id_W.
    Representation represent(const CoherentFunctor& f);

private:
    std::pair<Matrix, Matrix> unimodular(std::size_t n);

    BaseRing ring_;
    Rng rng_;
    Bounds bounds_;
};

}  // namespace cohfun

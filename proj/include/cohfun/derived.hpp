#pragma once

#include <optional>

#include "cohfun/functor.hpp"

namespace cohfun {

/// w(F) = ker(f) with its inclusion k : w(F) -> X.
SubobjectData w_of(const CoherentFunctor& f);
/// w(alpha) : w(G) -> w(F) for alpha : F -> G.
ModMorphism w_mor(const NatMorphism& alpha);

/// 0 -> F0 -> F -> (w(F), -) -> F1 -> 0.
struct FourTermData {
    CoherentFunctor f;
    FpModule wf;
    ModMorphism k;     // w(F) -> X
    FpModule coim;     // V = coker(k)
    ModMorphism pi;    // X -> V
    ModMorphism v;     // V -> Y, presents F0
    CoherentFunctor f0;
    NatMorphism iota;  // F0 -> F
    CoherentFunctor r0;
    NatMorphism phi;   // F -> (w(F), -)
    CoherentFunctor f1;
    NatMorphism rho;   // (w(F), -) -> F1

    std::vector<NatMorphism> complex() const { return {iota, phi, rho}; }
};

FourTermData four_term(const CoherentFunctor& f);

struct R0Data {
    CoherentFunctor functor;  // (w(F), -)
    NatMorphism unit;         // F -> R0 F
};

R0Data r0_functor(const CoherentFunctor& f);
/// R0(alpha) : R0 F -> R0 G, the Yoneda image of w(alpha).
NatMorphism r0_mor(const NatMorphism& alpha);

/// F0, the kernel of the unit.
CoherentFunctor inj_stabilize(const CoherentFunctor& f);
/// w(F) = 0, equivalently f is mono.
bool is_inj_stable(const CoherentFunctor& f);

struct L0Data {
    CoherentFunctor functor;  // F(R) (x) -
    NatMorphism counit;       // L0 F -> F
};

L0Data l0_functor(const CoherentFunctor& f);
/// Cokernel of the counit.
CoherentFunctor proj_stabilize(const CoherentFunctor& f);
/// F(R) = 0.
bool is_proj_stable(const CoherentFunctor& f);

/// The unit F -> (w(F), -) is an isomorphism. Equivalent to F left exact
/// and to F projective in the functor category.
bool is_representable(const CoherentFunctor& f);

struct Embedding {
    CoherentFunctor functor;  // presented by a map of free modules
    NatMorphism mono;         // F -> functor
};

/// F -> H with H presented by [f | rels_Y] : R^{n_X} + R^{m_Y} -> R^{n_Y}.
Embedding embed_injective(const CoherentFunctor& f);

struct InjectiveResolution {
    CoherentFunctor f;
    std::vector<CoherentFunctor> terms;  // I0, I1, I2
    std::vector<NatMorphism> maps;       // F -> I0, I0 -> I1, I1 -> I2
    /// 0 if F is injective, 1 if the first cokernel is, otherwise 2.
    int injective_dimension = 0;

    /// Index of the last nonzero term plus one, 0 when every term vanishes.
    int nonzero_terms() const;
};

/// Throws std::logic_error if the last term fails the injectivity test.
InjectiveResolution injective_resolution(const CoherentFunctor& f);

/// r : H -> F with r o j = id for the embedding j of embed_injective, or
/// nullopt when j does not split.
std::optional<NatMorphism> injective_retraction(const CoherentFunctor& f);
bool is_injective_functor(const CoherentFunctor& f);

}  // namespace cohfun

#pragma once

#include <vector>

#include "cohfun/hom.hpp"
#include "cohfun/module.hpp"

namespace cohfun {

/// A coherent functor F = coker((f, -)) given by its presentation f : X -> Y,
/// so F(A) = Hom(X, A) / {h o f : h in Hom(Y, A)}.
class CoherentFunctor {
public:
    explicit CoherentFunctor(ModMorphism pres) : pres_(std::move(pres)) {}

    const ModMorphism& pres() const { return pres_; }
    const FpModule& x() const { return pres_.source(); }
    const FpModule& y() const { return pres_.target(); }
    const BaseRing& ring() const { return pres_.ring(); }

    /// Identical presentation (same X, Y and matrix), not isomorphism.
    bool same_presentation(const CoherentFunctor& other) const;

private:
    ModMorphism pres_;
};

/// (X, -), presented by X -> 0.
CoherentFunctor yoneda_embed(const FpModule& x);
/// W (x) -, presented by the transpose of W's relation matrix.
CoherentFunctor tensor_functor(const FpModule& w);
CoherentFunctor zero_functor(const BaseRing& ring);

/// Everything computed while evaluating F at A. The generators of `value`
/// are the generators of hom_x.group(), so an element of F(A) is represented
/// by the morphism hom_x.element(coords).
struct Evaluation {
    HomGroup hom_x;          // Hom(X, A)
    HomGroup hom_y;          // Hom(Y, A)
    ModMorphism precompose;  // Hom(Y, A) -> Hom(X, A), h |-> h o f
    FpModule value;          // F(A) = coker(precompose)
};

Evaluation evaluation(const CoherentFunctor& f, const FpModule& a);
FpModule evaluate(const CoherentFunctor& f, const FpModule& a);
/// F(phi) : F(A) -> F(B), induced by postcomposition.
ModMorphism evaluate_mor(const CoherentFunctor& f, const ModMorphism& phi);
ModMorphism evaluate_mor(const Evaluation& at_a, const Evaluation& at_b, const ModMorphism& phi);

/// F = 0 iff the identity of X dies in F(X), i.e. f is a split mono.
bool is_zero_functor(const CoherentFunctor& f);

/// A natural transformation F -> G for F presented by f : X -> Y and G by
/// g : X' -> Y', encoded by a : X' -> X and b : Y' -> Y with f o a = b o g.
/// At A it sends [u : X -> A] to [u o a].
class NatMorphism {
public:
    struct Trusted {};

    /// Throws std::invalid_argument unless f o a = b o g.
    NatMorphism(CoherentFunctor source, CoherentFunctor target, ModMorphism a, ModMorphism b);
    NatMorphism(CoherentFunctor source, CoherentFunctor target, ModMorphism a, ModMorphism b, Trusted);

    static NatMorphism identity(const CoherentFunctor& f);
    static NatMorphism zero(const CoherentFunctor& f, const CoherentFunctor& g);

    const CoherentFunctor& source() const { return source_; }
    const CoherentFunctor& target() const { return target_; }
    const ModMorphism& a() const { return a_; }
    const ModMorphism& b() const { return b_; }

    /// Component at A as a map F(A) -> G(A).
    ModMorphism at(const FpModule& a) const;
    ModMorphism at(const Evaluation& source_at, const Evaluation& target_at) const;

    NatMorphism operator-() const;
    friend NatMorphism operator+(const NatMorphism& x, const NatMorphism& y);
    friend NatMorphism operator-(const NatMorphism& x, const NatMorphism& y);
    /// a - a' vanishes in G(X), i.e. a - a' = s o g for some s : Y' -> X.
    friend bool operator==(const NatMorphism& x, const NatMorphism& y);

private:
    CoherentFunctor source_;
    CoherentFunctor target_;
    ModMorphism a_;
    ModMorphism b_;
};

/// beta o alpha.
NatMorphism compose(const NatMorphism& beta, const NatMorphism& alpha);
inline NatMorphism operator*(const NatMorphism& beta, const NatMorphism& alpha) { return compose(beta, alpha); }

bool is_zero_nat(const NatMorphism& alpha);

/// Nat(F, G), identified with ker(G(f) : G(X) -> G(Y)).
class NatGroup {
public:
    NatGroup(CoherentFunctor source, CoherentFunctor target);

    const CoherentFunctor& source() const { return source_; }
    const CoherentFunctor& target() const { return target_; }
    const FpModule& group() const { return kernel_.module; }
    /// group -> G(X): each generator's a-component.
    const ModMorphism& theta() const { return kernel_.inclusion; }
    const std::vector<NatMorphism>& reps() const { return reps_; }

    NatMorphism element(const Matrix& coords) const;
    Matrix coordinates(const NatMorphism& alpha) const;

private:
    CoherentFunctor source_;
    CoherentFunctor target_;
    Evaluation at_x_;
    SubobjectData kernel_;
    std::vector<NatMorphism> reps_;
};

inline NatGroup nat_group(const CoherentFunctor& f, const CoherentFunctor& g) { return NatGroup(f, g); }

struct FunctorSub {
    CoherentFunctor functor;
    NatMorphism inclusion;
};

struct FunctorQuotient {
    CoherentFunctor functor;
    NatMorphism projection;
};

/// Presented by D -> E for the pushouts D = X_F +_{X_G} Y_G and
/// E = D +_{X_F} Y_F; the inclusion is (X_F -> D, Y_F -> E).
FunctorSub ker_nat(const NatMorphism& alpha);
/// Presented by <a, g> : X_G -> X_F + Y_G; the projection is (id, pr).
FunctorQuotient coker_nat(const NatMorphism& alpha);

}  // namespace cohfun

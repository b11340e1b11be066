#pragma once

#include <vector>

#include "cohfun/module.hpp"

namespace cohfun {

/// Hom(A, B) as a finitely presented abelian group together with explicit
/// morphisms realizing its generators.
///
/// Computed summand by summand in the Smith coordinates of A and B:
/// Hom(R/a, R/b) is cyclic of order gcd(a, b), generated by 1 -> b/gcd(a, b).
/// Coordinates of a morphism are canonical (reduced modulo each generator's
/// order), so two morphisms are equal iff their coordinates agree.
class HomGroup {
public:
    HomGroup(FpModule source, FpModule target);

    const FpModule& source() const { return source_; }
    const FpModule& target() const { return target_; }
    const FpModule& group() const { return group_; }
    const std::vector<ModMorphism>& reps() const { return reps_; }

    /// Morphism with the given coordinates (gens x 1).
    ModMorphism element(const Matrix& coords) const;
    /// Canonical coordinates (gens x 1) of a morphism source -> target.
    Matrix coordinates(const ModMorphism& m) const;
    /// Same for a bare n_target x n_source matrix assumed well defined.
    Matrix coordinates(const Matrix& mat) const;

private:
    struct Slot {
        std::size_t target_summand;
        std::size_t source_summand;
        Int scale;
        Int order;  // 0 for an infinite cyclic summand
    };

    FpModule source_;
    FpModule target_;
    std::vector<Slot> slots_;
    FpModule group_;
    std::vector<ModMorphism> reps_;
};

inline HomGroup hom_group(const FpModule& a, const FpModule& b) { return HomGroup(a, b); }

}  // namespace cohfun

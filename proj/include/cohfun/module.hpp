#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cohfun/matrix.hpp"
#include "cohfun/snf.hpp"

namespace cohfun {

/// Isomorphism type R^r + R/d_1 + ... + R/d_k with d_1 | ... | d_k, no d_i a unit.
struct CanonicalForm {
    std::size_t free_rank = 0;
    std::vector<Int> factors;

    bool is_zero() const { return free_rank == 0 && factors.empty(); }
    /// "0", or parts like "Z^1", "Z/2" joined by " + " (free part first).
    std::string str(const BaseRing& ring) const;

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

/// A finitely presented module coker(rels : R^m -> R^n).
///
/// Relations are columns; elements are generator-coordinate columns.
/// `operator==` is presentation identity, not isomorphism; use
/// `isomorphic_to` for the latter. The Smith decomposition of the relation
/// matrix is computed once at construction and shared by copies.
class FpModule {
public:
    FpModule();
    explicit FpModule(Matrix rels);

    static FpModule free(BaseRing ring, std::size_t n);
    static FpModule zero(BaseRing ring) { return free(ring, 0); }
    static FpModule cyclic(BaseRing ring, const Int& d);
    static FpModule from_canonical(BaseRing ring, const CanonicalForm& form);

    const BaseRing& ring() const;
    std::size_t gens() const;
    const Matrix& rels() const;
    const SnfResult& snf() const;
    const CanonicalForm& canonical() const;

    bool is_zero() const { return canonical().is_zero(); }
    bool is_finite() const { return canonical().free_rank == 0; }
    /// Group order; throws std::domain_error for infinite modules or over F_p
    /// when the module is nonzero.
    Int order() const;
    /// True when every relation column is zero.
    bool has_free_presentation() const;

    /// Order of the i-th Smith summand: d_i, or 0 for free summands.
    Int summand_order(std::size_t i) const;
    /// True when column-vectors x (n x c) all lie in the relation span.
    bool is_zero_element(const Matrix& x) const;

    bool isomorphic_to(const FpModule& other) const { return canonical() == other.canonical(); }
    std::string str() const { return canonical().str(ring()); }

    friend bool operator==(const FpModule& a, const FpModule& b);

private:
    struct Data;
    std::shared_ptr<const Data> d_;
};

class IllDefinedMorphism : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A module map given by its action on generators: mat is n_target x n_source.
/// Equality is modulo the target's relations.
class ModMorphism {
public:
    struct Trusted {};

    /// Throws IllDefinedMorphism unless mat * rels_source lies in the span of
    /// rels_target, std::invalid_argument on shape or ring mismatch.
    ModMorphism(FpModule source, FpModule target, Matrix mat);
    /// Shape-checked only; for maps that are well defined by construction.
    ModMorphism(FpModule source, FpModule target, Matrix mat, Trusted);

    static ModMorphism identity(const FpModule& a);
    static ModMorphism zero(const FpModule& a, const FpModule& b);

    const FpModule& source() const { return source_; }
    const FpModule& target() const { return target_; }
    const Matrix& mat() const { return mat_; }
    const BaseRing& ring() const { return source_.ring(); }

    bool is_zero() const { return target_.is_zero_element(mat_); }
    ModMorphism scaled(const Int& c) const;

    ModMorphism operator-() const;
    friend ModMorphism operator+(const ModMorphism& a, const ModMorphism& b);
    friend ModMorphism operator-(const ModMorphism& a, const ModMorphism& b);
    friend bool operator==(const ModMorphism& a, const ModMorphism& b);

private:
    void check_shape() const;

    FpModule source_;
    FpModule target_;
    Matrix mat_;
};

/// psi o phi. Throws std::invalid_argument if phi.target != psi.source.
ModMorphism compose(const ModMorphism& psi, const ModMorphism& phi);
inline ModMorphism operator*(const ModMorphism& psi, const ModMorphism& phi) { return compose(psi, phi); }

struct SubobjectData {
    FpModule module;
    ModMorphism inclusion;
};

struct QuotientData {
    FpModule module;
    ModMorphism projection;
};

SubobjectData kernel_mor(const ModMorphism& phi);
/// Presentation [rels_target | mat], projection the identity on generators.
QuotientData cokernel_mor(const ModMorphism& phi);
SubobjectData image_mor(const ModMorphism& phi);
QuotientData coimage_mor(const ModMorphism& phi);

bool is_mono(const ModMorphism& phi);
bool is_epi(const ModMorphism& phi);
inline bool is_iso(const ModMorphism& phi) { return is_mono(phi) && is_epi(phi); }

FpModule tensor_module(const FpModule& a, const FpModule& b);

/// lambda : P -> A with e o lambda = phi. P must have a free presentation
/// and e must be epi.
ModMorphism lift_through_epi(const ModMorphism& phi, const ModMorphism& e);
/// z : A -> K with m o z = phi for a mono m : K -> B, or nullopt if phi does
/// not land in the image of m.
std::optional<ModMorphism> factor_through_mono(const ModMorphism& phi, const ModMorphism& m);

struct FreePresentation {
    ModMorphism relations;  // R^m -> R^n
    ModMorphism cover;      // R^n -> a
};
FreePresentation free_presentation(const FpModule& a);

struct DirectSum {
    FpModule module;
    ModMorphism inj1, inj2, proj1, proj2;
};
DirectSum direct_sum(const FpModule& a, const FpModule& b);

/// <a, b> : S -> A + B.
ModMorphism pairing(const ModMorphism& a, const ModMorphism& b);
/// [a | b] : A + B -> T.
ModMorphism copairing(const ModMorphism& a, const ModMorphism& b);

struct Pushout {
    FpModule module;
    ModMorphism from_first;   // A -> D
    ModMorphism from_second;  // B -> D
};
/// Pushout of a : S -> A and b : S -> B, i.e. coker <a, -b>.
Pushout pushout(const ModMorphism& a, const ModMorphism& b);

/// Solves phi(z) = y modulo the target relations for many y.
class PreimageSolver {
public:
    explicit PreimageSolver(const ModMorphism& phi);
    /// y is n_target x c; the result is n_source x c.
    std::optional<Matrix> operator()(const Matrix& y) const;

private:
    std::size_t source_gens_;
    LinearSolver solver_;
};

/// 0 -> A_0 -> A_1 -> ... -> A_n -> 0 exactness test in C, returning the
/// first failing position (as a human-readable message) or nullopt.
std::optional<std::string> exactness_defect(const std::vector<ModMorphism>& maps, bool zero_left, bool zero_right);

}  // namespace cohfun

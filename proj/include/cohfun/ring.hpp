#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace cohfun {

using Int = mpz_class;

/// Ground ring of every matrix and module: either Z or a prime field F_p.
///
/// Elements are stored as `Int`. Over F_p they are kept reduced to [0, p);
/// over Z they are arbitrary precision integers. All arithmetic helpers
/// return reduced values.
class BaseRing {
public:
    enum class Kind { Integers, PrimeField };

    BaseRing() = default;

    static BaseRing integers() { return {}; }
    /// Throws std::invalid_argument unless p is a prime below 2^16.
    static BaseRing prime_field(std::uint32_t p);

    Kind kind() const { return kind_; }
    bool is_field() const { return kind_ == Kind::PrimeField; }
    /// 0 for Z.
    std::uint32_t characteristic() const { return p_; }

    Int reduce(const Int& a) const;
    Int element(long v) const { return reduce(Int(v)); }

    Int add(const Int& a, const Int& b) const { return reduce(a + b); }
    Int sub(const Int& a, const Int& b) const { return reduce(a - b); }
    Int mul(const Int& a, const Int& b) const { return reduce(a * b); }
    Int neg(const Int& a) const { return reduce(-a); }

    bool is_unit(const Int& a) const;

    /// Euclidean size: |a| over Z, 0 or 1 over F_p.
    Int size(const Int& a) const;

    /// a = q*b + r with r = 0 or size(r) < size(b). Over Z the remainder
    /// is the one of least absolute value. Requires b != 0.
    void divmod(const Int& a, const Int& b, Int& q, Int& r) const;

    bool divides(const Int& d, const Int& a) const;
    /// a / d, requires divides(d, a).
    Int exact_div(const Int& a, const Int& d) const;
    /// Canonical gcd: nonnegative over Z, 0 or 1 over F_p.
    Int gcd(const Int& a, const Int& b) const;

    /// Unit u such that u*a is the canonical associate of a.
    Int normalizer(const Int& a) const;
    Int unit_inverse(const Int& u) const;

    /// Nonnegative remainder of a modulo d (d nonzero, non-unit over Z).
    Int mod(const Int& a, const Int& d) const;

    /// "Z" or "F5".
    std::string name() const;

    friend bool operator==(const BaseRing&, const BaseRing&) = default;

private:
    Kind kind_ = Kind::Integers;
    std::uint32_t p_ = 0;
};

}  // namespace cohfun

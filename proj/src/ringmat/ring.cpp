#include "cohfun/ring.hpp"

#include <stdexcept>

namespace cohfun {

namespace {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

BaseRing BaseRing::prime_field(std::uint32_t p) {
    if (p >= (1u << 16)) throw std::invalid_argument("prime field modulus must be below 2^16");
    if (!is_prime(p)) throw std::invalid_argument("prime field modulus " + std::to_string(p) + " is not prime");
    BaseRing r;
    r.kind_ = Kind::PrimeField;
    r.p_ = p;
    return r;
}

Int BaseRing::reduce(const Int& a) const {
    if (kind_ == Kind::Integers) return a;
    Int r;
    mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), p_);
    return r;
}

bool BaseRing::is_unit(const Int& a) const {
    if (kind_ == Kind::Integers) return a == 1 || a == -1;
    return reduce(a) != 0;
}

Int BaseRing::size(const Int& a) const {
    if (kind_ == Kind::Integers) return abs(a);
    return reduce(a) == 0 ? Int(0) : Int(1);
}

void BaseRing::divmod(const Int& a, const Int& b, Int& q, Int& r) const {
    if (b == 0) throw std::domain_error("division by zero");
    if (kind_ == Kind::PrimeField) {
        q = mul(a, unit_inverse(b));
        r = 0;
        return;
    }
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    // Least absolute remainder keeps SNF coefficients small.
    Int twice = 2 * abs(r);
    if (twice > abs(b)) {
        if ((r > 0) == (b > 0)) {
            r -= b;
            q += 1;
        } else {
            r += b;
            q -= 1;
        }
    }
}

bool BaseRing::divides(const Int& d, const Int& a) const {
    if (kind_ == Kind::PrimeField) return reduce(d) != 0 || reduce(a) == 0;
    if (d == 0) return a == 0;
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

Int BaseRing::exact_div(const Int& a, const Int& d) const {
    if (kind_ == Kind::PrimeField) {
        if (reduce(d) == 0) {
            if (reduce(a) != 0) throw std::domain_error("inexact division");
            return 0;
        }
        return mul(a, unit_inverse(d));
    }
    if (d == 0) {
        if (a != 0) throw std::domain_error("inexact division");
        return 0;
    }
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    return q;
}

Int BaseRing::gcd(const Int& a, const Int& b) const {
    if (kind_ == Kind::PrimeField) return (reduce(a) != 0 || reduce(b) != 0) ? Int(1) : Int(0);
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int BaseRing::normalizer(const Int& a) const {
    if (kind_ == Kind::PrimeField) return reduce(a) == 0 ? Int(1) : unit_inverse(a);
    return a < 0 ? Int(-1) : Int(1);
}

Int BaseRing::unit_inverse(const Int& u) const {
    if (kind_ == Kind::Integers) {
        if (u == 1 || u == -1) return u;
        throw std::domain_error("not a unit");
    }
    Int r = reduce(u);
    if (r == 0) throw std::domain_error("not a unit");
    Int inv;
    Int p(p_);
    mpz_invert(inv.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
    return inv;
}

Int BaseRing::mod(const Int& a, const Int& d) const {
    if (kind_ == Kind::PrimeField) return 0;
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    if (r < 0) r += abs(d);
    return r;
}

std::string BaseRing::name() const {
    if (kind_ == Kind::Integers) return "Z";
    return "F" + std::to_string(p_);
}

}  // namespace cohfun

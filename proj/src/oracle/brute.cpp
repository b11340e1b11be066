#include "cohfun/brute.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_set>

namespace cohfun {

namespace {

using Vec = std::vector<std::int64_t>;

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// Z^n / L for a full-rank lattice L, normalized by an upper triangular
// Hermite basis with reduced entries above each pivot. Canonical
// representatives satisfy 0 <= v_i < pivot_i.
class FiniteGroup {
public:
    FiniteGroup(const FpModule& a, const BruteLimits& limits) : n_(a.gens()) {
        std::vector<std::vector<Int>> rows;
        const Matrix& rels = a.rels();
        for (std::size_t c = 0; c < rels.cols(); ++c) {
            std::vector<Int> r(n_);
            for (std::size_t i = 0; i < n_; ++i) r[i] = rels(i, c);
            rows.push_back(std::move(r));
        }
        if (a.ring().is_field())
            for (std::size_t i = 0; i < n_; ++i) {
                std::vector<Int> r(n_);
                r[i] = a.ring().characteristic();
                rows.push_back(std::move(r));
            }
        hermite(rows, limits);
    }

    std::size_t dims() const { return n_; }
    std::uint64_t order() const { return order_; }

    void reduce(Vec& v) const {
        for (std::size_t i = 0; i < n_; ++i) {
            std::int64_t q = floor_div(v[i], basis_[i][i]);
            if (q == 0) continue;
            for (std::size_t j = i; j < n_; ++j) v[j] -= q * basis_[i][j];
        }
    }

    std::uint32_t encode(const Vec& v) const {
        std::uint64_t code = 0;
        for (std::size_t i = n_; i-- > 0;) code = code * static_cast<std::uint64_t>(basis_[i][i]) + v[i];
        return static_cast<std::uint32_t>(code);
    }

    Vec decode(std::uint32_t code) const {
        Vec v(n_);
        std::uint64_t c = code;
        for (std::size_t i = 0; i < n_; ++i) {
            v[i] = static_cast<std::int64_t>(c % basis_[i][i]);
            c /= basis_[i][i];
        }
        return v;
    }

private:
    void hermite(std::vector<std::vector<Int>>& rows, const BruteLimits& limits) {
        std::size_t r = 0;
        for (std::size_t c = 0; c < n_; ++c) {
            for (;;) {
                std::size_t best = rows.size();
                for (std::size_t i = r; i < rows.size(); ++i)
                    if (rows[i][c] != 0 && (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c]))) best = i;
                if (best == rows.size()) throw OracleSizeError("brute oracle: module is infinite");
                std::swap(rows[r], rows[best]);
                bool done = true;
                for (std::size_t i = r + 1; i < rows.size(); ++i) {
                    if (rows[i][c] == 0) continue;
                    Int q;
                    mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
                    for (std::size_t j = c; j < n_; ++j) rows[i][j] -= q * rows[r][j];
                    if (rows[i][c] != 0) done = false;
                }
                if (done) break;
            }
            if (rows[r][c] < 0)
                for (std::size_t j = c; j < n_; ++j) rows[r][j] = -rows[r][j];
            ++r;
        }
        rows.resize(n_);
        Int order = 1;
        for (std::size_t c = 0; c < n_; ++c) order *= rows[c][c];
        if (order > Int(static_cast<unsigned long>(limits.max_order)))
            throw OracleSizeError("brute oracle: group order " + order.get_str() + " exceeds the cap " +
                                  std::to_string(limits.max_order));
        for (std::size_t c = 0; c < n_; ++c)
            for (std::size_t i = 0; i < c; ++i) {
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[c][c].get_mpz_t());
                for (std::size_t j = c; j < n_; ++j) rows[i][j] -= q * rows[c][j];
            }
        basis_.assign(n_, Vec(n_));
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) basis_[i][j] = rows[i][j].get_si();
        order_ = order.get_ui();
    }

    std::size_t n_;
    std::vector<Vec> basis_;
    std::uint64_t order_ = 1;
};

std::int64_t residue(const Int& x, std::uint64_t m) {
    Int r;
    mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), m);
    return r.get_si();
}

using Tuple = std::vector<std::uint32_t>;

std::uint64_t tuple_key(const Tuple& t, std::uint64_t order) {
    std::uint64_t k = 0;
    for (std::size_t i = t.size(); i-- > 0;) k = k * order + t[i];
    return k;
}

// All generator-image tuples of well-defined maps X -> A, by depth-first
// assignment that checks each relation as soon as its support is assigned.
std::vector<Tuple> enumerate_homs(const FpModule& x, const FiniteGroup& a, const BruteLimits& limits) {
    const std::size_t nx = x.gens();
    const std::uint64_t ord = a.order();
    const Matrix& rels = x.rels();
    double bits = 0;
    for (std::uint64_t o = ord - 1; o > 0; o >>= 1) bits += 1;
    if (bits * static_cast<double>(nx) > 62)
        throw OracleSizeError("brute oracle: " + std::to_string(nx) + " generators over a group of order " +
                              std::to_string(ord) + " overflow the tuple encoding");

    std::vector<std::vector<std::size_t>> closing(nx);
    std::vector<std::vector<std::int64_t>> coeff(rels.cols(), std::vector<std::int64_t>(nx));
    for (std::size_t c = 0; c < rels.cols(); ++c) {
        std::size_t last = nx;
        for (std::size_t i = 0; i < nx; ++i) {
            coeff[c][i] = residue(rels(i, c), ord);
            if (coeff[c][i] != 0) last = i;
        }
        if (last != nx) closing[last].push_back(c);
    }

    std::vector<Vec> elems(ord);
    for (std::uint64_t e = 0; e < ord; ++e) elems[e] = a.decode(static_cast<std::uint32_t>(e));

    std::vector<Tuple> out;
    Tuple t(nx);
    std::uint64_t visited = 0;
    std::function<void(std::size_t)> dfs = [&](std::size_t d) {
        if (d == nx) {
            out.push_back(t);
            return;
        }
        for (std::uint64_t e = 0; e < ord; ++e) {
            if (++visited > limits.max_candidates)
                throw OracleSizeError("brute oracle: Hom enumeration exceeds " + std::to_string(limits.max_candidates) +
                                      " candidates");
            t[d] = static_cast<std::uint32_t>(e);
            bool ok = true;
            for (std::size_t c : closing[d]) {
                Vec s(a.dims(), 0);
                for (std::size_t i = 0; i <= d; ++i)
                    if (coeff[c][i] != 0)
                        for (std::size_t j = 0; j < s.size(); ++j) s[j] += coeff[c][i] * elems[t[i]][j];
                a.reduce(s);
                if (std::any_of(s.begin(), s.end(), [](std::int64_t v) { return v != 0; })) {
                    ok = false;
                    break;
                }
            }
            if (ok) dfs(d + 1);
        }
    };
    dfs(0);
    return out;
}

Tuple scale_tuple(const Tuple& t, std::int64_t k, const FiniteGroup& a) {
    Tuple out(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        Vec v = a.decode(t[i]);
        for (auto& x : v) x *= k;
        a.reduce(v);
        out[i] = a.encode(v);
    }
    return out;
}

std::map<std::uint64_t, int> factorize(std::uint64_t n) {
    std::map<std::uint64_t, int> f;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            ++f[p];
            n /= p;
        }
    if (n > 1) ++f[n];
    return f;
}

// Isomorphism type of H / S from the sizes of its p^k-torsion subgroups.
CanonicalForm quotient_type(const std::vector<Tuple>& h, const std::unordered_set<std::uint64_t>& s,
                            const FiniteGroup& a, const BaseRing& ring) {
    const std::uint64_t ord = a.order();
    const std::uint64_t q_order = h.size() / s.size();
    CanonicalForm form;
    std::vector<std::vector<std::uint64_t>> prime_parts;  // per prime, cyclic factor orders, descending
    for (auto [p, e] : factorize(q_order)) {
        if (ring.is_field()) {
            form.free_rank = static_cast<std::size_t>(e);
            continue;
        }
        std::vector<int> at_least;  // at_least[k-1] = #factors of order >= p^k
        std::uint64_t prev = 1, pk = 1, part = 1;
        for (int i = 0; i < e; ++i) part *= p;
        while (prev < part) {
            pk *= p;
            std::uint64_t count = 0;
            for (const auto& t : h)
                if (s.count(tuple_key(scale_tuple(t, static_cast<std::int64_t>(pk % ord), a), ord))) ++count;
            std::uint64_t cur = count / s.size();
            int r = 0;
            for (std::uint64_t x = cur / prev; x > 1; x /= p) ++r;
            at_least.push_back(r);
            prev = cur;
        }
        std::vector<std::uint64_t> orders;
        for (std::size_t k = 0; k < at_least.size(); ++k) {
            int exactly = at_least[k] - (k + 1 < at_least.size() ? at_least[k + 1] : 0);
            std::uint64_t o = 1;
            for (std::size_t j = 0; j <= k; ++j) o *= p;
            for (int j = 0; j < exactly; ++j) orders.push_back(o);
        }
        std::sort(orders.rbegin(), orders.rend());
        prime_parts.push_back(std::move(orders));
    }
    std::size_t width = 0;
    for (const auto& v : prime_parts) width = std::max(width, v.size());
    for (std::size_t t = 0; t < width; ++t) {
        std::uint64_t d = 1;
        for (const auto& v : prime_parts)
            if (t < v.size()) d *= v[t];
        form.factors.push_back(Int(static_cast<unsigned long>(d)));
    }
    std::sort(form.factors.begin(), form.factors.end());
    return form;
}

}  // namespace

CanonicalForm brute_hom(const FpModule& x, const FpModule& a, const BruteLimits& limits) {
    FiniteGroup g(a, limits);
    std::vector<Tuple> h = enumerate_homs(x, g, limits);
    std::unordered_set<std::uint64_t> zero{tuple_key(Tuple(x.gens(), 0), g.order())};
    return quotient_type(h, zero, g, a.ring());
}

FpModule brute_eval(const CoherentFunctor& f, const FpModule& a, const BruteLimits& limits) {
    FiniteGroup g(a, limits);
    const std::uint64_t ord = g.order();
    std::vector<Tuple> hx = enumerate_homs(f.x(), g, limits);
    std::vector<Tuple> hy = enumerate_homs(f.y(), g, limits);

    const Matrix& fm = f.pres().mat();
    const std::size_t nx = f.x().gens(), ny = f.y().gens();
    std::vector<std::vector<std::int64_t>> coeff(ny, std::vector<std::int64_t>(nx));
    for (std::size_t j = 0; j < ny; ++j)
        for (std::size_t i = 0; i < nx; ++i) coeff[j][i] = residue(fm(j, i), ord);

    std::unordered_set<std::uint64_t> image;
    for (const auto& t : hy) {
        Tuple comp(nx);
        for (std::size_t i = 0; i < nx; ++i) {
            Vec s(g.dims(), 0);
            for (std::size_t j = 0; j < ny; ++j) {
                if (coeff[j][i] == 0) continue;
                Vec y = g.decode(t[j]);
                for (std::size_t k = 0; k < s.size(); ++k) s[k] += coeff[j][i] * y[k];
            }
            g.reduce(s);
            comp[i] = g.encode(s);
        }
        image.insert(tuple_key(comp, ord));
    }
    return FpModule::from_canonical(a.ring(), quotient_type(hx, image, g, a.ring()));
}

}  // namespace cohfun

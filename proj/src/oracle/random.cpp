#include "cohfun/random.hpp"

#include <limits>

namespace cohfun {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace

Rng Rng::for_case(std::uint64_t seed, std::string_view stream, std::uint64_t index) {
    return Rng(splitmix(splitmix(seed ^ fnv1a(stream)) + index));
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    if (range == 0) return static_cast<std::int64_t>(next());
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t x;
    do x = next();
    while (x >= limit);
    return lo + static_cast<std::int64_t>(x % range);
}

Int InstanceGenerator::entry() { return ring_.reduce(Int(static_cast<long>(rng_.uniform(-bounds_.max_entry, bounds_.max_entry)))); }

Matrix InstanceGenerator::matrix(std::size_t rows, std::size_t cols) {
    Matrix m(ring_, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, entry());
    return m;
}

FpModule InstanceGenerator::module() {
    std::size_t gens = rng_.below(bounds_.max_gens + 1);
    std::size_t rels = rng_.below(bounds_.max_rels + 1);
    return FpModule(matrix(gens, rels));
}

std::pair<Matrix, Matrix> InstanceGenerator::unimodular(std::size_t n) {
    Matrix m = Matrix::identity(ring_, n);
    Matrix inv = Matrix::identity(ring_, n);
    if (n == 0) return {m, inv};
    for (std::size_t step = 0; step < 3 * n; ++step) {
        std::size_t i = rng_.below(n), j = rng_.below(n);
        Matrix e = Matrix::identity(ring_, n);
        Matrix e_inv = Matrix::identity(ring_, n);
        if (i != j) {
            Int q(static_cast<long>(rng_.uniform(-2, 2)));
            e.set(i, j, q);
            e_inv.set(i, j, -q);
        } else if (ring_.is_field()) {
            Int u(static_cast<long>(rng_.uniform(1, ring_.characteristic() - 1)));
            e.set(i, i, u);
            e_inv.set(i, i, ring_.unit_inverse(ring_.reduce(u)));
        } else {
            e.set(i, i, -1);
            e_inv.set(i, i, -1);
        }
        m = e * m;
        inv = inv * e_inv;
    }
    return {m, inv};
}

FpModule InstanceGenerator::finite_module(std::uint64_t max_order) {
    for (;;) {
        std::size_t n = 1 + rng_.below(std::min<std::size_t>(bounds_.max_gens, 3));
        Matrix t(ring_, n, n);
        for (std::size_t i = 0; i < n; ++i) {
            t.set(i, i, Int(static_cast<long>(rng_.uniform(ring_.is_field() ? 0 : 1, 6))));
            for (std::size_t j = i + 1; j < n; ++j) t.set(i, j, entry());
        }
        Matrix left = unimodular(n).first;
        Matrix right = unimodular(n).first;
        FpModule candidate(left * t * right);
        if (ring_.is_field()) {
            std::uint64_t size = 1;
            bool ok = true;
            for (std::size_t d = 0; d < candidate.canonical().free_rank && ok; ++d) {
                size *= ring_.characteristic();
                ok = size <= max_order;
            }
            if (ok) return candidate;
            continue;
        }
        if (candidate.is_finite() && candidate.order() <= Int(static_cast<unsigned long>(max_order))) return candidate;
    }
}

ModMorphism InstanceGenerator::morphism(const FpModule& a, const FpModule& b) {
    HomGroup hom(a, b);
    Matrix coords(ring_, hom.reps().size(), 1);
    for (std::size_t i = 0; i < coords.rows(); ++i) coords.set(i, 0, entry());
    return hom.element(coords);
}

CoherentFunctor InstanceGenerator::functor() {
    // Redraw a few times when the presentation comes out zero; such functors
    // are representable and would otherwise dominate the sample.
    for (int attempt = 0;; ++attempt) {
        FpModule x = module();
        FpModule y = module();
        ModMorphism f = morphism(x, y);
        if (!f.is_zero() || attempt == 7) return CoherentFunctor(std::move(f));
    }
}

NatMorphism InstanceGenerator::nat(const CoherentFunctor& f, const CoherentFunctor& g) {
    NatGroup group(f, g);
    Matrix coords(ring_, group.reps().size(), 1);
    for (std::size_t i = 0; i < coords.rows(); ++i) coords.set(i, 0, entry());
    return group.element(coords);
}

ShortExact InstanceGenerator::ses() {
    CoherentFunctor f = functor();
    CoherentFunctor g = functor();
    NatMorphism alpha = nat(f, g);
    FunctorQuotient c = coker_nat(alpha);
    FunctorSub k = ker_nat(c.projection);
    return ShortExact{k.functor, g, c.functor, k.inclusion, c.projection};
}

NatMorphism InstanceGenerator::epi() {
    CoherentFunctor f = functor();
    CoherentFunctor h = functor();
    return coker_nat(nat(h, f)).projection;
}

Representation InstanceGenerator::represent(const CoherentFunctor& f) {
    auto [ux, ux_inv] = unimodular(f.x().gens());
    auto [uy, uy_inv] = unimodular(f.y().gens());
    FpModule x2(ux * f.x().rels() * unimodular(f.x().rels().cols()).first);
    FpModule y2(uy * f.y().rels() * unimodular(f.y().rels().cols()).first);

    Bounds small{2, 2, bounds_.max_entry};
    InstanceGenerator pad_gen(ring_, Rng(rng_.next()), small);
    FpModule w = pad_gen.module();

    DirectSum xs = direct_sum(x2, w);
    DirectSum ys = direct_sum(y2, w);
    Matrix core = uy * f.pres().mat() * ux_inv;
    ModMorphism pres(xs.module, ys.module, Matrix::block_diag(core, Matrix::identity(ring_, w.gens())));
    CoherentFunctor g(pres);

    const std::size_t nw = w.gens();
    auto pad_right = [&](const Matrix& m) { return Matrix::hcat(m, Matrix(ring_, m.rows(), nw)); };
    auto pad_below = [&](const Matrix& m) { return Matrix::vcat(m, Matrix(ring_, nw, m.cols())); };
    NatMorphism to(f, g, ModMorphism(xs.module, f.x(), pad_right(ux_inv)), ModMorphism(ys.module, f.y(), pad_right(uy_inv)));
    NatMorphism from(g, f, ModMorphism(f.x(), xs.module, pad_below(ux)), ModMorphism(f.y(), ys.module, pad_below(uy)));
    return {std::move(g), std::move(to), std::move(from)};
}

}  // namespace cohfun

#include "cohfun/hom.hpp"

namespace cohfun {

HomGroup::HomGroup(FpModule source, FpModule target) : source_(std::move(source)), target_(std::move(target)) {
    if (!(source_.ring() == target_.ring())) throw std::invalid_argument("hom_group: ring mismatch");
    const BaseRing& ring = source_.ring();

    for (std::size_t j = 0; j < target_.gens(); ++j) {
        const Int b = target_.summand_order(j);
        if (b != 0 && ring.is_unit(b)) continue;
        for (std::size_t i = 0; i < source_.gens(); ++i) {
            const Int a = source_.summand_order(i);
            if (a != 0 && ring.is_unit(a)) continue;
            if (a == 0) {
                slots_.push_back({j, i, Int(1), b});
            } else if (b != 0) {
                Int g = ring.gcd(a, b);
                if (ring.is_unit(g)) continue;
                slots_.push_back({j, i, ring.exact_div(b, g), g});
            }
        }
    }

    const std::size_t n = slots_.size();
    std::vector<std::size_t> finite;
    for (std::size_t s = 0; s < n; ++s)
        if (slots_[s].order != 0) finite.push_back(s);
    Matrix rels(ring, n, finite.size());
    for (std::size_t c = 0; c < finite.size(); ++c) rels.set(finite[c], c, slots_[finite[c]].order);
    group_ = FpModule(std::move(rels));

    const Matrix& ub_inv = target_.snf().u_inv;
    const Matrix& ua = source_.snf().u;
    reps_.reserve(n);
    for (const auto& slot : slots_) {
        Matrix t(ring, target_.gens(), source_.gens());
        for (std::size_t r = 0; r < t.rows(); ++r) {
            const Int& left = ub_inv(r, slot.target_summand);
            if (left == 0) continue;
            for (std::size_t c = 0; c < t.cols(); ++c) t.set(r, c, left * slot.scale * ua(slot.source_summand, c));
        }
        reps_.emplace_back(source_, target_, std::move(t), ModMorphism::Trusted{});
    }
}

ModMorphism HomGroup::element(const Matrix& coords) const {
    if (coords.rows() != reps_.size() || coords.cols() != 1) throw std::invalid_argument("HomGroup::element: bad coordinates");
    const BaseRing& ring = source_.ring();
    Matrix t(ring, target_.gens(), source_.gens());
    for (std::size_t s = 0; s < reps_.size(); ++s)
        if (coords(s, 0) != 0) t = t + reps_[s].mat().scaled(coords(s, 0));
    return ModMorphism(source_, target_, std::move(t), ModMorphism::Trusted{});
}

Matrix HomGroup::coordinates(const ModMorphism& m) const {
    if (!(m.source() == source_) || !(m.target() == target_))
        throw std::invalid_argument("HomGroup::coordinates: morphism has different endpoints");
    return coordinates(m.mat());
}

Matrix HomGroup::coordinates(const Matrix& mat) const {
    const BaseRing& ring = source_.ring();
    Matrix d = target_.snf().u * mat * source_.snf().u_inv;
    Matrix out(ring, slots_.size(), 1);
    for (std::size_t s = 0; s < slots_.size(); ++s) {
        const Slot& slot = slots_[s];
        Int e = d(slot.target_summand, slot.source_summand);
        const Int b = target_.summand_order(slot.target_summand);
        if (b != 0) e = ring.mod(e, b);
        Int c = ring.exact_div(e, slot.scale);
        if (slot.order != 0) c = ring.mod(c, slot.order);
        out.set(s, 0, c);
    }
    return out;
}

}  // namespace cohfun

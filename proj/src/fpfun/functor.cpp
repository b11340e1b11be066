#include "cohfun/functor.hpp"

namespace cohfun {

bool CoherentFunctor::same_presentation(const CoherentFunctor& other) const {
    return x() == other.x() && y() == other.y() && pres_.mat() == other.pres_.mat();
}

CoherentFunctor yoneda_embed(const FpModule& x) {
    FpModule zero = FpModule::zero(x.ring());
    return CoherentFunctor(ModMorphism::zero(x, zero));
}

CoherentFunctor tensor_functor(const FpModule& w) {
    const BaseRing& ring = w.ring();
    FpModule src = FpModule::free(ring, w.gens());
    FpModule dst = FpModule::free(ring, w.rels().cols());
    return CoherentFunctor(ModMorphism(src, dst, w.rels().transpose(), ModMorphism::Trusted{}));
}

CoherentFunctor zero_functor(const BaseRing& ring) {
    return CoherentFunctor(ModMorphism::identity(FpModule::zero(ring)));
}

Evaluation evaluation(const CoherentFunctor& f, const FpModule& a) {
    HomGroup hx(f.x(), a);
    HomGroup hy(f.y(), a);
    const Matrix& fm = f.pres().mat();
    Matrix pre(a.ring(), hx.group().gens(), hy.group().gens());
    for (std::size_t k = 0; k < hy.reps().size(); ++k) {
        Matrix c = hx.coordinates(hy.reps()[k].mat() * fm);
        for (std::size_t i = 0; i < c.rows(); ++i) pre.set(i, k, c(i, 0));
    }
    ModMorphism precompose(hy.group(), hx.group(), std::move(pre), ModMorphism::Trusted{});
    FpModule value = cokernel_mor(precompose).module;
    return Evaluation{std::move(hx), std::move(hy), std::move(precompose), std::move(value)};
}

FpModule evaluate(const CoherentFunctor& f, const FpModule& a) { return evaluation(f, a).value; }

ModMorphism evaluate_mor(const Evaluation& at_a, const Evaluation& at_b, const ModMorphism& phi) {
    const auto& reps = at_a.hom_x.reps();
    Matrix m(phi.ring(), at_b.value.gens(), reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i) {
        Matrix c = at_b.hom_x.coordinates(phi.mat() * reps[i].mat());
        for (std::size_t r = 0; r < c.rows(); ++r) m.set(r, i, c(r, 0));
    }
    return ModMorphism(at_a.value, at_b.value, std::move(m), ModMorphism::Trusted{});
}

ModMorphism evaluate_mor(const CoherentFunctor& f, const ModMorphism& phi) {
    return evaluate_mor(evaluation(f, phi.source()), evaluation(f, phi.target()), phi);
}

bool is_zero_functor(const CoherentFunctor& f) { return evaluate(f, f.x()).is_zero(); }

// ---------------------------------------------------------------------------

NatMorphism::NatMorphism(CoherentFunctor source, CoherentFunctor target, ModMorphism a, ModMorphism b)
    : NatMorphism(std::move(source), std::move(target), std::move(a), std::move(b), Trusted{}) {
    if (!(compose(source_.pres(), a_) == compose(b_, target_.pres())))
        throw std::invalid_argument("natural transformation: f o a != b o g");
}

NatMorphism::NatMorphism(CoherentFunctor source, CoherentFunctor target, ModMorphism a, ModMorphism b, Trusted)
    : source_(std::move(source)), target_(std::move(target)), a_(std::move(a)), b_(std::move(b)) {
    if (!(a_.source() == target_.x()) || !(a_.target() == source_.x()))
        throw std::invalid_argument("natural transformation: a must map X_target -> X_source");
    if (!(b_.source() == target_.y()) || !(b_.target() == source_.y()))
        throw std::invalid_argument("natural transformation: b must map Y_target -> Y_source");
}

NatMorphism NatMorphism::identity(const CoherentFunctor& f) {
    return NatMorphism(f, f, ModMorphism::identity(f.x()), ModMorphism::identity(f.y()), Trusted{});
}

NatMorphism NatMorphism::zero(const CoherentFunctor& f, const CoherentFunctor& g) {
    return NatMorphism(f, g, ModMorphism::zero(g.x(), f.x()), ModMorphism::zero(g.y(), f.y()), Trusted{});
}

ModMorphism NatMorphism::at(const Evaluation& source_at, const Evaluation& target_at) const {
    const auto& reps = source_at.hom_x.reps();
    Matrix m(a_.ring(), target_at.value.gens(), reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i) {
        Matrix c = target_at.hom_x.coordinates(reps[i].mat() * a_.mat());
        for (std::size_t r = 0; r < c.rows(); ++r) m.set(r, i, c(r, 0));
    }
    return ModMorphism(source_at.value, target_at.value, std::move(m), ModMorphism::Trusted{});
}

ModMorphism NatMorphism::at(const FpModule& a) const { return at(evaluation(source_, a), evaluation(target_, a)); }

NatMorphism NatMorphism::operator-() const { return NatMorphism(source_, target_, -a_, -b_, Trusted{}); }

namespace {

void require_parallel(const NatMorphism& x, const NatMorphism& y) {
    if (!x.source().same_presentation(y.source()) || !x.target().same_presentation(y.target()))
        throw std::invalid_argument("natural transformations do not share source and target");
}

}  // namespace

NatMorphism operator+(const NatMorphism& x, const NatMorphism& y) {
    require_parallel(x, y);
    return NatMorphism(x.source_, x.target_, x.a_ + y.a_, x.b_ + y.b_, NatMorphism::Trusted{});
}

NatMorphism operator-(const NatMorphism& x, const NatMorphism& y) {
    require_parallel(x, y);
    return NatMorphism(x.source_, x.target_, x.a_ - y.a_, x.b_ - y.b_, NatMorphism::Trusted{});
}

bool operator==(const NatMorphism& x, const NatMorphism& y) {
    require_parallel(x, y);
    return is_zero_nat(x - y);
}

bool is_zero_nat(const NatMorphism& alpha) {
    Evaluation ev = evaluation(alpha.target(), alpha.source().x());
    return ev.value.is_zero_element(ev.hom_x.coordinates(alpha.a()));
}

NatMorphism compose(const NatMorphism& beta, const NatMorphism& alpha) {
    if (!alpha.target().same_presentation(beta.source()))
        throw std::invalid_argument("compose: natural transformations are not composable");
    return NatMorphism(alpha.source(), beta.target(), compose(alpha.a(), beta.a()), compose(alpha.b(), beta.b()),
                       NatMorphism::Trusted{});
}

// ---------------------------------------------------------------------------

NatGroup::NatGroup(CoherentFunctor source, CoherentFunctor target)
    : source_(std::move(source)),
      target_(std::move(target)),
      at_x_(evaluation(target_, source_.x())),
      kernel_{FpModule(), ModMorphism::identity(FpModule())} {
    const ModMorphism& f = source_.pres();
    Evaluation at_y = evaluation(target_, source_.y());
    kernel_ = kernel_mor(evaluate_mor(at_x_, at_y, f));

    PreimageSolver through_g(at_y.precompose);
    const Matrix& th = kernel_.inclusion.mat();
    reps_.reserve(th.cols());
    for (std::size_t k = 0; k < th.cols(); ++k) {
        ModMorphism a = at_x_.hom_x.element(th.column(k));
        auto z = through_g(at_y.hom_x.coordinates(f.mat() * a.mat()));
        if (!z) throw std::logic_error("nat_group: kernel element does not factor through g");
        ModMorphism b = at_y.hom_y.element(*z);
        reps_.emplace_back(source_, target_, std::move(a), std::move(b), NatMorphism::Trusted{});
    }
}

NatMorphism NatGroup::element(const Matrix& coords) const {
    if (coords.rows() != reps_.size() || coords.cols() != 1)
        throw std::invalid_argument("NatGroup::element: bad coordinates");
    NatMorphism out = NatMorphism::zero(source_, target_);
    for (std::size_t k = 0; k < reps_.size(); ++k)
        if (coords(k, 0) != 0)
            out = out + NatMorphism(source_, target_, reps_[k].a().scaled(coords(k, 0)),
                                    reps_[k].b().scaled(coords(k, 0)), NatMorphism::Trusted{});
    return out;
}

Matrix NatGroup::coordinates(const NatMorphism& alpha) const {
    if (!alpha.source().same_presentation(source_) || !alpha.target().same_presentation(target_))
        throw std::invalid_argument("NatGroup::coordinates: transformation has different endpoints");
    auto z = PreimageSolver(kernel_.inclusion)(at_x_.hom_x.coordinates(alpha.a()));
    if (!z) throw std::logic_error("NatGroup::coordinates: a-component outside ker G(f)");
    return std::move(*z);
}

// ---------------------------------------------------------------------------

FunctorSub ker_nat(const NatMorphism& alpha) {
    const CoherentFunctor& f = alpha.source();
    const CoherentFunctor& g = alpha.target();
    Pushout d = pushout(alpha.a(), g.pres());
    Pushout e = pushout(d.from_first, f.pres());
    CoherentFunctor k(e.from_first);
    NatMorphism inc(k, f, d.from_first, e.from_second, NatMorphism::Trusted{});
    return {std::move(k), std::move(inc)};
}

FunctorQuotient coker_nat(const NatMorphism& alpha) {
    const CoherentFunctor& g = alpha.target();
    ModMorphism h = pairing(alpha.a(), g.pres());
    DirectSum sum = direct_sum(alpha.source().x(), g.y());
    CoherentFunctor c(h);
    NatMorphism proj(g, c, ModMorphism::identity(g.x()),
                     ModMorphism(h.target(), g.y(), sum.proj2.mat(), ModMorphism::Trusted{}), NatMorphism::Trusted{});
    return {std::move(c), std::move(proj)};
}

}  // namespace cohfun

#include "cohfun/derived.hpp"

namespace cohfun {

SubobjectData w_of(const CoherentFunctor& f) { return kernel_mor(f.pres()); }

ModMorphism w_mor(const NatMorphism& alpha) {
    SubobjectData wf = w_of(alpha.source());
    SubobjectData wg = w_of(alpha.target());
    auto m = factor_through_mono(compose(alpha.a(), wg.inclusion), wf.inclusion);
    if (!m) throw std::logic_error("w_mor: a o k_G does not factor through k_F");
    return std::move(*m);
}

FourTermData four_term(const CoherentFunctor& f) {
    SubobjectData w = w_of(f);
    QuotientData coim = cokernel_mor(w.inclusion);
    ModMorphism v(coim.module, f.y(), f.pres().mat());
    CoherentFunctor f0(v);
    NatMorphism iota(f0, f, coim.projection, ModMorphism::identity(f.y()));

    CoherentFunctor r0 = yoneda_embed(w.module);
    NatMorphism phi(f, r0, w.inclusion, ModMorphism::zero(r0.y(), f.y()));

    CoherentFunctor f1(w.inclusion);
    NatMorphism rho(r0, f1, ModMorphism::identity(w.module), ModMorphism::zero(f.x(), r0.y()));

    return FourTermData{f, w.module, w.inclusion, coim.module, coim.projection, v, f0, iota, r0, phi, f1, rho};
}

R0Data r0_functor(const CoherentFunctor& f) {
    SubobjectData w = w_of(f);
    CoherentFunctor r0 = yoneda_embed(w.module);
    NatMorphism unit(f, r0, w.inclusion, ModMorphism::zero(r0.y(), f.y()));
    return {std::move(r0), std::move(unit)};
}

NatMorphism r0_mor(const NatMorphism& alpha) {
    CoherentFunctor rf = yoneda_embed(w_of(alpha.source()).module);
    CoherentFunctor rg = yoneda_embed(w_of(alpha.target()).module);
    return NatMorphism(rf, rg, w_mor(alpha), ModMorphism::zero(rg.y(), rf.y()), NatMorphism::Trusted{});
}

CoherentFunctor inj_stabilize(const CoherentFunctor& f) {
    QuotientData coim = cokernel_mor(w_of(f).inclusion);
    return CoherentFunctor(ModMorphism(coim.module, f.y(), f.pres().mat()));
}

bool is_inj_stable(const CoherentFunctor& f) { return w_of(f).module.is_zero(); }

L0Data l0_functor(const CoherentFunctor& f) {
    const BaseRing& ring = f.ring();
    Evaluation ev = evaluation(f, FpModule::free(ring, 1));
    const FpModule& w = ev.value;
    CoherentFunctor l0 = tensor_functor(w);

    // Row i of a is the i-th generator u_i : X -> R of F(R). Relation column
    // j of F(R) is either a relation of Hom(X, R), where b's row is zero, or
    // the image of the k-th generator h_k : Y -> R, where b's row is h_k.
    const auto& us = ev.hom_x.reps();
    const auto& hs = ev.hom_y.reps();
    const std::size_t hom_rels = ev.hom_x.group().rels().cols();
    Matrix a(ring, us.size(), f.x().gens());
    for (std::size_t i = 0; i < us.size(); ++i)
        for (std::size_t c = 0; c < a.cols(); ++c) a.set(i, c, us[i].mat()(0, c));
    Matrix b(ring, w.rels().cols(), f.y().gens());
    for (std::size_t j = hom_rels; j < b.rows(); ++j)
        for (std::size_t c = 0; c < b.cols(); ++c) b.set(j, c, hs[j - hom_rels].mat()(0, c));

    NatMorphism counit(l0, f, ModMorphism(f.x(), l0.x(), std::move(a)), ModMorphism(f.y(), l0.y(), std::move(b)));
    return {std::move(l0), std::move(counit)};
}

CoherentFunctor proj_stabilize(const CoherentFunctor& f) { return coker_nat(l0_functor(f).counit).functor; }

bool is_proj_stable(const CoherentFunctor& f) { return evaluate(f, FpModule::free(f.ring(), 1)).is_zero(); }

bool is_representable(const CoherentFunctor& f) {
    NatMorphism unit = r0_functor(f).unit;
    return is_zero_functor(ker_nat(unit).functor) && is_zero_functor(coker_nat(unit).functor);
}

}  // namespace cohfun

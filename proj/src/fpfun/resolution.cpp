#include "cohfun/derived.hpp"

namespace cohfun {

Embedding embed_injective(const CoherentFunctor& f) {
    const BaseRing& ring = f.ring();
    const std::size_t nx = f.x().gens();
    const std::size_t ny = f.y().gens();
    const Matrix& ry = f.y().rels();

    // P0 = R^nx covers X and Q1 -> Q0 = R^my -> R^ny presents Y, both by the
    // identity on generators, so f's own matrix lifts f o p through Q0 -> Y.
    FpModule p0 = FpModule::free(ring, nx);
    FpModule q1 = FpModule::free(ring, ry.cols());
    FpModule q0 = FpModule::free(ring, ny);
    DirectSum src = direct_sum(p0, q1);
    ModMorphism h(src.module, q0, Matrix::hcat(f.pres().mat(), ry), ModMorphism::Trusted{});
    CoherentFunctor hf(h);

    Matrix a = Matrix::hcat(Matrix::identity(ring, nx), Matrix(ring, nx, ry.cols()));
    NatMorphism mono(f, hf, ModMorphism(src.module, f.x(), std::move(a), ModMorphism::Trusted{}),
                     ModMorphism(q0, f.y(), Matrix::identity(ring, ny), ModMorphism::Trusted{}));
    return {std::move(hf), std::move(mono)};
}

int InjectiveResolution::nonzero_terms() const {
    int n = 0;
    for (std::size_t i = 0; i < terms.size(); ++i)
        if (!is_zero_functor(terms[i])) n = static_cast<int>(i) + 1;
    return n;
}

InjectiveResolution injective_resolution(const CoherentFunctor& f) {
    Embedding e0 = embed_injective(f);
    FunctorQuotient c0 = coker_nat(e0.mono);
    Embedding e1 = embed_injective(c0.functor);
    NatMorphism d0 = compose(e1.mono, c0.projection);
    FunctorQuotient c1 = coker_nat(e1.mono);

    if (!is_injective_functor(c1.functor))
        throw std::logic_error("injective_resolution: third term is not injective");

    InjectiveResolution res{f, {e0.functor, e1.functor, c1.functor}, {e0.mono, d0, c1.projection}, 2};
    if (is_injective_functor(f))
        res.injective_dimension = 0;
    else if (is_injective_functor(c0.functor))
        res.injective_dimension = 1;
    return res;
}

std::optional<NatMorphism> injective_retraction(const CoherentFunctor& f) {
    Embedding e = embed_injective(f);
    const NatMorphism& j = e.mono;
    if (e.functor.same_presentation(f) && j.a().mat().is_identity() && j.b().mat().is_identity())
        return NatMorphism(e.functor, f, ModMorphism::identity(f.x()), ModMorphism::identity(f.y()),
                           NatMorphism::Trusted{});

    // id_F must lie in the image of Nat(H, F) -> Nat(F, F), beta |-> beta o j.
    NatGroup from_h(e.functor, f);
    NatGroup endo(f, f);
    const FpModule& target = endo.group();
    Matrix images(f.ring(), target.gens(), from_h.reps().size());
    for (std::size_t k = 0; k < from_h.reps().size(); ++k) {
        Matrix c = endo.coordinates(compose(from_h.reps()[k], j));
        for (std::size_t r = 0; r < c.rows(); ++r) images.set(r, k, c(r, 0));
    }
    Matrix id = endo.coordinates(NatMorphism::identity(f));
    auto z = LinearSolver(Matrix::hcat(images, target.rels())).solve(id);
    if (!z) return std::nullopt;
    return from_h.element(z->row_range(0, images.cols()));
}

bool is_injective_functor(const CoherentFunctor& f) { return injective_retraction(f).has_value(); }

}  // namespace cohfun

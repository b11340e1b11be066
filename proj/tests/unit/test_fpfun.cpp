#include "catch_amalgamated.hpp"

#include "cohfun/derived.hpp"
#include "cohfun/exactness.hpp"
#include "cohfun/random.hpp"

using namespace cohfun;

namespace {

const BaseRing Z = BaseRing::integers();

FpModule cyc(long d) { return FpModule::cyclic(Z, d); }
FpModule zfree(std::size_t n) { return FpModule::free(Z, n); }
Matrix M(std::initializer_list<std::initializer_list<long>> rows) { return Matrix::from_rows(Z, rows); }

CoherentFunctor pres(const FpModule& x, const FpModule& y, const Matrix& m) {
    return CoherentFunctor(ModMorphism(x, y, m));
}

// F presented by pi : Z -> Z/2.
CoherentFunctor worked_pi() { return pres(zfree(1), cyc(2), M({{1}})); }
CoherentFunctor times_two() { return pres(zfree(1), zfree(1), M({{2}})); }

std::vector<FpModule> battery() { return ProbeBattery::standard(Z).probes; }

bool zero_on_battery(const CoherentFunctor& f) {
    for (const auto& p : battery())
        if (!evaluate(f, p).is_zero()) return false;
    return true;
}

bool iso_on_battery(const NatMorphism& alpha) {
    for (const auto& p : battery())
        if (!is_iso(alpha.at(p))) return false;
    return true;
}

}  // namespace

TEST_CASE("representable functors") {
    for (const auto& a : battery()) CHECK(evaluate(yoneda_embed(zfree(1)), a).isomorphic_to(a));
    CHECK(evaluate(yoneda_embed(cyc(2)), cyc(4)).str() == "Z/2");
    CHECK(is_zero_functor(yoneda_embed(FpModule::zero(Z))));
}

TEST_CASE("evaluation examples") {
    CHECK(evaluate(times_two(), cyc(4)).str() == "Z/2");
    CHECK(evaluate(pres(cyc(2), FpModule::zero(Z), Matrix(Z, 0, 1)), zfree(1)).str() == "0");
    CHECK(evaluate(worked_pi(), cyc(4)).str() == "Z/2");
    CHECK(evaluate(zero_functor(Z), cyc(6)).str() == "0");
}

TEST_CASE("evaluate_mor is functorial") {
    InstanceGenerator gen(Z, Rng(12));
    for (int k = 0; k < 25; ++k) {
        CoherentFunctor f = gen.functor();
        FpModule a = gen.module(), b = gen.module(), c = gen.module();
        ModMorphism p = gen.morphism(a, b), q = gen.morphism(b, c);
        REQUIRE(evaluate_mor(f, compose(q, p)) == compose(evaluate_mor(f, q), evaluate_mor(f, p)));
        REQUIRE(evaluate_mor(f, ModMorphism::identity(a)) == ModMorphism::identity(evaluate(f, a)));
    }
}

TEST_CASE("natural transformation groups") {
    CoherentFunctor t2 = tensor_functor(cyc(2));
    CHECK(NatGroup(t2, t2).group().str() == "Z/2");
    CHECK(NatGroup(t2, yoneda_embed(zfree(1))).group().str() == "0");
    InstanceGenerator gen(Z, Rng(2));
    for (int k = 0; k < 20; ++k) {
        FpModule x = gen.module();
        CoherentFunctor g = gen.functor();
        NatGroup n(yoneda_embed(x), g);
        REQUIRE(n.group().isomorphic_to(evaluate(g, x)));
        NatMorphism alpha = gen.nat(yoneda_embed(x), g);
        REQUIRE(n.element(n.coordinates(alpha)) == alpha);
    }
}

TEST_CASE("natural transformations check compatibility") {
    CoherentFunctor f = worked_pi();
    ModMorphism a(zfree(1), zfree(1), M({{1}}));
    ModMorphism bad_b(cyc(2), cyc(2), M({{0}}));
    CHECK_THROWS_AS(NatMorphism(f, f, a, bad_b), std::invalid_argument);
    CHECK(NatMorphism(f, f, a, ModMorphism::identity(cyc(2))) == NatMorphism::identity(f));
    // a = 2 is not of the form s o pi since Hom(Z/2, Z) = 0.
    NatMorphism twice(f, f, ModMorphism(zfree(1), zfree(1), M({{2}})), ModMorphism(cyc(2), cyc(2), M({{0}})));
    CHECK_FALSE(is_zero_nat(twice));
}

TEST_CASE("kernels and cokernels of natural transformations") {
    InstanceGenerator gen(Z, Rng(31));
    SECTION("identity") {
        CoherentFunctor f = worked_pi();
        CHECK(is_zero_functor(coker_nat(NatMorphism::identity(f)).functor));
        CHECK(is_zero_functor(ker_nat(NatMorphism::identity(f)).functor));
    }
    SECTION("zero map") {
        CoherentFunctor f = gen.functor(), g = gen.functor();
        FunctorQuotient q = coker_nat(NatMorphism::zero(f, g));
        CHECK(iso_on_battery(q.projection));
    }
    SECTION("between representables the kernel is representable") {
        ModMorphism f(cyc(4), cyc(2), M({{1}}));
        // (f, -) : (Y, -) -> (X, -).
        NatMorphism alpha(yoneda_embed(cyc(2)), yoneda_embed(cyc(4)), f, ModMorphism::zero(FpModule::zero(Z), FpModule::zero(Z)));
        CHECK(is_representable(ker_nat(alpha).functor));
    }
    SECTION("pointwise agreement on random maps") {
        for (int k = 0; k < 15; ++k) {
            CoherentFunctor f = gen.functor(), g = gen.functor();
            NatMorphism alpha = gen.nat(f, g);
            FunctorSub ks = ker_nat(alpha);
            FunctorQuotient cq = coker_nat(alpha);
            for (const auto& p : battery()) {
                REQUIRE(evaluate(ks.functor, p).isomorphic_to(kernel_mor(alpha.at(p)).module));
                REQUIRE(evaluate(cq.functor, p).isomorphic_to(cokernel_mor(alpha.at(p)).module));
            }
        }
    }
}

TEST_CASE("w examples") {
    CHECK(w_of(yoneda_embed(cyc(6))).module.str() == "Z/6");
    CHECK(w_of(times_two()).module.str() == "0");
    SubobjectData w = w_of(worked_pi());
    CHECK(w.module.str() == "Z^1");
    CHECK(w.inclusion.mat() == M({{2}}));
}

TEST_CASE("four-term sequence of the worked instance") {
    FourTermData d = four_term(worked_pi());
    CHECK(d.wf.str() == "Z^1");
    CHECK(zero_on_battery(d.f0));
    for (const auto& a : battery()) {
        CHECK(evaluate(d.r0, a).isomorphic_to(a));
        CHECK(evaluate(d.f1, a).isomorphic_to(tensor_module(cyc(2), a)));
        CHECK(kernel_mor(d.phi.at(a)).module.is_zero());
    }
    CHECK(check_exact(d.complex(), battery()).pass);
    CHECK(is_inj_stable(d.f0));
    CHECK(is_inj_stable(d.f1));
}

TEST_CASE("four-term sequence of representables and of monos") {
    FourTermData y = four_term(yoneda_embed(cyc(2)));
    CHECK(iso_on_battery(y.phi));
    CHECK(zero_on_battery(y.f0));
    CHECK(zero_on_battery(y.f1));
    FourTermData m = four_term(times_two());
    CHECK(m.wf.is_zero());
    CHECK(zero_on_battery(m.r0));
    CHECK(zero_on_battery(m.f1));
    CHECK(iso_on_battery(m.iota));
}

TEST_CASE("R0 and injective stabilization") {
    CHECK(is_zero_functor(r0_functor(times_two()).functor));
    CHECK(is_inj_stable(times_two()));
    CHECK(iso_on_battery(r0_functor(yoneda_embed(cyc(3))).unit));
    CHECK_FALSE(is_inj_stable(yoneda_embed(cyc(2))));
    CHECK(is_zero_functor(inj_stabilize(yoneda_embed(cyc(2)))));
    CHECK(is_inj_stable(zero_functor(Z)));
    for (const auto& a : battery()) CHECK(evaluate(inj_stabilize(times_two()), a).isomorphic_to(evaluate(times_two(), a)));
}

TEST_CASE("tensor functors") {
    CoherentFunctor t = tensor_functor(cyc(2));
    for (const auto& a : battery()) CHECK(evaluate(t, a).isomorphic_to(tensor_module(cyc(2), a)));
    for (const auto& a : battery()) CHECK(evaluate(tensor_functor(zfree(1)), a).isomorphic_to(a));
    CHECK(is_zero_functor(tensor_functor(FpModule::zero(Z))));
}

TEST_CASE("L0 and projective stabilization") {
    L0Data l = l0_functor(worked_pi());
    for (const auto& a : battery()) {
        CHECK(evaluate(l.functor, a).isomorphic_to(a));
        CHECK(is_epi(l.counit.at(a)));
    }
    CHECK(zero_on_battery(proj_stabilize(worked_pi())));
    CHECK(iso_on_battery(l0_functor(tensor_functor(cyc(2))).counit));
    CHECK(is_zero_functor(l0_functor(yoneda_embed(cyc(2))).functor));
    CHECK(is_proj_stable(yoneda_embed(cyc(2))));
    CHECK_FALSE(is_proj_stable(worked_pi()));
}

TEST_CASE("representability") {
    CHECK(is_representable(yoneda_embed(cyc(6))));
    CHECK_FALSE(is_representable(tensor_functor(cyc(2))));
    CHECK(is_representable(zero_functor(Z)));
    CHECK_FALSE(is_representable(worked_pi()));
}

TEST_CASE("injective embedding") {
    Embedding e = embed_injective(yoneda_embed(cyc(2)));
    for (const auto& a : battery()) {
        CHECK(evaluate(e.functor, a).isomorphic_to(a));
        CHECK(is_mono(e.mono.at(a)));
    }
    CoherentFunctor t = tensor_functor(cyc(2));
    Embedding et = embed_injective(t);
    CHECK(et.functor.same_presentation(t));
    CHECK(et.mono == NatMorphism::identity(t));
    CHECK(is_zero_functor(embed_injective(zero_functor(Z)).functor));
}

TEST_CASE("injective resolutions") {
    SECTION("(Z/2, -) has injective dimension exactly 2") {
        InjectiveResolution r = injective_resolution(yoneda_embed(cyc(2)));
        CHECK(r.injective_dimension == 2);
        CHECK(r.nonzero_terms() == 3);
        for (const auto& t : r.terms) CHECK(is_injective_functor(t));
        CHECK(check_exact(r.maps, battery()).pass);
        for (const auto& a : battery()) {
            CHECK(evaluate(r.terms[0], a).isomorphic_to(a));
            CHECK(evaluate(r.terms[1], a).isomorphic_to(a));
            CHECK(evaluate(r.terms[2], a).isomorphic_to(tensor_module(cyc(2), a)));
        }
    }
    SECTION("Z/2 (x) - is its own resolution") {
        CoherentFunctor t = tensor_functor(cyc(2));
        InjectiveResolution r = injective_resolution(t);
        CHECK(r.injective_dimension == 0);
        CHECK(r.nonzero_terms() == 1);
        CHECK(iso_on_battery(r.maps[0]));
    }
    SECTION("zero functor") {
        InjectiveResolution r = injective_resolution(zero_functor(Z));
        CHECK(r.nonzero_terms() == 0);
    }
}

TEST_CASE("injectivity test") {
    CHECK(is_injective_functor(tensor_functor(cyc(2))));
    CHECK_FALSE(is_injective_functor(yoneda_embed(cyc(2))));
    CHECK(is_injective_functor(yoneda_embed(zfree(1))));
    // Injectivity is a property of the functor, not of the presentation.
    InstanceGenerator gen(Z, Rng(8));
    Representation r = gen.represent(tensor_functor(cyc(3)));
    CHECK(is_injective_functor(r.functor));
}

TEST_CASE("prime field base is semisimple") {
    const BaseRing f5 = BaseRing::prime_field(5);
    InstanceGenerator gen(f5, Rng(1));
    for (int k = 0; k < 25; ++k) {
        CoherentFunctor f = gen.functor();
        REQUIRE(is_representable(f));
        REQUIRE(is_injective_functor(f));
    }
}

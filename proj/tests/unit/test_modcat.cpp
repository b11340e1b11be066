#include "catch_amalgamated.hpp"

#include "cohfun/brute.hpp"
#include "cohfun/hom.hpp"
#include "cohfun/module.hpp"
#include "cohfun/random.hpp"

using namespace cohfun;

namespace {

const BaseRing Z = BaseRing::integers();

FpModule cyc(long d) { return FpModule::cyclic(Z, d); }
FpModule zfree(std::size_t n) { return FpModule::free(Z, n); }
Matrix M(std::initializer_list<std::initializer_list<long>> rows) { return Matrix::from_rows(Z, rows); }

}  // namespace

TEST_CASE("canonical forms") {
    CHECK(FpModule(M({{2, 0}, {0, 3}})).str() == "Z/6");
    CHECK(zfree(1).str() == "Z^1");
    CHECK(FpModule(M({{1}})).str() == "0");
    CHECK(FpModule(M({{2, 0}, {0, 4}, {0, 0}})).str() == "Z^1 + Z/2 + Z/4");
    CHECK(FpModule(Matrix(BaseRing::prime_field(5), 2, 0)).str() == "F5^2");
    CHECK(FpModule(M({{4, 0}, {0, 6}})).isomorphic_to(FpModule(M({{2, 0}, {0, 12}}))));
    CHECK_FALSE(cyc(4).isomorphic_to(FpModule(M({{2, 0}, {0, 2}}))));
}

TEST_CASE("Hom group examples") {
    CHECK(HomGroup(cyc(4), cyc(6)).group().str() == "Z/2");
    CHECK(HomGroup(cyc(2), zfree(1)).group().str() == "0");
    FpModule a = FpModule(M({{2, 0}, {0, 0}, {0, 3}}));
    HomGroup h(zfree(1), a);
    CHECK(h.group().isomorphic_to(a));
    CHECK(HomGroup(zfree(2), zfree(1)).group().str() == "Z^2");
}

TEST_CASE("Hom coordinates round-trip") {
    InstanceGenerator gen(Z, Rng(9));
    for (int k = 0; k < 60; ++k) {
        FpModule a = gen.module(), b = gen.module();
        HomGroup h(a, b);
        ModMorphism m = gen.morphism(a, b);
        REQUIRE(h.element(h.coordinates(m)) == m);
        for (std::size_t i = 0; i < h.reps().size(); ++i) {
            Matrix e(Z, h.group().gens(), 1);
            e.set(i, 0, 1);
            REQUIRE(h.coordinates(h.reps()[i]) == h.coordinates(h.element(e)));
        }
    }
}

TEST_CASE("Hom groups of finite modules match enumeration") {
    InstanceGenerator gen(Z, Rng(21));
    for (int k = 0; k < 80; ++k) {
        FpModule a = gen.finite_module(36), b = gen.finite_module(36);
        REQUIRE(HomGroup(a, b).group().canonical() == brute_hom(a, b));
    }
}

TEST_CASE("ill-defined morphisms are rejected") {
    CHECK_THROWS_AS(ModMorphism(cyc(2), cyc(3), M({{1}})), IllDefinedMorphism);
    CHECK_THROWS_AS(ModMorphism(cyc(2), zfree(1), M({{1}})), IllDefinedMorphism);
    CHECK_NOTHROW(ModMorphism(cyc(2), cyc(4), M({{2}})));
    CHECK_THROWS_AS(ModMorphism(cyc(2), cyc(4), M({{2, 0}})), std::invalid_argument);
}

TEST_CASE("kernels") {
    SECTION("x2 on Z is mono") { CHECK(kernel_mor(ModMorphism(zfree(1), zfree(1), M({{2}}))).module.is_zero()); }
    SECTION("Z/4 -> Z/2") {
        SubobjectData k = kernel_mor(ModMorphism(cyc(4), cyc(2), M({{1}})));
        CHECK(k.module.str() == "Z/2");
        CHECK(is_mono(k.inclusion));
        // The image of the inclusion is {0, 2}.
        CHECK(image_mor(k.inclusion).module.str() == "Z/2");
        CHECK(k.inclusion.mat().rows() == 1);
        const ModMorphism incl(k.module, cyc(4), k.inclusion.mat());
        CHECK((incl == ModMorphism(k.module, cyc(4), M({{2}})) || incl == ModMorphism(k.module, cyc(4), M({{-2}}))));
    }
    SECTION("zero map") {
        FpModule a = FpModule(M({{2, 0}, {0, 0}}));
        SubobjectData k = kernel_mor(ModMorphism::zero(a, cyc(3)));
        CHECK(k.module.isomorphic_to(a));
        CHECK(is_iso(k.inclusion));
    }
}

TEST_CASE("cokernels") {
    CHECK(cokernel_mor(ModMorphism(zfree(1), zfree(1), M({{2}}))).module.str() == "Z/2");
    FpModule a = cyc(6);
    CHECK(cokernel_mor(ModMorphism::identity(a)).module.str() == "0");
    CHECK(cokernel_mor(ModMorphism(zfree(1), zfree(2), M({{1}, {0}}))).module.str() == "Z^1");
}

TEST_CASE("composition and equality modulo relations") {
    ModMorphism two(zfree(1), zfree(1), M({{2}}));
    ModMorphism three(zfree(1), zfree(1), M({{3}}));
    CHECK(compose(three, two) == ModMorphism(zfree(1), zfree(1), M({{6}})));
    ModMorphism pi(zfree(1), cyc(2), M({{1}}));
    ModMorphism zero_back = ModMorphism::zero(cyc(2), zfree(1));
    CHECK(compose(zero_back, pi).is_zero());
    // In Z/2 the matrices 0 and 2 are the same map.
    CHECK(ModMorphism(zfree(1), cyc(2), M({{2}})) == ModMorphism(zfree(1), cyc(2), M({{0}})));
    InstanceGenerator gen(Z, Rng(4));
    for (int k = 0; k < 30; ++k) {
        FpModule a = gen.module(), b = gen.module();
        ModMorphism phi = gen.morphism(a, b);
        REQUIRE(compose(ModMorphism::identity(b), phi) == phi);
        REQUIRE(compose(phi, ModMorphism::identity(a)) == phi);
        REQUIRE((phi - phi).is_zero());
    }
}

TEST_CASE("mono, epi and iso") {
    CHECK(is_mono(ModMorphism(zfree(1), zfree(1), M({{2}}))));
    CHECK_FALSE(is_epi(ModMorphism(zfree(1), zfree(1), M({{2}}))));
    CHECK(is_epi(ModMorphism(cyc(4), cyc(2), M({{1}}))));
    CHECK(is_iso(ModMorphism(cyc(6), FpModule(M({{2, 0}, {0, 3}})), M({{3}, {2}}))));
}

TEST_CASE("tensor products") {
    CHECK(tensor_module(cyc(4), cyc(6)).str() == "Z/2");
    CHECK(tensor_module(zfree(1), cyc(9)).str() == "Z/9");
    CHECK(tensor_module(cyc(2), cyc(3)).str() == "0");
    CHECK(tensor_module(zfree(2), FpModule(M({{2, 0}, {0, 0}}))).str() == "Z^2 + Z/2 + Z/2");
}

TEST_CASE("lifting through epimorphisms") {
    ModMorphism phi(zfree(1), cyc(2), M({{1}}));
    ModMorphism e(cyc(4), cyc(2), M({{1}}));
    ModMorphism lam = lift_through_epi(phi, e);
    CHECK(compose(e, lam) == phi);
    CHECK(compose(e, lift_through_epi(ModMorphism::zero(zfree(1), cyc(2)), e)).is_zero());
    ModMorphism id = ModMorphism::identity(zfree(1));
    CHECK(lift_through_epi(id, id) == id);
}

TEST_CASE("free presentations") {
    FreePresentation p = free_presentation(cyc(6));
    CHECK(p.relations.mat() == M({{6}}));
    CHECK(is_epi(p.cover));
    FreePresentation q = free_presentation(zfree(2));
    CHECK(q.relations.source().gens() == 0);
    CHECK(q.cover.mat().is_identity());
    FpModule b(M({{2, 0}, {0, 3}}));
    FreePresentation r = free_presentation(b);
    CHECK(r.relations.mat() == b.rels());
    CHECK(compose(r.cover, r.relations).is_zero());
}

TEST_CASE("direct sums") {
    CHECK(direct_sum(zfree(1), cyc(2)).module.str() == "Z^1 + Z/2");
    CHECK(direct_sum(cyc(2), cyc(3)).module.str() == "Z/6");
    FpModule a(M({{4, 0}, {0, 0}}));
    DirectSum s = direct_sum(a, FpModule::zero(Z));
    CHECK(s.module.isomorphic_to(a));
    DirectSum t = direct_sum(cyc(2), zfree(1));
    CHECK(compose(t.proj1, t.inj1) == ModMorphism::identity(cyc(2)));
    CHECK(compose(t.proj2, t.inj1).is_zero());
    CHECK(compose(t.inj1, t.proj1) + compose(t.inj2, t.proj2) == ModMorphism::identity(t.module));
}

TEST_CASE("exactness_defect detects failures") {
    ModMorphism two(zfree(1), zfree(1), M({{2}}));
    ModMorphism pi(zfree(1), cyc(2), M({{1}}));
    CHECK_FALSE(exactness_defect({two, pi}, true, true));
    CHECK(exactness_defect({two, ModMorphism(zfree(1), cyc(4), M({{1}}))}, true, true));
    CHECK(exactness_defect({pi}, true, true));
}

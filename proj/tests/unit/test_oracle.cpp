#include "catch_amalgamated.hpp"

#include "cohfun/brute.hpp"
#include "cohfun/derived.hpp"
#include "cohfun/exactness.hpp"
#include "cohfun/parallel.hpp"
#include "cohfun/random.hpp"
#include "cohfun/verify.hpp"

using namespace cohfun;

namespace {

const BaseRing Z = BaseRing::integers();

FpModule cyc(long d) { return FpModule::cyclic(Z, d); }
FpModule zfree(std::size_t n) { return FpModule::free(Z, n); }

CoherentFunctor worked_pi() { return CoherentFunctor(ModMorphism(zfree(1), cyc(2), Matrix::from_rows(Z, {{1}}))); }

}  // namespace

TEST_CASE("brute-force evaluation examples") {
    CoherentFunctor two(ModMorphism(zfree(1), zfree(1), Matrix::from_rows(Z, {{2}})));
    CHECK(brute_eval(two, cyc(4)).str() == "Z/2");
    CHECK(brute_eval(yoneda_embed(cyc(2)), cyc(2)).str() == "Z/2");
    CHECK(brute_eval(zero_functor(Z), cyc(6)).str() == "0");
    CHECK(brute_hom(cyc(4), cyc(6)).str(Z) == "Z/2");
}

TEST_CASE("brute-force oracle rejects oversized inputs") {
    CHECK_THROWS_AS(brute_eval(worked_pi(), zfree(1)), OracleSizeError);
    CHECK_THROWS_AS(brute_eval(worked_pi(), cyc(5000)), OracleSizeError);
    BruteLimits tight;
    tight.max_candidates = 10;
    CHECK_THROWS_AS(brute_hom(zfree(3), cyc(9), tight), OracleSizeError);
}

TEST_CASE("enumeration agrees with evaluation on 300 cases") {
    VerifyOptions o;
    o.cases = 300;
    CheckReport r = run_check(find_check("eval-oracle"), o);
    INFO(r.counterexample);
    CHECK(r.pass);
}

TEST_CASE("check_exact: worked instance, negative control, zero complex") {
    const auto probes = ProbeBattery::standard(Z).probes;
    FourTermData d = four_term(worked_pi());
    CHECK(check_exact(d.complex(), probes).pass);

    // Dropping the relation of Z/2 turns the quotient into Z and breaks exactness.
    CoherentFunctor broken(ModMorphism(zfree(1), zfree(1), Matrix::from_rows(Z, {{1}})));
    CoherentFunctor f = worked_pi();
    NatMorphism to_broken(f, broken, ModMorphism::identity(zfree(1)),
                          ModMorphism(zfree(1), cyc(2), Matrix::from_rows(Z, {{1}})));
    CheckReport bad = check_exact({to_broken}, probes);
    CHECK_FALSE(bad.pass);
    CHECK(bad.counterexample.find("probe") != std::string::npos);

    CoherentFunctor zero = zero_functor(Z);
    CHECK(check_exact({NatMorphism::zero(zero, zero)}, probes).pass);
}

TEST_CASE("probe batteries") {
    CHECK(ProbeBattery::standard(Z).probes.size() == 8);
    auto b = ProbeBattery::parse(Z, "Z, Z/2, Z^2+Z/4");
    REQUIRE(b.probes.size() == 3);
    CHECK(b.probes[2].str() == "Z^2 + Z/4");
    CHECK_THROWS_AS(ProbeBattery::parse(Z, "Z/0"), std::invalid_argument);
    CHECK_THROWS_AS(ProbeBattery::parse(Z, "Q"), std::invalid_argument);
    const BaseRing f5 = BaseRing::prime_field(5);
    CHECK(ProbeBattery::parse(f5, "F5^2").probes[0].str() == "F5^2");
    // Elementary divisors of the presentation are added as probes.
    CoherentFunctor f(ModMorphism(cyc(12), FpModule::zero(Z), Matrix(Z, 0, 1)));
    auto extended = ProbeBattery::standard(Z).for_functors({f});
    bool has4 = false, has3 = false;
    for (const auto& p : extended) {
        has4 = has4 || p.str() == "Z/4";
        has3 = has3 || p.str() == "Z/3";
    }
    CHECK(has4);
    CHECK(has3);
}

TEST_CASE("random streams are reproducible") {
    auto draw = [](std::uint64_t seed) {
        InstanceGenerator gen(Z, Rng::for_case(seed, "stream", 3));
        return describe(gen.functor()) + gen.module().rels().str();
    };
    CHECK(draw(42) == draw(42));
    CHECK(draw(42) != draw(43));
    InstanceGenerator a(Z, Rng(42)), b(Z, Rng(42));
    CHECK(a.module() == b.module());
}

TEST_CASE("random morphisms are well defined and random ses are exact") {
    InstanceGenerator gen(Z, Rng(42));
    for (int k = 0; k < 20; ++k) {
        FpModule a = gen.module(), b = gen.module();
        ModMorphism m = gen.morphism(a, b);
        REQUIRE_NOTHROW(ModMorphism(a, b, m.mat()));
    }
    const auto probes = ProbeBattery::standard(Z).probes;
    for (int k = 0; k < 10; ++k) {
        ShortExact s = gen.ses();
        REQUIRE(check_exact({s.inclusion, s.projection}, probes).pass);
    }
}

TEST_CASE("re-presentations are isomorphic") {
    InstanceGenerator gen(Z, Rng(6));
    for (int k = 0; k < 15; ++k) {
        CoherentFunctor f = gen.functor();
        Representation r = gen.represent(f);
        REQUIRE(compose(r.from, r.to) == NatMorphism::identity(f));
        REQUIRE(compose(r.to, r.from) == NatMorphism::identity(r.functor));
    }
}

TEST_CASE("serial and parallel case runners agree") {
    auto body = [](std::size_t i) -> std::optional<std::string> {
        if (i % 7 == 3) return "bad " + std::to_string(i);
        if (i == 20) throw std::runtime_error("boom");
        return std::nullopt;
    };
    auto s = run_cases(50, Execution::Serial, body);
    auto p = run_cases(50, Execution::Parallel, body);
    REQUIRE(s.size() == p.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        CHECK(s[i].index == p[i].index);
        CHECK(s[i].message == p[i].message);
    }
    CHECK(s.front().index == 3);
}

TEST_CASE("verification reports") {
    VerifyOptions o;
    o.cases = 0;
    auto reports = verify_theorems(o, {"snf", "yoneda"});
    REQUIRE(reports.size() == 2);
    for (const auto& r : reports) {
        CHECK(r.pass);
        CHECK(r.note == "no cases");
    }
    o.cases = 10;
    o.execution = Execution::Serial;
    auto serial = verify_theorems(o, {"four-term"});
    o.execution = Execution::Parallel;
    auto parallel = verify_theorems(o, {"four-term"});
    CHECK(serial[0].pass == parallel[0].pass);
    CHECK_THROWS_AS(find_check("nope"), std::invalid_argument);
}

TEST_CASE("full check suite over F_5") {
    VerifyOptions o;
    o.ring = BaseRing::prime_field(5);
    o.cases = 25;
    for (const auto& r : verify_theorems(o)) {
        INFO(r.name << ": " << r.counterexample);
        CHECK(r.pass);
    }
}

TEST_CASE("determinant") {
    CHECK(bareiss_determinant(Matrix(Z, 0, 0)) == 1);
    CHECK(bareiss_determinant(Matrix::from_rows(Z, {{2, 1}, {7, 4}})) == 1);
    CHECK(bareiss_determinant(Matrix::from_rows(Z, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}})) == 0);
    CHECK(bareiss_determinant(Matrix::from_rows(Z, {{0, 2}, {3, 0}})) == -6);
}

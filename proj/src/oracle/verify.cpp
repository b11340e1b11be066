#include "cohfun/verify.hpp"

#include <chrono>
#include <sstream>

#include "cohfun/derived.hpp"

namespace cohfun {

using Outcome = std::optional<std::string>;

std::vector<FpModule> VerifyOptions::probes() const {
    return battery.empty() ? ProbeBattery::standard(ring).probes : battery;
}

std::string describe(const CoherentFunctor& f) {
    return f.pres().mat().str() + " : coker " + f.x().rels().str() + " -> coker " + f.y().rels().str();
}

Int bareiss_determinant(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    const BaseRing& ring = m.ring();
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && ring.reduce(a[piv][k]) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(a[piv], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                a[i][j] = ring.is_field() ? ring.mul(num, ring.unit_inverse(ring.reduce(prev))) : Int(num / prev);
            }
        prev = a[k][k];
    }
    return ring.reduce(sign * a[n - 1][n - 1]);
}

namespace {

InstanceGenerator generator(const VerifyOptions& o, const std::string& name, std::size_t i) {
    return InstanceGenerator(o.ring, Rng::for_case(o.seed, name, i), o.bounds);
}

std::string cf(const FpModule& m) { return m.str(); }

Outcome mismatch(const std::string& what, const FpModule& lhs, const FpModule& rhs, const CoherentFunctor& f) {
    return what + ": " + cf(lhs) + " vs " + cf(rhs) + " for F = " + describe(f);
}

// Matrix of the map Nat(G', H) -> Nat(G, H), beta |-> beta o alpha, in the
// coordinates of the two groups.
ModMorphism precompose_nat(const NatGroup& from, const NatGroup& to, const NatMorphism& alpha) {
    Matrix m(alpha.source().ring(), to.group().gens(), from.reps().size());
    for (std::size_t k = 0; k < from.reps().size(); ++k) {
        Matrix c = to.coordinates(compose(from.reps()[k], alpha));
        for (std::size_t r = 0; r < c.rows(); ++r) m.set(r, k, c(r, 0));
    }
    return ModMorphism(from.group(), to.group(), std::move(m));
}

// ---------------------------------------------------------------------------

Outcome snf_case(const VerifyOptions& o, std::size_t i) {
    Rng rng = Rng::for_case(o.seed, "snf", i);
    const BaseRing& ring = o.ring;
    Matrix m(ring, rng.below(7), rng.below(7));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) m.set(r, c, Int(static_cast<long>(rng.uniform(-9, 9))));
    SnfResult s = smith_normal_form(m);
    const std::string where = " for M = " + m.str();
    if (!(s.u * m * s.v == s.s)) return "u M v != s" + where;
    if (!(s.u * s.u_inv).is_identity() || !(s.v * s.v_inv).is_identity()) return "tracked inverses are wrong" + where;
    if (!ring.is_unit(bareiss_determinant(s.u)) || !ring.is_unit(bareiss_determinant(s.v)))
        return "transform is not unimodular" + where;
    for (std::size_t r = 0; r < s.s.rows(); ++r)
        for (std::size_t c = 0; c < s.s.cols(); ++c) {
            const Int want = (r == c && r < s.diag.size()) ? s.diag[r] : Int(0);
            if (s.s(r, c) != want) return "s is not the diagonal of diag" + where;
        }
    for (std::size_t k = 0; k < s.diag.size(); ++k) {
        if (s.diag[k] == 0) return "zero entry in diag" + where;
        if (ring.normalizer(s.diag[k]) != 1) return "diag entry not canonical" + where;
        if (k + 1 < s.diag.size() && !ring.divides(s.diag[k], s.diag[k + 1])) return "divisibility chain broken" + where;
    }
    if (smith_normal_form(s.s).diag != s.diag) return "not idempotent" + where;
    return std::nullopt;
}

Outcome solve_case(const VerifyOptions& o, std::size_t i) {
    Rng rng = Rng::for_case(o.seed, "solve", i);
    const BaseRing& ring = o.ring;
    const std::size_t rows = 1 + rng.below(3), cols = 1 + rng.below(3);
    Matrix m(ring, rows, cols), b(ring, rows, 1);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, Int(static_cast<long>(rng.uniform(-3, 3))));
        b.set(r, 0, Int(static_cast<long>(rng.uniform(-3, 3))));
    }
    auto sol = solve_linear(m, b);
    const std::string where = " for m = " + m.str() + ", b = " + b.str();
    if (sol) {
        if (!(m * sol->particular == b)) return "particular solution does not solve" + where;
        if (!(m * sol->homogeneous).is_zero()) return "homogeneous basis not in the kernel" + where;
    }
    const std::int64_t lo = ring.is_field() ? 0 : -6;
    const std::int64_t hi = ring.is_field() ? static_cast<std::int64_t>(ring.characteristic()) - 1 : 6;
    std::vector<std::int64_t> x(cols, lo);
    bool found = false;
    for (;;) {
        Matrix xv(ring, cols, 1);
        for (std::size_t c = 0; c < cols; ++c) xv.set(c, 0, Int(static_cast<long>(x[c])));
        if (m * xv == b) {
            found = true;
            break;
        }
        std::size_t c = 0;
        while (c < cols && x[c] == hi) x[c++] = lo;
        if (c == cols) break;
        ++x[c];
    }
    if (found && !sol) return "box search found a solution that solve_linear missed" + where;
    return std::nullopt;
}

Outcome hom_oracle_case(const VerifyOptions& o, std::size_t i) {
    InstanceGenerator gen = generator(o, "hom-oracle", i);
    FpModule a = gen.finite_module(36);
    FpModule b = gen.finite_module(36);
    HomGroup h(a, b);
    CanonicalForm brute = brute_hom(a, b, o.limits);
    if (!(h.group().canonical() == brute))
        return "Hom(" + a.str() + ", " + b.str() + ") = " + h.group().str() + " but enumeration gives " +
               brute.str(o.ring);
    ModMorphism m = gen.morphism(a, b);
    if (!(h.element(h.coordinates(m)) == m)) return "coordinates do not round-trip for " + m.mat().str();
    return std::nullopt;
}

Outcome eval_oracle_case(const VerifyOptions& o, std::size_t i) {
    VerifyOptions small = o;
    small.bounds.max_gens = std::min<std::size_t>(o.bounds.max_gens, 3);
    InstanceGenerator gen = generator(small, "eval-oracle", i);
    CoherentFunctor f = gen.functor();
    FpModule a = gen.finite_module(36);
    FpModule lib = evaluate(f, a);
    FpModule brute = brute_eval(f, a, o.limits);
    if (!lib.isomorphic_to(brute)) return mismatch("F(" + a.str() + ")", lib, brute, f);
    return std::nullopt;
}

Outcome yoneda_case(const VerifyOptions& o, std::size_t i) {
    InstanceGenerator gen = generator(o, "yoneda", i);
    FpModule x = gen.module();
    CoherentFunctor f = gen.functor();
    NatGroup nat(yoneda_embed(x), f);
    FpModule fx = evaluate(f, x);
    if (!nat.group().isomorphic_to(fx)) return mismatch("Nat((X,-),F) vs F(X) at X = " + x.str(), nat.group(), fx, f);
    return std::nullopt;
}

Outcome coyoneda_case(const VerifyOptions& o, std::size_t i) {
    InstanceGenerator gen = generator(o, "coyoneda", i);
    CoherentFunctor f = gen.functor();
    FpModule x = gen.module();
    NatGroup nat(f, yoneda_embed(x));
    FpModule hom = HomGroup(x, w_of(f).module).group();
    if (!nat.group().isomorphic_to(hom)) return mismatch("Nat(F,(X,-)) vs Hom(X,w(F)) at X = " + x.str(), nat.group(), hom, f);
    return std::nullopt;
}

Outcome adjunction_case(const VerifyOptions& o, std::size_t i) {
    InstanceGenerator gen = generator(o, "adjunction", i);
    CoherentFunctor f = gen.functor();
    FpModule a = gen.module();
    CoherentFunctor ya = yoneda_embed(a);
    R0Data r0 = r0_functor(f);
    NatGroup from_r0(r0.functor, ya);
    NatGroup from_f(f, ya);
    if (!from_r0.group().isomorphic_to(from_f.group()))
        return mismatch("Nat(R0 F,(A,-)) vs Nat(F,(A,-)) at A = " + a.str(), from_r0.group(), from_f.group(), f);
    if (!is_iso(precompose_nat(from_r0, from_f, r0.unit)))
        return "precomposition with the unit is not an isomorphism for F = " + describe(f) + ", A = " + a.str();
    return std::nullopt;
}

// For G = (A, -): c(beta) : A -> w(F) with beta.a = k o c(beta).
ModMorphism coyoneda_class(const NatMorphism& beta) {
    auto c = factor_through_mono(beta.a(), w_of(beta.source()).inclusion);
    if (!c) throw std::logic_error("a-component of a map into a representable misses w(F)");
    return std::move(*c);
}

Outcome hom_nat_case(const VerifyOptions& o, std::size_t i) {
    InstanceGenerator gen = generator(o, "hom-nat", i);
    CoherentFunctor f1 = gen.functor();
    CoherentFunctor f2 = gen.functor();
    FpModule a = gen.module();
    FpModule a2 = gen.module();
    CoherentFunctor g = yoneda_embed(a);

    FpModule wf = w_of(f2).module;
    FpModule gw = evaluate(g, wf);
    NatGroup via_yoneda(yoneda_embed(wf), g);
    NatGroup direct(f2, g);
    if (!gw.isomorphic_to(via_yoneda.group()) || !gw.isomorphic_to(direct.group()))
        return "G(w(F)) = " + gw.str() + ", Nat((w(F),-),G) = " + via_yoneda.group().str() + ", Nat(F,G) = " +
               direct.group().str() + " for F = " + describe(f2) + ", G = (" + a.str() + ",-)";

    // Naturality in F: c(beta o alpha) = w(alpha) o c(beta).
    NatMorphism alpha = gen.nat(f1, f2);
    NatMorphism beta = gen.nat(f2, g);
    if (!(coyoneda_class(compose(beta, alpha)) == compose(w_mor(alpha), coyoneda_class(beta))))
        return "not natural in F for F = " + describe(f2);

    // Naturality in G: c((t,-) o beta) = c(beta) o t for t : A' -> A.
    ModMorphism t = gen.morphism(a2, a);
    CoherentFunctor g2 = yoneda_embed(a2);
    NatMorphism yt(g, g2, t, ModMorphism::zero(g2.y(), g.y()));
    if (!(coyoneda_class(compose(yt, beta)) == compose(coyoneda_class(beta), t)))
        return "not natural in G for F = " + describe(f2);
    return std::nullopt;
}

Outcome four_term_case(const VerifyOptions& o, std::size_t i) {
    InstanceGenerator gen = generator(o, "four-term", i);
    CoherentFunctor f = gen.functor();
    FourTermData d = four_term(f);
    ProbeBattery bat{o.probes()};
    CheckReport r = check_exact(d.complex(), bat.for_functors({f, d.f0, d.r0, d.f1}));
    if (!r.pass) return "not exact: " + r.counterexample + " for F = " + describe(f);
    if (!is_inj_stable(d.f0)) return "w(F0) != 0 for F = " + describe(f);
    if (!is_inj_stable(d.f1)) return "w(F1) != 0 for F = " + describe(f);
    if (!(compose(d.v, d.pi) == f.pres())) return "f != v o pi for F = " + describe(f);
    return std::nullopt;
}

Outcome w_exact_case(const VerifyOptions& o, std::size_t i) {
    InstanceGenerator gen = generator(o, "w-exact", i);
    ShortExact s = gen.ses();
    ProbeBattery bat{o.probes()};
    CheckReport r = check_exact({s.inclusion, s.projection}, bat.for_functors({s.sub, s.middle, s.quotient}));
    if (!r.pass) return "generated sequence is not short exact: " + r.counterexample;
    if (auto defect = exactness_defect({w_mor(s.projection), w_mor(s.inclusion)}, true, true))
        return "0 -> w(C) -> w(G) -> w(K) -> 0 fails: " + *defect + " for G = " + describe(s.middle);
    return std::nullopt;
}

Outcome w_presentation_case(const VerifyOptions& o, std::size_t i) {
    InstanceGenerator gen = generator(o, "w-presentation", i);
    CoherentFunctor f = gen.functor();
    Representation r = gen.represent(f);
    FpModule w1 = w_of(f).module, w2 = w_of(r.functor).module;
    if (!w1.isomorphic_to(w2)) return mismatch("w under re-presentation", w1, w2, f);
    if (!is_iso(w_mor(r.to))) return "w(F -> F') is not an isomorphism for F = " + describe(f);
    if (!(compose(r.from, r.to) == NatMorphism::identity(f))) return "re-presentation maps are not inverse";
    return std::nullopt;
}

Outcome vanishing_case(const VerifyOptions& o, std::size_t i) {
    InstanceGenerator gen = generator(o, "vanishing", i);
    CoherentFunctor f = gen.functor();
    const bool w_zero = is_inj_stable(f);
    const bool mono = is_mono(f.pres());
    FourTermData d = four_term(f);
    ProbeBattery bat{o.probes()};
    bool pointwise = true;
    for (const auto& p : bat.for_functors({f, d.f0}))
        pointwise = pointwise && is_iso(d.iota.at(p));
    if (w_zero != mono || w_zero != pointwise)
        return "w(F)=0: " + std::to_string(w_zero) + ", f mono: " + std::to_string(mono) +
               ", F0 -> F iso on probes: " + std::to_string(pointwise) + " for F = " + describe(f);
    return std::nullopt;
}

Outcome projective_case(const VerifyOptions& o, std::size_t i) {
    InstanceGenerator gen = generator(o, "projective", i);
    NatMorphism alpha = gen.epi();
    FpModule x = gen.module();
    CoherentFunctor yx = yoneda_embed(x);
    NatGroup to_g(yx, alpha.target());
    NatGroup to_f(yx, alpha.source());
    NatMorphism gamma = gen.nat(yx, alpha.target());

    Matrix images(o.ring, to_g.group().gens(), to_f.reps().size());
    for (std::size_t k = 0; k < to_f.reps().size(); ++k) {
        Matrix c = to_g.coordinates(compose(alpha, to_f.reps()[k]));
        for (std::size_t r = 0; r < c.rows(); ++r) images.set(r, k, c(r, 0));
    }
    auto z = LinearSolver(Matrix::hcat(images, to_g.group().rels())).solve(to_g.coordinates(gamma));
    if (!z) return "no lift through the epimorphism for F = " + describe(alpha.source()) + ", X = " + x.str();
    NatMorphism lift = to_f.element(z->row_range(0, images.cols()));
    if (!(compose(alpha, lift) == gamma)) return "lift does not compose back for F = " + describe(alpha.source());
    return std::nullopt;
}

Outcome functoriality_case(const VerifyOptions& o, std::size_t i) {
    InstanceGenerator gen = generator(o, "functoriality", i);
    CoherentFunctor f = gen.functor();
    FpModule a = gen.module(), b = gen.module(), c = gen.module();
    ModMorphism phi = gen.morphism(a, b);
    ModMorphism psi = gen.morphism(b, c);
    Evaluation ea = evaluation(f, a), eb = evaluation(f, b), ec = evaluation(f, c);
    if (!(evaluate_mor(ea, ec, compose(psi, phi)) == compose(evaluate_mor(eb, ec, psi), evaluate_mor(ea, eb, phi))))
        return "F(psi o phi) != F(psi) o F(phi) for F = " + describe(f);
    if (!(evaluate_mor(ea, ea, ModMorphism::identity(a)) == ModMorphism::identity(ea.value)))
        return "F(id) != id for F = " + describe(f);

    CoherentFunctor g = gen.functor(), h = gen.functor();
    NatMorphism alpha = gen.nat(f, g);
    NatMorphism beta = gen.nat(g, h);
    if (!(w_mor(compose(beta, alpha)) == compose(w_mor(alpha), w_mor(beta))))
        return "w(beta o alpha) != w(alpha) o w(beta) for F = " + describe(f);
    if (!(compose(r0_mor(alpha), r0_functor(f).unit) == compose(r0_functor(g).unit, alpha)))
        return "unit is not natural for F = " + describe(f) + ", G = " + describe(g);
    return std::nullopt;
}

Outcome stabilization_case(const VerifyOptions& o, std::size_t i) {
    InstanceGenerator gen = generator(o, "stabilization", i);
    CoherentFunctor f = gen.functor();
    L0Data l0 = l0_functor(f);
    CoherentFunctor ps = proj_stabilize(f);
    for (std::size_t n = 1; n <= 3; ++n) {
        FpModule free = FpModule::free(o.ring, n);
        FpModule lf = evaluate(l0.functor, free), ff = evaluate(f, free);
        if (!lf.isomorphic_to(ff)) return mismatch("L0 F vs F at " + free.str(), lf, ff, f);
        if (!is_iso(l0.counit.at(free))) return "counit not iso at " + free.str() + " for F = " + describe(f);
        if (!evaluate(ps, free).is_zero()) return "projective stabilization nonzero at " + free.str();
    }
    const bool fr_zero = evaluate(f, FpModule::free(o.ring, 1)).is_zero();
    if (is_proj_stable(f) != fr_zero || is_zero_functor(l0.functor) != fr_zero)
        return "projective stability disagrees with F(R) = 0 for F = " + describe(f);
    return std::nullopt;
}

Outcome representable_case(const VerifyOptions& o, std::size_t i) {
    InstanceGenerator gen = generator(o, "representable", i);
    FpModule x = gen.module();
    CoherentFunctor yx = yoneda_embed(x);
    if (!is_representable(yx)) return "(X,-) not detected representable for X = " + x.str();
    Representation r = gen.represent(yx);
    if (!is_representable(r.functor)) return "re-presented (X,-) not detected representable: " + describe(r.functor);
    if (!is_representable(yoneda_embed(FpModule::free(o.ring, x.gens()))))
        return "(P,-) not detected representable for a free cover P of " + x.str();

    if (!o.ring.is_field() && i == 0 && is_representable(tensor_functor(FpModule::cyclic(o.ring, 2))))
        return "Z/2 (x) - detected representable";

    CoherentFunctor f = gen.functor();
    const bool rep = is_representable(f);
    R0Data r0 = r0_functor(f);
    ProbeBattery bat{o.probes()};
    bool pointwise = true;
    for (const auto& p : bat.for_functors({f, ker_nat(r0.unit).functor, coker_nat(r0.unit).functor}))
        pointwise = pointwise && is_iso(r0.unit.at(p));
    if (rep != pointwise)
        return "is_representable = " + std::to_string(rep) + " but unit iso on probes = " + std::to_string(pointwise) +
               " for F = " + describe(f);
    if (o.ring.is_field() && !rep) return "semisimple base but F not representable: " + describe(f);
    return std::nullopt;
}

Outcome resolution_case(const VerifyOptions& o, std::size_t i) {
    InstanceGenerator gen = generator(o, "resolution", i);
    CoherentFunctor f = gen.functor();
    InjectiveResolution res = injective_resolution(f);
    for (std::size_t t = 0; t < res.terms.size(); ++t) {
        const auto& term = res.terms[t];
        if (!term.x().has_free_presentation() || !term.y().has_free_presentation())
            return "I" + std::to_string(t) + " not presented by free modules for F = " + describe(f);
        if (!is_injective_functor(term)) return "I" + std::to_string(t) + " fails the splitting test for F = " + describe(f);
    }
    std::vector<CoherentFunctor> fs = complex_functors(res.maps);
    ProbeBattery bat{o.probes()};
    CheckReport r = check_exact(res.maps, bat.for_functors(fs));
    if (!r.pass) return "resolution not exact: " + r.counterexample + " for F = " + describe(f);
    if (res.injective_dimension > 2 || res.nonzero_terms() > 3) return "resolution too long for F = " + describe(f);
    return std::nullopt;
}

Outcome exact_invariance_case(const VerifyOptions& o, std::size_t i) {
    InstanceGenerator gen = generator(o, "exact-invariance", i);
    ProbeBattery bat{o.probes()};
    auto transported = [&](const std::vector<NatMorphism>& cx) {
        std::vector<CoherentFunctor> fs = complex_functors(cx);
        std::vector<Representation> reps;
        for (const auto& f : fs) reps.push_back(gen.represent(f));
        std::vector<NatMorphism> out;
        for (std::size_t k = 0; k < cx.size(); ++k)
            out.push_back(compose(reps[k + 1].to, compose(cx[k], reps[k].from)));
        return out;
    };
    CoherentFunctor f = gen.functor(), g = gen.functor(), h = gen.functor();
    std::vector<std::vector<NatMorphism>> complexes{four_term(f).complex(), {gen.nat(f, g), gen.nat(g, h)}};
    for (const auto& cx : complexes) {
        std::vector<CoherentFunctor> fs = complex_functors(cx);
        std::vector<FpModule> probes = bat.for_functors(fs);
        std::vector<NatMorphism> moved = transported(cx);
        bool a = check_exact(cx, probes).pass;
        bool b = check_exact(moved, probes).pass;
        if (a != b) return "verdict changed under re-presentation for F = " + describe(f);
    }
    return std::nullopt;
}

}  // namespace

const std::vector<TheoremCheck>& theorem_checks() {
    static const std::vector<TheoremCheck> checks{
        {"snf", "u M v = s, unimodular u and v, divisibility chain", snf_case},
        {"solve", "solve_linear agrees with a bounded box search", solve_case},
        {"hom-oracle", "Hom groups of finite modules match enumeration", hom_oracle_case},
        {"eval-oracle", "F(A) matches enumeration for finite A", eval_oracle_case},
        {"yoneda", "Nat((X,-),F) = F(X)", yoneda_case},
        {"coyoneda", "Nat(F,(X,-)) = Hom(X,w(F))", coyoneda_case},
        {"adjunction", "Nat(R0 F,(A,-)) -> Nat(F,(A,-)) is an isomorphism", adjunction_case},
        {"hom-nat", "G(w(F)) = Nat((w(F),-),G) = Nat(F,G), natural in F and G", hom_nat_case},
        {"four-term", "0 -> F0 -> F -> (w(F),-) -> F1 -> 0 exact, w(F0) = w(F1) = 0", four_term_case},
        {"w-exact", "w takes short exact sequences to short exact sequences", w_exact_case},
        {"w-presentation", "w(F) does not depend on the presentation", w_presentation_case},
        {"vanishing", "w(F) = 0 iff f mono iff F0 = F", vanishing_case},
        {"projective", "maps from representables lift through epimorphisms", projective_case},
        {"functoriality", "F, w and the unit respect composition", functoriality_case},
        {"stabilization", "L0 F agrees with F on free modules", stabilization_case},
        {"representable", "representable iff the unit is an isomorphism", representable_case},
        {"resolution", "injective resolutions of length at most 2", resolution_case},
        {"exact-invariance", "exactness verdicts survive re-presentation", exact_invariance_case},
    };
    return checks;
}

const TheoremCheck& find_check(const std::string& name) {
    for (const auto& c : theorem_checks())
        if (c.name == name) return c;
    throw std::invalid_argument("unknown check '" + name + "'");
}

CheckReport run_check(const TheoremCheck& check, const VerifyOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    CheckReport report;
    report.name = check.name;
    report.cases = options.cases;
    auto failures = run_cases(options.cases, options.execution,
                              [&](std::size_t i) { return check.run_case(options, i); });
    if (!failures.empty()) {
        report.pass = false;
        std::ostringstream os;
        os << "case " << failures.front().index << " of seed " << options.seed << " over " << options.ring.name()
           << ": " << failures.front().message;
        if (failures.size() > 1) os << " (" << failures.size() << " failing cases)";
        report.counterexample = os.str();
    }
    if (options.cases == 0) report.note = "no cases";
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::vector<CheckReport> verify_theorems(const VerifyOptions& options, const std::vector<std::string>& names) {
    std::vector<CheckReport> out;
    if (names.empty()) {
        for (const auto& c : theorem_checks()) out.push_back(run_check(c, options));
    } else {
        for (const auto& n : names) out.push_back(run_check(find_check(n), options));
    }
    return out;
}

}  // namespace cohfun

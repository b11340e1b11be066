// Acceptance run: one PASS/FAIL line per criterion. With arguments, only
// the listed criterion numbers run.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "cohfun/commands.hpp"
#include "cohfun/derived.hpp"
#include "cohfun/exactness.hpp"
#include "cohfun/verify.hpp"

using namespace cohfun;

namespace {

const BaseRing Z = BaseRing::integers();

struct Result {
    bool pass = true;
    std::string detail;
};

struct Criterion {
    int id;
    std::string title;
    double time_limit;  // seconds, 0 for none
    std::function<Result()> run;
};

Result fail(const std::string& why) { return {false, why}; }

Result checks(std::initializer_list<std::pair<const char*, BaseRing>> names, std::size_t cases) {
    Result out;
    std::ostringstream detail;
    for (const auto& [name, ring] : names) {
        VerifyOptions o;
        o.ring = ring;
        o.cases = cases;
        CheckReport r = run_check(find_check(name), o);
        if (!r.pass) return fail(std::string(name) + ": " + r.counterexample);
        if (detail.tellp() > 0) detail << ", ";
        detail << name << " over " << ring.name() << " " << r.cases << " cases";
    }
    out.detail = detail.str();
    return out;
}

FpModule cyc(long d) { return FpModule::cyclic(Z, d); }
FpModule zfree(std::size_t n) { return FpModule::free(Z, n); }

std::vector<FpModule> probes_for(const std::vector<CoherentFunctor>& fs) {
    return ProbeBattery::standard(Z).for_functors(fs);
}

// F presented by pi : Z -> Z/2.
Result worked_pi() {
    const CoherentFunctor f(ModMorphism(zfree(1), cyc(2), Matrix::from_rows(Z, {{1}})));
    const FourTermData d = four_term(f);
    if (!d.wf.isomorphic_to(zfree(1))) return fail("w(F) = " + d.wf.str());
    if (!is_zero_functor(d.f0)) return fail("F0 is not zero");
    const CoherentFunctor t2 = tensor_functor(cyc(2));
    const auto probes = probes_for({f, d.f0, d.r0, d.f1, t2});
    for (const auto& a : probes) {
        const std::string at = " at " + a.str();
        if (!evaluate(d.r0, a).isomorphic_to(a)) return fail("R0F is not the identity" + at);
        if (!evaluate(d.f0, a).is_zero()) return fail("F0 nonzero" + at);
        if (!evaluate(d.f1, a).isomorphic_to(evaluate(t2, a))) return fail("F1 differs from Z/2 (x) -" + at);
        if (!evaluate(d.f1, a).isomorphic_to(tensor_module(cyc(2), a))) return fail("F1(A) is not A/2A" + at);

        // The unit sends the class of u : Z -> A to u o k = 2u.
        const Evaluation ef = evaluation(f, a);
        const Evaluation er = evaluation(d.r0, a);
        const ModMorphism unit = d.phi.at(ef, er);
        Matrix expected(Z, er.value.gens(), ef.value.gens());
        for (std::size_t j = 0; j < ef.hom_x.reps().size(); ++j) {
            const Matrix c = er.hom_x.coordinates(ef.hom_x.reps()[j].mat().scaled(2));
            for (std::size_t i = 0; i < c.rows(); ++i) expected.set(i, j, c(i, 0));
        }
        if (!(unit == ModMorphism(ef.value, er.value, expected))) return fail("unit is not [a] -> 2a" + at);
        if (!kernel_mor(unit).module.is_zero()) return fail("unit has a kernel" + at);
    }
    const CheckReport ex = check_exact(d.complex(), probes);
    if (!ex.pass) return fail("four-term sequence: " + ex.counterexample);
    return {true, std::to_string(probes.size()) + " probes"};
}

// F = (Z/2, -).
Result worked_yoneda() {
    const CoherentFunctor f = yoneda_embed(cyc(2));
    const InjectiveResolution r = injective_resolution(f);
    if (is_injective_functor(f)) return fail("(Z/2,-) detected injective");
    for (std::size_t t = 0; t < r.terms.size(); ++t)
        if (!is_injective_functor(r.terms[t])) return fail("I" + std::to_string(t) + " not injective");
    if (r.injective_dimension != 2 || r.nonzero_terms() != 3)
        return fail("length " + std::to_string(r.nonzero_terms()) + ", dimension " +
                    std::to_string(r.injective_dimension));
    std::vector<CoherentFunctor> fs = complex_functors(r.maps);
    const auto probes = probes_for(fs);
    for (const auto& a : probes) {
        const std::string at = " at " + a.str();
        const FpModule a2 = kernel_mor(ModMorphism(a, a, Matrix::identity(Z, a.gens()).scaled(2))).module;
        if (!evaluate(f, a).isomorphic_to(a2)) return fail("F(A) is not A[2]" + at);
        if (!evaluate(r.terms[0], a).isomorphic_to(a)) return fail("I0(A) is not A" + at);
        if (!evaluate(r.terms[1], a).isomorphic_to(a)) return fail("I1(A) is not A" + at);
        if (!evaluate(r.terms[2], a).isomorphic_to(tensor_module(cyc(2), a))) return fail("I2(A) is not A/2A" + at);
        // In Smith coordinates the middle map is multiplication by 2.
        const Matrix mid = canonical_matrix(r.maps[1].at(a));
        Matrix two(Z, mid.rows(), mid.cols());
        for (std::size_t i = 0; i < std::min(mid.rows(), mid.cols()); ++i) two.set(i, i, 2);
        const CanonicalForm& cf = a.canonical();
        for (std::size_t i = cf.free_rank; i < two.rows(); ++i) two.set(i, i, Z.mod(Int(2), cf.factors[i - cf.free_rank]));
        if (!(mid == two)) return fail("middle map " + mid.str() + " is not x2" + at);
    }
    const CheckReport ex = check_exact(r.maps, probes);
    if (!ex.pass) return fail("resolution: " + ex.counterexample);
    return {true, std::to_string(probes.size()) + " probes"};
}

Result representability() {
    if (is_representable(tensor_functor(cyc(2)))) return fail("Z/2 (x) - detected representable");
    for (long d : {1, 2, 6, 12}) {
        if (!is_representable(yoneda_embed(cyc(d)))) return fail("(Z/" + std::to_string(d) + ",-) missed");
        // (X,-) presented through a free cover X <- Z^1 with relation d.
        const FpModule x = cyc(d);
        const FreePresentation p = free_presentation(x);
        if (!is_representable(yoneda_embed(p.relations.target()))) return fail("free cover of Z/" + std::to_string(d));
    }
    return checks({{"representable", Z}, {"representable", BaseRing::prime_field(5)}}, 100);
}

std::string run_cli(const std::string& args) {
    const std::string cmd = std::string(COHFUN_CLI_PATH) + " " + args + " 2>&1; echo \"[exit $?]\"";
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return "[popen failed]";
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    pclose(pipe);
    return out;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Same transcript format as the golden-file ctest script.
Result cli_golden() {
    std::size_t commands = 0;
    for (const std::string name : {"worked_pi", "yoneda_z2"}) {
        const std::string dir = COHFUN_GOLDEN_DIR;
        std::ifstream cmds(dir + "/" + name + ".cmds");
        if (!cmds) return fail("missing " + name + ".cmds");
        std::string line, first, second;
        while (std::getline(cmds, line)) {
            if (line.empty()) continue;
            ++commands;
            const std::string args = line + " --input " + dir + "/" + name + ".json";
            first += "$ cohfun " + line + "\n" + run_cli(args) + "\n";
            second += "$ cohfun " + line + "\n" + run_cli(args) + "\n";
        }
        if (first != second) return fail(name + ": two runs differ");
        if (first != slurp(dir + "/" + name + ".expected")) return fail(name + ": differs from golden file");
    }
    return {true, std::to_string(commands) + " commands, 2 runs each"};
}

std::vector<Criterion> criteria() {
    return {
        {1, "SNF suite", 10, [] { return checks({{"snf", Z}}, 1000); }},
        {2, "Hom oracle", 0, [] { return checks({{"hom-oracle", Z}}, 200); }},
        {3, "Yoneda", 0, [] { return checks({{"yoneda", Z}}, 200); }},
        {4, "CoYoneda", 0, [] { return checks({{"coyoneda", Z}}, 200); }},
        {5, "four-term sequence", 0, [] { return checks({{"four-term", Z}}, 100); }},
        {6, "worked instance pi : Z -> Z/2", 0, worked_pi},
        {7, "worked instance (Z/2,-)", 0, worked_yoneda},
        {8, "injective resolutions", 60, [] { return checks({{"resolution", Z}}, 100); }},
        {9, "adjunction", 0, [] { return checks({{"adjunction", Z}}, 100); }},
        {10, "w exactness", 0, [] { return checks({{"w-exact", Z}}, 100); }},
        {11, "L0 and stabilization", 0, [] { return checks({{"stabilization", Z}}, 100); }},
        {12, "representability", 0, representability},
        {13, "representables projective", 0, [] { return checks({{"projective", Z}}, 100); }},
        {14, "CLI determinism", 0, cli_golden},
    };
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
    int failures = 0;
    for (const auto& c : criteria()) {
        if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
        const auto start = std::chrono::steady_clock::now();
        Result r;
        try {
            r = c.run();
        } catch (const std::exception& e) {
            r = fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (r.pass && c.time_limit > 0 && secs >= c.time_limit) {
            std::ostringstream os;
            os << "took " << std::fixed << std::setprecision(1) << secs << " s, limit " << c.time_limit << " s";
            r = fail(os.str());
        }
        std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.title << "): " << r.detail
                  << " [" << std::fixed << std::setprecision(2) << secs << " s]" << std::endl;
        failures += !r.pass;
    }
    return failures == 0 ? 0 : 1;
}

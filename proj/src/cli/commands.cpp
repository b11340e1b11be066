#include "cohfun/commands.hpp"

#include <sstream>

#include "cohfun/brute.hpp"
#include "cohfun/derived.hpp"
#include "cohfun/exactness.hpp"
#include "cohfun/random.hpp"
#include "cohfun/verify.hpp"

namespace cohfun {

namespace {

std::vector<std::size_t> visible_summands(const FpModule& m) {
    std::vector<std::size_t> free, torsion;
    for (std::size_t i = 0; i < m.gens(); ++i) {
        const Int d = m.summand_order(i);
        if (d == 0)
            free.push_back(i);
        else if (!m.ring().is_unit(d))
            torsion.push_back(i);
    }
    free.insert(free.end(), torsion.begin(), torsion.end());
    return free;
}

std::string nat_str(const NatMorphism& n) { return "a = " + n.a().mat().str() + ", b = " + n.b().mat().str(); }

struct Context {
    const Workspace* ws;
    const CommandOptions& opt;
    std::ostringstream out;
    int exit_code = 0;

    const BaseRing& ring() const { return ws ? ws->ring() : opt.ring; }

    std::vector<FpModule> probes() const {
        try {
            return opt.battery.empty() ? ProbeBattery::standard(ring()).probes
                                       : ProbeBattery::parse(ring(), opt.battery).probes;
        } catch (const std::invalid_argument& e) {
            throw InputError(std::string("--battery: ") + e.what());
        }
    }

    // Exactness is tested on the battery enlarged by the elementary divisors
    // of every functor involved.
    void exactness(const std::string& label, const std::vector<NatMorphism>& complex) {
        ProbeBattery b;
        b.probes = probes();
        const CheckReport r = check_exact(complex, b.for_functors(complex_functors(complex)));
        out << "exactness of " << label << ": " << (r.pass ? "PASS" : "FAIL") << " (" << r.cases << " probes)";
        if (!r.pass) {
            out << ": " << r.counterexample;
            exit_code = 1;
        }
        out << "\n";
    }

    const CoherentFunctor& functor(const std::string& name) const { return ws->functor(name); }

    FpModule module(const std::string& name) const {
        if (ws->modules().count(name)) return ws->module(name);
        try {
            auto b = ProbeBattery::parse(ring(), name);
            if (b.probes.size() == 1) return b.probes.front();
        } catch (const std::invalid_argument&) {
        }
        throw InputError("unknown module '" + name + "' (expected a module name or a form like Z^2+Z/4)");
    }
};

void cmd_eval(Context& c, const std::vector<std::string>& args) {
    c.out << evaluate(c.functor(args[0]), c.module(args[1])).str() << "\n";
}

void cmd_nat(Context& c, const std::vector<std::string>& args) {
    NatGroup g(c.functor(args[0]), c.functor(args[1]));
    c.out << "Nat(" << args[0] << ", " << args[1] << ") = " << g.group().str() << "\n";
    c.out << "generators:\n";
    for (std::size_t i = 0; i < g.reps().size(); ++i)
        c.out << "  [" << i << "] " << nat_str(g.reps()[i]) << "\n";
}

void cmd_w(Context& c, const std::vector<std::string>& args) {
    const SubobjectData w = w_of(c.functor(args[0]));
    c.out << "w(" << args[0] << ") = " << w.module.str() << "\n";
    c.out << "k = " << w.inclusion.mat().str() << "\n";
}

void pointwise_maps(Context& c, const std::vector<std::string>& labels, const std::vector<NatMorphism>& chain) {
    const auto fs = complex_functors(chain);
    c.out << "pointwise (maps in Smith coordinates):\n";
    for (const auto& probe : c.probes()) {
        std::vector<Evaluation> evs;
        for (const auto& f : fs) evs.push_back(evaluation(f, probe));
        c.out << "  at " << probe.str() << ":";
        for (std::size_t i = 0; i < evs.size(); ++i) {
            if (i > 0) c.out << " --" << canonical_matrix(chain[i - 1].at(evs[i - 1], evs[i])).str() << "-->";
            c.out << " " << labels[i] << " = " << evs[i].value.str();
        }
        c.out << "\n";
    }
}

void cmd_fourterm(Context& c, const std::vector<std::string>& args) {
    const FourTermData d = four_term(c.functor(args[0]));
    c.out << "F: " << describe(d.f) << "\n";
    c.out << "w(F) = " << d.wf.str() << "\n";
    c.out << "k = " << d.k.mat().str() << "\n";
    c.out << "V = coim(f) = " << d.coim.str() << "\n";
    c.out << "F0: " << describe(d.f0) << "\n";
    c.out << "R0F: " << describe(d.r0) << "\n";
    c.out << "F1: " << describe(d.f1) << "\n";
    c.out << "iota: " << nat_str(d.iota) << "\n";
    c.out << "phi: " << nat_str(d.phi) << "\n";
    c.out << "rho: " << nat_str(d.rho) << "\n";
    pointwise_maps(c, {"F0", "F", "R0F", "F1"}, d.complex());
    c.exactness("0 -> F0 -> F -> R0F -> F1 -> 0", d.complex());
}

void cmd_r0(Context& c, const std::vector<std::string>& args) {
    const CoherentFunctor& f = c.functor(args[0]);
    const R0Data r = r0_functor(f);
    c.out << "R0F = (W, -) with W = w(F) = " << w_of(f).module.str() << "\n";
    c.out << "R0F: " << describe(r.functor) << "\n";
    c.out << "unit: " << nat_str(r.unit) << "\n";
    pointwise_maps(c, {"F", "R0F"}, {r.unit});
}

void cmd_l0(Context& c, const std::vector<std::string>& args) {
    const CoherentFunctor& f = c.functor(args[0]);
    const L0Data l = l0_functor(f);
    c.out << "F(R) = " << evaluate(f, FpModule::free(f.ring(), 1)).str() << "\n";
    c.out << "L0F: " << describe(l.functor) << "\n";
    c.out << "counit: " << nat_str(l.counit) << "\n";
    pointwise_maps(c, {"L0F", "F"}, {l.counit});
}

void cmd_stab_inj(Context& c, const std::vector<std::string>& args) {
    const CoherentFunctor& f = c.functor(args[0]);
    const CoherentFunctor s = inj_stabilize(f);
    c.out << "F0: " << describe(s) << "\n";
    c.out << "injectively stable: " << (is_inj_stable(f) ? "yes" : "no") << "\n";
    c.out << "F0 injectively stable: " << (is_inj_stable(s) ? "yes" : "no") << "\n";
    c.out << "pointwise:\n";
    for (const auto& p : c.probes()) c.out << "  at " << p.str() << ": F0 = " << evaluate(s, p).str() << "\n";
}

void cmd_stab_proj(Context& c, const std::vector<std::string>& args) {
    const CoherentFunctor& f = c.functor(args[0]);
    const CoherentFunctor s = proj_stabilize(f);
    c.out << "coker(L0F -> F): " << describe(s) << "\n";
    c.out << "projectively stable: " << (is_proj_stable(f) ? "yes" : "no") << "\n";
    c.out << "stabilization projectively stable: " << (is_proj_stable(s) ? "yes" : "no") << "\n";
    c.out << "pointwise:\n";
    for (const auto& p : c.probes()) c.out << "  at " << p.str() << ": " << evaluate(s, p).str() << "\n";
}

void cmd_resolve(Context& c, const std::vector<std::string>& args) {
    const InjectiveResolution r = injective_resolution(c.functor(args[0]));
    for (std::size_t i = 0; i < r.terms.size(); ++i) {
        c.out << "I" << i << ": " << describe(r.terms[i]) << "\n";
        c.out << "  injective: " << (is_injective_functor(r.terms[i]) ? "yes" : "no")
              << ", zero: " << (is_zero_functor(r.terms[i]) ? "yes" : "no") << "\n";
    }
    const std::vector<std::string> names = {"F", "I0", "I1", "I2"};
    for (std::size_t i = 0; i < r.maps.size(); ++i)
        c.out << "d" << i << " : " << names[i] << " -> " << names[i + 1] << ": " << nat_str(r.maps[i]) << "\n";
    c.out << "nonzero terms: " << r.nonzero_terms() << "\n";
    c.out << "injective dimension: " << r.injective_dimension << "\n";
    pointwise_maps(c, names, r.maps);
    c.exactness("0 -> F -> I0 -> I1 -> I2 -> 0", r.maps);
}

void cmd_is_rep(Context& c, const std::vector<std::string>& args) {
    const CoherentFunctor& f = c.functor(args[0]);
    const bool rep = is_representable(f);
    c.out << "representable: " << (rep ? "yes" : "no") << "\n";
    if (rep) c.out << args[0] << " = (W, -) with W = " << w_of(f).module.str() << "\n";
}

void cmd_is_inj(Context& c, const std::vector<std::string>& args) {
    const CoherentFunctor& f = c.functor(args[0]);
    const auto r = injective_retraction(f);
    c.out << "injective: " << (r ? "yes" : "no") << "\n";
    if (r) c.out << "retraction of F -> H: " << nat_str(*r) << "\n";
}

void cmd_eval_mor(Context& c, const std::vector<std::string>& args) {
    const ModMorphism& phi = c.ws->morphism(args[1]);
    const ModMorphism m = evaluate_mor(c.functor(args[0]), phi);
    c.out << args[0] << "(" << args[1] << ") : " << m.source().str() << " -> " << m.target().str() << "\n";
    c.out << "generator matrix = " << m.mat().str() << "\n";
    c.out << "Smith coordinates = " << canonical_matrix(m).str() << "\n";
}

void cmd_hom(Context& c, const std::vector<std::string>& args) {
    HomGroup h(c.module(args[0]), c.module(args[1]));
    c.out << "Hom(" << args[0] << ", " << args[1] << ") = " << h.group().str() << "\n";
    c.out << "generators:\n";
    for (std::size_t i = 0; i < h.reps().size(); ++i) c.out << "  [" << i << "] " << h.reps()[i].mat().str() << "\n";
}

void cmd_ker(Context& c, const std::vector<std::string>& args) {
    const FunctorSub k = ker_nat(c.ws->nat(args[0]));
    c.out << "ker: " << describe(k.functor) << "\n";
    c.out << "inclusion: " << nat_str(k.inclusion) << "\n";
    pointwise_maps(c, {"ker", "F"}, {k.inclusion});
}

void cmd_coker(Context& c, const std::vector<std::string>& args) {
    const FunctorQuotient q = coker_nat(c.ws->nat(args[0]));
    c.out << "coker: " << describe(q.functor) << "\n";
    c.out << "projection: " << nat_str(q.projection) << "\n";
    pointwise_maps(c, {"G", "coker"}, {q.projection});
}

void cmd_w_mor(Context& c, const std::vector<std::string>& args) {
    const NatMorphism& alpha = c.ws->nat(args[0]);
    const ModMorphism m = w_mor(alpha);
    c.out << "w(" << args[0] << ") : " << m.source().str() << " -> " << m.target().str() << "\n";
    c.out << "generator matrix = " << m.mat().str() << "\n";
    c.out << "Smith coordinates = " << canonical_matrix(m).str() << "\n";
}

void cmd_embed(Context& c, const std::vector<std::string>& args) {
    const Embedding e = embed_injective(c.functor(args[0]));
    c.out << "H: " << describe(e.functor) << "\n";
    c.out << "mono: " << nat_str(e.mono) << "\n";
    c.out << "H injective: " << (is_injective_functor(e.functor) ? "yes" : "no") << "\n";
    pointwise_maps(c, {"F", "H"}, {e.mono});
}

void cmd_brute(Context& c, const std::vector<std::string>& args) {
    const CoherentFunctor& f = c.functor(args[0]);
    const FpModule a = c.module(args[1]);
    FpModule b;
    try {
        b = brute_eval(f, a);
    } catch (const OracleSizeError& e) {
        throw InputError(std::string("brute: ") + e.what());
    }
    const FpModule v = evaluate(f, a);
    c.out << "enumerated: " << b.str() << "\n";
    c.out << "computed: " << v.str() << "\n";
    c.out << "agree: " << (b.isomorphic_to(v) ? "yes" : "no") << "\n";
    if (!b.isomorphic_to(v)) c.exit_code = 1;
}

void cmd_exact(Context& c, const std::vector<std::string>& args) {
    std::vector<NatMorphism> chain;
    std::string label = "0";
    for (const auto& n : args) chain.push_back(c.ws->nat(n));
    try {
        complex_functors(chain);
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("exact: ") + e.what());
    }
    for (const auto& n : args) label += " -> [" + n + "]";
    c.exactness(label + " -> 0", chain);
}

void cmd_check(Context& c, const std::vector<std::string>& args) {
    VerifyOptions v;
    v.ring = c.ring();
    v.seed = c.opt.seed;
    v.cases = c.opt.cases;
    v.execution = c.opt.execution;
    if (!c.opt.battery.empty()) v.battery = c.probes();
    for (const auto& n : args) {
        try {
            find_check(n);
        } catch (const std::exception&) {
            throw InputError("unknown check '" + n + "'");
        }
    }
    const auto reports = verify_theorems(v, args);
    std::size_t passed = 0;
    for (const auto& r : reports) {
        c.out << (r.pass ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)";
        if (!r.pass) c.out << ": " << r.counterexample;
        if (!r.note.empty()) c.out << " [" << r.note << "]";
        c.out << "\n";
        passed += r.pass;
    }
    c.out << passed << "/" << reports.size() << " checks passed\n";
    if (passed != reports.size()) c.exit_code = 1;
}

void cmd_random(Context& c, const std::vector<std::string>&) {
    InstanceGenerator gen(c.ring(), Rng::for_case(c.opt.seed, "random-" + c.opt.kind, 0));
    Workspace w(c.ring());
    const std::string& kind = c.opt.kind;
    if (kind == "module") {
        w.add_module("A", gen.module());
    } else if (kind == "morphism") {
        FpModule a = gen.module();
        FpModule b = gen.module();
        w.add_module("A", a);
        w.add_module("B", b);
        w.add_morphism("f", "A", "B", gen.morphism(a, b).mat());
    } else if (kind == "functor") {
        w.add_functor_value("F", gen.functor());
    } else if (kind == "nat") {
        CoherentFunctor f = gen.functor();
        CoherentFunctor g = gen.functor();
        w.add_functor_value("F", f);
        w.add_functor_value("G", g);
        w.add_nat_value("alpha", gen.nat(f, g));
    } else if (kind == "ses") {
        const ShortExact s = gen.ses();
        w.add_functor_value("K", s.sub);
        w.add_functor_value("G", s.middle);
        w.add_functor_value("Q", s.quotient);
        w.add_nat(std::string("inc"), "K", "G", s.inclusion.a().mat(), s.inclusion.b().mat());
        w.add_nat(std::string("proj"), "G", "Q", s.projection.a().mat(), s.projection.b().mat());
    } else {
        throw InputError("--kind: expected module, morphism, functor, nat or ses, got '" + kind + "'");
    }
    c.out << render_workspace(w);
}

using Handler = void (*)(Context&, const std::vector<std::string>&);

struct Entry {
    CommandInfo info;
    Handler run;
};

const std::vector<Entry>& entries() {
    static const std::vector<Entry> table = {
        {{"eval", "F A", "value F(A) as a canonical abelian group", 2, 2, true}, cmd_eval},
        {{"nat", "F G", "Nat(F, G) with generating transformations", 2, 2, true}, cmd_nat},
        {{"w", "F", "the defect w(F) = ker f and its inclusion", 1, 1, true}, cmd_w},
        {{"fourterm", "F", "0 -> F0 -> F -> (w(F), -) -> F1 -> 0 with pointwise data", 1, 1, true}, cmd_fourterm},
        {{"r0", "F", "R0F = (w(F), -) and the unit F -> R0F", 1, 1, true}, cmd_r0},
        {{"l0", "F", "L0F = F(R) (x) - and the counit L0F -> F", 1, 1, true}, cmd_l0},
        {{"stab-inj", "F", "injective stabilization ker(F -> R0F)", 1, 1, true}, cmd_stab_inj},
        {{"stab-proj", "F", "projective stabilization coker(L0F -> F)", 1, 1, true}, cmd_stab_proj},
        {{"resolve", "F", "injective resolution 0 -> F -> I0 -> I1 -> I2 -> 0", 1, 1, true}, cmd_resolve},
        {{"is-rep", "F", "whether F is representable", 1, 1, true}, cmd_is_rep},
        {{"is-inj", "F", "whether F is injective", 1, 1, true}, cmd_is_inj},
        {{"eval-mor", "F f", "F applied to a named morphism", 2, 2, true}, cmd_eval_mor},
        {{"hom", "A B", "Hom(A, B) with generating morphisms", 2, 2, true}, cmd_hom},
        {{"ker", "ALPHA", "kernel of a natural transformation", 1, 1, true}, cmd_ker},
        {{"coker", "ALPHA", "cokernel of a natural transformation", 1, 1, true}, cmd_coker},
        {{"w-mor", "ALPHA", "w(alpha) : w(G) -> w(F)", 1, 1, true}, cmd_w_mor},
        {{"embed", "F", "embedding of F into an injective functor", 1, 1, true}, cmd_embed},
        {{"brute", "F A", "F(A) by enumeration, compared with the computed value", 2, 2, true}, cmd_brute},
        {{"exact", "ALPHA...", "pointwise exactness of 0 -> ... -> 0 along named maps", 1, 64, true}, cmd_exact},
        {{"check", "[NAME...]", "randomized property checks (all by default)", 0, 64, false}, cmd_check},
        {{"random", "", "random instance as workspace JSON (see --kind)", 0, 0, false}, cmd_random},
    };
    return table;
}

}  // namespace

const std::vector<CommandInfo>& command_table() {
    static const std::vector<CommandInfo> table = [] {
        std::vector<CommandInfo> t;
        for (const auto& e : entries()) t.push_back(e.info);
        return t;
    }();
    return table;
}

Matrix canonical_matrix(const ModMorphism& m) {
    const FpModule& s = m.source();
    const FpModule& t = m.target();
    Matrix d = t.snf().u * m.mat() * s.snf().u_inv;
    // Each Smith basis vector is fixed up to sign; take the sign that makes
    // the first nonzero entry of its row of u positive.
    const BaseRing& r = m.ring();
    auto sign = [&](const Matrix& u, std::size_t i) {
        if (r.is_field()) return 1;
        for (std::size_t j = 0; j < u.cols(); ++j)
            if (u(i, j) != 0) return sgn(u(i, j));
        return 1;
    };
    for (std::size_t i = 0; i < d.rows(); ++i)
        if (sign(t.snf().u, i) < 0)
            for (std::size_t j = 0; j < d.cols(); ++j) d.set(i, j, -d(i, j));
    for (std::size_t j = 0; j < d.cols(); ++j)
        if (sign(s.snf().u, j) < 0)
            for (std::size_t i = 0; i < d.rows(); ++i) d.set(i, j, -d(i, j));
    const auto rows = visible_summands(t);
    const auto cols = visible_summands(s);
    const BaseRing& ring = m.ring();
    Matrix out(ring, rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Int order = t.summand_order(rows[i]);
        for (std::size_t j = 0; j < cols.size(); ++j) {
            const Int& x = d(rows[i], cols[j]);
            out.set(i, j, order == 0 || ring.is_field() ? x : ring.mod(x, order));
        }
    }
    return out;
}

CommandResult run_command(const std::string& name, const std::vector<std::string>& args,
                          const std::optional<Workspace>& workspace, const CommandOptions& options) {
    const Entry* entry = nullptr;
    for (const auto& e : entries())
        if (e.info.name == name) entry = &e;
    if (!entry) throw InputError("unknown command '" + name + "'");
    if (args.size() < entry->info.min_args || args.size() > entry->info.max_args)
        throw InputError(name + ": expected arguments " + (entry->info.usage.empty() ? "(none)" : entry->info.usage));
    if (entry->info.needs_input && !workspace) throw InputError(name + ": --input FILE is required");
    Context c{workspace ? &*workspace : nullptr, options, {}, 0};
    entry->run(c, args);
    return {c.exit_code, c.out.str()};
}

}  // namespace cohfun

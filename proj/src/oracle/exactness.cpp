#include "cohfun/exactness.hpp"

#include <chrono>
#include <sstream>

namespace cohfun {

namespace {

FpModule from_summands(const BaseRing& ring, std::size_t free_rank, const std::vector<Int>& cyclic) {
    const std::size_t n = free_rank + cyclic.size();
    Matrix rels(ring, n, cyclic.size());
    for (std::size_t i = 0; i < cyclic.size(); ++i) rels.set(free_rank + i, i, cyclic[i]);
    return FpModule(std::move(rels));
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(trim(item));
    return out;
}

void add_prime_powers(const Int& d, std::vector<Int>& out) {
    Int n = abs(d);
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        Int q = 1;
        while (n % p == 0) {
            n /= p;
            q *= p;
        }
        out.push_back(q);
    }
    if (n > 1) out.push_back(n);
}

}  // namespace

ProbeBattery ProbeBattery::standard(const BaseRing& ring) {
    ProbeBattery b;
    if (ring.is_field()) {
        for (std::size_t n = 1; n <= 3; ++n) b.probes.push_back(FpModule::free(ring, n));
        return b;
    }
    b.probes.push_back(FpModule::free(ring, 1));
    for (long d : {2, 3, 4, 6}) b.probes.push_back(FpModule::cyclic(ring, d));
    b.probes.push_back(from_summands(ring, 1, {Int(2)}));
    for (long d : {8, 9}) b.probes.push_back(FpModule::cyclic(ring, d));
    return b;
}

ProbeBattery ProbeBattery::parse(const BaseRing& ring, const std::string& list) {
    ProbeBattery b;
    for (const auto& item : split(list, ',')) {
        if (item.empty()) throw std::invalid_argument("battery: empty probe");
        std::size_t free_rank = 0;
        std::vector<Int> cyclic;
        for (const auto& tok : split(item, '+')) {
            const auto slash = tok.find('/');
            if (slash != std::string::npos) {
                if (tok.substr(0, slash) != "Z") throw std::invalid_argument("battery: bad summand '" + tok + "'");
                Int d;
                if (d.set_str(tok.substr(slash + 1), 10) != 0 || d <= 0)
                    throw std::invalid_argument("battery: bad order in '" + tok + "'");
                cyclic.push_back(d);
                continue;
            }
            const auto caret = tok.find('^');
            const std::string base = tok.substr(0, caret);
            if (base != "Z" && base != "F" && base != ring.name())
                throw std::invalid_argument("battery: bad summand '" + tok + "'");
            std::size_t r = 1;
            if (caret != std::string::npos) {
                try {
                    r = std::stoul(tok.substr(caret + 1));
                } catch (const std::exception&) {
                    throw std::invalid_argument("battery: bad rank in '" + tok + "'");
                }
            }
            free_rank += r;
        }
        b.probes.push_back(from_summands(ring, free_rank, cyclic));
    }
    if (b.probes.empty()) throw std::invalid_argument("battery: no probes");
    return b;
}

std::vector<FpModule> ProbeBattery::for_functors(const std::vector<CoherentFunctor>& fs) const {
    std::vector<FpModule> out = probes;
    auto present = [&](const FpModule& m) {
        for (const auto& p : out)
            if (p.isomorphic_to(m)) return true;
        return false;
    };
    for (const auto& f : fs)
        for (const FpModule* m : {&f.x(), &f.y()}) {
            std::vector<Int> powers;
            for (const auto& d : m->canonical().factors) add_prime_powers(d, powers);
            for (const auto& q : powers) {
                FpModule probe = FpModule::cyclic(f.ring(), q);
                if (!present(probe)) out.push_back(probe);
            }
        }
    return out;
}

std::vector<CoherentFunctor> complex_functors(const std::vector<NatMorphism>& complex) {
    std::vector<CoherentFunctor> out;
    if (complex.empty()) return out;
    out.push_back(complex.front().source());
    for (std::size_t i = 0; i < complex.size(); ++i) {
        if (i > 0 && !complex[i].source().same_presentation(out.back()))
            throw std::invalid_argument("complex: map " + std::to_string(i) + " is not composable with its predecessor");
        out.push_back(complex[i].target());
    }
    return out;
}

CheckReport check_exact(const std::vector<NatMorphism>& complex, const std::vector<FpModule>& probes, bool augmented) {
    const auto start = std::chrono::steady_clock::now();
    CheckReport report;
    report.name = "exact";
    std::vector<CoherentFunctor> fs = complex_functors(complex);
    for (const auto& probe : probes) {
        ++report.cases;
        std::vector<Evaluation> evs;
        evs.reserve(fs.size());
        for (const auto& f : fs) evs.push_back(evaluation(f, probe));
        std::vector<ModMorphism> maps;
        for (std::size_t i = 0; i < complex.size(); ++i) maps.push_back(complex[i].at(evs[i], evs[i + 1]));
        if (auto defect = exactness_defect(maps, augmented, augmented)) {
            report.pass = false;
            report.counterexample = "probe " + probe.str() + ": " + *defect;
            break;
        }
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace cohfun

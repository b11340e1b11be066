#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "cohfun/functor.hpp"

namespace cohfun {

/// Malformed or inconsistent input; the message carries the position
/// (line:column for syntax errors, a JSON pointer for semantic ones).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Accepts "Z", "Fp:P" and "FP".
BaseRing parse_ring(const std::string& text);
/// Inverse of parse_ring: "Z" or "Fp:P".
std::string ring_spec(const BaseRing& ring);

struct MorphismEntry {
    std::string source, target;
    ModMorphism value;
};

struct FunctorEntry {
    enum class Kind { Pres, Yoneda, Tensor };
    Kind kind;
    std::string ref;  // morphism name for Pres, module name otherwise
    CoherentFunctor value;
};

struct NatEntry {
    std::string source, target;
    NatMorphism value;
};

/// Named modules, morphisms, functors and transformations from one input
/// file. Names are unique across all four kinds and every reference
/// resolves; values are validated on insertion.
class Workspace {
public:
    explicit Workspace(BaseRing ring = {}) : ring_(ring) {}

    const BaseRing& ring() const { return ring_; }

    const FpModule& module(const std::string& name) const;
    const ModMorphism& morphism(const std::string& name) const;
    const CoherentFunctor& functor(const std::string& name) const;
    const NatMorphism& nat(const std::string& name) const;

    const std::map<std::string, FpModule>& modules() const { return modules_; }
    const std::map<std::string, MorphismEntry>& morphisms() const { return morphisms_; }
    const std::map<std::string, FunctorEntry>& functors() const { return functors_; }
    const std::map<std::string, NatEntry>& nats() const { return nats_; }

    void add_module(const std::string& name, FpModule m);
    void add_morphism(const std::string& name, const std::string& source, const std::string& target, const Matrix& mat);
    void add_functor(const std::string& name, FunctorEntry::Kind kind, const std::string& ref);
    void add_nat(const std::string& name, const std::string& source, const std::string& target, const Matrix& a,
                 const Matrix& b);

    /// Adds F under `name`, with its presentation stored as modules
    /// name_X, name_Y and morphism name_f.
    void add_functor_value(const std::string& name, const CoherentFunctor& f);
    /// Adds alpha; its source and target must already be present as functors
    /// with identical presentations.
    void add_nat_value(const std::string& name, const NatMorphism& alpha);

private:
    void claim(const std::string& name);
    std::string functor_name_of(const CoherentFunctor& f) const;

    BaseRing ring_;
    std::map<std::string, FpModule> modules_;
    std::map<std::string, MorphismEntry> morphisms_;
    std::map<std::string, FunctorEntry> functors_;
    std::map<std::string, NatEntry> nats_;
};

/// Parses the JSON workspace format. `required_ring` applies when the file
/// does not declare a ring; a declared ring that differs from it is an
/// error.
Workspace parse_workspace(const std::string& text, const std::optional<BaseRing>& required_ring = std::nullopt);
/// Canonical JSON text; parse_workspace(render_workspace(w)) renders back
/// to the same text.
std::string render_workspace(const Workspace& w);

}  // namespace cohfun

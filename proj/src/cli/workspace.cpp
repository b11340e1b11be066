#include "cohfun/workspace.hpp"

#include <set>
#include <vector>

#include <json.hpp>

namespace cohfun {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
    throw InputError("input: " + (path.empty() ? std::string("/") : path) + ": " + msg);
}

bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    auto first = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; };
    if (!first(s[0])) return false;
    for (char c : s)
        if (!first(c) && !(c >= '0' && c <= '9')) return false;
    return true;
}

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

Int parse_entry(const json& v, const std::string& path) {
    if (v.is_number_integer()) {
        if (v.is_number_unsigned()) return Int(std::to_string(v.get<std::uint64_t>()));
        return Int(std::to_string(v.get<std::int64_t>()));
    }
    if (v.is_string()) {
        Int x;
        const std::string s = v.get<std::string>();
        if (s.empty() || s.find_first_not_of("+-0123456789") != std::string::npos || x.set_str(s, 10) != 0)
            fail(path, "'" + s + "' is not an integer");
        return x;
    }
    fail(path, "expected an integer (number or decimal string)");
}

std::size_t parse_size(const json& v, const std::string& path) {
    if (!v.is_number_integer() || (!v.is_number_unsigned() && v.get<std::int64_t>() < 0))
        fail(path, "expected a nonnegative integer");
    const auto n = v.get<std::uint64_t>();
    if (n > 4096) fail(path, "dimension " + std::to_string(n) + " is too large");
    return static_cast<std::size_t>(n);
}

const json& field(const json& obj, const char* key, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(path, std::string("missing field '") + key + "'");
    return *it;
}

std::string name_field(const json& obj, const char* key, const std::string& path) {
    const json& v = field(obj, key, path);
    if (!v.is_string()) fail(path + "/" + key, "expected a name");
    return v.get<std::string>();
}

void only_fields(const json& obj, std::initializer_list<const char*> allowed, const std::string& path) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || it.key() == a;
        if (!ok) fail(path + "/" + it.key(), "unknown field");
    }
}

std::vector<std::vector<Int>> parse_rows(const json& data, std::size_t cols, const std::string& path) {
    if (!data.is_array()) fail(path, "expected a list of rows");
    std::vector<std::vector<Int>> rows;
    for (std::size_t i = 0; i < data.size(); ++i) {
        const std::string rp = path + "/" + std::to_string(i);
        if (!data[i].is_array()) fail(rp, "expected a row (list of integers)");
        if (data[i].size() != cols)
            fail(rp, "row has " + std::to_string(data[i].size()) + " entries, expected " + std::to_string(cols));
        std::vector<Int> row;
        for (std::size_t j = 0; j < data[i].size(); ++j) row.push_back(parse_entry(data[i][j], rp + "/" + std::to_string(j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

// {"rows": r, "cols": c, "data": [[...], ...]} or a list of rows; an empty
// list needs `rows_if_empty`.
Matrix parse_matrix(const BaseRing& ring, const json& v, const std::string& path,
                    std::optional<std::size_t> rows_if_empty = std::nullopt) {
    if (v.is_object()) {
        only_fields(v, {"rows", "cols", "data"}, path);
        const std::size_t r = parse_size(field(v, "rows", path), path + "/rows");
        const std::size_t c = parse_size(field(v, "cols", path), path + "/cols");
        auto rows = parse_rows(field(v, "data", path), c, path + "/data");
        if (rows.size() != r)
            fail(path + "/data", "has " + std::to_string(rows.size()) + " rows, expected " + std::to_string(r));
        return Matrix::from_rows(ring, rows, c);
    }
    if (v.is_array()) {
        if (v.empty() && rows_if_empty) return Matrix(ring, *rows_if_empty, 0);
        if (v.empty() || !v[0].is_array())
            fail(path, "empty shapes need the {\"rows\", \"cols\", \"data\"} form");
        auto rows = parse_rows(v, v[0].size(), path);
        return Matrix::from_rows(ring, rows, v[0].size());
    }
    fail(path, "expected a matrix");
}

std::string quote(const std::string& s) { return json(s).dump(); }

std::string render_matrix(const Matrix& m) {
    std::string data = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        data += i ? ", [" : "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Int& x = m(i, j);
            if (j) data += ", ";
            data += x.fits_slong_p() ? x.get_str() : quote(x.get_str());
        }
        data += "]";
    }
    data += "]";
    return "{\"rows\": " + std::to_string(m.rows()) + ", \"cols\": " + std::to_string(m.cols()) +
           ", \"data\": " + data + "}";
}

// {"gens": n, "rels": M}, with rels optional (free module), or {"cyclic": d}.
FpModule parse_module(const BaseRing& ring, const json& v, const std::string& path) {
    if (!v.is_object()) fail(path, "expected a module object");
    only_fields(v, {"gens", "rels", "cyclic"}, path);
    if (v.contains("cyclic")) {
        if (v.size() != 1) fail(path, "'cyclic' excludes 'gens' and 'rels'");
        const Int d = parse_entry(v["cyclic"], path + "/cyclic");
        if (d < 0) fail(path + "/cyclic", "order must be nonnegative");
        return FpModule::cyclic(ring, d);
    }
    std::optional<std::size_t> gens;
    if (v.contains("gens")) gens = parse_size(v["gens"], path + "/gens");
    if (!v.contains("rels")) {
        if (!gens) fail(path, "a module needs 'gens', 'rels' or 'cyclic'");
        return FpModule::free(ring, *gens);
    }
    Matrix rels = parse_matrix(ring, v["rels"], path + "/rels", gens);
    if (gens && rels.rows() != *gens)
        fail(path + "/rels", "has " + std::to_string(rels.rows()) + " rows but gens is " + std::to_string(*gens));
    return FpModule(std::move(rels));
}

const json& section(const json& doc, const char* key) {
    static const json empty = json::object();
    auto it = doc.find(key);
    if (it == doc.end()) return empty;
    if (!it->is_object()) fail(std::string("/") + key, "expected an object of named entries");
    return *it;
}

const char* kind_key(FunctorEntry::Kind k) {
    switch (k) {
        case FunctorEntry::Kind::Pres: return "pres";
        case FunctorEntry::Kind::Yoneda: return "yoneda";
        case FunctorEntry::Kind::Tensor: return "tensor";
    }
    return "pres";
}

json parse_json(const std::string& text) {
    // Duplicate keys would otherwise be dropped silently.
    std::vector<std::set<std::string>> keys;
    std::string duplicate;
    json::parser_callback_t cb = [&](int, json::parse_event_t ev, json& parsed) {
        if (ev == json::parse_event_t::object_start) keys.emplace_back();
        if (ev == json::parse_event_t::object_end && !keys.empty()) keys.pop_back();
        if (ev == json::parse_event_t::key && !keys.empty() && duplicate.empty()) {
            const std::string k = parsed.get<std::string>();
            if (!keys.back().insert(k).second) duplicate = k;
        }
        return true;
    };
    json doc;
    try {
        doc = json::parse(text, cb);
    } catch (const json::parse_error& e) {
        const auto [line, col] = line_col(text, e.byte);
        std::string msg = e.what();
        const auto colon = msg.find("syntax error");
        if (colon != std::string::npos) msg = msg.substr(colon);
        throw InputError("input:" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
    }
    if (!duplicate.empty()) throw InputError("input: duplicate key '" + duplicate + "'");
    return doc;
}

}  // namespace

BaseRing parse_ring(const std::string& text) {
    if (text == "Z") return BaseRing::integers();
    std::string digits;
    if (text.rfind("Fp:", 0) == 0)
        digits = text.substr(3);
    else if (text.size() > 1 && text[0] == 'F')
        digits = text.substr(1);
    if (digits.empty() || digits.size() > 9 || digits.find_first_not_of("0123456789") != std::string::npos)
        throw InputError("ring: expected Z or Fp:P, got '" + text + "'");
    try {
        return BaseRing::prime_field(static_cast<std::uint32_t>(std::stoul(digits)));
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("ring: ") + e.what());
    }
}

std::string ring_spec(const BaseRing& ring) {
    return ring.is_field() ? "Fp:" + std::to_string(ring.characteristic()) : "Z";
}

void Workspace::claim(const std::string& name) {
    if (!valid_name(name)) throw InputError("invalid name '" + name + "'");
    if (modules_.count(name) || morphisms_.count(name) || functors_.count(name) || nats_.count(name))
        throw InputError("name '" + name + "' is already defined");
}

const FpModule& Workspace::module(const std::string& name) const {
    auto it = modules_.find(name);
    if (it == modules_.end()) throw InputError("unknown module '" + name + "'");
    return it->second;
}

const ModMorphism& Workspace::morphism(const std::string& name) const {
    auto it = morphisms_.find(name);
    if (it == morphisms_.end()) throw InputError("unknown morphism '" + name + "'");
    return it->second.value;
}

const CoherentFunctor& Workspace::functor(const std::string& name) const {
    auto it = functors_.find(name);
    if (it == functors_.end()) throw InputError("unknown functor '" + name + "'");
    return it->second.value;
}

const NatMorphism& Workspace::nat(const std::string& name) const {
    auto it = nats_.find(name);
    if (it == nats_.end()) throw InputError("unknown natural transformation '" + name + "'");
    return it->second.value;
}

void Workspace::add_module(const std::string& name, FpModule m) {
    claim(name);
    if (m.ring() != ring_) throw InputError("module '" + name + "' is over the wrong ring");
    modules_.emplace(name, std::move(m));
}

void Workspace::add_morphism(const std::string& name, const std::string& source, const std::string& target,
                             const Matrix& mat) {
    claim(name);
    const FpModule& s = module(source);
    const FpModule& t = module(target);
    if (mat.rows() != t.gens() || mat.cols() != s.gens())
        throw InputError("morphism '" + name + "': matrix is " + std::to_string(mat.rows()) + "x" +
                         std::to_string(mat.cols()) + ", expected " + std::to_string(t.gens()) + "x" +
                         std::to_string(s.gens()) + " (target gens x source gens)");
    try {
        morphisms_.emplace(name, MorphismEntry{source, target, ModMorphism(s, t, mat)});
    } catch (const IllDefinedMorphism&) {
        throw InputError("ill-defined morphism '" + name + "': relations of '" + source +
                         "' do not map into relations of '" + target + "'");
    }
}

void Workspace::add_functor(const std::string& name, FunctorEntry::Kind kind, const std::string& ref) {
    claim(name);
    CoherentFunctor f = [&] {
        switch (kind) {
            case FunctorEntry::Kind::Pres: return CoherentFunctor(morphism(ref));
            case FunctorEntry::Kind::Yoneda: return yoneda_embed(module(ref));
            case FunctorEntry::Kind::Tensor: return tensor_functor(module(ref));
        }
        throw InputError("bad functor kind");
    }();
    functors_.emplace(name, FunctorEntry{kind, ref, std::move(f)});
}

void Workspace::add_nat(const std::string& name, const std::string& source, const std::string& target,
                        const Matrix& a, const Matrix& b) {
    claim(name);
    const CoherentFunctor& f = functor(source);
    const CoherentFunctor& g = functor(target);
    // a : X_G -> X_F and b : Y_G -> Y_F.
    auto check = [&](const char* which, const Matrix& m, const FpModule& from, const FpModule& to) {
        if (m.rows() != to.gens() || m.cols() != from.gens())
            throw InputError("natural transformation '" + name + "': " + which + " is " + std::to_string(m.rows()) +
                             "x" + std::to_string(m.cols()) + ", expected " + std::to_string(to.gens()) + "x" +
                             std::to_string(from.gens()));
    };
    check("a", a, g.x(), f.x());
    check("b", b, g.y(), f.y());
    try {
        ModMorphism ma(g.x(), f.x(), a);
        ModMorphism mb(g.y(), f.y(), b);
        nats_.emplace(name, NatEntry{source, target, NatMorphism(f, g, ma, mb)});
    } catch (const IllDefinedMorphism& e) {
        throw InputError("ill-defined natural transformation '" + name + "': " + e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError("natural transformation '" + name + "': " + e.what());
    }
}

void Workspace::add_functor_value(const std::string& name, const CoherentFunctor& f) {
    claim(name);
    add_module(name + "_X", f.x());
    add_module(name + "_Y", f.y());
    add_morphism(name + "_f", name + "_X", name + "_Y", f.pres().mat());
    add_functor(name, FunctorEntry::Kind::Pres, name + "_f");
}

std::string Workspace::functor_name_of(const CoherentFunctor& f) const {
    for (const auto& [n, e] : functors_)
        if (e.value.same_presentation(f)) return n;
    throw InputError("functor is not in the workspace");
}

void Workspace::add_nat_value(const std::string& name, const NatMorphism& alpha) {
    add_nat(name, functor_name_of(alpha.source()), functor_name_of(alpha.target()), alpha.a().mat(),
            alpha.b().mat());
}

Workspace parse_workspace(const std::string& text, const std::optional<BaseRing>& required_ring) {
    const json doc = parse_json(text);
    if (!doc.is_object()) fail("", "expected a JSON object");
    only_fields(doc, {"ring", "modules", "morphisms", "functors", "nats"}, "");

    BaseRing ring = required_ring.value_or(BaseRing::integers());
    if (auto it = doc.find("ring"); it != doc.end()) {
        if (!it->is_string()) fail("/ring", "expected \"Z\" or \"Fp:P\"");
        try {
            ring = parse_ring(it->get<std::string>());
        } catch (const InputError& e) {
            fail("/ring", e.what());
        }
        if (required_ring && *required_ring != ring)
            fail("/ring", "file declares " + ring.name() + " but " + required_ring->name() + " was requested");
    }
    Workspace w(ring);

    auto guarded = [](const std::string& path, auto&& body) {
        try {
            body();
        } catch (const InputError& e) {
            const std::string msg = e.what();
            if (msg.rfind("input:", 0) == 0) throw;
            fail(path, msg);
        } catch (const std::invalid_argument& e) {
            fail(path, e.what());
        }
    };

    const json& modules = section(doc, "modules");
    for (auto it = modules.begin(); it != modules.end(); ++it) {
        const std::string path = "/modules/" + it.key();
        guarded(path, [&] { w.add_module(it.key(), parse_module(ring, *it, path)); });
    }

    const json& morphisms = section(doc, "morphisms");
    for (auto it = morphisms.begin(); it != morphisms.end(); ++it) {
        const std::string path = "/morphisms/" + it.key();
        guarded(path, [&] {
            if (!it->is_object()) fail(path, "expected a morphism object");
            only_fields(*it, {"source", "target", "mat"}, path);
            const std::string s = name_field(*it, "source", path);
            const std::string t = name_field(*it, "target", path);
            w.add_morphism(it.key(), s, t, parse_matrix(ring, field(*it, "mat", path), path + "/mat"));
        });
    }

    const json& functors = section(doc, "functors");
    for (auto it = functors.begin(); it != functors.end(); ++it) {
        const std::string path = "/functors/" + it.key();
        guarded(path, [&] {
            if (!it->is_object() || it->size() != 1)
                fail(path, "expected exactly one of 'pres', 'yoneda', 'tensor'");
            only_fields(*it, {"pres", "yoneda", "tensor"}, path);
            FunctorEntry::Kind kind = FunctorEntry::Kind::Pres;
            if (it->contains("yoneda")) kind = FunctorEntry::Kind::Yoneda;
            if (it->contains("tensor")) kind = FunctorEntry::Kind::Tensor;
            w.add_functor(it.key(), kind, name_field(*it, kind_key(kind), path));
        });
    }

    const json& nats = section(doc, "nats");
    for (auto it = nats.begin(); it != nats.end(); ++it) {
        const std::string path = "/nats/" + it.key();
        guarded(path, [&] {
            if (!it->is_object()) fail(path, "expected a natural transformation object");
            only_fields(*it, {"source", "target", "a", "b"}, path);
            const std::string s = name_field(*it, "source", path);
            const std::string t = name_field(*it, "target", path);
            w.add_nat(it.key(), s, t, parse_matrix(ring, field(*it, "a", path), path + "/a"),
                      parse_matrix(ring, field(*it, "b", path), path + "/b"));
        });
    }
    return w;
}

// Hand-written so that each matrix stays on one line.
std::string render_workspace(const Workspace& w) {
    std::string out = "{\n  \"ring\": " + quote(ring_spec(w.ring())) + ",\n";
    auto section = [&](const char* key, const auto& entries, auto&& body, bool last) {
        out += std::string("  \"") + key + "\": {";
        bool first = true;
        for (const auto& [n, e] : entries) {
            out += first ? "\n" : ",\n";
            first = false;
            out += "    " + quote(n) + ": {" + body(e) + "}";
        }
        out += first ? "}" : "\n  }";
        out += last ? "\n" : ",\n";
    };
    section("modules", w.modules(), [](const FpModule& m) {
        return "\"gens\": " + std::to_string(m.gens()) + ", \"rels\": " + render_matrix(m.rels());
    }, false);
    section("morphisms", w.morphisms(), [](const MorphismEntry& e) {
        return "\"source\": " + quote(e.source) + ", \"target\": " + quote(e.target) +
               ", \"mat\": " + render_matrix(e.value.mat());
    }, false);
    section("functors", w.functors(), [](const FunctorEntry& e) {
        return quote(kind_key(e.kind)) + ": " + quote(e.ref);
    }, false);
    section("nats", w.nats(), [](const NatEntry& e) {
        return "\"source\": " + quote(e.source) + ", \"target\": " + quote(e.target) +
               ", \"a\": " + render_matrix(e.value.a().mat()) + ", \"b\": " + render_matrix(e.value.b().mat());
    }, true);
    out += "}\n";
    return out;
}

}  // namespace cohfun

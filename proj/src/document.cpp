#include "ainf/document.hpp"

#include <json.hpp>

#include <sstream>

namespace ainf {

using nlohmann::json;

namespace {

const char* const kReserved[] = {"diagonal", "tensor", "dual"};

[[noreturn]] void syntax(const std::string& path, const std::string& msg) {
    throw Error(ErrorCode::SyntaxError, path + ": " + msg);
}

// Rethrow library errors with the document path in front, keeping the code.
template <class F>
auto at_path(const std::string& path, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const Error& e) {
        if (e.code() == ErrorCode::SyntaxError) throw;
        std::string what = e.what();
        const std::string prefix = std::string(to_string(e.code())) + ": ";
        if (what.rfind(prefix, 0) == 0) what = what.substr(prefix.size());
        throw Error(e.code(), path + ": " + what);
    }
}

const json& field(const json& obj, const std::string& key, const std::string& path) {
    if (!obj.is_object()) syntax(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) syntax(path, "missing field '" + key + "'");
    return *it;
}

long integer(const json& j, const std::string& path) {
    if (!j.is_number_integer()) syntax(path, "expected an integer");
    return j.get<long>();
}

std::string string_of(const json& j, const std::string& path) {
    if (!j.is_string()) syntax(path, "expected a string");
    return j.get<std::string>();
}

Scalar coefficient(const json& j, const std::string& path) {
    if (j.is_number_integer()) return Scalar(j.get<long>());
    const std::string s = string_of(j, path);
    Scalar c;
    if (s.empty() || c.set_str(s, 10) != 0) syntax(path, "bad coefficient '" + s + "'");
    return c;
}

std::string decimal(const Scalar& c) { return c.get_str(10); }

Ring parse_ring(const json& j) {
    const std::string kind = string_of(field(j, "kind", "ring"), "ring.kind");
    if (kind == "Z") return Ring::integers();
    if (kind == "Zp") return at_path("ring.p", [&] { return Ring::prime_field(integer(field(j, "p", "ring"), "ring.p")); });
    syntax("ring.kind", "expected \"Z\" or \"Zp\"");
}

json ring_json(const Ring& r) {
    if (r.is_field()) return json{{"kind", "Zp"}, {"p", r.characteristic()}};
    return json{{"kind", "Z"}};
}

ModulePtr parse_basis(const json& j, const std::string& path) {
    if (!j.is_array()) syntax(path, "expected an array");
    std::vector<BasisElement> basis;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string p = path + "[" + std::to_string(i) + "]";
        basis.push_back({string_of(field(j[i], "name", p), p + ".name"),
                         static_cast<int>(integer(field(j[i], "degree", p), p + ".degree"))});
    }
    return at_path(path, [&] { return make_module(std::move(basis)); });
}

json basis_json(const GradedModule& m) {
    json a = json::array();
    for (const auto& b : m.basis()) a.push_back(json{{"degree", b.degree}, {"name", b.name}});
    return a;
}

Vec parse_vec(const json& j, const GradedModule& out, const Ring& ring, const std::string& path) {
    if (!j.is_object()) syntax(path, "expected an object");
    Vec v;
    for (const auto& [name, c] : j.items())
        v.add(at_path(path, [&] { return out.index(name); }), coefficient(c, path + "." + name), ring);
    return v;
}

json vec_json(const GradedModule& out, const Vec& v) {
    json o = json::object();
    for (const auto& [i, c] : v) o[out.name(i)] = decimal(c);
    return o;
}

void parse_table(const json& j, MultilinearOp& op, const Ring& ring, const std::string& path) {
    if (!j.is_array()) syntax(path, "expected an array");
    for (std::size_t e = 0; e < j.size(); ++e) {
        const std::string p = path + "[" + std::to_string(e) + "]";
        const json& in = field(j[e], "inputs", p);
        if (!in.is_array()) syntax(p + ".inputs", "expected an array");
        if (static_cast<int>(in.size()) != op.arity())
            throw Error(ErrorCode::ArityMismatch, p + ".inputs: expected " + std::to_string(op.arity()) + " names");
        Word w;
        for (std::size_t k = 0; k < in.size(); ++k)
            w.push_back(at_path(p + ".inputs", [&] { return op.signature()[k]->index(string_of(in[k], p)); }));
        Vec v = parse_vec(field(j[e], "output", p), *op.output(), ring, p + ".output");
        at_path(p, [&] { op.set(w, std::move(v), ring); });
    }
}

json table_json(const MultilinearOp& op) {
    json a = json::array();
    for (const auto& [w, v] : op.table()) {
        json in = json::array();
        for (std::size_t k = 0; k < w.size(); ++k) in.push_back(op.signature()[k]->name(w[k]));
        a.push_back(json{{"inputs", in}, {"output", vec_json(*op.output(), v)}});
    }
    return a;
}

RS parse_rs(const std::string& key, const std::string& path) {
    int r = -1, s = -1;
    char comma = 0;
    std::istringstream in(key);
    if (!(in >> r >> comma >> s) || comma != ',' || r < 0 || s < 0 || !in.eof()) syntax(path, "expected key \"r,s\"");
    return {r, s};
}

std::string rs_key(RS rs) { return std::to_string(rs.first) + "," + std::to_string(rs.second); }

}  // namespace

bool is_reserved_bimodule(const std::string& name) {
    for (const char* r : kReserved)
        if (name == r) return true;
    return false;
}

void Structure::build_constructions() {
    diagonal = std::make_shared<const AInfinityBimodule>(diagonal_bimodule(algebra));
    tensor = std::make_shared<const AInfinityBimodule>(tensor_square_bimodule(algebra));
    dual = std::make_shared<const AInfinityBimodule>(dual_bimodule(*diagonal));
}

BimodulePtr Structure::bimodule(const std::string& name) const {
    if (name == "diagonal") return diagonal;
    if (name == "tensor") return tensor;
    if (name == "dual") return dual;
    auto it = bimodules.find(name);
    if (it == bimodules.end()) throw Error(ErrorCode::UnknownName, "bimodule '" + name + "'");
    return it->second;
}

std::string Structure::bimodule_name(const BimodulePtr& M) const {
    if (M == diagonal) return "diagonal";
    if (M == tensor) return "tensor";
    if (M == dual) return "dual";
    for (const auto& [n, p] : bimodules)
        if (p == M) return n;
    throw Error(ErrorCode::UnknownName, "bimodule not registered in the document");
}

Structure parse_document(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::SyntaxError, std::string("document: ") + e.what());
    }
    if (!doc.is_object()) syntax("document", "expected an object");
    for (const auto& [k, v] : doc.items())
        if (k != "ring" && k != "algebra" && k != "bimodules" && k != "morphisms" && k != "cochains" && k != "options")
            syntax("document", "unknown field '" + k + "'");

    Structure s;
    s.ring = parse_ring(field(doc, "ring", "document"));

    const json& alg = field(doc, "algebra", "document");
    auto Amod = parse_basis(field(alg, "basis", "algebra"), "algebra.basis");
    AInfinityAlgebra A(s.ring, Amod);
    if (auto it = alg.find("ops"); it != alg.end()) {
        if (!it->is_object()) syntax("algebra.ops", "expected an object");
        for (const auto& [key, table] : it->items()) {
            const std::string p = "algebra.ops." + key;
            int n = 0;
            try {
                std::size_t used = 0;
                n = std::stoi(key, &used);
                if (used != key.size() || n < 1) throw std::invalid_argument(key);
            } catch (const std::exception&) {
                syntax(p, "arity keys are positive integers");
            }
            auto op = A.make_op(n);
            parse_table(table, op, s.ring, p);
            at_path(p, [&] { A.set_operation(std::move(op)); });
        }
    }
    s.algebra = std::make_shared<const AInfinityAlgebra>(std::move(A));
    s.build_constructions();

    if (auto it = doc.find("bimodules"); it != doc.end()) {
        if (!it->is_object()) syntax("bimodules", "expected an object");
        for (const auto& [name, b] : it->items()) {
            const std::string p = "bimodules." + name;
            if (is_reserved_bimodule(name)) syntax(p, "reserved bimodule name");
            AInfinityBimodule M(s.algebra, parse_basis(field(b, "basis", p), p + ".basis"));
            if (auto ops = b.find("ops"); ops != b.end()) {
                if (!ops->is_object()) syntax(p + ".ops", "expected an object");
                for (const auto& [key, table] : ops->items()) {
                    auto [r, t] = parse_rs(key, p + ".ops." + key);
                    auto op = M.make_op(r, t);
                    parse_table(table, op, s.ring, p + ".ops." + key);
                    M.set_operation(r, t, std::move(op));
                }
            }
            s.bimodules[name] = std::make_shared<const AInfinityBimodule>(std::move(M));
        }
    }

    if (auto it = doc.find("morphisms"); it != doc.end()) {
        if (!it->is_object()) syntax("morphisms", "expected an object");
        for (const auto& [name, m] : it->items()) {
            const std::string p = "morphisms." + name;
            auto src = at_path(p + ".source", [&] { return s.bimodule(string_of(field(m, "source", p), p)); });
            auto tgt = at_path(p + ".target", [&] { return s.bimodule(string_of(field(m, "target", p), p)); });
            BimoduleMorphism f(src, tgt, static_cast<int>(integer(field(m, "degree", p), p + ".degree")));
            if (auto maps = m.find("maps"); maps != m.end()) {
                if (!maps->is_object()) syntax(p + ".maps", "expected an object");
                for (const auto& [key, table] : maps->items()) {
                    auto [r, t] = parse_rs(key, p + ".maps." + key);
                    auto op = f.make_map(r, t);
                    parse_table(table, op, s.ring, p + ".maps." + key);
                    f.set_map(r, t, std::move(op));
                }
            }
            s.morphisms[name] = std::make_shared<const BimoduleMorphism>(std::move(f));
        }
    }

    if (auto it = doc.find("cochains"); it != doc.end()) {
        if (!it->is_object()) syntax("cochains", "expected an object");
        for (const auto& [name, c] : it->items()) {
            const std::string p = "cochains." + name;
            auto M = at_path(p + ".module", [&] { return s.bimodule(string_of(field(c, "module", p), p)); });
            const long degree = integer(field(c, "degree", p), p + ".degree");
            const json& vals = field(c, "values", p);
            if (!vals.is_array()) syntax(p + ".values", "expected an array");
            WordComb values;
            for (std::size_t e = 0; e < vals.size(); ++e) {
                const std::string q = p + ".values[" + std::to_string(e) + "]";
                const json& key = field(vals[e], "key", q);
                if (!key.is_array() || key.empty()) syntax(q + ".key", "expected a nonempty array");
                Word w;
                for (std::size_t k = 0; k < key.size(); ++k) {
                    const auto& mod = k == 0 ? *M->module() : *M->A().module();
                    w.push_back(at_path(q + ".key", [&] { return mod.index(string_of(key[k], q)); }));
                }
                values.add(w, coefficient(field(vals[e], "coefficient", q), q + ".coefficient"), s.ring);
            }
            s.cochains[name] = at_path(p, [&] {
                auto f = make_cochain(M, std::move(values), degree);
                if (!f.is_zero() && f.degree != degree)
                    throw Error(ErrorCode::DegreeMismatch, "declared degree " + std::to_string(degree));
                return f;
            });
        }
    }

    if (auto it = doc.find("options"); it != doc.end()) {
        if (!it->is_object()) syntax("options", "expected an object");
        for (const auto& [k, v] : it->items()) {
            const int x = static_cast<int>(integer(v, "options." + k));
            if (x < 0) syntax("options." + k, "expected a nonnegative integer");
            if (k == "length") s.options.length = x;
            else if (k == "max_r") s.options.max_r = x;
            else if (k == "max_rs") s.options.max_rs = x;
            else syntax("options." + k, "unknown option");
        }
    }
    return s;
}

std::string serialize_document(const Structure& s) {
    json doc;
    doc["ring"] = ring_json(s.ring);
    json ops = json::object();
    for (const auto& [n, op] : s.algebra->operations())
        if (!op.is_zero()) ops[std::to_string(n)] = table_json(op);
    doc["algebra"] = json{{"basis", basis_json(*s.algebra->module())}, {"ops", ops}};

    json bims = json::object();
    for (const auto& [name, M] : s.bimodules) {
        json bops = json::object();
        for (const auto& [rs, op] : M->operations())
            if (!op.is_zero()) bops[rs_key(rs)] = table_json(op);
        bims[name] = json{{"basis", basis_json(*M->module())}, {"ops", bops}};
    }
    doc["bimodules"] = bims;

    json mors = json::object();
    for (const auto& [name, f] : s.morphisms) {
        json maps = json::object();
        for (const auto& [rs, op] : f->maps())
            if (!op.is_zero()) maps[rs_key(rs)] = table_json(op);
        mors[name] = json{{"degree", f->degree()},
                          {"maps", maps},
                          {"source", s.bimodule_name(f->source())},
                          {"target", s.bimodule_name(f->target())}};
    }
    doc["morphisms"] = mors;

    json cos = json::object();
    for (const auto& [name, c] : s.cochains) {
        json vals = json::array();
        for (const auto& [w, coeff] : c.values) {
            json key = json::array();
            key.push_back(c.coefficients->module()->name(w[0]));
            for (std::size_t k = 1; k < w.size(); ++k) key.push_back(c.coefficients->A().module()->name(w[k]));
            vals.push_back(json{{"coefficient", decimal(coeff)}, {"key", key}});
        }
        cos[name] = json{{"degree", c.degree}, {"module", s.bimodule_name(c.coefficients)}, {"values", vals}};
    }
    doc["cochains"] = cos;
    doc["options"] = json{{"length", s.options.length}, {"max_r", s.options.max_r}, {"max_rs", s.options.max_rs}};
    return doc.dump(2) + "\n";
}

}  // namespace ainf

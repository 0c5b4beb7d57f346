#include "ainf/fixtures.hpp"

#include <stdexcept>

namespace ainf {

namespace {

using Terms = std::vector<std::pair<std::string, long>>;

void put(MultilinearOp& op, const std::vector<std::string>& inputs, const Terms& out, const Ring& ring) {
    Word w;
    for (std::size_t i = 0; i < inputs.size(); ++i) w.push_back(op.signature()[i]->index(inputs[i]));
    Vec v;
    for (const auto& [name, c] : out) v.add(op.output()->index(name), c, ring);
    op.set(w, std::move(v), ring);
}

struct Product {
    std::string a, b;
    Terms out;
};

AlgebraPtr dga(const Ring& ring, std::vector<BasisElement> basis, const std::vector<Product>& products,
               const std::vector<std::pair<std::string, Terms>>& d) {
    auto A = make_module(std::move(basis));
    MultilinearOp mul({A, A}, A, 0), diff({A}, A, 1);
    for (const auto& p : products) put(mul, {p.a, p.b}, p.out, ring);
    for (const auto& [x, out] : d) put(diff, {x}, out, ring);
    return std::make_shared<const AInfinityAlgebra>(from_dga(ring, A, mul, diff));
}

// Unit products 1.x = x.1 = x for every basis element.
std::vector<Product> with_unit(const std::vector<std::string>& names, std::vector<Product> rest) {
    for (const auto& x : names) {
        rest.push_back({"1", x, {{x, 1}}});
        if (x != "1") rest.push_back({x, "1", {{x, 1}}});
    }
    return rest;
}

// A dg bimodule over an algebra concentrated in degree 0:
// mu_{0,0} = d, mu_{1,0}(a, m) = a.m, mu_{0,1}(m, a) = (-1)^{|m|+1} m.a.
struct Action {
    std::string a, m;
    Terms out;
};

BimodulePtr classical_bimodule(const AlgebraPtr& A, std::vector<BasisElement> basis, const std::vector<Action>& left,
                               const std::vector<Action>& right, const std::vector<std::pair<std::string, Terms>>& d) {
    const Ring& ring = A->ring();
    auto Mmod = make_module(std::move(basis));
    AInfinityBimodule M(A, Mmod);
    auto d0 = M.make_op(0, 0), l = M.make_op(1, 0), r = M.make_op(0, 1);
    for (const auto& [x, out] : d) put(d0, {x}, out, ring);
    for (const auto& act : left) put(l, {act.a, act.m}, act.out, ring);
    for (const auto& act : right) {
        const int sign = sign_of(Mmod->degree(Mmod->index(act.m)) + 1);
        Terms out = act.out;
        for (auto& t : out) t.second *= sign;
        put(r, {act.m, act.a}, out, ring);
    }
    M.set_operation(0, 0, std::move(d0));
    M.set_operation(1, 0, std::move(l));
    M.set_operation(0, 1, std::move(r));
    return std::make_shared<const AInfinityBimodule>(std::move(M));
}

AlgebraPtr dual_numbers(const Ring& ring) {
    return dga(ring, {{"1", 0}, {"eps", 0}}, with_unit({"1", "eps"}, {}), {});
}

HochschildCochain named_cochain(const Structure& s, const std::vector<std::string>& key) {
    const auto& M = *s.diagonal;
    Word w{M.module()->index(key[0])};
    for (std::size_t i = 1; i < key.size(); ++i) w.push_back(M.A().module()->index(key[i]));
    return dual_basis_cochain(s.diagonal, w);
}

void add_identity(Structure& s) {
    s.morphisms["identity"] = std::make_shared<const BimoduleMorphism>(BimoduleMorphism::identity(s.diagonal));
}

Structure exterior1(const Ring& ring) {
    Structure s;
    s.ring = ring;
    s.algebra = dga(ring, {{"1", 0}, {"x", 1}}, with_unit({"1", "x"}, {}), {});
    s.build_constructions();
    add_identity(s);
    s.cochains["u"] = named_cochain(s, {"1"});
    s.cochains["fx"] = named_cochain(s, {"x", "x"});
    return s;
}

Structure exterior2(const Ring& ring) {
    Structure s;
    s.ring = ring;
    s.algebra = dga(ring, {{"1", 0}, {"x", 1}, {"y", 1}, {"xy", 2}},
                    with_unit({"1", "x", "y", "xy"}, {{"x", "y", {{"xy", 1}}}, {"y", "x", {{"xy", -1}}}}), {});
    s.build_constructions();
    add_identity(s);
    s.cochains["fx"] = named_cochain(s, {"x", "x"});
    s.cochains["fy"] = named_cochain(s, {"y", "y"});
    return s;
}

Structure dual_numbers_fixture(const Ring& ring) {
    Structure s;
    s.ring = ring;
    s.algebra = dual_numbers(ring);
    s.build_constructions();
    add_identity(s);
    // N = Z in degree -1 with eps acting by zero; f_{0,0} sends 1 to q and eps to 0.
    auto N = classical_bimodule(s.algebra, {{"q", -1}}, {{"1", "q", {{"q", 1}}}}, {{"1", "q", {{"q", 1}}}}, {});
    s.bimodules["N"] = N;
    BimoduleMorphism f(s.diagonal, N, 0);
    auto f00 = f.make_map(0, 0);
    put(f00, {"1"}, {{"q", 1}}, ring);
    f.set_map(0, 0, std::move(f00));
    s.morphisms["projection"] = std::make_shared<const BimoduleMorphism>(std::move(f));
    s.cochains["u"] = named_cochain(s, {"1"});
    s.cochains["feps"] = named_cochain(s, {"eps", "eps"});
    return s;
}

Structure truncated_poly3(const Ring& ring) {
    Structure s;
    s.ring = ring;
    s.algebra = dga(ring, {{"1", 0}, {"x", 0}, {"x2", 0}},
                    with_unit({"1", "x", "x2"}, {{"x", "x", {{"x2", 1}}}}), {});
    s.build_constructions();
    add_identity(s);
    s.cochains["fx"] = named_cochain(s, {"x", "x"});
    return s;
}

Structure mu3_square_zero(const Ring& ring) {
    Structure s;
    s.ring = ring;
    auto Amod = make_module({{"a", 0}, {"b", 0}, {"c", -1}});
    AInfinityAlgebra A(ring, Amod);
    auto m3 = A.make_op(3);
    put(m3, {"a", "a", "a"}, {{"c", 1}}, ring);
    A.set_operation(std::move(m3));
    s.algebra = std::make_shared<const AInfinityAlgebra>(std::move(A));
    s.build_constructions();
    add_identity(s);
    s.cochains["fa"] = named_cochain(s, {"a", "a"});
    return s;
}

Structure quasi_iso_pair(const Ring& ring) {
    Structure s;
    s.ring = ring;
    s.algebra = dual_numbers(ring);
    s.build_constructions();
    add_identity(s);
    const std::vector<std::string> xs{"1", "eps"};
    auto products = [](const std::string& prefix) {
        // 1.p_x = p_x, eps.p_1 = p_eps, eps.p_eps = 0 (and the same on the right)
        return std::vector<Action>{{"1", prefix + "1", {{prefix + "1", 1}}},
                                   {"1", prefix + "eps", {{prefix + "eps", 1}}},
                                   {"eps", prefix + "1", {{prefix + "eps", 1}}}};
    };
    auto M = classical_bimodule(s.algebra, {{"m1", 0}, {"meps", 0}}, products("m"), products("m"), {});
    std::vector<Action> nl, nr;
    for (const char* p : {"n", "c", "e"}) {
        auto act = products(p);
        nl.insert(nl.end(), act.begin(), act.end());
        nr.insert(nr.end(), act.begin(), act.end());
    }
    auto N = classical_bimodule(s.algebra,
                                {{"n1", 0}, {"neps", 0}, {"c1", -1}, {"ceps", -1}, {"e1", 0}, {"eeps", 0}}, nl, nr,
                                {{"c1", {{"e1", 1}}}, {"ceps", {{"eeps", 1}}}});
    s.bimodules["M"] = M;
    s.bimodules["N"] = N;
    auto morphism = [&](const std::string& to) {
        BimoduleMorphism f(M, N, 0);
        auto f00 = f.make_map(0, 0);
        for (const auto& x : xs) put(f00, {"m" + x}, {{to + x, 1}}, ring);
        f.set_map(0, 0, std::move(f00));
        return std::make_shared<const BimoduleMorphism>(std::move(f));
    };
    s.morphisms["inclusion"] = morphism("n");
    s.morphisms["into_cone"] = morphism("e");
    return s;
}

Structure koszul_dga(const Ring& ring) {
    Structure s;
    s.ring = ring;
    s.algebra = dga(ring, {{"1", 0}, {"t", 0}, {"e", -1}, {"te", -1}},
                    with_unit({"1", "t", "e", "te"}, {{"t", "e", {{"te", 1}}}, {"e", "t", {{"te", 1}}}}),
                    {{"e", {{"t", 1}}}});
    s.build_constructions();
    add_identity(s);
    s.cochains["ft"] = named_cochain(s, {"t", "t"});
    return s;
}

void check_on_emission(const Structure& s, const std::string& name) {
    for (const auto& [r, v] : validate(*s.algebra, 6).checks)
        if (!v.holds) throw std::logic_error("fixture " + name + ": " + v.describe());
    for (const auto& [bn, M] : s.bimodules)
        for (int r = 0; r <= 3; ++r)
            for (int t = 0; r + t <= 3; ++t)
                if (auto v = check_bimodule_equation(*M, r, t); !v.holds)
                    throw std::logic_error("fixture " + name + " bimodule " + bn + ": " + v.describe());
    for (const auto& [fn, f] : s.morphisms)
        for (int r = 0; r <= 2; ++r)
            for (int t = 0; r + t <= 2; ++t)
                if (auto v = check_morphism_equation(*f, r, t); !v.holds)
                    throw std::logic_error("fixture " + name + " morphism " + fn + ": " + v.describe());
}

}  // namespace

const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names{"exterior1",       "exterior2",      "dual_numbers",
                                                "truncated_poly3", "mu3_square_zero", "quasi_iso_pair"};
    return names;
}

const std::vector<std::string>& all_fixture_names() {
    static const std::vector<std::string> names = [] {
        auto v = fixture_names();
        v.push_back("koszul_dga");
        return v;
    }();
    return names;
}

Structure build_fixture(const std::string& name, const Ring& ring) {
    if (name == "exterior1") return exterior1(ring);
    if (name == "exterior2") return exterior2(ring);
    if (name == "dual_numbers") return dual_numbers_fixture(ring);
    if (name == "truncated_poly3") return truncated_poly3(ring);
    if (name == "mu3_square_zero") return mu3_square_zero(ring);
    if (name == "quasi_iso_pair") return quasi_iso_pair(ring);
    if (name == "koszul_dga") return koszul_dga(ring);
    throw Error(ErrorCode::UnknownFixture, name);
}

std::string emit_fixture(const std::string& name, const Ring& ring) {
    Structure s = build_fixture(name, ring);
    check_on_emission(s, name);
    return serialize_document(s);
}

}  // namespace ainf

#include "helpers.hpp"

#include <doctest.h>

using namespace ainf;

TEST_CASE("diagonal bimodules satisfy the equations through r+s = 4") {
    for (const auto& name : all_fixture_names()) {
        Structure s = build_fixture(name);
        for (int r = 0; r <= 4; ++r)
            for (int t = 0; r + t <= 4; ++t) {
                Verdict v = check_bimodule_equation(*s.diagonal, r, t);
                INFO(name << " " << v.describe());
                CHECK(v.holds);
            }
    }
}

TEST_CASE("tensor squares, duals and fixture bimodules satisfy the equations through r+s = 3") {
    for (const auto& name : all_fixture_names())
        for (const Ring& ring : {Ring::integers(), Ring::prime_field(3)}) {
            Structure s = build_fixture(name, ring);
            for (const auto& [bn, M] : testing::bimodules_of(s))
                for (int r = 0; r <= 3; ++r)
                    for (int t = 0; r + t <= 3; ++t) {
                        Verdict v = check_bimodule_equation(*M, r, t);
                        INFO(name << " " << bn << " " << v.describe());
                        CHECK(v.holds);
                    }
        }
}

TEST_CASE("diagonal bimodule: shifted degrees and copied tables") {
    Structure s = build_fixture("exterior1");
    const auto& A = *s.algebra;
    const auto& D = *s.diagonal;
    CHECK(D.module()->degree(0) == -1);
    CHECK(D.module()->degree(1) == 0);
    // mu^{A[1]}_{1,0} has the table of mu_2
    CHECK(D.op(1, 0)->table() == A.op(2)->table());
    CHECK(D.op(0, 1)->table() == A.op(2)->table());
}

TEST_CASE("tensor square on the exterior algebra") {
    Structure s = build_fixture("exterior1");
    const auto& T = *s.tensor;
    const auto& A = *s.algebra->module();
    const int x = A.index("x"), one = A.index("1");
    CHECK(T.module()->size() == 4);
    const int xx = T.module()->index("x|x");
    const int onex = T.module()->index("1|x");
    CHECK(xx == x * 2 + x);
    CHECK(T.module()->degree(xx) == 0);
    CHECK(T.module()->degree(onex) == -1);
    // mu_{1,0}(x, x|x) = mu_2(x, x) (x) x = 0
    CHECK(T.op(1, 0)->lookup({x, xx}) == nullptr);
    // mu_{1,0}(x, 1|x) = mu_2(x, 1) (x) x = -x|x
    const Vec* v = T.op(1, 0)->lookup({x, onex});
    REQUIRE(v);
    CHECK(v->coefficient(xx) == -1);
    (void)one;
}

TEST_CASE("dual bimodule: negated degrees and the double dual") {
    for (const auto& name : all_fixture_names())
        for (const Ring& ring : {Ring::integers(), Ring::prime_field(3)}) {
            Structure s = build_fixture(name, ring);
            for (const auto& [bn, M] : testing::bimodules_of(s)) {
                AInfinityBimodule D = dual_bimodule(*M);
                for (int i = 0; i < M->module()->size(); ++i) {
                    CHECK(D.module()->name(i) == M->module()->name(i) + "^");
                    CHECK(D.module()->degree(i) == -M->module()->degree(i));
                }
                AInfinityBimodule DD = dual_bimodule(D);
                INFO(name << " " << bn);
                CHECK(double_dual_matches(*M, DD));
            }
        }
}

TEST_CASE("double_dual_matches notices a changed table") {
    Structure s = build_fixture("koszul_dga");
    AInfinityBimodule DD = dual_bimodule(*s.dual);
    auto op = *DD.op(0, 0);
    auto [w, v] = *op.table().begin();
    Vec u = v;
    u.scale(-1, s.ring);
    op.set(w, u, s.ring);
    DD.set_operation(0, 0, op);
    CHECK_FALSE(double_dual_matches(*s.diagonal, DD));
}

TEST_CASE("fixture morphisms and scalar multiples satisfy the morphism equations") {
    for (const auto& name : all_fixture_names()) {
        Structure s = build_fixture(name);
        std::vector<std::pair<std::string, MorphismPtr>> fs(s.morphisms.begin(), s.morphisms.end());
        for (const auto& [bn, M] : testing::bimodules_of(s)) {
            fs.push_back({"id " + bn, std::make_shared<const BimoduleMorphism>(BimoduleMorphism::identity(M))});
            fs.push_back({"2 " + bn, std::make_shared<const BimoduleMorphism>(BimoduleMorphism::scalar(M, 2))});
        }
        for (const auto& [fn, f] : fs) {
            CHECK(morphism_is_chain_map_00(*f));
            for (int r = 0; r <= 3; ++r)
                for (int t = 0; r + t <= 3; ++t) {
                    Verdict v = check_morphism_equation(*f, r, t);
                    INFO(name << " " << fn << " " << v.describe());
                    CHECK(v.holds);
                }
        }
    }
}

TEST_CASE("a corrupted f_{0,0} is no longer a chain map") {
    Structure s = build_fixture("koszul_dga");
    BimoduleMorphism f = BimoduleMorphism::identity(s.diagonal);
    auto f00 = *f.map(0, 0);
    f00.set({s.diagonal->module()->index("e")}, Vec{}, s.ring);
    f.set_map(0, 0, f00);
    CHECK_FALSE(morphism_is_chain_map_00(f));
    CHECK_FALSE(check_morphism_equation(f, 0, 0).holds);
}

TEST_CASE("morphisms need a common algebra and matching degrees") {
    Structure a = build_fixture("exterior1"), b = build_fixture("exterior1");
    CHECK_THROWS_AS(BimoduleMorphism(a.diagonal, b.diagonal, 0), Error);
    BimoduleMorphism f(a.diagonal, a.diagonal, 0);
    MultilinearOp wrong = f.make_map(0, 0);
    CHECK_THROWS_AS(f.set_map(1, 0, wrong), Error);
}

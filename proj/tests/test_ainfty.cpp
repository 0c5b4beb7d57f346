#include "helpers.hpp"

#include <doctest.h>

#include <omp.h>

using namespace ainf;

namespace {

AlgebraPtr corrupt_mu2(const AlgebraPtr& A, const Word& w) {
    AInfinityAlgebra B = *A;
    MultilinearOp mu2 = *A->op(2);
    Vec v = *mu2.lookup(w);
    v.scale(-1, A->ring());
    mu2.set(w, v, A->ring());
    B.set_operation(mu2);
    return std::make_shared<const AInfinityAlgebra>(B);
}

}  // namespace

TEST_CASE("fixtures satisfy the defining equations over Z and Z/2") {
    for (const auto& name : all_fixture_names())
        for (const Ring& ring : {Ring::integers(), testing::z2()}) {
            Structure s = build_fixture(name, ring);
            for (int r = 1; r <= 6; ++r) {
                Verdict v = check_defining_equation(*s.algebra, r);
                INFO(name << " " << ring.describe() << " " << v.describe());
                CHECK(v.holds);
            }
        }
}

TEST_CASE("nonzero outputs obey the reduced-degree bookkeeping") {
    for (const auto& name : all_fixture_names()) {
        Structure s = build_fixture(name);
        const auto& A = *s.algebra->module();
        for (const auto& [n, op] : s.algebra->operations())
            for (const auto& [w, v] : op.table()) {
                long in = 0;
                for (int a : w) in += A.degree(a) - 1;
                for (const auto& [o, c] : v) CHECK(((A.degree(o) - 1) - (in + 1)) % 2 == 0);
            }
    }
}

TEST_CASE("the mu3 fixture has a genuine ternary operation") {
    Structure s = build_fixture("mu3_square_zero");
    CHECK(s.algebra->max_arity() == 3);
    CHECK(s.algebra->op(1) == nullptr);
    CHECK(s.algebra->op(2) == nullptr);
    CHECK(s.algebra->op(3)->table().size() == 1);
    CHECK(validate(*s.algebra, 5).ok());
    CHECK(default_validation_bound(*s.algebra) == 6);
}

TEST_CASE("from_dga rejects broken classical data") {
    Ring z;
    auto expect = [](auto&& f, ErrorCode code) {
        try {
            f();
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.code() == code);
        }
    };
    {
        auto M = make_module({{"a", 0}, {"b", 0}});
        MultilinearOp mul({M, M}, M, 0), d({M}, M, 1);
        Vec b, a;
        b.add(1, 1, z);
        a.add(0, 1, z);
        mul.set({0, 0}, b, z);
        mul.set({0, 1}, a, z);
        expect([&] { from_dga(z, M, mul, d); }, ErrorCode::NotAssociative);
    }
    {
        auto M = make_module({{"p", 0}, {"q", 1}, {"r", 2}});
        MultilinearOp mul({M, M}, M, 0), d({M}, M, 1);
        Vec q, r;
        q.add(1, 1, z);
        r.add(2, 1, z);
        d.set({0}, q, z);
        d.set({1}, r, z);
        expect([&] { from_dga(z, M, mul, d); }, ErrorCode::NotADifferential);
    }
    {
        auto M = make_module({{"1", 0}, {"t", 0}, {"e", -1}, {"te", -1}});
        MultilinearOp mul({M, M}, M, 0), d({M}, M, 1);
        auto put = [&](int i, int j, int k) {
            Vec v;
            v.add(k, 1, z);
            mul.set({i, j}, v, z);
        };
        for (int i = 0; i < 4; ++i) {
            put(0, i, i);
            if (i) put(i, 0, i);
        }
        put(1, 2, 3);
        put(2, 1, 3);
        Vec t;
        t.add(1, 1, z);
        d.set({2}, t, z);
        d.set({3}, t, z);  // d(te) should be t^2 = 0
        expect([&] { from_dga(z, M, mul, d); }, ErrorCode::LeibnizFailure);
    }
}

TEST_CASE("from_dga twists the product by the degree of the first factor") {
    Structure s = build_fixture("exterior2");
    const auto& A = *s.algebra->module();
    const Vec* xy = s.algebra->op(2)->lookup({A.index("x"), A.index("y")});
    REQUIRE(xy);
    CHECK(xy->coefficient(A.index("xy")) == -1);
    const Vec* one_x = s.algebra->op(2)->lookup({A.index("1"), A.index("x")});
    CHECK(one_x->coefficient(A.index("x")) == 1);
}

TEST_CASE("a corrupted sign is caught with a witness, identically in serial and parallel") {
    Structure s = build_fixture("exterior2");
    const auto& A = *s.algebra->module();
    auto bad = corrupt_mu2(s.algebra, {A.index("x"), A.index("1")});
    Verdict par = check_defining_equation(*bad, 3);
    CHECK_FALSE(par.holds);
    CHECK_FALSE(par.witness.empty());
    const int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    Verdict ser = check_defining_equation(*bad, 3);
    omp_set_num_threads(saved);
    CHECK(ser.witness == par.witness);
    CHECK(ser.residual == par.residual);
}

TEST_CASE("set_operation validates arity and degree") {
    Structure s = build_fixture("exterior1");
    AInfinityAlgebra A = *s.algebra;
    MultilinearOp wrong({A.module()}, A.module(), 0);
    CHECK_THROWS_AS(A.set_operation(wrong), Error);
}

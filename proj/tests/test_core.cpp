#include "ainf/multilinear.hpp"
#include "ainf/signs.hpp"

#include <doctest.h>

#include <array>

using namespace ainf;

TEST_CASE("rings") {
    CHECK_THROWS_AS(Ring::prime_field(4), Error);
    try {
        Ring::prime_field(4);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotPrime);
    }
    Ring f5 = Ring::prime_field(5);
    CHECK(f5.reduced(-1) == 4);
    CHECK(f5.reduced(12) == 2);
    CHECK((f5.inverse(3) * 3) % 5 == 1);
    CHECK(f5.is_field());
    Ring z;
    CHECK(z.is_unit(-1));
    CHECK_FALSE(z.is_unit(2));
    CHECK(z.reduced(-7) == -7);
    Scalar q = z.quotient(7, 2);
    CHECK(abs(Scalar(7) - q * 2) < 2);
}

TEST_CASE("graded modules") {
    GradedModule m({{"1", 0}, {"x", 1}});
    CHECK(m.size() == 2);
    CHECK(m.index("x") == 1);
    CHECK_FALSE(m.find("y"));
    CHECK_THROWS_AS(m.index("y"), Error);
    CHECK_THROWS_AS(GradedModule({{"a", 0}, {"a", 1}}), Error);
    GradedModule s = m.shifted(-1);
    CHECK(s.degree(0) == -1);
    CHECK(s.degree(1) == 0);
}

TEST_CASE("linear combinations stay canonical") {
    Ring z2 = Ring::prime_field(2);
    Vec v;
    v.add(0, 3, Ring());
    v.add(0, -3, Ring());
    CHECK(v.is_zero());
    v.add(1, 2, Ring());
    v.add(2, 1, Ring());
    v.scale(1, z2);
    CHECK(v.size() == 1);  // the coefficient 2 dies mod 2
    v.add(1, 1, Ring());
    Vec u = v;
    u.scale(2, z2);
    CHECK(u.is_zero());

    auto m = make_module({{"1", 0}, {"x", 1}});
    Element e(m);
    e.add(Element::basis(m, 0, 1, Ring()), 1, Ring());
    CHECK(e.homogeneous());
    CHECK(degree(e) == 0);
    CHECK(reduced_index(e) == -1);
    e.add(Element::basis(m, 1, 1, Ring()), 1, Ring());
    CHECK_FALSE(e.homogeneous());
}

TEST_CASE("maltese signs") {
    std::array<int, 3> deg{1, 2, 3};  // reduced indices 0, 1, 2
    CHECK(maltese(deg, 1, 0) == 0);
    CHECK(maltese(deg, 1, 3) == 3);
    CHECK(maltese(deg, 2, 3) == 3);
    CHECK(maltese(deg, 3, 2) == 0);
    CHECK(maltese0(5, deg, -1) == 0);
    CHECK(maltese0(5, deg, 0) == 5);
    CHECK(maltese0(5, deg, 2) == 6);
    std::array<int, 2> d2{2, 3};
    CHECK(star_sign(2, d2, 2) == 6);  // (2 + 1) * 2
    CHECK(star_sign(2, d2, 1) == 2 * 3);
    CHECK_THROWS_AS(maltese(deg, 0, 2), Error);
    CHECK_THROWS_AS(maltese(deg, 1, 4), Error);
}

TEST_CASE("multilinear tables check degrees") {
    auto A = make_module({{"1", 0}, {"x", 1}});
    MultilinearOp mu2({A, A}, A, 0);
    Vec v;
    v.add(1, 1, Ring());
    mu2.set({0, 1}, v, Ring());
    CHECK(mu2.lookup({0, 1}));
    CHECK_THROWS_AS(mu2.set({0, 0}, v, Ring()), Error);
    mu2.set({0, 1}, Vec{}, Ring());
    CHECK(mu2.is_zero());

    std::vector<Element> in{Element::basis(A, 1, 2, Ring()), Element::basis(A, 0, 3, Ring())};
    mu2.set({1, 0}, v, Ring());
    Element out = apply(mu2, in, Ring());
    CHECK(out.terms().coefficient(1) == 6);
}

TEST_CASE("word spaces enumerate lexicographically") {
    WordSpace s({2, 3});
    CHECK(s.count() == 6);
    CHECK(s.at(0) == Word{0, 0});
    CHECK(s.at(1) == Word{0, 1});
    CHECK(s.at(5) == Word{1, 2});
    WordSpace empty({});
    CHECK(empty.count() == 1);
}

#include "helpers.hpp"

#include "ainf/hochschild.hpp"

#include <doctest.h>

using namespace ainf;

namespace {

std::vector<oracle::Algebra> classical_algebras() {
    return {oracle::dual_numbers(), oracle::truncated_poly3(), oracle::upper_triangular()};
}

std::vector<Word> all_words(int size, int letters) {
    std::vector<Word> out;
    WordSpace space(std::vector<int>(letters + 1, size));
    for (std::uint64_t k = 0; k < space.count(); ++k) out.push_back(space.at(k));
    return out;
}

}  // namespace

TEST_CASE("b on a degree-0 algebra is the classical Hochschild boundary") {
    for (const auto& alg : classical_algebras()) {
        auto A = oracle::to_ainfty(alg);
        AInfinityBimodule M = diagonal_bimodule(A);
        for (int n = 0; n <= 3; ++n)
            for (const auto& w : all_words(alg.size(), n)) {
                INFO(format_chain_word(M, w));
                CHECK(testing::to_sparse(differential(M, w)) == oracle::classical_boundary(alg, w));
            }
    }
}

TEST_CASE("hochschild degrees") {
    Structure s = build_fixture("exterior1");
    const auto& M = *s.diagonal;
    const int one = 0, x = 1;
    CHECK(hochschild_degree(M, {x}) == 0);
    CHECK(hochschild_degree(M, {one}) == 1);
    CHECK(hochschild_degree(M, {one, one}) == 2);
    CHECK(hochschild_degree(M, {x, x, x}) == 0);
    CHECK(format_chain_word(M, {x, one}) == "x (x) 1");
}

TEST_CASE("b o b = 0 over Z and Z/2") {
    for (const auto& name : {"exterior1", "dual_numbers", "mu3_square_zero", "koszul_dga"})
        for (const Ring& ring : {Ring::integers(), testing::z2()}) {
            Structure s = build_fixture(name, ring);
            for (const auto& [bn, M] : testing::bimodules_of(s)) {
                WordBasis B = enumerate_words(*M, 0, 3);
                for (const auto& [j, blk] : B.blocks)
                    for (const auto& w : blk) {
                        INFO(name << " " << bn << " " << format_chain_word(*M, w));
                        CHECK(differential(*M, differential(*M, w)).is_zero());
                    }
            }
        }
}

TEST_CASE("b lowers the Hochschild degree by one") {
    for (const auto& name : all_fixture_names()) {
        Structure s = build_fixture(name);
        for (const auto& [bn, M] : testing::bimodules_of(s)) {
            WordBasis B = enumerate_words(*M, 0, 2);
            for (const auto& [j, blk] : B.blocks)
                for (const auto& w : blk)
                    for (const auto& [u, c] : differential(*M, w)) CHECK(hochschild_degree(*M, u) == j - 1);
        }
    }
}

TEST_CASE("the explicit diagonal formula agrees with the bimodule-table path") {
    for (const auto& name : all_fixture_names()) {
        Structure s = build_fixture(name);
        WordBasis B = enumerate_words(*s.diagonal, 0, 3);
        for (const auto& [j, blk] : B.blocks)
            for (const auto& w : blk) {
                INFO(name << " " << format_chain_word(*s.diagonal, w));
                CHECK(diagonal_differential_explicit(*s.algebra, w) == differential(*s.diagonal, w));
            }
    }
}

TEST_CASE("b_component covers exactly the terms of b") {
    Structure s = build_fixture("koszul_dga");
    const auto& M = *s.diagonal;
    WordBasis B = enumerate_words(M, 0, 3);
    for (const auto& [j, blk] : B.blocks)
        for (const auto& w : blk) {
            WordComb sum;
            const int n = static_cast<int>(w.size()) - 1;
            for (int l = 1; l <= n + 1; ++l)
                for (int i = 0; i <= n; ++i) sum.add(b_component(M, w, i, l), 1, s.ring);
            CHECK(sum == differential(M, w));
        }
}

TEST_CASE("induced chain maps commute with b, are additive and compose") {
    for (const auto& name : all_fixture_names()) {
        Structure s = build_fixture(name);
        std::vector<MorphismPtr> fs;
        for (const auto& [n, f] : s.morphisms) fs.push_back(f);
        for (const auto& [bn, M] : testing::bimodules_of(s))
            fs.push_back(std::make_shared<const BimoduleMorphism>(BimoduleMorphism::scalar(M, 3)));
        for (const auto& f : fs) {
            WordBasis B = enumerate_words(*f->source(), 0, 3);
            WordComb acc;
            for (const auto& [j, blk] : B.blocks)
                for (const auto& w : blk) {
                    WordComb lhs = differential(*f->target(), induced_chain_map(*f, w));
                    WordComb rhs = induced_chain_map(*f, differential(*f->source(), w));
                    INFO(name << " " << format_chain_word(*f->source(), w));
                    CHECK(lhs == rhs);
                    acc.add(w, static_cast<long>(w.size()), s.ring);
                }
            WordComb sum;
            for (const auto& [w, c] : acc) sum.add(induced_chain_map(*f, w), c, s.ring);
            CHECK(induced_chain_map(*f, acc) == sum);
        }
    }
}

TEST_CASE("identity and scalar morphisms induce the expected maps") {
    Structure s = build_fixture("exterior2");
    auto id = std::make_shared<const BimoduleMorphism>(BimoduleMorphism::identity(s.tensor));
    auto two = std::make_shared<const BimoduleMorphism>(BimoduleMorphism::scalar(s.tensor, 2));
    InducedChainMap four = compose_induced(InducedChainMap(two), InducedChainMap(two));
    WordBasis B = enumerate_words(*s.tensor, 0, 2);
    for (const auto& [j, blk] : B.blocks)
        for (const auto& w : blk) {
            WordComb x;
            x.add(w, 1, s.ring);
            CHECK(induced_chain_map(*id, w) == x);
            x.scale(4, s.ring);
            CHECK(four.apply(w) == x);
        }
    CHECK(four.degree() == 0);
    auto g = std::make_shared<const BimoduleMorphism>(BimoduleMorphism::identity(s.diagonal));
    CHECK_THROWS_AS(compose_induced(InducedChainMap(g), InducedChainMap(two)), Error);
}

TEST_CASE("the projection fixture induces a length-preserving map of degree 0") {
    Structure s = build_fixture("dual_numbers");
    const auto& f = *s.morphisms.at("projection");
    WordBasis B = enumerate_words(*s.diagonal, 0, 3);
    for (const auto& [j, blk] : B.blocks)
        for (const auto& w : blk)
            for (const auto& [u, c] : induced_chain_map(f, w)) {
                CHECK(u.size() == w.size());
                CHECK(hochschild_degree(*f.target(), u) == j);
            }
}

TEST_CASE("serial and parallel assembly produce the same matrices") {
    for (const auto& name : {"exterior2", "koszul_dga"}) {
        Structure s = build_fixture(name);
        HochschildChainComplex H(s.tensor, 3);
        ChainComplex par = H.complex(true), ser = H.complex(false);
        CHECK(par.dims == ser.dims);
        for (long j : par.degrees()) CHECK(par.d(j) == ser.d(j));
    }
}

TEST_CASE("strict assembly rejects words outside the target basis") {
    Structure s = build_fixture("exterior1");
    WordBasis B = enumerate_words(*s.diagonal, 0, 1);
    auto grow = [&](const Word& w) {
        WordComb x;
        Word u = w;
        u.push_back(0);
        u.push_back(0);
        x.add(u, 1, s.ring);
        return x;
    };
    try {
        assemble_chain_map(B, B, 2, grow, s.ring, true);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotFiltrationPreserving);
    }
    CHECK_NOTHROW(assemble_chain_map(B, B, 2, grow, s.ring, false));
}

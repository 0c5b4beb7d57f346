#pragma once

#include "ainf/bimodule.hpp"
#include "ainf/homology.hpp"

#include <functional>
#include <map>
#include <vector>

namespace ainf {

// Words are (m, a_1, ..., a_n): slot 0 indexes M, the rest index A.
long hochschild_degree(const AInfinityBimodule& M, const Word& w);
std::string format_chain_word(const AInfinityBimodule& M, const Word& w);

WordComb b_component(const AInfinityBimodule& M, const Word& w, int i, int l);
WordComb differential(const AInfinityBimodule& M, const Word& w);
WordComb differential(const AInfinityBimodule& M, const WordComb& x);

// b on CH_*(A; A[1]) written directly with mu_l (no bimodule tables).
WordComb diagonal_differential_explicit(const AInfinityAlgebra& A, const Word& w);

WordComb induced_chain_map(const BimoduleMorphism& f, const Word& w);
WordComb induced_chain_map(const BimoduleMorphism& f, const WordComb& x);

// A composite g_* o ... o f_* of induced chain maps.
class InducedChainMap {
public:
    explicit InducedChainMap(MorphismPtr f) : chain_{std::move(f)} {}

    const BimodulePtr& source() const { return chain_.front()->source(); }
    const BimodulePtr& target() const { return chain_.back()->target(); }
    long degree() const;  // -(sum of the morphism degrees)
    WordComb apply(const Word& w) const;
    WordComb apply(const WordComb& x) const;

    friend InducedChainMap compose_induced(const InducedChainMap& g, const InducedChainMap& f);

private:
    InducedChainMap() = default;
    std::vector<MorphismPtr> chain_;  // applied front to back
};

InducedChainMap compose_induced(const InducedChainMap& g, const InducedChainMap& f);

// Words of length min_len..max_len grouped by Hochschild degree, each block in
// (length, letters) order.
struct WordBasis {
    std::map<long, std::vector<Word>> blocks;
    std::map<Word, int> position;

    int dim(long j) const;
    const std::vector<Word>& block(long j) const;
};

WordBasis enumerate_words(const AInfinityBimodule& M, int min_len, int max_len);

using WordMap = std::function<WordComb(const Word&)>;

// Column c of block j is f(src.block(j)[c]) written in tgt.block(j + shift).
// strict: words outside tgt are an error; otherwise they are dropped (a projection).
ExactMatrix assemble_block(const WordBasis& src, long j, const WordBasis& tgt, long shift, const WordMap& f,
                           const Ring& ring, bool strict, bool parallel = true);
ChainComplex assemble_complex(const WordBasis& B, const WordMap& d, const Ring& ring, bool strict,
                              bool parallel = true);
ChainMap assemble_chain_map(const WordBasis& src, const WordBasis& tgt, long shift, const WordMap& f,
                            const Ring& ring, bool strict, bool parallel = true);

// F_L CH_*(A; M).
class HochschildChainComplex {
public:
    HochschildChainComplex(BimodulePtr M, int L);

    const BimodulePtr& bimodule() const { return M_; }
    int length_cutoff() const { return L_; }
    const WordBasis& basis() const { return basis_; }
    ChainComplex complex(bool parallel = true) const;
    ChainMap chain_map(const InducedChainMap& f, const HochschildChainComplex& target, bool parallel = true) const;

private:
    BimodulePtr M_;
    int L_;
    WordBasis basis_;
};

}  // namespace ainf

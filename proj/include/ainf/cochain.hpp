#pragma once

#include "ainf/hochschild.hpp"

#include <optional>

namespace ainf {

// f in CH^*(A;M): values[(m, a_1..a_n)] is the coefficient of m in f(a_1..a_n).
// The key layout matches a chain word, so dual-basis cochains and dual-basis
// functionals share keys.
struct HochschildCochain {
    BimodulePtr coefficients;
    long degree = 0;  // total degree; the arity-n part has internal degree degree - n
    WordComb values;

    bool is_zero() const { return values.is_zero(); }
    int max_arity() const;
    bool operator==(const HochschildCochain& o) const { return degree == o.degree && values == o.values; }
};

long cochain_degree(const AInfinityBimodule& M, const Word& key);  // mu(m) - sum ||a_q||
HochschildCochain make_cochain(BimodulePtr M, WordComb values, std::optional<long> degree = std::nullopt);
HochschildCochain dual_basis_cochain(BimodulePtr M, const Word& key);
std::vector<Word> cochain_keys(const AInfinityBimodule& M, int min_arity, int max_arity);
Vec evaluate(const HochschildCochain& f, const Word& inputs);
std::string format_cochain(const HochschildCochain& f);

struct CodifferentialResult {
    HochschildCochain value;
    bool truncated = false;  // some component of arity > L was nonzero and dropped
};

// Table-driven: walks the operation tables instead of all input words.
CodifferentialResult codifferential(const HochschildCochain& f, int L);
// Reference path: evaluates the defining formula on every input word of arity <= L.
HochschildCochain codifferential_pointwise(const HochschildCochain& f, int L);

// Functional on CH_*(A;M): values[w] is its value on the basis word w.
struct DualChain {
    BimodulePtr bimodule;
    WordComb values;
};

// dual must be dual_bimodule(*F.bimodule) (basis order is shared).
HochschildCochain duality_iso(const DualChain& F, const BimodulePtr& dual);
DualChain duality_inverse(const HochschildCochain& c, const BimodulePtr& M);
// F o b, on words of length <= L.
DualChain transpose_differential(const DualChain& F, int L);
// G o f_*, on source words of length <= L.
DualChain transpose_chain_map(const DualChain& G, const InducedChainMap& f, int L);

// f^* = phi_M o (f_*)^* o phi_N^{-1}: cochains over N^{-*} to cochains over M^{-*}.
HochschildCochain pullback(const InducedChainMap& f, const BimodulePtr& source_dual, const BimodulePtr& target,
                           const HochschildCochain& c, int L);

// The family f_{r,s}(a_1..a_r, a_0, ..) = f_{r+s+1}(a_1..a_r, a_0, ..) as a morphism A[1] -> M.
// Throws NotACocycle unless beta(f) vanishes through arity L.
BimoduleMorphism cocycle_to_morphism(const HochschildCochain& f, const BimodulePtr& diagonal, int L);

// CH_*(A) and CH^*(A): the diagonal complexes with degrees raised by one.
struct RegradedDiagonal {
    BimodulePtr diagonal;
    long chain_degree(const Word& w) const;    // n - sum mu(a_j)
    long cochain_degree(const Word& key) const;  // degree in CH^*(A)
};
RegradedDiagonal regrade_diagonal(const AlgebraPtr& A);
// The CH^*(A) codifferential written with (deg f - 1), evaluated pointwise.
HochschildCochain regraded_codifferential(const HochschildCochain& f, long cup_degree, int L);

}  // namespace ainf

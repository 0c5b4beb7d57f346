#pragma once

#include "ainf/hochschild.hpp"

#include <string>
#include <vector>

namespace ainf {

// Length-p part of x.
WordComb projection(int p, const WordComb& x);

// The length-preserving part of b: mu^M_{0,0} on the coefficient and mu_1 on the letters.
WordComb b_one(const AInfinityBimodule& M, const Word& w);

// Column p of E^0 indexed by Hochschild degree.  page0 projects the full b
// (quotient F_p / F_{p-1}); page0_direct uses b_one.
ChainComplex page0(const AInfinityBimodule& M, int p);
ChainComplex page0_direct(const AInfinityBimodule& M, int p);

// E^1_{p,-q}: homology of column p at Hochschild degree p - q.
HomologySummary page1(const AInfinityBimodule& M, int p, long q);
HomologySummary page1_direct(const AInfinityBimodule& M, int p, long q);

// (m, a_1..a_p) -> (-1)^{d deg} f_{0,0}(m) (x) a_1..a_p
WordComb f_zero(const BimoduleMorphism& f, const Word& w);

struct ComparisonVerdict {
    bool hypothesis = false;  // [f_0] iso on every E^1 column p <= m
    bool conclusion = false;  // [f_*] iso on H_*(F_m)
    bool witnessed = false;   // both
    std::vector<std::string> details;

    std::string describe() const;
};

ComparisonVerdict comparison_check(const BimoduleMorphism& f, int m);

// Z^r_p = {x in F_p : b x in F_{p-r}}; for r > p this is ker b on F_p.
bool in_filtration(const WordComb& x, int p);
bool in_z_r(const AInfinityBimodule& M, const WordComb& x, int p, int r);
bool weak_convergence_check(const AInfinityBimodule& M, int L);

}  // namespace ainf

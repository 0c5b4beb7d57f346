#pragma once

#include "ainf/cochain.hpp"

namespace ainf {

// Cochains here have diagonal coefficients; their CH^*(A) degree is degree + 1.
inline long cup_degree(const HochschildCochain& f) { return f.degree + 1; }

// One term f u_{k,j1,j2} g evaluated on a word of length m+n+k, where m and n
// are the arities of the components of f and g used.  RangeViolation outside
// 1 <= j1 <= n+k, j1+m <= j2 <= m+k+1.
Vec cup_component(const HochschildCochain& f, int m, const HochschildCochain& g, int n, int k, int j1, int j2,
                  const Word& word);

struct CupResult {
    HochschildCochain value;
    bool truncated = false;
};

CupResult cup(const HochschildCochain& f, const HochschildCochain& g, int L);

}  // namespace ainf

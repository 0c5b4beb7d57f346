#pragma once

#include "ainf/fixtures.hpp"
#include "oracles.hpp"

#include <string>
#include <vector>

namespace testing {

inline oracle::Sparse to_sparse(const ainf::WordComb& x) {
    oracle::Sparse out;
    for (const auto& [w, c] : x) out[w] = c.get_si();
    return out;
}

inline ainf::WordComb from_sparse(const oracle::Sparse& s, const ainf::Ring& ring) {
    ainf::WordComb out;
    for (const auto& [w, c] : s) out.add(w, c, ring);
    return out;
}

// The three constructions plus the user-defined bimodules of a fixture.
inline std::vector<std::pair<std::string, ainf::BimodulePtr>> bimodules_of(const ainf::Structure& s) {
    std::vector<std::pair<std::string, ainf::BimodulePtr>> v{
        {"diagonal", s.diagonal}, {"tensor", s.tensor}, {"dual", s.dual}};
    for (const auto& [n, M] : s.bimodules) v.push_back({n, M});
    return v;
}

inline ainf::WordComb keep_arity_at_most(const ainf::WordComb& x, int n) {
    ainf::WordComb out;
    for (const auto& [w, c] : x)
        if (static_cast<int>(w.size()) - 1 <= n) out.add(w, c, ainf::Ring::integers());
    return out;
}

inline const ainf::Ring& z2() {
    static const ainf::Ring r = ainf::Ring::prime_field(2);
    return r;
}

}  // namespace testing

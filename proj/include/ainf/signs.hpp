#pragma once

#include <span>

namespace ainf {

// Degrees are plain degrees mu(a_q); indices are 1-based.
long maltese(std::span<const int> degrees, int i, int j);
long maltese0(int m_degree, std::span<const int> degrees, int i);
// *_{i-1} = maltese0(i-1) * maltese(i, n)
long star_sign(int m_degree, std::span<const int> degrees, int i);

}  // namespace ainf

#include "ainf/signs.hpp"

#include "ainf/errors.hpp"

#include <string>

namespace ainf {

long maltese(std::span<const int> degrees, int i, int j) {
    const int n = static_cast<int>(degrees.size());
    if (i < 1 || j > n)
        throw Error(ErrorCode::IndexOutOfRange,
                    "maltese(" + std::to_string(i) + "," + std::to_string(j) + ") on " + std::to_string(n) + " slots");
    long sum = 0;
    for (int q = i; q <= j; ++q) sum += degrees[q - 1] - 1;
    return sum;
}

long maltese0(int m_degree, std::span<const int> degrees, int i) {
    if (i < -1 || i > static_cast<int>(degrees.size()))
        throw Error(ErrorCode::IndexOutOfRange, "maltese0 index " + std::to_string(i));
    if (i == -1) return 0;
    return m_degree + maltese(degrees, 1, i);
}

long star_sign(int m_degree, std::span<const int> degrees, int i) {
    const int n = static_cast<int>(degrees.size());
    if (i - 1 < 0 || i - 1 > n) throw Error(ErrorCode::IndexOutOfRange, "star_sign index " + std::to_string(i));
    return maltese0(m_degree, degrees, i - 1) * maltese(degrees, i, n);
}

}  // namespace ainf

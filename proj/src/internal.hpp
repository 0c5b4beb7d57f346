#pragma once

// Shared helpers for the compute modules; not installed.

#include "ainf/multilinear.hpp"
#include "ainf/parallel.hpp"

#include <atomic>
#include <cstdint>
#include <limits>
#include <span>

namespace ainf::detail {

inline Word slice(const Word& w, int pos, int len) { return Word(w.begin() + pos, w.begin() + pos + len); }

// Replace w[pos, pos+inner.arity) by inner(...) and feed each resulting word to outer.
inline void compose_into(const MultilinearOp& outer, const MultilinearOp& inner, const Word& w, int pos,
                         const Scalar& coeff, Vec& out, const Ring& ring) {
    const Vec* iv = inner.lookup(slice(w, pos, inner.arity()));
    if (!iv) return;
    Word w2;
    w2.reserve(w.size() - inner.arity() + 1);
    w2.insert(w2.end(), w.begin(), w.begin() + pos);
    w2.push_back(0);
    w2.insert(w2.end(), w.begin() + pos + inner.arity(), w.end());
    for (const auto& [o, c] : *iv) {
        w2[pos] = o;
        if (const Vec* ov = outer.lookup(w2)) out.add(*ov, coeff * c, ring);
    }
}

inline std::vector<int> degrees_of(const GradedModule& m, std::span<const int> letters) {
    std::vector<int> d(letters.size());
    for (std::size_t i = 0; i < letters.size(); ++i) d[i] = m.degree(letters[i]);
    return d;
}

// Smallest index k < count with pred(k) true, or -1.  Runs under OpenMP.
template <class Pred>
std::int64_t first_true(std::uint64_t count, Pred&& pred) {
    const auto n = static_cast<std::int64_t>(count);
    std::atomic<std::int64_t> best{std::numeric_limits<std::int64_t>::max()};
#pragma omp parallel for schedule(dynamic, 16) num_threads(worker_threads())
    for (std::int64_t k = 0; k < n; ++k) {
        if (k >= best.load(std::memory_order_relaxed)) continue;
        if (pred(k)) {
            auto cur = best.load();
            while (k < cur && !best.compare_exchange_weak(cur, k)) {
            }
        }
    }
    auto b = best.load();
    return b == std::numeric_limits<std::int64_t>::max() ? -1 : b;
}

template <class Pred>
std::int64_t first_true_serial(std::uint64_t count, Pred&& pred) {
    for (std::uint64_t k = 0; k < count; ++k)
        if (pred(static_cast<std::int64_t>(k))) return static_cast<std::int64_t>(k);
    return -1;
}

}  // namespace ainf::detail

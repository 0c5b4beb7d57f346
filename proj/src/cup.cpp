#include "ainf/cup.hpp"

#include "internal.hpp"

namespace ainf {

namespace {

long reduced_prefix(const GradedModule& A, const Word& a, int count) {
    long s = 0;
    for (int q = 0; q < count; ++q) s += A.degree(a[q]) - 1;
    return s;
}

long mho(long deg_f, long deg_g, const GradedModule& A, const Word& a, int j1, int j2) {
    return (deg_f - 1) * reduced_prefix(A, a, j1 - 1) + (deg_g - 1) * (reduced_prefix(A, a, j2 - 1) + deg_f);
}

}  // namespace

Vec cup_component(const HochschildCochain& f, int m, const HochschildCochain& g, int n, int k, int j1, int j2,
                  const Word& a) {
    const auto& A = f.coefficients->A();
    const auto& ring = A.ring();
    if (k < 0 || j1 < 1 || j1 > k + 1 || j2 < j1 + m || j2 > m + k + 1 || j2 + n - 1 > m + n + k)
        throw Error(ErrorCode::RangeViolation, "k=" + std::to_string(k) + " j1=" + std::to_string(j1) +
                                                   " j2=" + std::to_string(j2) + " for arities " + std::to_string(m) +
                                                   "," + std::to_string(n));
    if (static_cast<int>(a.size()) != m + n + k)
        throw Error(ErrorCode::ArityMismatch, "word length " + std::to_string(a.size()));
    Vec out;
    const auto* mu = A.op(k + 2);
    if (!mu) return out;
    const Vec fv = evaluate(f, detail::slice(a, j1 - 1, m));
    const Vec gv = evaluate(g, detail::slice(a, j2 - 1, n));
    if (fv.is_zero() || gv.is_zero()) return out;
    const long e = mho(cup_degree(f), cup_degree(g), *A.module(), a, j1, j2);
    const int p = j1 - 1, q = j2 - m;
    Word in(a.begin(), a.begin() + p);
    in.push_back(0);
    in.insert(in.end(), a.begin() + (j1 - 1 + m), a.begin() + (j2 - 1));
    in.push_back(0);
    in.insert(in.end(), a.begin() + (j2 - 1 + n), a.end());
    for (const auto& [u, cu] : fv)
        for (const auto& [v, cv] : gv) {
            in[p] = u;
            in[q] = v;
            if (const Vec* r = mu->lookup(in)) out.add(*r, cu * cv * sign_of(e), ring);
        }
    return out;
}

CupResult cup(const HochschildCochain& f, const HochschildCochain& g, int L) {
    const auto& A = f.coefficients->A();
    const auto& ring = A.ring();
    const auto& Adeg = *A.module();
    const long df = cup_degree(f), dg = cup_degree(g);
    WordComb kept, dropped;
    for (const auto& [kf, cf] : f.values) {
        const int m = static_cast<int>(kf.size()) - 1;
        for (const auto& [kg, cg] : g.values) {
            const int n = static_cast<int>(kg.size()) - 1;
            for (const auto& [arity, mu] : A.operations()) {
                const int k = arity - 2;
                if (k < 0) continue;
                WordComb& out = m + n + k > L ? dropped : kept;
                for (int j1 = 1; j1 <= k + 1; ++j1)
                    for (int j2 = j1 + m; j2 <= m + k + 1; ++j2) {
                        const int p = j1 - 1, q = j2 - m;
                        for (const auto& [x, v] : mu.table()) {
                            if (x[p] != kf[0] || x[q] != kg[0]) continue;
                            Word key{0};
                            key.insert(key.end(), x.begin(), x.begin() + p);
                            key.insert(key.end(), kf.begin() + 1, kf.end());
                            key.insert(key.end(), x.begin() + p + 1, x.begin() + q);
                            key.insert(key.end(), kg.begin() + 1, kg.end());
                            key.insert(key.end(), x.begin() + q + 1, x.end());
                            const Word a(key.begin() + 1, key.end());
                            const long e = mho(df, dg, Adeg, a, j1, j2);
                            for (const auto& [o, c] : v) {
                                key[0] = o;
                                out.add(key, cf * cg * c * sign_of(e), ring);
                            }
                        }
                    }
            }
        }
    }
    CupResult res;
    res.value = make_cochain(f.coefficients, std::move(kept), f.degree + g.degree + 1);
    res.truncated = !dropped.is_zero();
    return res;
}

}  // namespace ainf

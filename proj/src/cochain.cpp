#include "ainf/cochain.hpp"

#include "ainf/signs.hpp"
#include "internal.hpp"

namespace ainf {

namespace {

std::vector<int> input_degrees(const GradedModule& A, const Word& key) {
    std::vector<int> d(key.size() - 1);
    for (std::size_t q = 1; q < key.size(); ++q) d[q - 1] = A.degree(key[q]);
    return d;
}

long reduced_sum(const GradedModule& A, const Word& w, std::size_t from, std::size_t to) {
    long s = 0;
    for (std::size_t q = from; q < to; ++q) s += A.degree(w[q]) - 1;
    return s;
}

std::map<Word, Vec> by_inputs(const HochschildCochain& f) {
    std::map<Word, Vec> t;
    const auto& ring = f.coefficients->ring();
    for (const auto& [key, c] : f.values) t[Word(key.begin() + 1, key.end())].add(key[0], c, ring);
    return t;
}

}  // namespace

int HochschildCochain::max_arity() const {
    int n = -1;
    for (const auto& [k, c] : values) n = std::max(n, static_cast<int>(k.size()) - 1);
    return n;
}

long cochain_degree(const AInfinityBimodule& M, const Word& key) {
    return M.module()->degree(key[0]) - reduced_sum(*M.A().module(), key, 1, key.size());
}

HochschildCochain make_cochain(BimodulePtr M, WordComb values, std::optional<long> degree) {
    HochschildCochain f;
    f.coefficients = std::move(M);
    for (const auto& [key, c] : values) {
        const long d = cochain_degree(*f.coefficients, key);
        if (!degree) degree = d;
        else if (*degree != d)
            throw Error(ErrorCode::Inhomogeneous, "cochain mixes degrees " + std::to_string(*degree) + " and " +
                                                      std::to_string(d));
    }
    f.degree = degree.value_or(0);
    f.values = std::move(values);
    return f;
}

HochschildCochain dual_basis_cochain(BimodulePtr M, const Word& key) {
    WordComb v;
    v.add(key, 1, M->ring());
    return make_cochain(std::move(M), std::move(v));
}

std::vector<Word> cochain_keys(const AInfinityBimodule& M, int min_arity, int max_arity) {
    std::vector<Word> keys;
    for (int n = min_arity; n <= max_arity; ++n) {
        std::vector<int> sizes(n + 1, M.A().module()->size());
        sizes[0] = M.module()->size();
        WordSpace space(sizes);
        for (std::uint64_t k = 0; k < space.count(); ++k) keys.push_back(space.at(k));
    }
    return keys;
}

Vec evaluate(const HochschildCochain& f, const Word& inputs) {
    Vec out;
    const auto& ring = f.coefficients->ring();
    for (int m = 0; m < f.coefficients->module()->size(); ++m) {
        Word key{m};
        key.insert(key.end(), inputs.begin(), inputs.end());
        out.add(m, f.values.coefficient(key), ring);
    }
    return out;
}

std::string format_cochain(const HochschildCochain& f) {
    if (f.is_zero()) return "0";
    const auto& M = *f.coefficients;
    std::string s;
    for (const auto& [key, c] : f.values) {
        if (!s.empty()) s += " + ";
        s += c.get_str() + "*[";
        for (std::size_t q = 1; q < key.size(); ++q) s += (q > 1 ? "," : "") + M.A().module()->name(key[q]);
        s += " -> " + M.module()->name(key[0]) + "]";
    }
    return s;
}

CodifferentialResult codifferential(const HochschildCochain& f, int L) {
    const auto& M = *f.coefficients;
    const auto& A = M.A();
    const auto& ring = M.ring();
    const auto& Adeg = *A.module();
    WordComb kept, dropped;
    for (const auto& [key, c] : f.values) {
        const int n = static_cast<int>(key.size()) - 1;
        const int m = key[0];
        for (const auto& [k, mu] : A.operations()) {
            const int l = k - 1;
            WordComb& out = n + l > L ? dropped : kept;
            for (const auto& [x, v] : mu.table())
                for (int i = 1; i <= n; ++i) {
                    const Scalar cv = v.coefficient(key[i]);
                    if (cv == 0) continue;
                    Word nk(key.begin(), key.begin() + i);
                    nk.insert(nk.end(), x.begin(), x.end());
                    nk.insert(nk.end(), key.begin() + i + 1, key.end());
                    out.add(nk, c * cv * sign_of(reduced_sum(Adeg, key, 1, i)), ring);
                }
        }
        for (const auto& [rs, op] : M.operations()) {
            const int r = rs.first, l = rs.first + rs.second;
            WordComb& out = n + l > L ? dropped : kept;
            for (const auto& [w, v] : op.table()) {
                if (w[r] != m) continue;
                Word nk{0};
                nk.insert(nk.end(), w.begin(), w.begin() + r);
                nk.insert(nk.end(), key.begin() + 1, key.end());
                nk.insert(nk.end(), w.begin() + r + 1, w.end());
                const long e = f.degree * (reduced_sum(Adeg, w, 0, r) + 1) + 1;
                for (const auto& [o, co] : v) {
                    nk[0] = o;
                    out.add(nk, c * co * sign_of(e), ring);
                }
            }
        }
    }
    CodifferentialResult res;
    res.value = make_cochain(f.coefficients, std::move(kept), f.degree + 1);
    res.truncated = !dropped.is_zero();
    return res;
}

HochschildCochain codifferential_pointwise(const HochschildCochain& f, int L) {
    const auto& M = *f.coefficients;
    const auto& A = M.A();
    const auto& ring = M.ring();
    const auto& Adeg = *A.module();
    const auto table = by_inputs(f);
    auto fval = [&](const Word& in) -> const Vec* {
        auto it = table.find(in);
        return it == table.end() ? nullptr : &it->second;
    };
    WordComb out;
    for (int N = 0; N <= L; ++N) {
        WordSpace space(std::vector<int>(N, Adeg.size()));
        for (std::uint64_t k = 0; k < space.count(); ++k) {
            const Word a = space.at(k);
            Vec val;
            for (const auto& [kk, mu] : A.operations()) {
                const int l = kk - 1, n = N - l;
                for (int i = 1; i <= n; ++i) {
                    const Vec* inner = mu.lookup(detail::slice(a, i - 1, l + 1));
                    if (!inner) continue;
                    Word in(a.begin(), a.begin() + (i - 1));
                    in.push_back(0);
                    in.insert(in.end(), a.begin() + (i + l), a.end());
                    long e = 0;
                    for (int q = 0; q < i - 1; ++q) e += Adeg.degree(a[q]) - 1;
                    for (const auto& [o, c] : *inner) {
                        in[i - 1] = o;
                        if (const Vec* fv = fval(in)) val.add(*fv, c * sign_of(e), ring);
                    }
                }
            }
            for (const auto& [rs, op] : M.operations()) {
                const int r = rs.first, l = rs.first + rs.second, n = N - l;
                if (n < 0) continue;
                const Vec* fv = fval(detail::slice(a, r, n));
                if (!fv) continue;
                long e = 0;
                for (int q = 0; q < r; ++q) e += Adeg.degree(a[q]) - 1;
                e = f.degree * (e + 1) + 1;
                Word in(a.begin(), a.begin() + r);
                in.push_back(0);
                in.insert(in.end(), a.begin() + r + n, a.end());
                for (const auto& [mm, cf] : *fv) {
                    in[r] = mm;
                    if (const Vec* ov = op.lookup(in)) val.add(*ov, cf * sign_of(e), ring);
                }
            }
            for (const auto& [o, c] : val) {
                Word key{o};
                key.insert(key.end(), a.begin(), a.end());
                out.add(key, c, ring);
            }
        }
    }
    return make_cochain(f.coefficients, std::move(out), f.degree + 1);
}

HochschildCochain duality_iso(const DualChain& F, const BimodulePtr& dual) {
    const auto& M = *F.bimodule;
    WordComb out;
    for (const auto& [w, c] : F.values) {
        const auto deg = input_degrees(*M.A().module(), w);
        const long e = static_cast<long>(M.module()->degree(w[0])) * maltese(deg, 1, static_cast<int>(deg.size()));
        out.add(w, c * sign_of(e), M.ring());
    }
    return make_cochain(dual, std::move(out));
}

DualChain duality_inverse(const HochschildCochain& c, const BimodulePtr& M) {
    DualChain F{M, {}};
    for (const auto& [w, x] : c.values) {
        const auto deg = input_degrees(*M->A().module(), w);
        const long e = static_cast<long>(M->module()->degree(w[0])) * maltese(deg, 1, static_cast<int>(deg.size()));
        F.values.add(w, x * sign_of(e), M->ring());
    }
    return F;
}

DualChain transpose_differential(const DualChain& F, int L) {
    const auto& M = *F.bimodule;
    DualChain out{F.bimodule, {}};
    WordBasis B = enumerate_words(M, 0, L);
    for (const auto& [j, blk] : B.blocks)
        for (const auto& w : blk) {
            Scalar s = 0;
            for (const auto& [u, c] : differential(M, w)) s += c * F.values.coefficient(u);
            out.values.add(w, s, M.ring());
        }
    return out;
}

DualChain transpose_chain_map(const DualChain& G, const InducedChainMap& f, int L) {
    const auto& M = *f.source();
    DualChain out{f.source(), {}};
    WordBasis B = enumerate_words(M, 0, L);
    for (const auto& [j, blk] : B.blocks)
        for (const auto& w : blk) {
            Scalar s = 0;
            for (const auto& [u, c] : f.apply(w)) s += c * G.values.coefficient(u);
            out.values.add(w, s, M.ring());
        }
    return out;
}

HochschildCochain pullback(const InducedChainMap& f, const BimodulePtr& source_dual, const BimodulePtr& target,
                           const HochschildCochain& c, int L) {
    if (!(*target->module() == *f.target()->module()))
        throw Error(ErrorCode::ModuleMismatch, "cochain coefficients do not match the morphism target");
    DualChain G = duality_inverse(c, target);
    DualChain H = transpose_chain_map(G, f, L);
    HochschildCochain out = duality_iso(H, source_dual);
    if (out.is_zero()) out.degree = c.degree - f.degree();
    return out;
}

BimoduleMorphism cocycle_to_morphism(const HochschildCochain& f, const BimodulePtr& diagonal, int L) {
    auto beta = codifferential(f, L);
    if (!beta.value.is_zero())
        throw Error(ErrorCode::NotACocycle, "beta(f) = " + format_cochain(beta.value));
    BimoduleMorphism g(diagonal, f.coefficients, static_cast<int>(f.degree));
    std::map<RS, MultilinearOp> maps;
    for (const auto& [key, c] : f.values) {
        const int N = static_cast<int>(key.size()) - 1;
        Word in(key.begin() + 1, key.end());
        for (int r = 0; r < N; ++r) {
            const int s = N - 1 - r;
            auto it = maps.find({r, s});
            if (it == maps.end()) it = maps.emplace(RS{r, s}, g.make_map(r, s)).first;
            it->second.add(in, key[0], c, f.coefficients->ring());
        }
    }
    for (auto& [rs, op] : maps) g.set_map(rs.first, rs.second, std::move(op));
    return g;
}

long RegradedDiagonal::chain_degree(const Word& w) const {
    const auto& A = *diagonal->A().module();
    long d = static_cast<long>(w.size()) - 1;
    for (int x : w) d -= A.degree(x);
    return d;
}

long RegradedDiagonal::cochain_degree(const Word& key) const { return ainf::cochain_degree(*diagonal, key) + 1; }

RegradedDiagonal regrade_diagonal(const AlgebraPtr& A) {
    return RegradedDiagonal{std::make_shared<const AInfinityBimodule>(diagonal_bimodule(A))};
}

HochschildCochain regraded_codifferential(const HochschildCochain& f, long cup_degree, int L) {
    const auto& A = f.coefficients->A();
    const auto& ring = A.ring();
    const auto& Adeg = *A.module();
    const auto table = by_inputs(f);
    WordComb out;
    for (int N = 0; N <= L; ++N) {
        WordSpace space(std::vector<int>(N, Adeg.size()));
        for (std::uint64_t k = 0; k < space.count(); ++k) {
            const Word a = space.at(k);
            Vec val;
            for (const auto& [kk, mu] : A.operations()) {
                const int l = kk - 1;
                for (const auto& [in, fv] : table) {
                    const int n = static_cast<int>(in.size());
                    if (n + l != N) continue;
                    // f(.., mu_{l+1}(a_i..a_{i+l}), ..)
                    for (int i = 1; i <= n; ++i) {
                        bool match = true;
                        for (int q = 0; q < n && match; ++q)
                            if (q != i - 1) match = in[q] == a[q < i - 1 ? q : q + l];
                        if (!match) continue;
                        const Vec* iv = mu.lookup(detail::slice(a, i - 1, l + 1));
                        if (!iv) continue;
                        const Scalar c = iv->coefficient(in[i - 1]);
                        val.add(fv, c * sign_of(reduced_sum(Adeg, a, 0, i - 1)), ring);
                    }
                    // mu_{l+1}(a_1..a_{i-1}, f(a_i..a_{n+i-1}), ..)
                    for (int i = 1; i <= l + 1; ++i) {
                        if (detail::slice(a, i - 1, n) != in) continue;
                        const long e = (cup_degree - 1) * (reduced_sum(Adeg, a, 0, i - 1) + 1) + 1;
                        Word w(a.begin(), a.begin() + (i - 1));
                        w.push_back(0);
                        w.insert(w.end(), a.begin() + (i - 1 + n), a.end());
                        for (const auto& [o, c] : fv) {
                            w[i - 1] = o;
                            if (const Vec* ov = mu.lookup(w)) val.add(*ov, c * sign_of(e), ring);
                        }
                    }
                }
            }
            for (const auto& [o, c] : val) {
                Word key{o};
                key.insert(key.end(), a.begin(), a.end());
                out.add(key, c, ring);
            }
        }
    }
    return make_cochain(f.coefficients, std::move(out), cup_degree);
}

}  // namespace ainf

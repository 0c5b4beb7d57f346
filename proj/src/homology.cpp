#include "ainf/homology.hpp"

#include "ainf/errors.hpp"

#include <algorithm>
#include <utility>

namespace ainf {

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool ExactMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Scalar& x) { return x == 0; });
}

std::size_t ExactMatrix::nonzeros() const {
    return static_cast<std::size_t>(std::count_if(a_.begin(), a_.end(), [](const Scalar& x) { return x != 0; }));
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b, const Ring& ring) {
    if (a.cols() != b.rows()) throw Error(ErrorCode::ArityMismatch, "matrix shapes do not compose");
    ExactMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Scalar& x = a.at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < b.cols(); ++j)
                if (b.at(k, j) != 0) mpz_addmul(c.at(i, j).get_mpz_t(), x.get_mpz_t(), b.at(k, j).get_mpz_t());
        }
    if (ring.is_field())
        for (int i = 0; i < c.rows(); ++i)
            for (int j = 0; j < c.cols(); ++j) ring.reduce(c.at(i, j));
    return c;
}

std::vector<Scalar> multiply(const ExactMatrix& a, const std::vector<Scalar>& x, const Ring& ring) {
    std::vector<Scalar> y(a.rows());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k)
            if (x[k] != 0 && a.at(i, k) != 0) mpz_addmul(y[i].get_mpz_t(), a.at(i, k).get_mpz_t(), x[k].get_mpz_t());
        ring.reduce(y[i]);
    }
    return y;
}

namespace {

class Reducer {
public:
    Reducer(const ExactMatrix& M, const Ring& ring, bool transforms)
        : ring_(ring), tr_(transforms), D(M), m_(M.rows()), n_(M.cols()) {
        for (int i = 0; i < m_; ++i)
            for (int j = 0; j < n_; ++j) ring_.reduce(D.at(i, j));
        if (tr_) {
            U = U_inv = ExactMatrix::identity(m_);
            V = V_inv = ExactMatrix::identity(n_);
        }
    }

    void run() {
        const int lim = std::min(m_, n_);
        int t = 0;
        for (; t < lim; ++t) {
            auto [pi, pj] = min_entry(t);
            if (pi < 0) break;
            swap_rows(t, pi);
            swap_cols(t, pj);
            for (;;) {
                bool clean = true;
                for (int i = t + 1; i < m_; ++i)
                    if (D.at(i, t) != 0) {
                        row_addmul(i, t, -ring_.quotient(D.at(i, t), D.at(t, t)));
                        if (D.at(i, t) != 0) clean = false;
                    }
                for (int j = t + 1; j < n_; ++j)
                    if (D.at(t, j) != 0) {
                        col_addmul(j, t, -ring_.quotient(D.at(t, j), D.at(t, t)));
                        if (D.at(t, j) != 0) clean = false;
                    }
                if (!clean) {
                    repivot(t);
                    continue;
                }
                if (ring_.is_field()) break;
                int bad = -1;
                for (int i = t + 1; i < m_ && bad < 0; ++i)
                    for (int j = t + 1; j < n_; ++j)
                        if (D.at(i, j) != 0 && !mpz_divisible_p(D.at(i, j).get_mpz_t(), D.at(t, t).get_mpz_t())) {
                            bad = i;
                            break;
                        }
                if (bad < 0) break;
                row_addmul(t, bad, 1);
            }
            if (ring_.is_field()) row_scale(t, ring_.inverse(D.at(t, t)));
            else if (D.at(t, t) < 0) row_scale(t, -1);
        }
        rank = t;
    }

    const Ring& ring_;
    bool tr_;
    ExactMatrix D, U, V, U_inv, V_inv;
    int m_, n_;
    int rank = 0;

private:
    std::pair<int, int> min_entry(int t) const {
        int bi = -1, bj = -1;
        Scalar best;
        for (int i = t; i < m_; ++i)
            for (int j = t; j < n_; ++j) {
                const Scalar& x = D.at(i, j);
                if (x == 0) continue;
                if (bi < 0 || mpz_cmpabs(x.get_mpz_t(), best.get_mpz_t()) < 0) {
                    bi = i, bj = j, best = x;
                    if (best == 1 || best == -1) return {bi, bj};
                }
            }
        return {bi, bj};
    }

    void repivot(int t) {
        int bi = t, bj = t;
        Scalar best = D.at(t, t);
        auto consider = [&](int i, int j) {
            const Scalar& x = D.at(i, j);
            if (x != 0 && (best == 0 || mpz_cmpabs(x.get_mpz_t(), best.get_mpz_t()) < 0)) bi = i, bj = j, best = x;
        };
        for (int i = t; i < m_; ++i) consider(i, t);
        for (int j = t; j < n_; ++j) consider(t, j);
        swap_rows(t, bi);
        swap_cols(t, bj);
    }

    static void row_op(ExactMatrix& A, int dst, int src, const Scalar& q, const Ring& ring) {
        for (int j = 0; j < A.cols(); ++j)
            if (A.at(src, j) != 0) {
                mpz_addmul(A.at(dst, j).get_mpz_t(), q.get_mpz_t(), A.at(src, j).get_mpz_t());
                ring.reduce(A.at(dst, j));
            }
    }
    static void col_op(ExactMatrix& A, int dst, int src, const Scalar& q, const Ring& ring) {
        for (int i = 0; i < A.rows(); ++i)
            if (A.at(i, src) != 0) {
                mpz_addmul(A.at(i, dst).get_mpz_t(), q.get_mpz_t(), A.at(i, src).get_mpz_t());
                ring.reduce(A.at(i, dst));
            }
    }

    // row_dst += q * row_src
    void row_addmul(int dst, int src, const Scalar& q) {
        row_op(D, dst, src, q, ring_);
        if (tr_) {
            row_op(U, dst, src, q, ring_);
            col_op(U_inv, src, dst, -q, ring_);
        }
    }
    // col_dst += q * col_src
    void col_addmul(int dst, int src, const Scalar& q) {
        col_op(D, dst, src, q, ring_);
        if (tr_) {
            col_op(V, dst, src, q, ring_);
            row_op(V_inv, src, dst, -q, ring_);
        }
    }
    void row_scale(int t, const Scalar& u) {
        auto scale_row = [&](ExactMatrix& A) {
            for (int j = 0; j < A.cols(); ++j) {
                A.at(t, j) *= u;
                ring_.reduce(A.at(t, j));
            }
        };
        scale_row(D);
        if (tr_) {
            scale_row(U);
            const Scalar inv = ring_.inverse(u);
            for (int i = 0; i < U_inv.rows(); ++i) {
                U_inv.at(i, t) *= inv;
                ring_.reduce(U_inv.at(i, t));
            }
        }
    }
    static void swap_r(ExactMatrix& A, int a, int b) {
        for (int j = 0; j < A.cols(); ++j) std::swap(A.at(a, j), A.at(b, j));
    }
    static void swap_c(ExactMatrix& A, int a, int b) {
        for (int i = 0; i < A.rows(); ++i) std::swap(A.at(i, a), A.at(i, b));
    }
    void swap_rows(int a, int b) {
        if (a == b) return;
        swap_r(D, a, b);
        if (tr_) swap_r(U, a, b), swap_c(U_inv, a, b);
    }
    void swap_cols(int a, int b) {
        if (a == b) return;
        swap_c(D, a, b);
        if (tr_) swap_c(V, a, b), swap_r(V_inv, a, b);
    }
};

}  // namespace

SmithForm smith_normal_form(const ExactMatrix& M, const Ring& ring, bool transforms) {
    Reducer red(M, ring, transforms);
    red.run();
    SmithForm S;
    S.rank = red.rank;
    for (int t = 0; t < red.rank; ++t) S.diagonal.push_back(red.D.at(t, t));
    S.D = std::move(red.D);
    S.U = std::move(red.U);
    S.V = std::move(red.V);
    S.U_inv = std::move(red.U_inv);
    S.V_inv = std::move(red.V_inv);
    return S;
}

bool verify_smith(const ExactMatrix& M, const SmithForm& S, const Ring& ring) {
    if (!(multiply(multiply(S.U, M, ring), S.V, ring) == S.D)) return false;
    if (!(multiply(S.U, S.U_inv, ring) == ExactMatrix::identity(M.rows()))) return false;
    if (!(multiply(S.V, S.V_inv, ring) == ExactMatrix::identity(M.cols()))) return false;
    for (int i = 0; i < S.D.rows(); ++i)
        for (int j = 0; j < S.D.cols(); ++j) {
            const Scalar& x = S.D.at(i, j);
            if (i != j || i >= S.rank) {
                if (x != 0) return false;
            } else if (x <= 0) {
                return false;
            }
        }
    for (int t = 0; t + 1 < S.rank; ++t)
        if (!mpz_divisible_p(S.diagonal[t + 1].get_mpz_t(), S.diagonal[t].get_mpz_t())) return false;
    return true;
}

int matrix_rank(const ExactMatrix& M, const Ring& ring) { return smith_normal_form(M, ring, false).rank; }

int ChainComplex::dim(long j) const {
    auto it = dims.find(j);
    return it == dims.end() ? 0 : it->second;
}

ExactMatrix ChainComplex::d(long j) const {
    auto it = boundary.find(j);
    if (it != boundary.end()) return it->second;
    return ExactMatrix(dim(j - 1), dim(j));
}

std::vector<long> ChainComplex::degrees() const {
    std::vector<long> out;
    for (const auto& [j, n] : dims)
        if (n > 0) out.push_back(j);
    return out;
}

std::string HomologySummary::describe() const {
    std::string s;
    if (over_field) return "dim " + std::to_string(free_rank);
    s = free_rank == 0 ? "" : (free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank));
    for (const auto& t : torsion) s += (s.empty() ? "" : " + ") + std::string("Z/") + t.get_str();
    return s.empty() ? "0" : s;
}

namespace {

void require_complex(const ChainComplex& C, long j) {
    ExactMatrix a = C.d(j), b = C.d(j + 1);
    if (a.cols() == 0 || b.cols() == 0 || a.rows() == 0) return;
    if (!multiply(a, b, C.ring).is_zero())
        throw Error(ErrorCode::NotAComplex, "d_" + std::to_string(j) + " o d_" + std::to_string(j + 1) + " != 0");
}

}  // namespace

HomologySummary homology_at(const ChainComplex& C, long j) {
    require_complex(C, j);
    HomologySummary h;
    h.degree = j;
    h.over_field = C.ring.is_field();
    const int rank_out = matrix_rank(C.d(j), C.ring);
    SmithForm in = smith_normal_form(C.d(j + 1), C.ring, false);
    h.free_rank = C.dim(j) - rank_out - in.rank;
    if (!h.over_field)
        for (const auto& x : in.diagonal)
            if (x != 1) h.torsion.push_back(x);
    return h;
}

std::vector<HomologySummary> homology(const ChainComplex& C) {
    std::vector<HomologySummary> out;
    for (long j : C.degrees()) out.push_back(homology_at(C, j));
    return out;
}

ExactMatrix ChainMap::at(long j, int rows, int cols) const {
    auto it = components.find(j);
    if (it != components.end()) return it->second;
    return ExactMatrix(rows, cols);
}

bool is_chain_map(const ChainComplex& C, const ChainComplex& D, const ChainMap& f) {
    std::vector<long> js;
    for (const auto& [j, n] : C.dims) js.push_back(j);
    for (long j : js) {
        // d^D f_j = f_{j-1} d^C
        ExactMatrix fj = f.at(j, D.dim(j + f.shift), C.dim(j));
        ExactMatrix fj1 = f.at(j - 1, D.dim(j - 1 + f.shift), C.dim(j - 1));
        if (!(multiply(D.d(j + f.shift), fj, C.ring) == multiply(fj1, C.d(j), C.ring))) return false;
    }
    return true;
}

namespace {

struct Presentation {
    HomologySummary summary;
    int rank_out = 0;
    SmithForm outer;           // SNF of d_j
    SmithForm inner;           // SNF of the image inside the kernel
    std::vector<int> gens;     // indices into the kernel coordinates
    std::vector<Scalar> order; // 0 for free generators
    ExactMatrix generators;    // C_j columns
};

Presentation present(const ChainComplex& C, long j) {
    const Ring& ring = C.ring;
    Presentation P;
    P.summary = homology_at(C, j);
    const int n = C.dim(j);
    P.outer = smith_normal_form(C.d(j), ring);
    P.rank_out = P.outer.rank;
    const int k = n - P.rank_out;
    ExactMatrix img = multiply(P.outer.V_inv, C.d(j + 1), ring);
    ExactMatrix B(k, img.cols());
    for (int i = 0; i < k; ++i)
        for (int c = 0; c < img.cols(); ++c) B.at(i, c) = img.at(P.rank_out + i, c);
    P.inner = smith_normal_form(B, ring);
    for (int i = 0; i < k; ++i) {
        if (i < P.inner.rank) {
            if (P.inner.diagonal[i] == 1) continue;
            P.gens.push_back(i);
            P.order.push_back(P.inner.diagonal[i]);
        } else {
            P.gens.push_back(i);
            P.order.push_back(0);
        }
    }
    // generators = K * inner.U_inv restricted to gens, K = outer.V[:, rank_out:]
    P.generators = ExactMatrix(n, static_cast<int>(P.gens.size()));
    for (std::size_t g = 0; g < P.gens.size(); ++g)
        for (int row = 0; row < n; ++row) {
            Scalar s = 0;
            for (int i = 0; i < k; ++i) s += P.outer.V.at(row, P.rank_out + i) * P.inner.U_inv.at(i, P.gens[g]);
            ring.reduce(s);
            P.generators.at(row, static_cast<int>(g)) = s;
        }
    return P;
}

std::vector<Scalar> coordinates(const Presentation& P, const std::vector<Scalar>& z, const Ring& ring) {
    std::vector<Scalar> y = multiply(P.outer.V_inv, z, ring);
    const int k = static_cast<int>(y.size()) - P.rank_out;
    std::vector<Scalar> ky(y.begin() + P.rank_out, y.end());
    std::vector<Scalar> c = multiply(P.inner.U, ky, ring);
    std::vector<Scalar> out;
    (void)k;
    for (std::size_t g = 0; g < P.gens.size(); ++g) {
        Scalar x = c[P.gens[g]];
        if (P.order[g] != 0) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), P.order[g].get_mpz_t());
        out.push_back(x);
    }
    return out;
}

// f : coker(diag P) -> coker(diag Q) is an iso iff the cone of the lifted map is exact.
bool presentation_iso(const Presentation& P, const Presentation& Q, const ExactMatrix& T) {
    const int g = static_cast<int>(P.gens.size()), gq = static_cast<int>(Q.gens.size());
    std::vector<int> tp, tq;
    for (int a = 0; a < g; ++a)
        if (P.order[a] != 0) tp.push_back(a);
    for (int b = 0; b < gq; ++b)
        if (Q.order[b] != 0) tq.push_back(b);
    const int t = static_cast<int>(tp.size()), t2 = static_cast<int>(tq.size());
    ExactMatrix d1(gq, g + t2), d2(g + t2, t);
    for (int b = 0; b < gq; ++b)
        for (int a = 0; a < g; ++a) d1.at(b, a) = T.at(b, a);
    for (int q = 0; q < t2; ++q) d1.at(tq[q], g + q) = Q.order[tq[q]];
    for (int p = 0; p < t; ++p) {
        const int a = tp[p];
        d2.at(a, p) = -P.order[a];
        for (int b = 0; b < gq; ++b) {
            Scalar x = T.at(b, a) * P.order[a];
            if (Q.order[b] == 0) {
                if (x != 0) throw Error(ErrorCode::NotChainMap, "torsion class mapped to a free class");
                continue;
            }
            if (!mpz_divisible_p(x.get_mpz_t(), Q.order[b].get_mpz_t()))
                throw Error(ErrorCode::NotChainMap, "induced map is not well defined");
            const int q = static_cast<int>(std::find(tq.begin(), tq.end(), b) - tq.begin());
            d2.at(g + q, p) = x / Q.order[b];
        }
    }
    ChainComplex cone;
    cone.dims = {{0, gq}, {1, g + t2}, {2, t}};
    cone.boundary[1] = d1;
    cone.boundary[2] = d2;
    HomologySummary h0 = homology_at(cone, 0), h1 = homology_at(cone, 1);
    return h0.free_rank == 0 && h0.torsion.empty() && h1.free_rank == 0 && h1.torsion.empty();
}

}  // namespace

InducedMap induced_map_on_homology(const ChainComplex& C, const ChainComplex& D, const ChainMap& f, long j) {
    const Ring& ring = C.ring;
    const long jt = j + f.shift;
    for (long i : {j, j + 1}) {
        ExactMatrix fi = f.at(i, D.dim(i + f.shift), C.dim(i));
        ExactMatrix fi1 = f.at(i - 1, D.dim(i - 1 + f.shift), C.dim(i - 1));
        if (!(multiply(D.d(i + f.shift), fi, ring) == multiply(fi1, C.d(i), ring)))
            throw Error(ErrorCode::NotChainMap, "d f != f d in degree " + std::to_string(i));
    }
    Presentation P = present(C, j), Q = present(D, jt);
    ExactMatrix fj = f.at(j, D.dim(jt), C.dim(j));
    const int g = static_cast<int>(P.gens.size()), gq = static_cast<int>(Q.gens.size());
    ExactMatrix T(gq, g);
    for (int a = 0; a < g; ++a) {
        std::vector<Scalar> col(C.dim(j));
        for (int r = 0; r < C.dim(j); ++r) col[r] = P.generators.at(r, a);
        std::vector<Scalar> c = coordinates(Q, multiply(fj, col, ring), ring);
        for (int b = 0; b < gq; ++b) T.at(b, a) = c[b];
    }
    InducedMap out;
    out.source = P.summary;
    out.target = Q.summary;
    out.matrix = T;
    if (ring.is_field()) out.is_iso = g == gq && matrix_rank(T, ring) == g;
    else out.is_iso = presentation_iso(P, Q, T);
    return out;
}

ChainComplex mapping_cone(const ChainComplex& C, const ChainComplex& D, const ChainMap& f) {
    // Cone_k = C_{k-1-shift} (+) D_k,  d(c, e) = (-dc, f c + de)
    ChainComplex K;
    K.ring = C.ring;
    auto src = [&](long k) { return k - 1 - f.shift; };
    std::vector<long> ks;
    for (const auto& [j, n] : C.dims) ks.push_back(j + 1 + f.shift);
    for (const auto& [j, n] : D.dims) ks.push_back(j);
    for (long k : ks) K.dims[k] = C.dim(src(k)) + D.dim(k);
    for (long k : ks) {
        const int nc = C.dim(src(k)), nd = D.dim(k);
        const int mc = C.dim(src(k) - 1), md = D.dim(k - 1);
        ExactMatrix m(mc + md, nc + nd);
        ExactMatrix dc = C.d(src(k)), dd = D.d(k), fk = f.at(src(k), md, nc);
        for (int i = 0; i < mc; ++i)
            for (int c = 0; c < nc; ++c) m.at(i, c) = C.ring.reduced(-dc.at(i, c));
        for (int i = 0; i < md; ++i) {
            for (int c = 0; c < nc; ++c) m.at(mc + i, c) = fk.at(i, c);
            for (int c = 0; c < nd; ++c) m.at(mc + i, nc + c) = dd.at(i, c);
        }
        K.boundary[k] = std::move(m);
    }
    return K;
}

bool is_acyclic(const ChainComplex& C) {
    for (long j : C.degrees()) {
        HomologySummary h = homology_at(C, j);
        if (h.free_rank != 0 || !h.torsion.empty()) return false;
    }
    return true;
}

}  // namespace ainf

#include "ainf/bimodule.hpp"

#include "ainf/signs.hpp"
#include "internal.hpp"

#include <set>

namespace ainf {

namespace {

std::vector<ModulePtr> bimodule_signature(const ModulePtr& A, const ModulePtr& M, int r, int s) {
    std::vector<ModulePtr> sig(r + s + 1, A);
    sig[r] = M;
    return sig;
}

// Algebra-slot degrees of (a_1..a_r, m, a_{r+1}..a_{r+s}) with m dropped.
std::vector<int> algebra_degrees(const GradedModule& A, const Word& w, int r) {
    std::vector<int> d;
    d.reserve(w.size() - 1);
    for (int p = 0; p < static_cast<int>(w.size()); ++p)
        if (p != r) d.push_back(A.degree(w[p]));
    return d;
}

Vec bimodule_residual(const AInfinityBimodule& M, int r, int s, const Word& w) {
    const auto& A = M.A();
    const auto& ring = M.ring();
    const auto deg = algebra_degrees(*A.module(), w, r);
    const int mdeg = M.module()->degree(w[r]);
    Vec res;
    for (int r1 = 1; r1 <= r; ++r1) {
        const auto* outer = M.op(r1, s);
        const auto* inner = A.op(r + 1 - r1);
        if (!outer || !inner) continue;
        for (int i = 1; i <= r1; ++i)
            detail::compose_into(*outer, *inner, w, i - 1, sign_of(maltese(deg, 1, i - 1)), res, ring);
    }
    for (int r1 = 0; r1 <= r; ++r1)
        for (int s1 = 0; s1 <= s; ++s1) {
            const auto* outer = M.op(r1, s1);
            const auto* inner = M.op(r - r1, s - s1);
            if (!outer || !inner) continue;
            detail::compose_into(*outer, *inner, w, r1, sign_of(maltese(deg, 1, r1)), res, ring);
        }
    for (int s1 = 1; s1 <= s; ++s1) {
        const auto* outer = M.op(r, s1);
        const auto* inner = A.op(s + 1 - s1);
        if (!outer || !inner) continue;
        for (int j = 1; j <= s1; ++j)
            detail::compose_into(*outer, *inner, w, r + j, sign_of(maltese(deg, 1, r + j - 1) + mdeg), res, ring);
    }
    return res;
}

template <class Residual>
Verdict check_all_words(std::string identity, const ModulePtr& A, const ModulePtr& M, int r, int s,
                        Residual&& residual, const GradedModule& out) {
    Verdict v;
    v.identity = std::move(identity);
    std::vector<int> sizes(r + s + 1, A->size());
    sizes[r] = M->size();
    WordSpace space(sizes);
    auto k = detail::first_true(space.count(), [&](std::int64_t k) { return !residual(space.at(k)).is_zero(); });
    if (k >= 0) {
        Word w = space.at(k);
        v.holds = false;
        v.witness = format_word(bimodule_signature(A, M, r, s), w);
        v.residual = format_vec(out, residual(w));
    }
    return v;
}

std::string rs_label(int r, int s) { return "(" + std::to_string(r) + "," + std::to_string(s) + ")"; }

}  // namespace

MultilinearOp AInfinityBimodule::make_op(int r, int s) const {
    return MultilinearOp(bimodule_signature(algebra_->module(), module_, r, s), module_, 1 - r - s);
}

void AInfinityBimodule::set_operation(int r, int s, MultilinearOp op) {
    if (op.arity() != r + s + 1) throw Error(ErrorCode::ArityMismatch, "bimodule op " + rs_label(r, s));
    if (op.degree() != 1 - r - s)
        throw Error(ErrorCode::DegreeMismatch, "mu^M" + rs_label(r, s) + " must have degree " + std::to_string(1 - r - s));
    if (op.is_zero()) {
        ops_.erase({r, s});
        return;
    }
    ops_[{r, s}] = std::move(op);
}

const MultilinearOp* AInfinityBimodule::op(int r, int s) const {
    auto it = ops_.find({r, s});
    return it == ops_.end() ? nullptr : &it->second;
}

int AInfinityBimodule::max_rs() const {
    int m = -1;
    for (const auto& [rs, op] : ops_) m = std::max(m, rs.first + rs.second);
    return m;
}

Verdict check_bimodule_equation(const AInfinityBimodule& M, int r, int s) {
    return check_all_words(
        "bimodule equation " + rs_label(r, s), M.A().module(), M.module(), r, s,
        [&](const Word& w) { return bimodule_residual(M, r, s, w); }, *M.module());
}

AInfinityBimodule diagonal_bimodule(const AlgebraPtr& A) {
    auto shifted = std::make_shared<const GradedModule>(shift(*A));
    AInfinityBimodule M(A, shifted);
    for (const auto& [n, mu] : A->operations())
        for (int r = 0; r < n; ++r) {
            const int s = n - 1 - r;
            MultilinearOp op = M.make_op(r, s);
            for (const auto& [w, v] : mu.table()) op.set(w, v, A->ring());
            M.set_operation(r, s, std::move(op));
        }
    return M;
}

AInfinityBimodule tensor_square_bimodule(const AlgebraPtr& Ap) {
    const auto& A = *Ap;
    const auto& ring = A.ring();
    const auto& B = *A.module();
    const int n = B.size();
    std::vector<BasisElement> basis;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) basis.push_back({B.name(i) + "|" + B.name(j), B.degree(i) + B.degree(j) - 2});
    AInfinityBimodule T(Ap, make_module(std::move(basis)));
    auto pair = [n](int i, int j) { return i * n + j; };

    if (const auto* mu1 = A.op(1)) {
        MultilinearOp op = T.make_op(0, 0);
        for (int b1 = 0; b1 < n; ++b1)
            for (int b2 = 0; b2 < n; ++b2) {
                Vec v;
                if (const auto* x = mu1->lookup({b1}))
                    for (const auto& [o, c] : *x) v.add(pair(o, b2), c, ring);
                if (const auto* y = mu1->lookup({b2}))
                    for (const auto& [o, c] : *y) v.add(pair(b1, o), c * sign_of(B.degree(b1) - 1), ring);
                op.set({pair(b1, b2)}, v, ring);
            }
        T.set_operation(0, 0, std::move(op));
    }
    for (const auto& [k, mu] : A.operations()) {
        if (k < 2) continue;
        const int r = k - 1;
        MultilinearOp left = T.make_op(r, 0);
        MultilinearOp right = T.make_op(0, r);
        for (const auto& [w, v] : mu.table()) {
            for (int b2 = 0; b2 < n; ++b2) {
                Word key(w.begin(), w.end());
                key.back() = pair(w.back(), b2);
                Vec out;
                for (const auto& [o, c] : v) out.add(pair(o, b2), c, ring);
                left.set(key, out, ring);
            }
            for (int b1 = 0; b1 < n; ++b1) {
                Word key(w.begin(), w.end());
                key.front() = pair(b1, w.front());
                Vec out;
                for (const auto& [o, c] : v) out.add(pair(b1, o), c * sign_of(B.degree(b1) - 1), ring);
                right.set(key, out, ring);
            }
        }
        T.set_operation(r, 0, std::move(left));
        T.set_operation(0, r, std::move(right));
    }
    return T;
}

AInfinityBimodule dual_bimodule(const AInfinityBimodule& M) {
    const auto& ring = M.ring();
    const auto& B = *M.module();
    const auto& Adeg = *M.A().module();
    std::vector<BasisElement> basis;
    for (const auto& b : B.basis()) basis.push_back({b.name + "^", -b.degree});
    AInfinityBimodule D(M.algebra(), make_module(std::move(basis)));
    const auto& Bd = *D.module();

    for (const auto& [rs, op] : M.operations()) {
        // mu^M_{s,r} transposes to mu*_{r,s}
        const int s = rs.first, r = rs.second;
        MultilinearOp dual = D.make_op(r, s);
        for (const auto& [w, v] : op.table()) {
            // w = (a_{r+1}..a_{r+s}, m, a_1..a_r)
            const int m = w[s];
            Word key(r + s + 1);
            for (int q = 0; q < r; ++q) key[q] = w[s + 1 + q];
            for (int q = 0; q < s; ++q) key[r + 1 + q] = w[q];
            std::vector<int> deg(r + s);
            for (int q = 0; q < r; ++q) deg[q] = Adeg.degree(key[q]);
            for (int q = 0; q < s; ++q) deg[r + q] = Adeg.degree(key[r + 1 + q]);
            const long first = maltese(deg, 1, r);
            const long second = maltese(deg, r + 1, r + s);
            for (const auto& [x, c] : v) {
                key[r] = x;
                const long xd = Bd.degree(x);
                const long dagger = first * (second + xd + B.degree(m)) + xd + 1;
                dual.add(key, m, c * sign_of(dagger), ring);
            }
        }
        D.set_operation(r, s, std::move(dual));
    }
    return D;
}

bool double_dual_matches(const AInfinityBimodule& M, const AInfinityBimodule& dd) {
    const auto& B = *M.module();
    if (B.size() != dd.module()->size()) return false;
    for (int i = 0; i < B.size(); ++i)
        if (B.degree(i) != dd.module()->degree(i)) return false;
    std::set<RS> keys;
    for (const auto& [rs, op] : M.operations()) keys.insert(rs);
    for (const auto& [rs, op] : dd.operations()) keys.insert(rs);
    for (const auto& rs : keys) {
        const auto* a = M.op(rs.first, rs.second);
        const auto* b = dd.op(rs.first, rs.second);
        if (!a || !b) return false;
        if (a->table().size() != b->table().size()) return false;
        for (const auto& [w, v] : a->table()) {
            const auto* u = b->lookup(w);
            if (!u) return false;
            const int x = w[rs.first];
            Vec expect;
            for (const auto& [y, c] : v) expect.add(y, c * sign_of(B.degree(x) + B.degree(y)), M.ring());
            if (!(expect == *u)) return false;
        }
    }
    return true;
}

BimoduleMorphism::BimoduleMorphism(BimodulePtr source, BimodulePtr target, int degree)
    : source_(std::move(source)), target_(std::move(target)), degree_(degree) {
    if (source_->algebra() != target_->algebra())
        throw Error(ErrorCode::ModuleMismatch, "morphism between bimodules over different algebras");
}

MultilinearOp BimoduleMorphism::make_map(int r, int s) const {
    return MultilinearOp(bimodule_signature(source_->A().module(), source_->module(), r, s), target_->module(),
                         degree_ - r - s);
}

void BimoduleMorphism::set_map(int r, int s, MultilinearOp op) {
    if (op.arity() != r + s + 1) throw Error(ErrorCode::ArityMismatch, "morphism component " + rs_label(r, s));
    if (op.degree() != degree_ - r - s)
        throw Error(ErrorCode::DegreeMismatch, "f" + rs_label(r, s) + " must have degree " + std::to_string(degree_ - r - s));
    if (op.is_zero()) {
        maps_.erase({r, s});
        return;
    }
    maps_[{r, s}] = std::move(op);
}

const MultilinearOp* BimoduleMorphism::map(int r, int s) const {
    auto it = maps_.find({r, s});
    return it == maps_.end() ? nullptr : &it->second;
}

int BimoduleMorphism::max_rs() const {
    int m = -1;
    for (const auto& [rs, op] : maps_) m = std::max(m, rs.first + rs.second);
    return m;
}

BimoduleMorphism BimoduleMorphism::scalar(const BimodulePtr& M, const Scalar& c) {
    BimoduleMorphism f(M, M, 0);
    MultilinearOp op = f.make_map(0, 0);
    for (int i = 0; i < M->module()->size(); ++i) op.add({i}, i, c, M->ring());
    f.set_map(0, 0, std::move(op));
    return f;
}

namespace {

Vec morphism_residual(const BimoduleMorphism& f, int r, int s, const Word& w) {
    const auto& M = *f.source();
    const auto& N = *f.target();
    const auto& A = M.A();
    const auto& ring = f.ring();
    const long d = f.degree();
    const auto deg = algebra_degrees(*A.module(), w, r);
    const int mdeg = M.module()->degree(w[r]);
    Vec res;
    // left-hand side
    for (int r1 = 0; r1 <= r; ++r1)
        for (int s1 = 0; s1 <= s; ++s1) {
            const auto* outer = N.op(r1, s1);
            const auto* inner = f.map(r - r1, s - s1);
            if (!outer || !inner) continue;
            detail::compose_into(*outer, *inner, w, r1, sign_of(d * maltese(deg, 1, r1)), res, ring);
        }
    // minus the right-hand side
    for (int r1 = 1; r1 <= r; ++r1) {
        const auto* outer = f.map(r1, s);
        const auto* inner = A.op(r + 1 - r1);
        if (!outer || !inner) continue;
        for (int i = 1; i <= r1; ++i)
            detail::compose_into(*outer, *inner, w, i - 1, -sign_of(maltese(deg, 1, i - 1) + d), res, ring);
    }
    for (int r1 = 0; r1 <= r; ++r1)
        for (int s1 = 0; s1 <= s; ++s1) {
            const auto* outer = f.map(r1, s1);
            const auto* inner = M.op(r - r1, s - s1);
            if (!outer || !inner) continue;
            detail::compose_into(*outer, *inner, w, r1, -sign_of(maltese(deg, 1, r1) + d), res, ring);
        }
    for (int s1 = 1; s1 <= s; ++s1) {
        const auto* outer = f.map(r, s1);
        const auto* inner = A.op(s + 1 - s1);
        if (!outer || !inner) continue;
        for (int i = 1; i <= s1; ++i)
            detail::compose_into(*outer, *inner, w, r + i, -sign_of(maltese(deg, 1, r + i - 1) + mdeg + d), res, ring);
    }
    return res;
}

}  // namespace

Verdict check_morphism_equation(const BimoduleMorphism& f, int r, int s) {
    return check_all_words(
        "morphism equation " + rs_label(r, s), f.source()->A().module(), f.source()->module(), r, s,
        [&](const Word& w) { return morphism_residual(f, r, s, w); }, *f.target()->module());
}

bool morphism_is_chain_map_00(const BimoduleMorphism& f) {
    const auto& ring = f.ring();
    const auto* f00 = f.map(0, 0);
    const auto* dm = f.source()->op(0, 0);
    const auto* dn = f.target()->op(0, 0);
    for (int m = 0; m < f.source()->module()->size(); ++m) {
        Vec lhs, rhs;
        if (f00 && dn) detail::compose_into(*dn, *f00, {m}, 0, 1, lhs, ring);
        if (f00 && dm) detail::compose_into(*f00, *dm, {m}, 0, sign_of(f.degree()), rhs, ring);
        if (!(lhs == rhs)) return false;
    }
    return true;
}

}  // namespace ainf

#include "ainf/ainfty.hpp"

#include "ainf/signs.hpp"
#include "internal.hpp"

#include <set>

namespace ainf {

MultilinearOp AInfinityAlgebra::make_op(int n) const {
    return MultilinearOp(std::vector<ModulePtr>(n, module_), module_, 2 - n);
}

void AInfinityAlgebra::set_operation(MultilinearOp op) {
    const int n = op.arity();
    if (n < 1) throw Error(ErrorCode::ArityMismatch, "algebra operations have arity >= 1");
    if (op.degree() != 2 - n)
        throw Error(ErrorCode::DegreeMismatch, "mu_" + std::to_string(n) + " must have degree " + std::to_string(2 - n));
    if (op.is_zero()) {
        ops_.erase(n);
        return;
    }
    ops_[n] = std::move(op);
}

const MultilinearOp* AInfinityAlgebra::op(int n) const {
    auto it = ops_.find(n);
    return it == ops_.end() ? nullptr : &it->second;
}

int AInfinityAlgebra::max_arity() const { return ops_.empty() ? 0 : ops_.rbegin()->first; }

namespace {

Vec defining_residual(const AInfinityAlgebra& A, const Word& a) {
    const int r = static_cast<int>(a.size());
    const auto deg = detail::degrees_of(*A.module(), a);
    Vec res;
    for (int n1 = 1; n1 <= r; ++n1) {
        const int n2 = r + 1 - n1;
        const auto* inner = A.op(n1);
        const auto* outer = A.op(n2);
        if (!inner || !outer) continue;
        for (int i = 1; i <= r + 1 - n1; ++i)
            detail::compose_into(*outer, *inner, a, i - 1, sign_of(maltese(deg, 1, i - 1)), res, A.ring());
    }
    return res;
}

}  // namespace

Verdict check_defining_equation(const AInfinityAlgebra& A, int r) {
    Verdict v;
    v.identity = "A-infinity equation r=" + std::to_string(r);
    bool any = false;
    for (int n1 = 1; n1 <= r; ++n1) any = any || (A.op(n1) && A.op(r + 1 - n1));
    if (!any || A.module()->size() == 0) return v;

    std::set<int> support;
    for (const auto& b : A.module()->basis()) support.insert(b.degree);
    WordSpace space(std::vector<int>(r, A.module()->size()));
    auto admissible = [&](const Word& a) {
        int d = 2 - r;
        for (int x : a) d += A.module()->degree(x);
        return support.count(d) > 0;
    };
    auto k = detail::first_true(space.count(), [&](std::int64_t k) {
        Word a = space.at(k);
        return admissible(a) && !defining_residual(A, a).is_zero();
    });
    if (k >= 0) {
        Word a = space.at(k);
        v.holds = false;
        v.witness = format_word(std::vector<ModulePtr>(r, A.module()), a);
        v.residual = format_vec(*A.module(), defining_residual(A, a));
    }
    return v;
}

bool ValidationReport::ok() const {
    for (const auto& [r, v] : checks)
        if (!v.holds) return false;
    return true;
}

int default_validation_bound(const AInfinityAlgebra& A) { return std::max(2 * A.max_arity(), 6); }

ValidationReport validate(const AInfinityAlgebra& A, int r_max) {
    ValidationReport rep;
    for (int r = 1; r <= r_max; ++r) rep.checks.emplace_back(r, check_defining_equation(A, r));
    return rep;
}

AInfinityAlgebra from_dga(const Ring& ring, ModulePtr module, const MultilinearOp& product,
                          const MultilinearOp& differential) {
    const auto& M = *module;
    if (product.arity() != 2 || product.degree() != 0)
        throw Error(ErrorCode::ArityMismatch, "product must be binary of degree 0");
    if (differential.arity() != 1 || differential.degree() != 1)
        throw Error(ErrorCode::ArityMismatch, "differential must be unary of degree +1");
    auto elt = [&](int i) { return Element::basis(module, i, 1, ring); };
    auto mul = [&](const Element& x, const Element& y) {
        std::vector<Element> in{x, y};
        return apply(product, in, ring);
    };
    auto d = [&](const Element& x) {
        std::vector<Element> in{x};
        return apply(differential, in, ring);
    };
    for (int i = 0; i < M.size(); ++i)
        if (!d(d(elt(i))).is_zero())
            throw Error(ErrorCode::NotADifferential, "d(d(" + M.name(i) + ")) != 0");
    for (int i = 0; i < M.size(); ++i)
        for (int j = 0; j < M.size(); ++j)
            for (int k = 0; k < M.size(); ++k) {
                Element lhs = mul(mul(elt(i), elt(j)), elt(k));
                Element rhs = mul(elt(i), mul(elt(j), elt(k)));
                if (!(lhs == rhs))
                    throw Error(ErrorCode::NotAssociative,
                                "(" + M.name(i) + "*" + M.name(j) + ")*" + M.name(k) + " = " + format_element(lhs) +
                                    " but " + M.name(i) + "*(" + M.name(j) + "*" + M.name(k) + ") = " +
                                    format_element(rhs));
            }
    for (int i = 0; i < M.size(); ++i)
        for (int j = 0; j < M.size(); ++j) {
            Element lhs = d(mul(elt(i), elt(j)));
            Element rhs = mul(d(elt(i)), elt(j));
            rhs.add(mul(elt(i), d(elt(j))), sign_of(M.degree(i)), ring);
            if (!(lhs == rhs))
                throw Error(ErrorCode::LeibnizFailure, "d(" + M.name(i) + "*" + M.name(j) + ")");
        }

    AInfinityAlgebra A(ring, module);
    MultilinearOp mu1 = A.make_op(1);
    for (const auto& [w, v] : differential.table()) mu1.set(w, v, ring);
    MultilinearOp mu2 = A.make_op(2);
    for (const auto& [w, v] : product.table()) {
        Vec t = v;
        t.scale(sign_of(M.degree(w[0])), ring);
        mu2.set(w, t, ring);
    }
    A.set_operation(std::move(mu1));
    A.set_operation(std::move(mu2));
    return A;
}

GradedModule shift(const AInfinityAlgebra& A) { return A.module()->shifted(-1); }

}  // namespace ainf

#pragma once

#include "ainf/multilinear.hpp"
#include "ainf/verdict.hpp"

#include <map>
#include <memory>
#include <vector>

namespace ainf {

class AInfinityAlgebra {
public:
    AInfinityAlgebra(Ring ring, ModulePtr module) : ring_(std::move(ring)), module_(std::move(module)) {}

    const Ring& ring() const { return ring_; }
    const ModulePtr& module() const { return module_; }

    // Empty table with the signature A^n -> A and degree 2 - n.
    MultilinearOp make_op(int n) const;
    void set_operation(MultilinearOp op);  // DegreeMismatch / ArityMismatch
    const MultilinearOp* op(int n) const;  // nullptr when identically zero
    int max_arity() const;
    const std::map<int, MultilinearOp>& operations() const { return ops_; }

private:
    Ring ring_;
    ModulePtr module_;
    std::map<int, MultilinearOp> ops_;
};

using AlgebraPtr = std::shared_ptr<const AInfinityAlgebra>;

Verdict check_defining_equation(const AInfinityAlgebra& A, int r);

struct ValidationReport {
    std::vector<std::pair<int, Verdict>> checks;
    bool ok() const;
};

int default_validation_bound(const AInfinityAlgebra& A);
ValidationReport validate(const AInfinityAlgebra& A, int r_max);

// mu_1 = d and mu_2(a, b) = (-1)^{|a|} a.b, after checking d^2 = 0,
// associativity and the graded Leibniz rule of the classical data.
AInfinityAlgebra from_dga(const Ring& ring, ModulePtr module, const MultilinearOp& product,
                          const MultilinearOp& differential);

GradedModule shift(const AInfinityAlgebra& A);

}  // namespace ainf

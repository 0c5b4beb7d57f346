#pragma once

#include "ainf/ainfty.hpp"

#include <map>
#include <memory>
#include <utility>

namespace ainf {

using RS = std::pair<int, int>;

class AInfinityBimodule {
public:
    AInfinityBimodule(AlgebraPtr algebra, ModulePtr module)
        : algebra_(std::move(algebra)), module_(std::move(module)) {}

    const AlgebraPtr& algebra() const { return algebra_; }
    const AInfinityAlgebra& A() const { return *algebra_; }
    const ModulePtr& module() const { return module_; }
    const Ring& ring() const { return algebra_->ring(); }

    // Signature A^r (x) M (x) A^s -> M, degree 1 - r - s.
    MultilinearOp make_op(int r, int s) const;
    void set_operation(int r, int s, MultilinearOp op);
    const MultilinearOp* op(int r, int s) const;
    int max_rs() const;
    const std::map<RS, MultilinearOp>& operations() const { return ops_; }

private:
    AlgebraPtr algebra_;
    ModulePtr module_;
    std::map<RS, MultilinearOp> ops_;
};

using BimodulePtr = std::shared_ptr<const AInfinityBimodule>;

Verdict check_bimodule_equation(const AInfinityBimodule& M, int r, int s);

AInfinityBimodule diagonal_bimodule(const AlgebraPtr& A);
AInfinityBimodule tensor_square_bimodule(const AlgebraPtr& A);
AInfinityBimodule dual_bimodule(const AInfinityBimodule& M);

class BimoduleMorphism {
public:
    BimoduleMorphism(BimodulePtr source, BimodulePtr target, int degree);

    const BimodulePtr& source() const { return source_; }
    const BimodulePtr& target() const { return target_; }
    int degree() const { return degree_; }
    const Ring& ring() const { return source_->ring(); }

    // Signature A^r (x) M (x) A^s -> N, degree d - r - s.
    MultilinearOp make_map(int r, int s) const;
    void set_map(int r, int s, MultilinearOp op);
    const MultilinearOp* map(int r, int s) const;
    int max_rs() const;
    const std::map<RS, MultilinearOp>& maps() const { return maps_; }

    static BimoduleMorphism scalar(const BimodulePtr& M, const Scalar& c);
    static BimoduleMorphism identity(const BimodulePtr& M) { return scalar(M, 1); }

private:
    BimodulePtr source_;
    BimodulePtr target_;
    int degree_ = 0;
    std::map<RS, MultilinearOp> maps_;
};

using MorphismPtr = std::shared_ptr<const BimoduleMorphism>;

Verdict check_morphism_equation(const BimoduleMorphism& f, int r, int s);
bool morphism_is_chain_map_00(const BimoduleMorphism& f);

// Identification x^^ -> (-1)^{deg x} x used to compare a double dual with M.
bool double_dual_matches(const AInfinityBimodule& M, const AInfinityBimodule& dd);

}  // namespace ainf

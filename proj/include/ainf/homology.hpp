#pragma once

#include "ainf/ring.hpp"

#include <map>
#include <string>
#include <vector>

namespace ainf {

// Dense storage; blocks here are at most a few hundred square.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
    static ExactMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Scalar& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    Scalar& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

    bool is_zero() const;
    std::size_t nonzeros() const;
    ExactMatrix transpose() const;
    bool operator==(const ExactMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Scalar> a_;
};

ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b, const Ring& ring);
std::vector<Scalar> multiply(const ExactMatrix& a, const std::vector<Scalar>& x, const Ring& ring);

struct SmithForm {
    ExactMatrix D, U, V, U_inv, V_inv;  // D = U * M * V
    int rank = 0;
    std::vector<Scalar> diagonal;  // first `rank` diagonal entries of D
};

// Minimal-absolute-value pivoting.  Over Z/p the pivots are normalized to 1.
SmithForm smith_normal_form(const ExactMatrix& M, const Ring& ring = Ring::integers(), bool transforms = true);
// D = U M V, D diagonal with a divisibility chain, U U_inv = V V_inv = I.
bool verify_smith(const ExactMatrix& M, const SmithForm& S, const Ring& ring = Ring::integers());
int matrix_rank(const ExactMatrix& M, const Ring& ring);

struct ChainComplex {
    Ring ring;
    std::map<long, int> dims;
    std::map<long, ExactMatrix> boundary;  // boundary[j] : C_j -> C_{j-1}

    int dim(long j) const;
    ExactMatrix d(long j) const;  // zero block when absent
    std::vector<long> degrees() const;
};

struct HomologySummary {
    long degree = 0;
    int free_rank = 0;             // dimension over Z/p
    std::vector<Scalar> torsion;   // invariant factors > 1, Z only
    bool over_field = false;

    std::string describe() const;
    bool operator==(const HomologySummary& o) const {
        return degree == o.degree && free_rank == o.free_rank && torsion == o.torsion;
    }
};

HomologySummary homology_at(const ChainComplex& C, long j);
std::vector<HomologySummary> homology(const ChainComplex& C);

// components[j] : C_j -> D_{j+shift}
struct ChainMap {
    long shift = 0;
    std::map<long, ExactMatrix> components;

    ExactMatrix at(long j, int rows, int cols) const;
};

bool is_chain_map(const ChainComplex& C, const ChainComplex& D, const ChainMap& f);

struct InducedMap {
    HomologySummary source, target;
    ExactMatrix matrix;  // on the nontrivial generators; torsion rows reduced
    bool is_iso = false;
};

InducedMap induced_map_on_homology(const ChainComplex& C, const ChainComplex& D, const ChainMap& f, long j);

ChainComplex mapping_cone(const ChainComplex& C, const ChainComplex& D, const ChainMap& f);
bool is_acyclic(const ChainComplex& C);

}  // namespace ainf

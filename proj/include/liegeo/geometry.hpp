#pragma once

#include "liegeo/lie_algebra.hpp"

namespace liegeo {

// Nondegenerate symmetric bilinear form on the algebra's basis.
class Metric {
public:
    explicit Metric(Matrix g);

    int dim() const { return g_.rows(); }
    const Matrix& gram() const { return g_; }
    const Matrix& gram_inverse() const { return g_inv_; }

    Rat eval(const Vec& v, const Vec& w) const;
    Signature signature() const { return liegeo::signature(g_); }
    Matrix adjoint(const Matrix& f) const { return g_inv_ * f.transpose() * g_; }

private:
    Matrix g_, g_inv_;
};

std::pair<Matrix, Matrix> sym_anti_split(const Matrix& f, const Metric& g);

// Levi-Civita connection, stored as one matrix per basis direction:
// gamma[i] is the matrix of nabla_{e_i}.
struct Connection {
    std::vector<Matrix> gamma;
    const Matrix& of(int i) const { return gamma[i]; }  // 0-based
    // nabla_v as a matrix, extended linearly in the direction argument.
    Matrix along(const Vec& v) const;
};

// OpenMP-parallel over basis directions; levi_civita_serial is the reference
// implementation kept for testing.
Connection levi_civita(const LieAlgebra& L, const Metric& g);
Connection levi_civita_serial(const LieAlgebra& L, const Metric& g);

// R(e_i,e_j)e_k = sum_l at(i,j,k,l) e_l, indices 0-based.
class CurvatureTensor {
public:
    explicit CurvatureTensor(int dim) : dim_(dim), r_(size_t(dim) * dim * dim * dim) {}

    int dim() const { return dim_; }
    Rat& at(int i, int j, int k, int l) {
        return r_[((size_t(i) * dim_ + j) * dim_ + k) * dim_ + l];
    }
    const Rat& at(int i, int j, int k, int l) const {
        return r_[((size_t(i) * dim_ + j) * dim_ + k) * dim_ + l];
    }
    bool is_zero() const;

private:
    int dim_;
    std::vector<Rat> r_;
};

// R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_{[X,Y]} Z.
// Parallelized over basis index pairs; curvature_serial is the reference.
CurvatureTensor curvature(const LieAlgebra& L, const Connection& nabla);
CurvatureTensor curvature_serial(const LieAlgebra& L, const Connection& nabla);

// Ric(X,Y) = trace(Z -> R(Z,X)Y).
Matrix ricci(const LieAlgebra& L, const CurvatureTensor& R);

bool is_flat(const LieAlgebra& L, const Metric& g);
bool is_ricci_flat(const LieAlgebra& L, const Metric& g);

// True when T commutes with every nabla_{e_i}, i.e. nabla T = 0 for a
// constant endomorphism field.
bool is_parallel(const Connection& nabla, const Matrix& T);

}  // namespace liegeo

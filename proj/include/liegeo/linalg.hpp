#pragma once

#include <utility>
#include <vector>

#include "liegeo/matrix.hpp"

namespace liegeo {

// Reduced row echelon form; returns the pivot column of each nonzero row.
std::pair<Matrix, std::vector<int>> rref(Matrix m);

int rank(const Matrix& m);

// Deterministic basis of ker m: reduced row-echelon pivots, free variables
// in ascending column order, each kernel vector has a 1 in its free slot.
std::vector<Vec> kernel_basis(const Matrix& m);

bool is_invertible(const Matrix& m);
Matrix inverse(const Matrix& m);

// Solves m x = b; throws when m is singular or dimensions mismatch.
Vec solve(const Matrix& m, const Vec& b);

struct Signature {
    int pos = 0, neg = 0, null = 0;
    bool operator==(const Signature&) const = default;
};

// Sylvester signature of a symmetric matrix by exact symmetric congruence
// reduction; a zero-diagonal hyperbolic 2x2 block contributes (+1,-1).
Signature signature(const Matrix& m);

// Metric adjoint f* = g^{-1} f^T g, so that g(fX,Y) = g(X,f*Y).
Matrix adjoint(const Matrix& f, const Matrix& g);

// Coordinates of v in the span of `basis`, or empty if v is outside it.
std::pair<bool, Vec> coordinates_in_span(const std::vector<Vec>& basis, const Vec& v);

}  // namespace liegeo

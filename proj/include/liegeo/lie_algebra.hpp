#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "liegeo/linalg.hpp"

namespace liegeo {

// Sparse bracket table: (i, j) with 1-based i < j maps to the coordinates of
// [e_i, e_j]; omitted pairs bracket to zero.
using BracketTable = std::map<std::pair<int, int>, Vec>;

struct JacobiViolation {
    int i, j, k;  // 1-based, lexicographically first failing triple
};

// Checks the Jacobi identity on antisymmetry-normalized constants.
std::optional<JacobiViolation> jacobi_check(int dim, const BracketTable& brackets);

// A finite-dimensional real Lie algebra given by exact rational structure
// constants on a fixed basis. Construction enforces the Jacobi identity.
class LieAlgebra {
public:
    LieAlgebra(int dim, BracketTable brackets, std::string name = "");

    static LieAlgebra abelian(int dim, std::string name = "");

    int dim() const { return dim_; }
    const std::string& name() const { return name_; }
    const BracketTable& brackets() const { return brackets_; }

    // c^k_ij with 1-based indices; antisymmetric in (i, j).
    Rat c(int k, int i, int j) const;

    bool is_abelian() const { return brackets_.empty(); }

    Vec bracket(const Vec& v, const Vec& w) const;
    Matrix ad(const Vec& v) const;

private:
    int dim_;
    BracketTable brackets_;
    std::string name_;
};

// Subspace of R^dim in canonical (RREF) basis; equality is basis-independent.
class Subspace {
public:
    Subspace(int ambient, const std::vector<Vec>& generators);

    static Subspace zero(int ambient) { return Subspace(ambient, {}); }
    static Subspace full(int ambient);

    int ambient() const { return ambient_; }
    int dim() const { return int(basis_.size()); }
    const std::vector<Vec>& basis() const { return basis_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& other) const;

private:
    int ambient_;
    std::vector<Vec> basis_;
};

std::vector<Subspace> lower_central_series(const LieAlgebra& L);
std::optional<int> nilpotency_step(const LieAlgebra& L);  // nullopt = not nilpotent

std::vector<Subspace> derived_series(const LieAlgebra& L);
std::optional<int> solvability_step(const LieAlgebra& L);  // nullopt = not solvable

Subspace center(const LieAlgebra& L);

bool is_unimodular(const LieAlgebra& L);

bool is_derivation(const LieAlgebra& L, const Matrix& D);

// Basis of Der(L), deterministic order from the kernel solver.
std::vector<Matrix> derivation_space(const LieAlgebra& L);

}  // namespace liegeo

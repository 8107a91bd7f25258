#pragma once

#include <map>
#include <optional>

#include "liegeo/geometry.hpp"

namespace liegeo {

// Antisymmetric k-form stored on strictly increasing index tuples (0-based).
class Form {
public:
    Form(int dim, int degree) : dim_(dim), degree_(degree) {
        if (degree < 0 || degree > dim) throw Error("form", "bad degree");
    }

    int dim() const { return dim_; }
    int degree() const { return degree_; }

    // Adds c * e^{idx_1} ^ ... ^ e^{idx_k}; indices need not be sorted.
    void add_term(std::vector<int> idx, Rat c);
    // Value on the basis tuple (sorted or not; sign handled by permutation).
    Rat eval(std::vector<int> idx) const;

    const std::map<std::vector<int>, Rat>& terms() const { return comps_; }
    bool is_zero() const { return comps_.empty(); }
    bool operator==(const Form& other) const;

    friend Form operator+(const Form& a, const Form& b);
    friend Form operator*(const Rat& s, const Form& a);

private:
    int dim_, degree_;
    std::map<std::vector<int>, Rat> comps_;  // keys strictly increasing
};

// 2-form from an antisymmetric matrix w(e_i, e_j) = m[i][j].
Form form_from_matrix(const Matrix& m);
Matrix form_to_matrix(const Form& w);

// Chevalley-Eilenberg differential:
// (d a)(X_0..X_k) = sum_{i<j} (-1)^{i+j} a([X_i,X_j], X_0..^i..^j..X_k).
Form ce_differential(const LieAlgebra& L, const Form& alpha);

struct StructureRecord {
    LieAlgebra L;
    Metric g;
    Matrix J;
    std::optional<Matrix> E;
};

// Itemized compatibility diagnostic for (g, J[, E]).
struct CompatReport {
    bool j_square = false;   // J^2 = -1
    bool j_metric = false;   // g(J.,J.) = g
    bool e_square = true;    // E^2 = 1        (vacuous without E)
    bool je_anti = true;     // JE = -EJ
    bool e_metric = true;    // g(E.,E.) = -g
    bool ok() const { return j_square && j_metric && e_square && je_anti && e_metric; }
    std::vector<std::string> failures() const;
};

CompatReport check_unitary_compat(const Metric& g, const Matrix& J,
                                  const std::optional<Matrix>& E = std::nullopt);

// omega = g(J., .) as a 2-form; throws on incompatible (g, J).
Form kahler_form(const StructureRecord& rec);

// N_J(e_i,e_j) = [Je_i,Je_j] - [e_i,e_j] - J[Je_i,e_j] - J[e_i,Je_j].
// Returned as one vector per pair i<j; empty entries omitted from the check.
bool nijenhuis_vanishes(const LieAlgebra& L, const Matrix& J);
Vec nijenhuis(const LieAlgebra& L, const Matrix& J, int i, int j);  // 0-based pair

// Route A: nabla J = 0. Route B: N_J = 0 and d omega = 0.
bool pk_route_connection(const StructureRecord& rec);
bool pk_route_integrability(const StructureRecord& rec);

// Computes both routes and insists they agree (they are equivalent; a
// disagreement is an internal error). Throws on incompatible (g, J).
bool is_pseudo_kahler(const StructureRecord& rec);

bool is_abelian_complex(const LieAlgebra& L, const Matrix& J);
bool is_abelian_para(const LieAlgebra& L, const Matrix& E);

struct HsResult {
    bool value = false;                    // hypersymplectic?
    std::vector<std::string> violations;   // nonempty = invariant violation
    bool pseudo_kahler = false;
    bool e_parallel = false;
    bool invariants_ok() const { return violations.empty(); }
};

// Requires E present; distinguishes invariant violations from a parallelism
// failure in the result.
HsResult is_hypersymplectic(const StructureRecord& rec);

// 2-step nilpotent with half-dimensional J-invariant center; E not needed.
bool is_kodaira_type(const LieAlgebra& L, const Matrix& J);

}  // namespace liegeo

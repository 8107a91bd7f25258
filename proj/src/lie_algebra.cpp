#include "liegeo/lie_algebra.hpp"

#include <sstream>

namespace liegeo {

namespace {

Vec bracket_basis(int dim, const BracketTable& br, int i, int j) {
    // 1-based i, j
    if (i == j) return Vec(dim);
    bool flip = i > j;
    if (flip) std::swap(i, j);
    auto it = br.find({i, j});
    if (it == br.end()) return Vec(dim);
    return flip ? Rat(-1) * it->second : it->second;
}

}  // namespace

std::optional<JacobiViolation> jacobi_check(int dim, const BracketTable& brackets) {
    for (int i = 1; i <= dim; ++i)
        for (int j = i + 1; j <= dim; ++j)
            for (int k = j + 1; k <= dim; ++k) {
                Vec sum(dim);
                // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
                auto acc = [&](int a, int b, int c) {
                    Vec ab = bracket_basis(dim, brackets, a, b);
                    for (int m = 0; m < dim; ++m) {
                        if (is_zero(ab[m])) continue;
                        Vec t = bracket_basis(dim, brackets, m + 1, c);
                        for (int n = 0; n < dim; ++n) sum[n] += ab[m] * t[n];
                    }
                };
                acc(i, j, k);
                acc(j, k, i);
                acc(k, i, j);
                if (!vec_is_zero(sum)) return JacobiViolation{i, j, k};
            }
    return std::nullopt;
}

LieAlgebra::LieAlgebra(int dim, BracketTable brackets, std::string name)
    : dim_(dim), name_(std::move(name)) {
    if (dim <= 0) throw Error("lie_algebra", "dimension must be positive");
    for (auto& [ij, v] : brackets) {
        auto [i, j] = ij;
        if (i < 1 || j < 1 || i > dim || j > dim)
            throw Error("lie_algebra", "bracket index out of range");
        if (i >= j) throw Error("lie_algebra", "bracket table must use i < j");
        if (int(v.size()) != dim) throw Error("lie_algebra", "bracket value has wrong dimension");
    }
    std::erase_if(brackets, [](const auto& kv) { return vec_is_zero(kv.second); });
    if (auto bad = jacobi_check(dim, brackets)) {
        std::ostringstream os;
        os << "Jacobi identity fails at (" << bad->i << "," << bad->j << "," << bad->k << ")";
        throw Error("jacobi", os.str());
    }
    brackets_ = std::move(brackets);
}

LieAlgebra LieAlgebra::abelian(int dim, std::string name) {
    return LieAlgebra(dim, {}, std::move(name));
}

Rat LieAlgebra::c(int k, int i, int j) const {
    Vec v = bracket_basis(dim_, brackets_, i, j);
    return v[k - 1];
}

Vec LieAlgebra::bracket(const Vec& v, const Vec& w) const {
    if (int(v.size()) != dim_ || int(w.size()) != dim_)
        throw Error("dimension", "bracket operand dimension mismatch");
    Vec out(dim_);
    for (const auto& [ij, val] : brackets_) {
        auto [i, j] = ij;
        Rat coeff = v[i - 1] * w[j - 1] - v[j - 1] * w[i - 1];
        if (is_zero(coeff)) continue;
        for (int m = 0; m < dim_; ++m) out[m] += coeff * val[m];
    }
    return out;
}

Matrix LieAlgebra::ad(const Vec& v) const {
    Matrix m(dim_, dim_);
    for (int j = 1; j <= dim_; ++j) m.set_col(j - 1, bracket(v, basis_vector(dim_, j - 1)));
    return m;
}

Subspace::Subspace(int ambient, const std::vector<Vec>& generators) : ambient_(ambient) {
    if (generators.empty()) return;
    Matrix m(int(generators.size()), ambient);
    for (size_t i = 0; i < generators.size(); ++i)
        for (int j = 0; j < ambient; ++j) m.at(int(i), j) = generators[i][j];
    auto [r, pivots] = rref(std::move(m));
    for (size_t row = 0; row < pivots.size(); ++row) basis_.push_back(r.row(int(row)));
}

Subspace Subspace::full(int ambient) {
    std::vector<Vec> gens;
    for (int i = 0; i < ambient; ++i) gens.push_back(basis_vector(ambient, i));
    return Subspace(ambient, gens);
}

bool Subspace::contains(const Vec& v) const {
    return coordinates_in_span(basis_, v).first;
}

bool Subspace::contains(const Subspace& other) const {
    for (const auto& v : other.basis_)
        if (!contains(v)) return false;
    return true;
}

bool Subspace::operator==(const Subspace& other) const {
    // RREF canonical bases are unique, so direct comparison suffices.
    return ambient_ == other.ambient_ && basis_ == other.basis_;
}

namespace {

Subspace bracket_spaces(const LieAlgebra& L, const Subspace& a, const Subspace& b) {
    std::vector<Vec> gens;
    for (const auto& v : a.basis())
        for (const auto& w : b.basis()) gens.push_back(L.bracket(v, w));
    return Subspace(L.dim(), gens);
}

}  // namespace

std::vector<Subspace> lower_central_series(const LieAlgebra& L) {
    std::vector<Subspace> series{Subspace::full(L.dim())};
    for (;;) {
        Subspace next = bracket_spaces(L, series.front(), series.back());
        if (next == series.back()) break;  // stabilized (possibly nonzero)
        series.push_back(next);
        if (next.dim() == 0) break;
    }
    return series;
}

std::optional<int> nilpotency_step(const LieAlgebra& L) {
    auto s = lower_central_series(L);
    if (s.back().dim() != 0) return std::nullopt;
    return int(s.size()) - 1;
}

std::vector<Subspace> derived_series(const LieAlgebra& L) {
    std::vector<Subspace> series{Subspace::full(L.dim())};
    for (;;) {
        Subspace next = bracket_spaces(L, series.back(), series.back());
        if (next == series.back()) break;
        series.push_back(next);
        if (next.dim() == 0) break;
    }
    return series;
}

std::optional<int> solvability_step(const LieAlgebra& L) {
    auto s = derived_series(L);
    if (s.back().dim() != 0) return std::nullopt;
    return int(s.size()) - 1;
}

Subspace center(const LieAlgebra& L) {
    // v central iff ad(v) = 0; stack the maps v -> [v, e_i] over all i.
    int n = L.dim();
    Matrix stacked(n * n, n);
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= n; ++k)
            for (int j = 1; j <= n; ++j)
                stacked.at((i - 1) * n + (k - 1), j - 1) = L.c(k, j, i);
    return Subspace(n, kernel_basis(stacked));
}

bool is_unimodular(const LieAlgebra& L) {
    for (int i = 1; i <= L.dim(); ++i)
        if (!is_zero(L.ad(basis_vector(L.dim(), i - 1)).trace())) return false;
    return true;
}

bool is_derivation(const LieAlgebra& L, const Matrix& D) {
    if (D.rows() != L.dim() || D.cols() != L.dim())
        throw Error("dimension", "derivation candidate has wrong size");
    for (int i = 1; i <= L.dim(); ++i)
        for (int j = i + 1; j <= L.dim(); ++j) {
            Vec ei = basis_vector(L.dim(), i - 1), ej = basis_vector(L.dim(), j - 1);
            Vec lhs = D.apply(L.bracket(ei, ej));
            Vec rhs = L.bracket(D.apply(ei), ej) + L.bracket(ei, D.apply(ej));
            if (!vec_is_zero(lhs - rhs)) return false;
        }
    return true;
}

std::vector<Matrix> derivation_space(const LieAlgebra& L) {
    // Unknowns d_{pq} (row-major); equations: for each basis pair i<j and each
    // output coordinate k: (D[e_i,e_j] - [De_i,e_j] - [e_i,De_j])_k = 0.
    int n = L.dim();
    int pairs = n * (n - 1) / 2;
    Matrix sys(pairs * n, n * n);
    int row0 = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            for (int k = 1; k <= n; ++k) {
                int row = row0 + k - 1;
                // D[e_i,e_j]: sum_m c^m_ij d_{km}
                for (int m = 1; m <= n; ++m) {
                    Rat cm = L.c(m, i, j);
                    if (!is_zero(cm)) sys.at(row, (k - 1) * n + (m - 1)) += cm;
                }
                // -[De_i, e_j]: De_i = sum_p d_{pi} e_p -> -sum_p d_{pi} c^k_pj
                for (int p = 1; p <= n; ++p) {
                    Rat cp = L.c(k, p, j);
                    if (!is_zero(cp)) sys.at(row, (p - 1) * n + (i - 1)) -= cp;
                }
                // -[e_i, De_j]
                for (int p = 1; p <= n; ++p) {
                    Rat cp = L.c(k, i, p);
                    if (!is_zero(cp)) sys.at(row, (p - 1) * n + (j - 1)) -= cp;
                }
            }
            row0 += n;
        }
    std::vector<Matrix> out;
    for (const auto& v : kernel_basis(sys)) {
        Matrix D(n, n);
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) D.at(p, q) = v[p * n + q];
        out.push_back(std::move(D));
    }
    return out;
}

}  // namespace liegeo

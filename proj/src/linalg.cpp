#include "liegeo/linalg.hpp"

#include <algorithm>

namespace liegeo {

std::pair<Matrix, std::vector<int>> rref(Matrix m) {
    std::vector<int> pivots;
    int lead = 0;
    for (int r = 0; r < m.rows() && lead < m.cols(); ++r) {
        int i = r;
        while (i < m.rows() && is_zero(m.at(i, lead))) ++i;
        if (i == m.rows()) {
            --r;
            ++lead;
            continue;
        }
        if (i != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(i, j), m.at(r, j));
        Rat inv = 1 / m.at(r, lead);
        for (int j = lead; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (int k = 0; k < m.rows(); ++k) {
            if (k == r || is_zero(m.at(k, lead))) continue;
            Rat f = m.at(k, lead);
            for (int j = lead; j < m.cols(); ++j) m.at(k, j) -= f * m.at(r, j);
        }
        pivots.push_back(lead);
        ++lead;
    }
    return {m, pivots};
}

int rank(const Matrix& m) { return int(rref(m).second.size()); }

std::vector<Vec> kernel_basis(const Matrix& m) {
    auto [r, pivots] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<Vec> out;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v(m.cols());
        v[f] = 1;
        for (size_t row = 0; row < pivots.size(); ++row) v[pivots[row]] = -r.at(int(row), f);
        out.push_back(std::move(v));
    }
    return out;
}

bool is_invertible(const Matrix& m) { return m.is_square() && rank(m) == m.rows(); }

Matrix inverse(const Matrix& m) {
    if (!m.is_square()) throw Error("linalg", "inverse of non-square matrix");
    int n = m.rows();
    Matrix aug(n, 2 * n);
    aug.set_block(0, 0, m);
    aug.set_block(0, n, Matrix::identity(n));
    auto [r, pivots] = rref(std::move(aug));
    if (int(pivots.size()) != n || pivots.back() != n - 1) throw Error("linalg", "singular matrix");
    return r.block(0, n, n, n);
}

Vec solve(const Matrix& m, const Vec& b) {
    if (!m.is_square() || int(b.size()) != m.rows()) throw Error("dimension", "solve size mismatch");
    int n = m.rows();
    Matrix aug(n, n + 1);
    aug.set_block(0, 0, m);
    for (int i = 0; i < n; ++i) aug.at(i, n) = b[i];
    auto [r, pivots] = rref(std::move(aug));
    if (int(pivots.size()) != n || (!pivots.empty() && pivots.back() >= n))
        throw Error("linalg", "singular system");
    Vec x(n);
    for (int i = 0; i < n; ++i) x[pivots[i]] = r.at(i, n);
    return x;
}

Signature signature(const Matrix& m) {
    if (!m.is_symmetric()) throw Error("signature", "matrix not symmetric");
    Matrix s = m;
    int n = s.rows();
    std::vector<bool> done(n, false);
    Signature sig;
    auto clear_with = [&](int p) {
        // congruence: for every other live index j, row_j -= (s_jp/s_pp) row_p
        // and the matching column operation.
        Rat d = s.at(p, p);
        for (int j = 0; j < n; ++j) {
            if (j == p || done[j] || is_zero(s.at(j, p))) continue;
            Rat f = s.at(j, p) / d;
            for (int k = 0; k < n; ++k) s.at(j, k) -= f * s.at(p, k);
            for (int k = 0; k < n; ++k) s.at(k, j) -= f * s.at(k, p);
        }
    };
    for (;;) {
        int p = -1;
        for (int i = 0; i < n && p < 0; ++i)
            if (!done[i] && !is_zero(s.at(i, i))) p = i;
        if (p >= 0) {
            (sgn(s.at(p, p)) > 0 ? sig.pos : sig.neg) += 1;
            clear_with(p);
            done[p] = true;
            continue;
        }
        // all live diagonal entries vanish; find an off-diagonal hyperbolic pair
        int i = -1, j = -1;
        for (int a = 0; a < n && i < 0; ++a) {
            if (done[a]) continue;
            for (int b = a + 1; b < n && i < 0; ++b)
                if (!done[b] && !is_zero(s.at(a, b))) { i = a; j = b; }
        }
        if (i < 0) break;  // remaining block is zero
        // congruence e_i += e_j turns s_ii into 2 s_ij != 0
        for (int k = 0; k < n; ++k) s.at(i, k) += s.at(j, k);
        for (int k = 0; k < n; ++k) s.at(k, i) += s.at(k, j);
    }
    for (int i = 0; i < n; ++i)
        if (!done[i]) sig.null += 1;
    return sig;
}

Matrix adjoint(const Matrix& f, const Matrix& g) {
    if (!f.is_square() || f.rows() != g.rows()) throw Error("dimension", "adjoint size mismatch");
    if (!g.is_symmetric()) throw Error("adjoint", "metric not symmetric");
    if (!is_invertible(g)) throw Error("adjoint", "degenerate metric");
    return inverse(g) * f.transpose() * g;
}

std::pair<bool, Vec> coordinates_in_span(const std::vector<Vec>& basis, const Vec& v) {
    if (basis.empty()) return {vec_is_zero(v), Vec{}};
    int dim = int(basis[0].size());
    int m = int(basis.size());
    Matrix aug(dim, m + 1);
    for (int j = 0; j < m; ++j) aug.set_col(j, basis[j]);
    aug.set_col(m, v);
    auto [r, pivots] = rref(std::move(aug));
    for (int p : pivots)
        if (p == m) return {false, Vec{}};
    Vec coords(m);
    for (size_t row = 0; row < pivots.size(); ++row) coords[pivots[row]] = r.at(int(row), m);
    return {true, coords};
}

}  // namespace liegeo

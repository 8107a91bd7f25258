#include "liegeo/geometry.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace liegeo {

Metric::Metric(Matrix g) : g_(std::move(g)) {
    if (!g_.is_symmetric()) throw Error("metric", "not symmetric");
    if (!is_invertible(g_)) throw Error("metric", "degenerate");
    g_inv_ = inverse(g_);
}

Rat Metric::eval(const Vec& v, const Vec& w) const {
    Vec gw = g_.apply(w);
    Rat s = 0;
    for (size_t i = 0; i < v.size(); ++i) s += v[i] * gw[i];
    return s;
}

std::pair<Matrix, Matrix> sym_anti_split(const Matrix& f, const Metric& g) {
    Matrix fs = g.adjoint(f);
    Rat half(1, 2);
    return {half * (f + fs), half * (f - fs)};
}

Matrix Connection::along(const Vec& v) const {
    if (gamma.empty()) throw Error("connection", "empty connection");
    Matrix m(gamma[0].rows(), gamma[0].cols());
    for (size_t i = 0; i < gamma.size(); ++i)
        if (!is_zero(v[i])) m = m + v[i] * gamma[i];
    return m;
}

namespace {

// Column j of gamma[i] solves g x = rhs with
// rhs_k = (g([e_i,e_j],e_k) - g(e_j,[e_i,e_k]) - g(e_i,[e_j,e_k]))/2.
Matrix koszul_direction(const LieAlgebra& L, const Metric& g, int i) {
    int n = L.dim();
    Matrix gi(n, n);
    Vec ei = basis_vector(n, i);
    for (int j = 0; j < n; ++j) {
        Vec ej = basis_vector(n, j);
        Vec bij = L.bracket(ei, ej);
        Vec rhs(n);
        for (int k = 0; k < n; ++k) {
            Vec ek = basis_vector(n, k);
            Rat v = g.eval(bij, ek) - g.eval(ej, L.bracket(ei, ek)) - g.eval(ei, L.bracket(ej, ek));
            rhs[k] = Rat(1, 2) * v;
        }
        gi.set_col(j, g.gram_inverse().apply(rhs));
    }
    return gi;
}

}  // namespace

Connection levi_civita_serial(const LieAlgebra& L, const Metric& g) {
    if (g.dim() != L.dim()) throw Error("dimension", "metric/algebra dimension mismatch");
    Connection c;
    c.gamma.resize(L.dim());
    for (int i = 0; i < L.dim(); ++i) c.gamma[i] = koszul_direction(L, g, i);
    return c;
}

Connection levi_civita(const LieAlgebra& L, const Metric& g) {
    if (g.dim() != L.dim()) throw Error("dimension", "metric/algebra dimension mismatch");
    Connection c;
    c.gamma.resize(L.dim());
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < L.dim(); ++i) c.gamma[i] = koszul_direction(L, g, i);
    return c;
}

namespace {

void curvature_pair(const LieAlgebra& L, const Connection& nabla, int i, int j,
                    CurvatureTensor& R) {
    int n = L.dim();
    Matrix rij = commutator(nabla.gamma[i], nabla.gamma[j]);
    Vec bij = L.bracket(basis_vector(n, i), basis_vector(n, j));
    rij = rij - nabla.along(bij);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            R.at(i, j, k, l) = rij.at(l, k);
            R.at(j, i, k, l) = -rij.at(l, k);
        }
}

}  // namespace

CurvatureTensor curvature_serial(const LieAlgebra& L, const Connection& nabla) {
    int n = L.dim();
    CurvatureTensor R(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) curvature_pair(L, nabla, i, j, R);
    return R;
}

CurvatureTensor curvature(const LieAlgebra& L, const Connection& nabla) {
    int n = L.dim();
    CurvatureTensor R(n);
    // flattened loop over pairs i<j; each pair writes disjoint slots of R
    int pairs = n * (n - 1) / 2;
#pragma omp parallel for schedule(dynamic)
    for (int p = 0; p < pairs; ++p) {
        int i = 0, rem = p;
        while (rem >= n - 1 - i) {
            rem -= n - 1 - i;
            ++i;
        }
        int j = i + 1 + rem;
        curvature_pair(L, nabla, i, j, R);
    }
    return R;
}

bool CurvatureTensor::is_zero() const {
    for (const auto& x : r_)
        if (!liegeo::is_zero(x)) return false;
    return true;
}

Matrix ricci(const LieAlgebra& L, const CurvatureTensor& R) {
    int n = L.dim();
    Matrix ric(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rat s = 0;
            for (int k = 0; k < n; ++k) s += R.at(k, i, j, k);
            ric.at(i, j) = s;
        }
    return ric;
}

bool is_flat(const LieAlgebra& L, const Metric& g) {
    return curvature(L, levi_civita(L, g)).is_zero();
}

bool is_ricci_flat(const LieAlgebra& L, const Metric& g) {
    return ricci(L, curvature(L, levi_civita(L, g))).is_zero();
}

bool is_parallel(const Connection& nabla, const Matrix& T) {
    for (const auto& gi : nabla.gamma)
        if (!commutator(gi, T).is_zero()) return false;
    return true;
}

}  // namespace liegeo

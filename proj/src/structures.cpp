#include "liegeo/structures.hpp"

#include <algorithm>

namespace liegeo {

namespace {

// Sorts idx ascending, returns the permutation sign; 0 on repeated index.
int sort_sign(std::vector<int>& idx) {
    int sign = 1;
    for (size_t i = 0; i + 1 < idx.size(); ++i)
        for (size_t j = 0; j + 1 < idx.size() - i; ++j)
            if (idx[j] > idx[j + 1]) {
                std::swap(idx[j], idx[j + 1]);
                sign = -sign;
            }
    for (size_t i = 0; i + 1 < idx.size(); ++i)
        if (idx[i] == idx[i + 1]) return 0;
    return sign;
}

}  // namespace

void Form::add_term(std::vector<int> idx, Rat c) {
    if (int(idx.size()) != degree_) throw Error("form", "term arity mismatch");
    for (int i : idx)
        if (i < 0 || i >= dim_) throw Error("form", "index out of range");
    int sign = sort_sign(idx);
    if (sign == 0 || is_zero(c)) return;
    auto& slot = comps_[idx];
    slot += sign > 0 ? c : -c;
    if (is_zero(slot)) comps_.erase(idx);
}

Rat Form::eval(std::vector<int> idx) const {
    if (int(idx.size()) != degree_) throw Error("form", "eval arity mismatch");
    int sign = sort_sign(idx);
    if (sign == 0) return 0;
    auto it = comps_.find(idx);
    if (it == comps_.end()) return 0;
    return sign > 0 ? it->second : -it->second;
}

bool Form::operator==(const Form& other) const {
    return dim_ == other.dim_ && degree_ == other.degree_ && comps_ == other.comps_;
}

Form operator+(const Form& a, const Form& b) {
    if (a.dim_ != b.dim_ || a.degree_ != b.degree_) throw Error("form", "form shape mismatch");
    Form out = a;
    for (const auto& [k, v] : b.comps_) out.add_term(k, v);
    return out;
}

Form operator*(const Rat& s, const Form& a) {
    Form out(a.dim_, a.degree_);
    if (is_zero(s)) return out;
    for (const auto& [k, v] : a.comps_) out.comps_[k] = s * v;
    return out;
}

Form form_from_matrix(const Matrix& m) {
    Form w(m.rows(), 2);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = i + 1; j < m.cols(); ++j) w.add_term({i, j}, m.at(i, j));
    return w;
}

Matrix form_to_matrix(const Form& w) {
    if (w.degree() != 2) throw Error("form", "not a 2-form");
    Matrix m(w.dim(), w.dim());
    for (const auto& [k, v] : w.terms()) {
        m.at(k[0], k[1]) = v;
        m.at(k[1], k[0]) = -v;
    }
    return m;
}

Form ce_differential(const LieAlgebra& L, const Form& alpha) {
    int n = L.dim();
    if (alpha.dim() != n) throw Error("dimension", "form/algebra dimension mismatch");
    int k = alpha.degree();
    Form out(n, k + 1);
    if (k + 1 > n) return out;
    // iterate over increasing (k+1)-tuples
    std::vector<int> idx(k + 1);
    for (int i = 0; i <= k; ++i) idx[i] = i;
    for (;;) {
        Rat val = 0;
        for (int a = 0; a <= k; ++a)
            for (int b = a + 1; b <= k; ++b) {
                Vec br = L.bracket(basis_vector(n, idx[a]), basis_vector(n, idx[b]));
                if (vec_is_zero(br)) continue;
                std::vector<int> rest;
                for (int t = 0; t <= k; ++t)
                    if (t != a && t != b) rest.push_back(idx[t]);
                Rat term = 0;
                for (int m = 0; m < n; ++m) {
                    if (is_zero(br[m])) continue;
                    std::vector<int> args{m};
                    args.insert(args.end(), rest.begin(), rest.end());
                    term += br[m] * alpha.eval(args);
                }
                val += ((a + b) % 2 ? -term : term);
            }
        out.add_term(idx, val);
        // next combination
        int pos = k;
        while (pos >= 0 && idx[pos] == n - (k + 1) + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int t = pos + 1; t <= k; ++t) idx[t] = idx[t - 1] + 1;
    }
    return out;
}

std::vector<std::string> CompatReport::failures() const {
    std::vector<std::string> out;
    if (!j_square) out.push_back("J^2 != -Id");
    if (!j_metric) out.push_back("g(J.,J.) != g");
    if (!e_square) out.push_back("E^2 != Id");
    if (!je_anti) out.push_back("JE != -EJ");
    if (!e_metric) out.push_back("g(E.,E.) != -g");
    return out;
}

CompatReport check_unitary_compat(const Metric& g, const Matrix& J,
                                  const std::optional<Matrix>& E) {
    CompatReport r;
    int n = g.dim();
    r.j_square = (J * J == -Matrix::identity(n));
    r.j_metric = (J.transpose() * g.gram() * J == g.gram());
    if (E) {
        r.e_square = (*E * *E == Matrix::identity(n));
        r.je_anti = (J * *E == -(*E * J));
        r.e_metric = (E->transpose() * g.gram() * *E == -g.gram());
    }
    return r;
}

namespace {

void require_compatible(const StructureRecord& rec) {
    auto r = check_unitary_compat(rec.g, rec.J, std::nullopt);
    if (!r.ok()) {
        std::string msg;
        for (const auto& f : r.failures()) msg += (msg.empty() ? "" : "; ") + f;
        throw Error("compat", msg);
    }
}

}  // namespace

Form kahler_form(const StructureRecord& rec) {
    require_compatible(rec);
    return form_from_matrix(rec.J.transpose() * rec.g.gram());
}

Vec nijenhuis(const LieAlgebra& L, const Matrix& J, int i, int j) {
    Vec X = basis_vector(L.dim(), i), Y = basis_vector(L.dim(), j);
    Vec JX = J.apply(X), JY = J.apply(Y);
    return L.bracket(JX, JY) - L.bracket(X, Y) - J.apply(L.bracket(JX, Y)) -
           J.apply(L.bracket(X, JY));
}

bool nijenhuis_vanishes(const LieAlgebra& L, const Matrix& J) {
    if (!(J * J == -Matrix::identity(L.dim()))) throw Error("compat", "J^2 != -Id");
    for (int i = 0; i < L.dim(); ++i)
        for (int j = i + 1; j < L.dim(); ++j)
            if (!vec_is_zero(nijenhuis(L, J, i, j))) return false;
    return true;
}

bool pk_route_connection(const StructureRecord& rec) {
    require_compatible(rec);
    return is_parallel(levi_civita(rec.L, rec.g), rec.J);
}

bool pk_route_integrability(const StructureRecord& rec) {
    require_compatible(rec);
    return nijenhuis_vanishes(rec.L, rec.J) &&
           ce_differential(rec.L, kahler_form(rec)).is_zero();
}

bool is_pseudo_kahler(const StructureRecord& rec) {
    bool a = pk_route_connection(rec);
    bool b = pk_route_integrability(rec);
    if (a != b) throw Error("internal", "pseudo-Kahler routes disagree");
    return a;
}

bool is_abelian_complex(const LieAlgebra& L, const Matrix& J) {
    for (int i = 0; i < L.dim(); ++i)
        for (int j = i + 1; j < L.dim(); ++j) {
            Vec X = basis_vector(L.dim(), i), Y = basis_vector(L.dim(), j);
            if (!vec_is_zero(L.bracket(J.apply(X), J.apply(Y)) - L.bracket(X, Y))) return false;
        }
    return true;
}

bool is_abelian_para(const LieAlgebra& L, const Matrix& E) {
    for (int i = 0; i < L.dim(); ++i)
        for (int j = i + 1; j < L.dim(); ++j) {
            Vec X = basis_vector(L.dim(), i), Y = basis_vector(L.dim(), j);
            if (!vec_is_zero(L.bracket(E.apply(X), E.apply(Y)) + L.bracket(X, Y))) return false;
        }
    return true;
}

HsResult is_hypersymplectic(const StructureRecord& rec) {
    HsResult out;
    if (!rec.E) {
        out.violations.push_back("record carries no E");
        return out;
    }
    out.violations = check_unitary_compat(rec.g, rec.J, rec.E).failures();
    if (!out.violations.empty()) return out;
    out.pseudo_kahler = is_pseudo_kahler(rec);
    out.e_parallel = is_parallel(levi_civita(rec.L, rec.g), *rec.E);
    out.value = out.pseudo_kahler && out.e_parallel;
    return out;
}

bool is_kodaira_type(const LieAlgebra& L, const Matrix& J) {
    auto step = nilpotency_step(L);
    if (!step || *step != 2) return false;
    Subspace z = center(L);
    if (2 * z.dim() != L.dim()) return false;
    for (const auto& v : z.basis())
        if (!z.contains(J.apply(v))) return false;
    return true;
}

}  // namespace liegeo

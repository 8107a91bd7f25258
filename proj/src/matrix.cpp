#include "liegeo/matrix.hpp"

#include <sstream>

namespace liegeo {

Vec operator+(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw Error("dimension", "vector size mismatch");
    Vec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Vec operator-(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw Error("dimension", "vector size mismatch");
    Vec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

Vec operator*(const Rat& s, const Vec& v) {
    Vec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
    return out;
}

bool vec_is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!is_zero(x)) return false;
    return true;
}

Vec basis_vector(int dim, int i) {
    Vec v(dim);
    v[i] = 1;
    return v;
}

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = int(rows.size());
    cols_ = rows_ ? int(rows.begin()->size()) : 0;
    a_.resize(size_t(rows_) * cols_);
    int i = 0;
    for (const auto& r : rows) {
        if (int(r.size()) != cols_) throw Error("matrix", "ragged initializer");
        int j = 0;
        for (long v : r) at(i, j++) = v;
        ++i;
    }
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::diag(const Vec& d) {
    Matrix m(int(d.size()), int(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m.at(int(i), int(i)) = d[i];
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Rat Matrix::trace() const {
    if (!is_square()) throw Error("matrix", "trace of non-square matrix");
    Rat s = 0;
    for (int i = 0; i < rows_; ++i) s += at(i, i);
    return s;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!liegeo::is_zero(x)) return false;
    return true;
}

bool Matrix::is_symmetric() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

Vec Matrix::col(int j) const {
    Vec v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

Vec Matrix::row(int i) const {
    Vec v(cols_);
    for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

void Matrix::set_col(int j, const Vec& v) {
    if (int(v.size()) != rows_) throw Error("dimension", "column size mismatch");
    for (int i = 0; i < rows_; ++i) at(i, j) = v[i];
}

void Matrix::set_block(int i, int j, const Matrix& b) {
    if (i + b.rows_ > rows_ || j + b.cols_ > cols_) throw Error("dimension", "block out of range");
    for (int r = 0; r < b.rows_; ++r)
        for (int c = 0; c < b.cols_; ++c) at(i + r, j + c) = b.at(r, c);
}

Matrix Matrix::block(int i, int j, int r, int c) const {
    if (i + r > rows_ || j + c > cols_) throw Error("dimension", "block out of range");
    Matrix b(r, c);
    for (int rr = 0; rr < r; ++rr)
        for (int cc = 0; cc < c; ++cc) b.at(rr, cc) = at(i + rr, j + cc);
    return b;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("dimension", "matrix size mismatch");
    Matrix out(a.rows_, a.cols_);
    for (size_t i = 0; i < a.a_.size(); ++i) out.a_[i] = a.a_[i] + b.a_[i];
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("dimension", "matrix size mismatch");
    Matrix out(a.rows_, a.cols_);
    for (size_t i = 0; i < a.a_.size(); ++i) out.a_[i] = a.a_[i] - b.a_[i];
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error("dimension", "matrix product mismatch");
    Matrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Rat& aik = a.at(i, k);
            if (is_zero(aik)) continue;
            for (int j = 0; j < b.cols_; ++j) out.at(i, j) += aik * b.at(k, j);
        }
    return out;
}

Matrix operator*(const Rat& s, const Matrix& a) {
    Matrix out(a.rows_, a.cols_);
    for (size_t i = 0; i < a.a_.size(); ++i) out.a_[i] = s * a.a_[i];
    return out;
}

Matrix operator-(const Matrix& a) { return Rat(-1) * a; }

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

Vec Matrix::apply(const Vec& v) const {
    if (int(v.size()) != cols_) throw Error("dimension", "matrix-vector mismatch");
    Vec out(rows_);
    for (int j = 0; j < cols_; ++j) {
        if (is_zero(v[j])) continue;
        for (int i = 0; i < rows_; ++i) out[i] += at(i, j) * v[j];
    }
    return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix block_diag(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), a.cols(), b);
    return m;
}

std::string matrix_str(const Matrix& m) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (int j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << rat_str(m.at(i, j));
        os << "]";
    }
    os << "]";
    return os.str();
}

}  // namespace liegeo

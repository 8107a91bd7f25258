#pragma once

#include <initializer_list>
#include <vector>

#include "liegeo/rational.hpp"

namespace liegeo {

using Vec = std::vector<Rat>;

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rat& s, const Vec& v);
bool vec_is_zero(const Vec& v);
Vec basis_vector(int dim, int i);  // 0-based index

// Dense row-major matrix of exact rationals acting on column vectors;
// composition f∘g is the product f*g.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {
        if (rows < 0 || cols < 0) throw Error("matrix", "negative dimension");
    }
    // Row-major integer initializer, convenient for catalog data.
    Matrix(std::initializer_list<std::initializer_list<long>> rows);

    static Matrix identity(int n);
    static Matrix zero(int n) { return Matrix(n, n); }
    static Matrix diag(const Vec& d);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    Matrix transpose() const;
    Rat trace() const;
    bool is_zero() const;
    bool is_symmetric() const;
    bool is_square() const { return rows_ == cols_; }

    Vec col(int j) const;
    Vec row(int i) const;
    void set_col(int j, const Vec& v);

    // Writes `b` into this matrix with upper-left corner at (i, j).
    void set_block(int i, int j, const Matrix& b);
    Matrix block(int i, int j, int r, int c) const;

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Rat& s, const Matrix& a);
    friend Matrix operator-(const Matrix& a);
    friend bool operator==(const Matrix& a, const Matrix& b);

    Vec apply(const Vec& v) const;

private:
    int rows_, cols_;
    std::vector<Rat> a_;
};

Matrix commutator(const Matrix& a, const Matrix& b);
Matrix block_diag(const Matrix& a, const Matrix& b);

std::string matrix_str(const Matrix& m);

}  // namespace liegeo

#pragma once

#include "leibrack/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace leibrack {

using Vec = std::vector<Rational>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero_vec(const Vec& v);
Vec& add_assign(Vec& a, const Vec& b);
Vec& sub_assign(Vec& a, const Vec& b);
Vec scaled(const Vec& v, const Rational& s);

/// Dense row-major matrix of exact rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vec>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    Vec row(std::size_t r) const;
    void set_row(std::size_t r, const Vec& v);
    Vec col(std::size_t c) const;
    void swap_rows(std::size_t i, std::size_t j);

    bool is_zero() const;
    Matrix transpose() const;

    /// Matrix-vector product m·x.
    Vec apply(const Vec& x) const;

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

struct Rref {
    Matrix m;
    std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form with pivot columns; row space is preserved.
Rref rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Basis of {x : m·x = 0}; dim = cols - rank.
std::vector<Vec> nullspace_basis(const Matrix& m);

/// Any x with a·x = b, or nullopt if the system is inconsistent.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

/// Exact inverse of a square matrix, or nullopt if singular.
std::optional<Matrix> inverse(const Matrix& m);

}  // namespace leibrack

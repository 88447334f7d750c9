#include "leibrack/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace leibrack {

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
    Vec v(n);
    v[i] = Rational(1);
    return v;
}

bool is_zero_vec(const Vec& v) {
    for (const auto& x : v) {
        if (!x.is_zero()) return false;
    }
    return true;
}

Vec& add_assign(Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

Vec& sub_assign(Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

Vec scaled(const Vec& v, const Rational& s) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * s;
    return r;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return Matrix();
    Matrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged rows");
        for (std::size_t c = 0; c < m.cols_; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

Vec Matrix::row(std::size_t r) const {
    Vec v(cols_);
    for (std::size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
    return v;
}

void Matrix::set_row(std::size_t r, const Vec& v) {
    if (v.size() != cols_) throw std::invalid_argument("row size mismatch");
    for (std::size_t c = 0; c < cols_; ++c) at(r, c) = v[c];
}

Vec Matrix::col(std::size_t c) const {
    Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

void Matrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

bool Matrix::is_zero() const {
    for (const auto& x : a_) {
        if (!x.is_zero()) return false;
    }
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

Vec Matrix::apply(const Vec& x) const {
    if (x.size() != cols_) throw std::invalid_argument("matrix apply: size mismatch");
    Vec y(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Rational s;
        for (std::size_t c = 0; c < cols_; ++c) {
            if (!at(r, c).is_zero() && !x[c].is_zero()) s += at(r, c) * x[c];
        }
        y[r] = s;
    }
    return y;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product: size mismatch");
    Matrix p(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& v = at(r, k);
            if (v.is_zero()) continue;
            for (std::size_t c = 0; c < o.cols_; ++c) {
                if (!o.at(k, c).is_zero()) p.at(r, c) += v * o.at(k, c);
            }
        }
    }
    return p;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum: size mismatch");
    Matrix s(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] + o.a_[i];
    return s;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix diff: size mismatch");
    Matrix s(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] - o.a_[i];
    return s;
}

Rref rref(const Matrix& m) {
    Rref r{m, {}};
    std::size_t lead = 0;
    for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
        // first nonzero entry in this column at or below `lead`
        std::size_t piv = lead;
        while (piv < m.rows() && r.m.at(piv, col).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        r.m.swap_rows(lead, piv);
        Rational inv = r.m.at(lead, col).inv();
        for (std::size_t c = col; c < m.cols(); ++c) r.m.at(lead, c) *= inv;
        for (std::size_t row = 0; row < m.rows(); ++row) {
            if (row == lead || r.m.at(row, col).is_zero()) continue;
            Rational f = r.m.at(row, col);
            for (std::size_t c = col; c < m.cols(); ++c) {
                r.m.at(row, c) -= f * r.m.at(lead, c);
            }
        }
        r.pivots.push_back(col);
        ++lead;
    }
    return r;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<Vec> nullspace_basis(const Matrix& m) {
    Rref r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : r.pivots) is_pivot[p] = true;

    std::vector<Vec> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v(m.cols());
        v[f] = Rational(1);
        for (std::size_t row = 0; row < r.pivots.size(); ++row) {
            v[r.pivots[row]] = -r.m.at(row, f);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: square matrix required");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, n + r) = Rational(1);
    }
    Rref red = rref(aug);
    for (std::size_t r = 0; r < n; ++r) {
        if (r >= red.pivots.size() || red.pivots[r] != r) return std::nullopt;
    }
    Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = red.m.at(r, n + c);
    return inv;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
    if (a.rows() != b.size()) throw std::invalid_argument("solve: size mismatch");
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols()) = b[r];
    }
    Rref red = rref(aug);
    Vec x(a.cols());
    for (std::size_t row = 0; row < red.pivots.size(); ++row) {
        if (red.pivots[row] == a.cols()) return std::nullopt;  // pivot in the rhs column
        x[red.pivots[row]] = red.m.at(row, a.cols());
    }
    return x;
}

}  // namespace leibrack

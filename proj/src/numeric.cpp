#include "leibrack/numeric.hpp"

#include <cmath>
#include <stdexcept>

namespace leibrack {

DMatrix DMatrix::identity(std::size_t n) {
    DMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

DMatrix DMatrix::operator*(const DMatrix& o) const {
    if (cols != o.rows) throw std::invalid_argument("dmatrix product: size mismatch");
    DMatrix p(rows, o.cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t k = 0; k < cols; ++k) {
            double v = at(r, k);
            if (v == 0.0) continue;
            for (std::size_t c = 0; c < o.cols; ++c) p.at(r, c) += v * o.at(k, c);
        }
    return p;
}

DMatrix DMatrix::operator+(const DMatrix& o) const {
    if (rows != o.rows || cols != o.cols) throw std::invalid_argument("dmatrix sum: size mismatch");
    DMatrix s = *this;
    for (std::size_t i = 0; i < a.size(); ++i) s.a[i] += o.a[i];
    return s;
}

DMatrix DMatrix::operator-(const DMatrix& o) const {
    if (rows != o.rows || cols != o.cols) throw std::invalid_argument("dmatrix diff: size mismatch");
    DMatrix s = *this;
    for (std::size_t i = 0; i < a.size(); ++i) s.a[i] -= o.a[i];
    return s;
}

DMatrix DMatrix::scaled(double s) const {
    DMatrix m = *this;
    for (double& v : m.a) v *= s;
    return m;
}

DMatrix DMatrix::transpose() const {
    DMatrix t(cols, rows);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
    return t;
}

double DMatrix::max_abs() const {
    double m = 0.0;
    for (double v : a) m = std::max(m, std::fabs(v));
    return m;
}

bool DMatrix::is_exactly_zero() const {
    for (double v : a) {
        if (v != 0.0) return false;
    }
    return true;
}

DVec matvec(const DMatrix& m, const DVec& x) {
    if (x.size() != m.cols) throw std::invalid_argument("matvec: size mismatch");
    DVec y(m.rows, 0.0);
    for (std::size_t r = 0; r < m.rows; ++r)
        for (std::size_t c = 0; c < m.cols; ++c) y[r] += m.at(r, c) * x[c];
    return y;
}

double max_abs_diff(const DMatrix& a, const DMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("max_abs_diff: size mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.a.size(); ++i) m = std::max(m, std::fabs(a.a[i] - b.a[i]));
    return m;
}

double vec_max_abs(const DVec& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::fabs(x));
    return m;
}

double vec_max_abs_diff(const DVec& a, const DVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_max_abs_diff: size mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::fabs(a[i] - b[i]));
    return m;
}

double vec_norm(const DVec& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

DVec vec_scaled(const DVec& v, double s) {
    DVec r = v;
    for (double& x : r) x *= s;
    return r;
}

DMatrix expm(const DMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("expm: square matrix required");
    const std::size_t n = m.rows;

    // Nilpotent shortcut: the truncated sum is exact.
    {
        DMatrix p = m;
        std::size_t k = 1;
        while (k <= n && !p.is_exactly_zero()) {
            p = p * m;
            ++k;
        }
        if (k <= n) {
            DMatrix sum = DMatrix::identity(n);
            DMatrix term = DMatrix::identity(n);
            for (std::size_t i = 1; i < k; ++i) {
                term = (term * m).scaled(1.0 / static_cast<double>(i));
                sum = sum + term;
            }
            return sum;
        }
    }

    int squarings = 0;
    double norm = m.max_abs() * static_cast<double>(n);
    while (norm > 0.5 && squarings < 60) {
        norm *= 0.5;
        ++squarings;
    }
    DMatrix t = m.scaled(std::ldexp(1.0, -squarings));

    DMatrix sum = DMatrix::identity(n);
    DMatrix term = DMatrix::identity(n);
    for (int i = 1; i <= 40; ++i) {
        term = (term * t).scaled(1.0 / i);
        sum = sum + term;
        if (term.max_abs() <= 1e-18 * sum.max_abs()) break;
    }
    for (int i = 0; i < squarings; ++i) sum = sum * sum;
    return sum;
}

std::optional<DMatrix> inverse(const DMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("inverse: square matrix required");
    const std::size_t n = m.rows;
    DMatrix a = m;
    DMatrix inv = DMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::fabs(a.at(r, col)) > std::fabs(a.at(piv, col))) piv = r;
        }
        if (a.at(piv, col) == 0.0) return std::nullopt;
        if (piv != col) {
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(a.a[piv * n + c], a.a[col * n + c]);
                std::swap(inv.a[piv * n + c], inv.a[col * n + c]);
            }
        }
        double d = 1.0 / a.at(col, col);
        for (std::size_t c = 0; c < n; ++c) {
            a.at(col, c) *= d;
            inv.at(col, c) *= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a.at(r, col) == 0.0) continue;
            double f = a.at(r, col);
            for (std::size_t c = 0; c < n; ++c) {
                a.at(r, c) -= f * a.at(col, c);
                inv.at(r, c) -= f * inv.at(col, c);
            }
        }
    }
    return inv;
}

std::optional<DVec> solve_dense(DMatrix m, DVec b) {
    if (m.rows != m.cols || b.size() != m.rows) throw std::invalid_argument("solve_dense: size mismatch");
    const std::size_t n = m.rows;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::fabs(m.at(r, col)) > std::fabs(m.at(piv, col))) piv = r;
        }
        if (m.at(piv, col) == 0.0) return std::nullopt;
        if (piv != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(m.a[piv * n + c], m.a[col * n + c]);
            std::swap(b[piv], b[col]);
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            double f = m.at(r, col) / m.at(col, col);
            if (f == 0.0) continue;
            for (std::size_t c = col; c < n; ++c) m.at(r, c) -= f * m.at(col, c);
            b[r] -= f * b[col];
        }
    }
    DVec x(n, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t c = i + 1; c < n; ++c) s -= m.at(i, c) * x[c];
        x[i] = s / m.at(i, i);
    }
    return x;
}

std::optional<DVec> span_coordinates(const std::vector<DMatrix>& basis, const DMatrix& target,
                                     double* residual) {
    const std::size_t k = basis.size();
    if (k == 0) {
        // Empty span: the best approximation is zero and the caller reads the
        // residual to judge it.
        if (residual) *residual = target.max_abs();
        return DVec{};
    }
    auto dot = [](const DMatrix& a, const DMatrix& b) {
        double s = 0.0;
        for (std::size_t i = 0; i < a.a.size(); ++i) s += a.a[i] * b.a[i];
        return s;
    };
    DMatrix gram(k, k);
    DVec rhs(k, 0.0);
    for (std::size_t p = 0; p < k; ++p) {
        for (std::size_t q = 0; q < k; ++q) gram.at(p, q) = dot(basis[p], basis[q]);
        rhs[p] = dot(basis[p], target);
    }
    std::optional<DVec> coords = solve_dense(gram, rhs);
    if (!coords) return std::nullopt;
    if (residual) {
        DMatrix rec(target.rows, target.cols);
        for (std::size_t p = 0; p < k; ++p) rec = rec + basis[p].scaled((*coords)[p]);
        *residual = max_abs_diff(rec, target);
    }
    return coords;
}

DVec Rng::vec(std::size_t n) {
    DVec v(n);
    for (double& x : v) x = uniform();
    return v;
}

DVec Rng::unit(std::size_t n) {
    DVec v = vec(n);
    double norm = vec_norm(v);
    if (norm < 1e-12) {
        v.assign(n, 0.0);
        if (n > 0) v[0] = 1.0;
        return v;
    }
    return vec_scaled(v, 1.0 / norm);
}

}  // namespace leibrack

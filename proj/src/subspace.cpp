#include "leibrack/subspace.hpp"

#include <stdexcept>

namespace leibrack {

Subspace Subspace::zero(std::size_t ambient) {
    Subspace s;
    s.ambient_ = ambient;
    return s;
}

Subspace Subspace::full(std::size_t ambient) {
    Subspace s;
    s.ambient_ = ambient;
    for (std::size_t i = 0; i < ambient; ++i) {
        s.basis_.push_back(unit_vec(ambient, i));
        s.pivots_.push_back(i);
    }
    return s;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& generators) {
    Subspace s;
    s.ambient_ = ambient;
    if (generators.empty()) return s;
    for (const Vec& g : generators) {
        if (g.size() != ambient) throw std::invalid_argument("subspace: generator size mismatch");
    }
    Rref r = rref(Matrix::from_rows(generators));
    for (std::size_t row = 0; row < r.pivots.size(); ++row) {
        s.basis_.push_back(r.m.row(row));
    }
    s.pivots_ = r.pivots;
    return s;
}

Vec Subspace::reduce(const Vec& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("subspace: vector size mismatch");
    Vec r = v;
    for (std::size_t row = 0; row < basis_.size(); ++row) {
        const Rational& coeff = r[pivots_[row]];
        if (coeff.is_zero()) continue;
        Rational f = coeff;  // basis rows have unit pivots
        sub_assign(r, scaled(basis_[row], f));
    }
    return r;
}

bool Subspace::contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) return false;
    for (const Vec& b : other.basis_) {
        if (!contains(b)) return false;
    }
    return true;
}

std::vector<std::size_t> Subspace::complement_coords() const {
    std::vector<bool> is_pivot(ambient_, false);
    for (std::size_t p : pivots_) is_pivot[p] = true;
    std::vector<std::size_t> coords;
    for (std::size_t i = 0; i < ambient_; ++i) {
        if (!is_pivot[i]) coords.push_back(i);
    }
    return coords;
}

std::pair<Subspace, Subspace> sum_and_intersection(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim()) {
        throw std::invalid_argument("sum_and_intersection: ambient mismatch");
    }
    const std::size_t n = u.ambient_dim();

    std::vector<Vec> all = u.basis();
    for (const Vec& b : v.basis()) all.push_back(b);
    Subspace sum = Subspace::span(n, all);

    // x in u∩v  <=>  x = sum_i a_i u_i = sum_j b_j v_j. Solve for the nullspace
    // of the n x (k+l) matrix whose columns are the u_i and -v_j.
    const std::size_t k = u.dim(), l = v.dim();
    Matrix m(n, k + l);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t r = 0; r < n; ++r) m.at(r, i) = u.basis()[i][r];
    for (std::size_t j = 0; j < l; ++j)
        for (std::size_t r = 0; r < n; ++r) m.at(r, k + j) = -v.basis()[j][r];

    std::vector<Vec> inter_gens;
    for (const Vec& ab : nullspace_basis(m)) {
        Vec x(n);
        for (std::size_t i = 0; i < k; ++i) add_assign(x, scaled(u.basis()[i], ab[i]));
        inter_gens.push_back(std::move(x));
    }
    Subspace inter = Subspace::span(n, inter_gens);
    return {sum, inter};
}

Subspace nullspace(const Matrix& m) { return Subspace::span(m.cols(), nullspace_basis(m)); }

}  // namespace leibrack

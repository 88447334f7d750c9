#pragma once

#include "leibrack/matrix.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace leibrack {

/// Linear subspace of Q^n held as a reduced row-echelon basis, so equal
/// subspaces compare equal structurally.
class Subspace {
public:
    Subspace() = default;
    static Subspace zero(std::size_t ambient);
    static Subspace full(std::size_t ambient);
    static Subspace span(std::size_t ambient, const std::vector<Vec>& generators);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }

    const std::vector<Vec>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Residual of v after eliminating all pivot coordinates; zero iff v lies
    /// in the subspace.
    Vec reduce(const Vec& v) const;

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;

    /// Ambient coordinates that are not pivot columns; standard basis vectors
    /// at these coordinates form a complement.
    std::vector<std::size_t> complement_coords() const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    std::size_t ambient_ = 0;
    std::vector<Vec> basis_;
    std::vector<std::size_t> pivots_;
};

/// (u+v, u∩v). Grassmann: dim u + dim v = dim(u+v) + dim(u∩v).
std::pair<Subspace, Subspace> sum_and_intersection(const Subspace& u, const Subspace& v);

Subspace nullspace(const Matrix& m);

}  // namespace leibrack

#pragma once

#include "leibrack/leibniz.hpp"
#include "leibrack/numeric.hpp"

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

namespace leibrack {

/// Pointed magma table. Rack axioms:
///   1. x∘(y∘z) = (x∘y)∘(x∘z)          (left distributivity)
///   2. each row is a permutation       (a∘x = b uniquely solvable)
///   3. point∘x = x and x∘point = point
struct FiniteRack {
    std::size_t size = 0;
    std::size_t point = 0;
    std::vector<std::vector<std::size_t>> table;

    std::size_t op(std::size_t x, std::size_t y) const { return table[x][y]; }
};

struct RackReport {
    std::vector<std::array<std::size_t, 3>> distrib_violations;
    std::vector<std::size_t> non_permutation_rows;
    std::vector<std::size_t> point_left_violations;   // point∘x != x
    std::vector<std::size_t> point_right_violations;  // x∘point != point
    bool ok() const {
        return distrib_violations.empty() && non_permutation_rows.empty() &&
               point_left_violations.empty() && point_right_violations.empty();
    }
};

RackReport check_rack(const FiniteRack& q);

/// Left translation y -> x∘y as a permutation vector.
std::vector<std::size_t> phi(const FiniteRack& q, std::size_t x);

struct FiniteGroup {
    std::size_t size = 0;
    std::size_t unit = 0;
    std::vector<std::vector<std::size_t>> table;
    std::vector<std::size_t> inv;

    std::size_t op(std::size_t x, std::size_t y) const { return table[x][y]; }
};

struct GroupReport {
    std::vector<std::array<std::size_t, 3>> assoc_violations;
    std::vector<std::size_t> unit_violations;
    std::vector<std::size_t> inverse_violations;
    bool ok() const {
        return assoc_violations.empty() && unit_violations.empty() && inverse_violations.empty();
    }
};

GroupReport check_group(const FiniteGroup& g);

/// x∘y = xyx⁻¹ with the group unit as point. Throws on invalid groups.
FiniteRack conjugation_rack(const FiniteGroup& g);

FiniteGroup cyclic_group(std::size_t n);
FiniteGroup klein_four_group();
FiniteGroup symmetric_group_3();
FiniteGroup dihedral_group_8();
FiniteGroup quaternion_group();
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

/// All groups of the given order up to isomorphism (order <= 8).
std::vector<FiniteGroup> small_groups(std::size_t order);

bool groups_isomorphic(const FiniteGroup& a, const FiniteGroup& b);

/// Relabelings along a permutation p: new(p(x), p(y)) = p(old(x, y)).
FiniteGroup relabel_group(const FiniteGroup& g, const std::vector<std::size_t>& p);
FiniteRack relabel_rack(const FiniteRack& q, const std::vector<std::size_t>& p);

// ---------------------------------------------------------------------------
// Float-valued rack operations, shared with the linear Lie rack module.

/// Structure constants over doubles, for rack constructions on algebras whose
/// identities hold only up to rounding.
struct FloatAlgebra {
    std::size_t dim = 0;
    std::vector<double> c;

    explicit FloatAlgebra(std::size_t n = 0) : dim(n), c(n * n * n, 0.0) {}

    double cijk(std::size_t i, std::size_t j, std::size_t k) const {
        return c[(i * dim + j) * dim + k];
    }
    void set(std::size_t i, std::size_t j, std::size_t k, double v) {
        c[(i * dim + j) * dim + k] = v;
    }

    DVec bracket(const DVec& x, const DVec& y) const;
    DMatrix ad(const DVec& x) const;
};

FloatAlgebra to_float(const LeibnizAlgebra& g);

/// Max residual of the left-derivation identity over all basis triples.
double max_leibniz_residual(const FloatAlgebra& g);

/// X∘Y = exp(ad X)·Y. Requires the float Leibniz residual below tol_axiom.
DVec exp_ad_rack_op(const FloatAlgebra& g, const DVec& x, const DVec& y,
                    double tol_axiom = kTolRack);

/// Conjugation in the tangent-bundle group of a matrix group:
/// (X,a)∘(Y,b) = (X + aYa⁻¹ - a⁻¹Xa, aba⁻¹). Throws on singular a.
std::pair<DMatrix, DMatrix> tangent_bundle_rack_op(const DMatrix& X, const DMatrix& a,
                                                   const DMatrix& Y, const DMatrix& b);

}  // namespace leibrack

#pragma once

#include "leibrack/matrix.hpp"
#include "leibrack/subspace.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace leibrack {

/// Finite-dimensional algebra over exact rationals given by structure
/// constants: [e_i, e_j] = sum_k c(i,j,k) e_k. The left-derivation identity
/// [X,[Y,Z]] = [[X,Y],Z] + [Y,[X,Z]] is checked on demand, not enforced by
/// construction, so the same type also carries deliberately broken tables.
class LeibnizAlgebra {
public:
    LeibnizAlgebra() = default;
    explicit LeibnizAlgebra(std::size_t dim, std::vector<std::string> basis_names = {});

    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& basis_names() const { return names_; }

    const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
        return c_[(i * dim_ + j) * dim_ + k];
    }
    void set_c(std::size_t i, std::size_t j, std::size_t k, Rational v) {
        c_[(i * dim_ + j) * dim_ + k] = std::move(v);
    }
    void set_basis_bracket(std::size_t i, std::size_t j, const Vec& value);
    Vec basis_bracket(std::size_t i, std::size_t j) const;

    Vec bracket(const Vec& x, const Vec& y) const;

    /// Matrix of Y -> [x, Y]; linear in x.
    Matrix ad_matrix(const Vec& x) const;
    Matrix ad_basis(std::size_t i) const;
    /// Matrix of Y -> [Y, e_i].
    Matrix right_mult_basis(std::size_t i) const;

    bool is_skew() const;

    friend bool operator==(const LeibnizAlgebra& a, const LeibnizAlgebra& b) {
        return a.dim_ == b.dim_ && a.c_ == b.c_;
    }

private:
    std::size_t dim_ = 0;
    std::vector<std::string> names_;
    std::vector<Rational> c_;
};

/// A Lie algebra is a Leibniz algebra whose table is skew-symmetric; consumers
/// that need skewness check it via is_skew().
using LieAlgebra = LeibnizAlgebra;

struct TripleViolation {
    std::size_t i = 0, j = 0, k = 0;
    Vec residual;
};

struct LeibnizReport {
    std::vector<TripleViolation> violations;  // sorted lexicographically by (i,j,k)
    bool ok() const { return violations.empty(); }
};

/// Checks the left-derivation identity on all basis triples.
LeibnizReport check_leibniz(const LeibnizAlgebra& g);

/// Smallest ideal containing all squares [x,x]; the quotient by it is the
/// largest skew-symmetric (Lie) quotient. Rejects non-Leibniz input.
Subspace squares_ideal(const LeibnizAlgebra& g);

/// {x : [x, y] = 0 for all y}, computed as one stacked nullspace.
Subspace ker_ad(const LeibnizAlgebra& g);

/// Center of a Lie algebra (skew input required).
Subspace lie_center(const LieAlgebra& h);

/// True iff [g, v] ⊆ v and [v, g] ⊆ v on basis generators.
bool is_ideal(const LeibnizAlgebra& g, const Subspace& v);

struct QuotientResult {
    LeibnizAlgebra algebra;
    Matrix projection;  // (quotient dim) x (ambient dim); rows give coordinates mod the ideal
};

/// Structure constants on the complement coordinates of the ideal; the
/// projection is an algebra homomorphism. Throws if the subspace is no ideal.
QuotientResult quotient(const LeibnizAlgebra& g, const Subspace& ideal);

struct SplittingResult {
    bool precondition_ok = false;
    std::string precondition_error;  // names the failing inclusion when not ok
    std::optional<Subspace> complement;
};

/// Searches for a Lie subalgebra h with g = e ⊕ h. Requires e to be an ideal
/// with squares_ideal(g) ⊆ e ⊆ ker_ad(g). Because e kills ad, the defect of a
/// fixed linear section is linear in the correction term, so solvability of a
/// single exact linear system decides existence completely.
SplittingResult find_splitting(const LeibnizAlgebra& g, const Subspace& e);

/// Module over a Lie algebra h, one matrix per basis element of h.
struct Representation {
    std::size_t module_dim = 0;
    std::vector<Matrix> rho;
};

struct RepDefect {
    std::size_t i = 0, j = 0;
};

/// First basis pair where rho([ei,ej]) != rho(ei)rho(ej) - rho(ej)rho(ei),
/// or nullopt when rep is valid.
std::optional<RepDefect> representation_defect(const LieAlgebra& h, const Representation& rep);

/// Algebra on V ⊕ h with bracket [u+X, v+Y] = Xv + [X,Y]; module coordinates
/// come first. Throws on invalid representations or non-skew h.
LeibnizAlgebra demisemidirect(const LieAlgebra& h, const Representation& rep);

/// Two associative products on one space, linked by the compatibility axioms
/// D1: x⊢(y⊣z) = (x⊢y)⊣z, D2: x⊣(y⊢z) = x⊣(y⊣z), D3: (x⊣y)⊢z = (x⊢y)⊢z.
struct Dialgebra {
    std::size_t dim = 0;
    std::vector<std::string> basis_names;
    std::vector<Rational> vdash_c, dashv_c;

    explicit Dialgebra(std::size_t n = 0)
        : dim(n), vdash_c(n * n * n), dashv_c(n * n * n) {}

    const Rational& vd(std::size_t i, std::size_t j, std::size_t k) const {
        return vdash_c[(i * dim + j) * dim + k];
    }
    const Rational& dv(std::size_t i, std::size_t j, std::size_t k) const {
        return dashv_c[(i * dim + j) * dim + k];
    }
    void set_vd(std::size_t i, std::size_t j, std::size_t k, Rational v) {
        vdash_c[(i * dim + j) * dim + k] = std::move(v);
    }
    void set_dv(std::size_t i, std::size_t j, std::size_t k, Rational v) {
        dashv_c[(i * dim + j) * dim + k] = std::move(v);
    }

    Vec vdash(const Vec& x, const Vec& y) const;
    Vec dashv(const Vec& x, const Vec& y) const;
};

struct DialgebraReport {
    std::vector<TripleViolation> assoc_vdash, assoc_dashv, d1, d2, d3;
    bool ok() const {
        return assoc_vdash.empty() && assoc_dashv.empty() && d1.empty() && d2.empty() && d3.empty();
    }
};

DialgebraReport check_dialgebra(const Dialgebra& d);

/// Leibniz bracket [x,y] = x⊢y - y⊣x. Throws if the dialgebra axioms fail.
LeibnizAlgebra dialgebra_bracket(const Dialgebra& d);

/// First basis pair where D[ei,ej] != [D ei, ej] + [ei, D ej], or nullopt.
std::optional<RepDefect> derivation_defect(const LieAlgebra& h, const Matrix& d);

/// Bracket twist [X,Y]_D = [X, DY] for a derivation D with D² = 0; throws
/// with a witness when either condition fails.
LeibnizAlgebra d_twist(const LieAlgebra& h, const Matrix& d);

}  // namespace leibrack

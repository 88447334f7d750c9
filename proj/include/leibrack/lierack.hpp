#pragma once

#include "leibrack/leibniz.hpp"
#include "leibrack/numeric.hpp"
#include "leibrack/rack.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace leibrack {

/// A group element of V×H realized twice: as an ambient matrix in H ⊆ GL(m)
/// and as its action on the module V. Both are built from the same
/// exponential word, so they stay consistent.
struct GroupElement {
    DMatrix ambient;
    DMatrix on_module;
};

/// Matrix model of a Lie group H acting on a module V: a basis of the Lie
/// algebra inside gl(m) together with the matching representation matrices on
/// V. Group elements are generated as exponentials of algebra elements; no
/// global chart is modeled.
struct LinearLieGroupModel {
    std::size_t ambient_dim = 0;
    std::vector<DMatrix> lie_basis;  // m×m
    std::size_t module_dim = 0;
    std::vector<DMatrix> rho_basis;  // d×d, aligned with lie_basis

    std::size_t alg_dim() const { return lie_basis.size(); }
    std::size_t tangent_dim() const { return module_dim + alg_dim(); }

    DMatrix alg_element(const DVec& coords) const;
    DMatrix rho_element(const DVec& coords) const;
    GroupElement exp_element(const DVec& coords) const;
    GroupElement identity_element() const;
};

struct ModelReport {
    double closure_residual = 0.0;  // [X_i,X_j] leaving the span of the basis
    double rep_residual = 0.0;      // rho([X_i,X_j]) vs [rho X_i, rho X_j]
    bool basis_independent = true;
    bool ok(double tol = kTolModel) const {
        return basis_independent && closure_residual <= tol && rep_residual <= tol;
    }
};

ModelReport check_model(const LinearLieGroupModel& model);

/// Structure constants of the model's Lie algebra, recovered from
/// commutators of the basis matrices.
FloatAlgebra model_lie_constants(const LinearLieGroupModel& model);

/// Closed-form tangent constants on V ⊕ h: [u+X, v+Y] = Xv + [X,Y] with the
/// module coordinates first.
FloatAlgebra model_closed_form_bracket(const LinearLieGroupModel& model);

struct RackPoint {
    DVec v;
    GroupElement g;
};

/// (u,A)∘(v,B) = (Av, ABA⁻¹). Throws on singular group part.
RackPoint rack_op(const LinearLieGroupModel& model, const RackPoint& x, const RackPoint& y);

/// ((u,A)⊢(v,B), (u,A)⊣(v,B)) = ((Av, AB), (u, AB)).
std::pair<RackPoint, RackPoint> digroup_ops(const LinearLieGroupModel& model, const RackPoint& x,
                                            const RackPoint& y);

/// (u,A)⁻¹ = (0, A⁻¹).
RackPoint digroup_inv(const LinearLieGroupModel& model, const RackPoint& x);

/// Tangent map of y -> x∘y at the unit, as a matrix on V ⊕ h coordinates.
/// Closed form: block-diag(A, Ad(A)) with Ad(A)X = AXA⁻¹.
DMatrix big_phi_closed(const LinearLieGroupModel& model, const RackPoint& x,
                       double* projection_residual = nullptr);

/// Same map by central finite differences along tangent basis curves;
/// `projection_residual` reports the off-algebra component of the chart.
DMatrix big_phi_fd(const LinearLieGroupModel& model, const RackPoint& x, double step,
                   double* projection_residual = nullptr);

struct DiffOptions {
    double phi_step = kPhiStep;
    double outer_step = kOuterStep;
    std::uint64_t seed = kDefaultSeed;
    std::size_t samples = 50;
};

struct TangentBracketResult {
    FloatAlgebra bracket;                  // estimated constants on V ⊕ h
    double dev_from_closed_form = 0.0;     // vs Xv + [X,Y]
    double leibniz_residual = 0.0;         // of the estimated constants
    double phi_fd_vs_closed = 0.0;         // sampled first-derivative cross-check
    double phi_automorphism_residual = 0.0;
};

/// Differentiates the rack operation twice: first differences give Phi, a
/// second central difference of s -> Phi(s·w, exp(sX)) gives ad, whose
/// columns are the tangent structure constants.
TangentBracketResult tangent_bracket(const LinearLieGroupModel& model, const DiffOptions& opts = {});

struct RoundtripReport {
    bool realizable = false;
    std::string error;
    double dev_from_input = 0.0;   // estimated constants vs the input algebra
    double leibniz_residual = 0.0;
    double phi_fd_vs_closed = 0.0;
    bool pass(double tol_bracket = kTolBracket, double tol_phi = kTolPhi) const {
        return realizable && dev_from_input <= tol_bracket && leibniz_residual <= tol_bracket &&
               phi_fd_vs_closed <= tol_phi;
    }
};

/// Given a verified splitting g = e ⊕ h, builds a float model whose rack
/// differentiates back to g: h is realized as block-diag(action on e, ad on h,
/// first-row embedding of h/[h,h]); the last block repairs faithfulness for
/// abelian directions that act trivially. Reports non-realizable inputs
/// instead of guessing a representation.
RoundtripReport verify_split_rack_roundtrip(const LeibnizAlgebra& g, const Subspace& e,
                                            const Subspace& h, const DiffOptions& opts = {});

LinearLieGroupModel so3_standard_model();
LinearLieGroupModel ex22_model();
LinearLieGroupModel abelian_trivial_model();

}  // namespace leibrack

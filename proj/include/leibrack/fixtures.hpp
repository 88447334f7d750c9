#pragma once

#include "leibrack/digroup.hpp"
#include "leibrack/leibniz.hpp"
#include "leibrack/lierack.hpp"
#include "leibrack/rack.hpp"

#include <optional>
#include <string>
#include <vector>

namespace leibrack {

// Exact algebras ------------------------------------------------------------

/// 3-dim algebra on R² ⊕ span{strictly-upper 2×2}: only nonzero bracket is
/// [e3, e2] = e1.
LeibnizAlgebra ex22_algebra();

/// 10-dim algebra on R² ⊕ gl(2) ⊕ gl(2) where only the second gl factor acts
/// on the module: [u+X+Y, v+U+W] = Yv + [X,U] + [Y,W].
LeibnizAlgebra ex21_n2_algebra();

/// Heisenberg Lie algebra: [x,y] = z = -[y,x].
LieAlgebra heisenberg_lie();

/// Derivation y -> x (x,z -> 0) of the Heisenberg algebra; squares to zero.
Matrix heisenberg_twist_derivation();

/// The twisted bracket [a,b]_D = [a, Db]: its only products are
/// [a,b]_D = -a_y b_y z, so squares appear and no ideal splits it.
LeibnizAlgebra heisenberg_dtwist_algebra();

/// so(3) with [L1,L2] = L3 cyclically.
LieAlgebra so3_lie();

LieAlgebra abelian_lie(std::size_t dim);

/// gl(n) as a Lie algebra in the basis E_11, E_12, ..., E_nn.
LieAlgebra gl_lie(std::size_t n);

/// Standard representation of gl(n) on R^n (matrices act as themselves).
Representation gl_standard_representation(std::size_t n);

Representation so3_standard_representation();

// Dialgebras ----------------------------------------------------------------

/// V ⊕ End(V) with (u,X)⊢(v,Y) = (Xv, XY) and (u,X)⊣(v,Y) = (0, XY).
Dialgebra ex23_dialgebra(std::size_t v_dim);

// Finite structures ----------------------------------------------------------

/// Order-6 digroup on M×H with M = {e,a,b}, H = Z2 swapping a and b.
FiniteDigroup standard6_digroup();

/// Order-24 digroup on M×H with M = {e,a,b,c} and H = S3 permuting {a,b,c}.
FiniteDigroup standard24_digroup();

/// A group (Z2) packaged as a digroup with ⊢ = ⊣.
FiniteDigroup z2_group_digroup();

FiniteRack one_element_rack();
/// x∘y = y on n elements: the trivial rack (conjugation in any abelian group).
FiniteRack trivial_rack(std::size_t n);

// Name registries used by the CLI; names also accepted wherever files are.

std::optional<LeibnizAlgebra> builtin_algebra(const std::string& name);
std::optional<Dialgebra> builtin_dialgebra(const std::string& name);
std::optional<FiniteRack> builtin_rack(const std::string& name);
std::optional<FiniteDigroup> builtin_digroup(const std::string& name);
std::optional<LinearLieGroupModel> builtin_model(const std::string& name);
std::vector<std::string> builtin_names();

}  // namespace leibrack

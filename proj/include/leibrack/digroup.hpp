#pragma once

#include "leibrack/rack.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace leibrack {

/// Two associative operations with compatibility axioms:
///   G1: (G,⊢) and (G,⊣) are semigroups
///   G2: x⊢(y⊣z) = (x⊢y)⊣z
///   G3: x⊣(y⊢z) = x⊣(y⊣z)
///   G4: (x⊣y)⊢z = (x⊢y)⊢z
///   G5: 1⊢x = x⊣1 = x
///   G6: x⊢x⁻¹ = x⁻¹⊣x = 1
/// The inverse map is stored, not derived; its uniqueness is a consequence of
/// the axioms and is verified by check_digroup.
struct FiniteDigroup {
    std::size_t size = 0;
    std::size_t unit = 0;
    std::vector<std::vector<std::size_t>> vdash, dashv;
    std::vector<std::size_t> inv;

    std::size_t vd(std::size_t x, std::size_t y) const { return vdash[x][y]; }
    std::size_t dv(std::size_t x, std::size_t y) const { return dashv[x][y]; }
    std::size_t conj(std::size_t x, std::size_t y) const { return dv(vd(x, y), inv[x]); }
};

struct DigroupReport {
    std::vector<std::array<std::size_t, 3>> g1_vdash, g1_dashv, g2, g3, g4;
    std::vector<std::size_t> g5, g6;
    std::vector<std::size_t> non_unique_inverse;  // x where {y : x⊢y = 1, y⊣x = 1} != {inv[x]}
    bool is_group = false;                        // ⊢ == ⊣
    bool ok() const {
        return g1_vdash.empty() && g1_dashv.empty() && g2.empty() && g3.empty() && g4.empty() &&
               g5.empty() && g6.empty() && non_unique_inverse.empty();
    }
};

DigroupReport check_digroup(const FiniteDigroup& g);

/// The M×H construction: (u,h)⊢(v,k) = (hv, hk), (u,h)⊣(v,k) = (u, hk),
/// bar-unit (fixed, 1), inverse (u,h)⁻¹ = (fixed, h⁻¹). The action must fix
/// `fixed` and act transitively on the remaining points. Element (u,h) has
/// index u*|H| + h.
FiniteDigroup standard_digroup(std::size_t m_size, std::size_t fixed, const FiniteGroup& h,
                               const std::vector<std::vector<std::size_t>>& action);

/// All e with e⊢x = x⊣e = x; also verifies that left-neutrality for ⊢ and
/// right-neutrality for ⊣ single out the same set.
std::vector<std::size_t> bar_units(const FiniteDigroup& g);

struct InverseGroupResult {
    FiniteGroup group;
    std::vector<std::size_t> elements;  // digroup indices of J, aligned with group indices
};

/// J = {x⁻¹}: a genuine group on which ⊢ and ⊣ agree. Verifies closure,
/// agreement, and that x -> (x⁻¹)⁻¹ is onto J with kernel the bar-units.
InverseGroupResult inverse_group(const FiniteDigroup& g);

struct DigroupDecomposition {
    std::vector<std::size_t> bar_units;
    InverseGroupResult j;
    /// iso[u][h] = the digroup element (bar_units[u]) ⊣ (j.elements[h]).
    std::vector<std::vector<std::size_t>> iso;
    bool verified = false;  // bijectivity and intertwining of both operations
    /// Projections of each element onto E with respect to ⊢ (x⁻¹⊢x) and ⊣
    /// (x⊣x⁻¹); they differ in general.
    std::vector<std::size_t> proj_vdash, proj_dashv;
};

/// Structure theorem: G ≅ E×J with (u,h)⊢(v,k) = (h∘v, h⊢k) and
/// (u,h)⊣(v,k) = (u, h⊣k). Verified elementwise; a failure would falsify the
/// theorem and throws.
DigroupDecomposition decompose(const FiniteDigroup& g);

struct IdentityCheck {
    std::string name;
    bool pass = true;
    std::string witness;  // first failing instance, if any
};

struct SuiteReport {
    std::vector<IdentityCheck> checks;
    bool ok() const;
};

/// Exhaustive verification of the right-group identities of (G,⊢), their
/// left-group duals for (G,⊣), the inverse identities, and that E is a right
/// zero (resp. left zero) semigroup under ⊢ (resp. ⊣).
SuiteReport right_group_suite(const FiniteDigroup& g);

/// Conjugation table x∘y = x⊢y⊣x⁻¹ (unambiguous by G2).
FiniteRack induced_rack(const FiniteDigroup& g);

/// induced_rack plus the conjugation identities:
///   x⊢y = (x∘y)⊢x,  x∘(y⊢z) = (x∘y)⊢(x∘z),  x∘(y⊣z) = (x∘y)⊣(x∘z),
///   x∘(y∘z) = (x∘y)∘(x∘z) = (x⊢y)∘z = (x⊣y)∘z,  x∘u ∈ E for u ∈ E,
///   and that J acts on E via ∘.
SuiteReport induced_rack_suite(const FiniteDigroup& g);

bool digroups_isomorphic(const FiniteDigroup& a, const FiniteDigroup& b);

/// All digroups of the given order up to isomorphism, assembled from the
/// structure theorem: a group J (from the small-group catalog), a pointed set
/// E, and an action of J on E fixing the point. order <= 8.
std::vector<FiniteDigroup> enumerate_digroups_structure(std::size_t order);

struct BacktrackStats {
    std::size_t tables_found = 0;        // raw (⊢,⊣,inv) tables with unit 0
    std::size_t g3_g4_failures = 0;      // tables violating G3 or G4 (expected 0)
};

/// Direct table search over models of {G1, G2, G5, G6} only, with the unit
/// fixed at index 0; G3/G4 are then tested on every solution. order <= 6.
std::vector<FiniteDigroup> enumerate_digroups_backtracking(std::size_t order,
                                                           BacktrackStats* stats = nullptr);

/// Isomorphism-class counts keyed by (|E|, |J|).
std::map<std::pair<std::size_t, std::size_t>, std::size_t> count_by_factorization(
    const std::vector<FiniteDigroup>& digroups);

}  // namespace leibrack

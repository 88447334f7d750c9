#include "leibrack/digroup.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace leibrack {

namespace {

std::string triple_str(std::size_t x, std::size_t y, std::size_t z) {
    return "(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")";
}

}  // namespace

DigroupReport check_digroup(const FiniteDigroup& g) {
    DigroupReport report;
    const std::size_t n = g.size;
    if (g.vdash.size() != n || g.dashv.size() != n || g.inv.size() != n) {
        throw std::invalid_argument("digroup: table size mismatch");
    }

    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                if (g.vd(g.vd(x, y), z) != g.vd(x, g.vd(y, z))) report.g1_vdash.push_back({x, y, z});
                if (g.dv(g.dv(x, y), z) != g.dv(x, g.dv(y, z))) report.g1_dashv.push_back({x, y, z});
                if (g.vd(x, g.dv(y, z)) != g.dv(g.vd(x, y), z)) report.g2.push_back({x, y, z});
                if (g.dv(x, g.vd(y, z)) != g.dv(x, g.dv(y, z))) report.g3.push_back({x, y, z});
                if (g.vd(g.dv(x, y), z) != g.vd(g.vd(x, y), z)) report.g4.push_back({x, y, z});
            }

    for (std::size_t x = 0; x < n; ++x) {
        if (g.vd(g.unit, x) != x || g.dv(x, g.unit) != x) report.g5.push_back(x);
        if (g.vd(x, g.inv[x]) != g.unit || g.dv(g.inv[x], x) != g.unit) report.g6.push_back(x);
    }

    // G6 only constrains the stored map; uniqueness is a consequence of the
    // axioms, so a table admitting several valid inverse maps is reported.
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            if (y == g.inv[x]) continue;
            if (g.vd(x, y) == g.unit && g.dv(y, x) == g.unit) {
                report.non_unique_inverse.push_back(x);
                break;
            }
        }
    }

    report.is_group = (g.vdash == g.dashv);
    return report;
}

FiniteDigroup standard_digroup(std::size_t m_size, std::size_t fixed, const FiniteGroup& h,
                               const std::vector<std::vector<std::size_t>>& action) {
    if (!check_group(h).ok()) throw std::invalid_argument("standard_digroup: invalid group");
    if (action.size() != h.size) throw std::invalid_argument("standard_digroup: action size mismatch");
    for (const auto& perm : action) {
        if (perm.size() != m_size) throw std::invalid_argument("standard_digroup: action row mismatch");
    }
    for (std::size_t a = 0; a < h.size; ++a) {
        if (action[a][fixed] != fixed) {
            throw std::invalid_argument("standard_digroup: action does not fix the base point");
        }
        for (std::size_t b = 0; b < h.size; ++b) {
            for (std::size_t u = 0; u < m_size; ++u) {
                if (action[h.op(a, b)][u] != action[a][action[b][u]]) {
                    throw std::invalid_argument("standard_digroup: action is not a homomorphism");
                }
            }
        }
    }
    if (m_size > 1) {
        std::size_t seed = (fixed == 0) ? 1 : 0;
        std::vector<bool> seen(m_size, false);
        seen[seed] = true;
        for (std::size_t a = 0; a < h.size; ++a) seen[action[a][seed]] = true;
        for (std::size_t u = 0; u < m_size; ++u) {
            if (u != fixed && !seen[u]) {
                throw std::invalid_argument("standard_digroup: action not transitive off the base point");
            }
        }
    }

    FiniteDigroup g;
    g.size = m_size * h.size;
    g.unit = fixed * h.size + h.unit;
    g.vdash.assign(g.size, std::vector<std::size_t>(g.size));
    g.dashv.assign(g.size, std::vector<std::size_t>(g.size));
    g.inv.assign(g.size, 0);
    for (std::size_t u = 0; u < m_size; ++u)
        for (std::size_t a = 0; a < h.size; ++a) {
            const std::size_t x = u * h.size + a;
            g.inv[x] = fixed * h.size + h.inv[a];
            for (std::size_t v = 0; v < m_size; ++v)
                for (std::size_t b = 0; b < h.size; ++b) {
                    const std::size_t y = v * h.size + b;
                    g.vdash[x][y] = action[a][v] * h.size + h.op(a, b);
                    g.dashv[x][y] = u * h.size + h.op(a, b);
                }
        }
    return g;
}

std::vector<std::size_t> bar_units(const FiniteDigroup& g) {
    const std::size_t n = g.size;
    std::vector<std::size_t> left_vdash, right_dashv;
    for (std::size_t e = 0; e < n; ++e) {
        bool lv = true, rd = true;
        for (std::size_t x = 0; x < n; ++x) {
            if (g.vd(e, x) != x) lv = false;
            if (g.dv(x, e) != x) rd = false;
        }
        if (lv) left_vdash.push_back(e);
        if (rd) right_dashv.push_back(e);
    }
    // Left neutral for ⊢ and right neutral for ⊣ single out the same set.
    if (left_vdash != right_dashv) {
        throw std::logic_error("bar_units: neutral-element sets disagree on a valid digroup");
    }
    return left_vdash;
}

InverseGroupResult inverse_group(const FiniteDigroup& g) {
    const std::size_t n = g.size;
    std::vector<bool> in_j(n, false);
    for (std::size_t x = 0; x < n; ++x) in_j[g.inv[x]] = true;

    InverseGroupResult result;
    std::vector<std::size_t> index_of(n, n);
    for (std::size_t x = 0; x < n; ++x) {
        if (in_j[x]) {
            index_of[x] = result.elements.size();
            result.elements.push_back(x);
        }
    }

    const std::size_t m = result.elements.size();
    FiniteGroup j;
    j.size = m;
    j.table.assign(m, std::vector<std::size_t>(m));
    j.inv.assign(m, 0);
    if (index_of[g.unit] == n) throw std::logic_error("inverse_group: unit not among inverses");
    j.unit = index_of[g.unit];

    for (std::size_t a = 0; a < m; ++a) {
        const std::size_t x = result.elements[a];
        if (!in_j[g.inv[x]]) throw std::logic_error("inverse_group: J not closed under inverse");
        j.inv[a] = index_of[g.inv[x]];
        for (std::size_t b = 0; b < m; ++b) {
            const std::size_t y = result.elements[b];
            const std::size_t p = g.vd(x, y);
            if (g.dv(x, y) != p) throw std::logic_error("inverse_group: operations disagree on J");
            if (!in_j[p]) throw std::logic_error("inverse_group: J not closed under the product");
            j.table[a][b] = index_of[p];
        }
    }
    if (!check_group(j).ok()) throw std::logic_error("inverse_group: J is not a group");

    // x -> (x⁻¹)⁻¹ is a digroup epimorphism onto J with kernel E.
    std::vector<std::size_t> dd(n);
    for (std::size_t x = 0; x < n; ++x) dd[x] = g.inv[g.inv[x]];
    for (std::size_t x = 0; x < n; ++x) {
        if (!in_j[dd[x]]) throw std::logic_error("inverse_group: double inverse leaves J");
        for (std::size_t y = 0; y < n; ++y) {
            if (dd[g.vd(x, y)] != g.vd(dd[x], dd[y]) || dd[g.dv(x, y)] != g.dv(dd[x], dd[y])) {
                throw std::logic_error("inverse_group: double inverse is not a homomorphism");
            }
        }
    }
    std::vector<std::size_t> kernel;
    for (std::size_t x = 0; x < n; ++x) {
        if (dd[x] == g.unit) kernel.push_back(x);
    }
    if (kernel != bar_units(g)) {
        throw std::logic_error("inverse_group: kernel of the double inverse is not the bar-unit set");
    }

    result.group = std::move(j);
    return result;
}

DigroupDecomposition decompose(const FiniteDigroup& g) {
    DigroupDecomposition dec;
    dec.bar_units = bar_units(g);
    dec.j = inverse_group(g);

    const std::size_t n = g.size;
    const std::size_t ne = dec.bar_units.size();
    const std::size_t nj = dec.j.elements.size();
    if (ne * nj != n) throw std::logic_error("decompose: |E|·|J| != |G|");

    std::vector<std::size_t> e_index(n, n), j_index(n, n);
    for (std::size_t u = 0; u < ne; ++u) e_index[dec.bar_units[u]] = u;
    for (std::size_t h = 0; h < nj; ++h) j_index[dec.j.elements[h]] = h;

    // theta(u,h) = u ⊣ h must be a bijection onto G.
    dec.iso.assign(ne, std::vector<std::size_t>(nj));
    std::vector<bool> hit(n, false);
    for (std::size_t u = 0; u < ne; ++u)
        for (std::size_t h = 0; h < nj; ++h) {
            const std::size_t x = g.dv(dec.bar_units[u], dec.j.elements[h]);
            dec.iso[u][h] = x;
            if (hit[x]) throw std::logic_error("decompose: theta is not injective");
            hit[x] = true;
        }

    // Intertwining with (u,h)⊢(v,k) = (h∘v, h⊢k) and (u,h)⊣(v,k) = (u, h⊣k).
    for (std::size_t u = 0; u < ne; ++u)
        for (std::size_t h = 0; h < nj; ++h)
            for (std::size_t v = 0; v < ne; ++v)
                for (std::size_t k = 0; k < nj; ++k) {
                    const std::size_t hj = dec.j.elements[h], kj = dec.j.elements[k];
                    const std::size_t hv = g.conj(hj, dec.bar_units[v]);
                    if (e_index[hv] == n) throw std::logic_error("decompose: J∘E leaves E");
                    const std::size_t lhs_vd = dec.iso[e_index[hv]][j_index[g.vd(hj, kj)]];
                    if (lhs_vd != g.vd(dec.iso[u][h], dec.iso[v][k])) {
                        throw std::logic_error("decompose: theta does not intertwine ⊢");
                    }
                    const std::size_t lhs_dv = dec.iso[u][j_index[g.dv(hj, kj)]];
                    if (lhs_dv != g.dv(dec.iso[u][h], dec.iso[v][k])) {
                        throw std::logic_error("decompose: theta does not intertwine ⊣");
                    }
                }

    // The two projections onto E: x = ((x⁻¹)⁻¹) ⊢ (x⁻¹⊢x) = (x⊣x⁻¹) ⊣ ((x⁻¹)⁻¹).
    dec.proj_vdash.assign(n, 0);
    dec.proj_dashv.assign(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
        const std::size_t pv = g.vd(g.inv[x], x);
        const std::size_t pd = g.dv(x, g.inv[x]);
        if (e_index[pv] == n || e_index[pd] == n) {
            throw std::logic_error("decompose: projection does not land in E");
        }
        const std::size_t dd = g.inv[g.inv[x]];
        if (g.vd(dd, pv) != x || g.dv(pd, dd) != x) {
            throw std::logic_error("decompose: projection identities fail");
        }
        dec.proj_vdash[x] = pv;
        dec.proj_dashv[x] = pd;
    }

    dec.verified = true;
    return dec;
}

bool SuiteReport::ok() const {
    for (const IdentityCheck& c : checks) {
        if (!c.pass) return false;
    }
    return true;
}

namespace {

class SuiteBuilder {
public:
    explicit SuiteBuilder(SuiteReport& report) : report_(report) {}

    void check(const std::string& name, bool pass, const std::string& witness) {
        for (IdentityCheck& c : report_.checks) {
            if (c.name == name) {
                if (c.pass && !pass) {
                    c.pass = false;
                    c.witness = witness;
                }
                return;
            }
        }
        report_.checks.push_back({name, pass, pass ? std::string() : witness});
    }

    void declare(const std::string& name) { check(name, true, ""); }

private:
    SuiteReport& report_;
};

}  // namespace

SuiteReport right_group_suite(const FiniteDigroup& g) {
    SuiteReport report;
    SuiteBuilder b(report);
    const std::size_t n = g.size;
    const std::vector<std::size_t> e = bar_units(g);
    const InverseGroupResult jres = inverse_group(g);
    std::vector<bool> in_e(n, false), in_j(n, false);
    for (std::size_t u : e) in_e[u] = true;
    for (std::size_t h : jres.elements) in_j[h] = true;
    const std::size_t one = g.unit;

    const char* kCancelV = "vdash-cancellation";
    const char* kCancelD = "dashv-cancellation";
    const char* kX1 = "x-vdash-1-is-double-inverse";
    const char* k1X = "1-dashv-x-is-double-inverse";
    const char* kTriple = "triple-inverse";
    const char* kAntiV = "vdash-product-inverse";
    const char* kAntiD = "dashv-product-inverse";
    const char* kInvAgree = "product-inverse-agreement";
    const char* kX1eq1X = "x-vdash-1-equals-1-dashv-x";
    const char* kJGroup = "j-is-a-group-with-agreeing-products";
    const char* kERightZero = "e-right-zero-under-vdash";
    const char* kELeftZero = "e-left-zero-under-dashv";
    const char* kDoubleEpiV = "double-inverse-epimorphism-vdash";
    const char* kDoubleEpiD = "double-inverse-epimorphism-dashv";
    const char* kDoubleKernel = "double-inverse-kernel-is-e";
    const char* kEProjV = "e-projection-epimorphism-vdash";
    const char* kEProjD = "e-projection-epimorphism-dashv";
    const char* kJE = "g-equals-j-vdash-e";
    const char* kED = "g-equals-e-dashv-j";
    for (const char* name : {kCancelV, kCancelD, kX1, k1X, kTriple, kAntiV, kAntiD, kInvAgree,
                             kX1eq1X, kJGroup, kERightZero, kELeftZero, kDoubleEpiV, kDoubleEpiD,
                             kDoubleKernel, kEProjV, kEProjD, kJE, kED}) {
        b.declare(name);
    }

    auto dd = [&](std::size_t x) { return g.inv[g.inv[x]]; };

    for (std::size_t x = 0; x < n; ++x) {
        b.check(kX1, g.vd(x, one) == dd(x), "x=" + std::to_string(x));
        b.check(k1X, g.dv(one, x) == dd(x), "x=" + std::to_string(x));
        b.check(kTriple, g.inv[dd(x)] == g.inv[x], "x=" + std::to_string(x));
        b.check(kX1eq1X, g.vd(x, one) == g.dv(one, x), "x=" + std::to_string(x));
        b.check(kDoubleKernel, (dd(x) == one) == in_e[x], "x=" + std::to_string(x));
        b.check(kEProjV, in_e[g.vd(g.inv[x], x)], "x=" + std::to_string(x));
        b.check(kEProjD, in_e[g.dv(x, g.inv[x])], "x=" + std::to_string(x));
        for (std::size_t y = 0; y < n; ++y) {
            const std::string w = "(x,y)=(" + std::to_string(x) + "," + std::to_string(y) + ")";
            b.check(kCancelV, g.vd(g.inv[x], g.vd(x, y)) == y && g.vd(x, g.vd(g.inv[x], y)) == y, w);
            b.check(kCancelD, g.dv(g.dv(y, x), g.inv[x]) == y && g.dv(g.dv(y, g.inv[x]), x) == y, w);
            b.check(kAntiV, g.inv[g.vd(x, y)] == g.vd(g.inv[y], g.inv[x]), w);
            b.check(kAntiD, g.inv[g.dv(x, y)] == g.dv(g.inv[y], g.inv[x]), w);
            b.check(kInvAgree,
                    g.inv[g.vd(x, y)] == g.inv[g.dv(x, y)] &&
                        g.vd(g.inv[y], g.inv[x]) == g.dv(g.inv[y], g.inv[x]),
                    w);
            b.check(kDoubleEpiV, dd(g.vd(x, y)) == g.vd(dd(x), dd(y)), w);
            b.check(kDoubleEpiD, dd(g.dv(x, y)) == g.dv(dd(x), dd(y)), w);
            b.check(kEProjV,
                    g.vd(g.inv[g.vd(x, y)], g.vd(x, y)) ==
                        g.vd(g.vd(g.inv[x], x), g.vd(g.inv[y], y)),
                    w);
            b.check(kEProjD,
                    g.dv(g.dv(x, y), g.inv[g.dv(x, y)]) ==
                        g.dv(g.dv(x, g.inv[x]), g.dv(y, g.inv[y])),
                    w);
        }
    }

    for (std::size_t u : e)
        for (std::size_t f : e) {
            const std::string w = "(e,f)=(" + std::to_string(u) + "," + std::to_string(f) + ")";
            b.check(kERightZero, g.vd(u, f) == f, w);
            b.check(kELeftZero, g.dv(u, f) == u, w);
        }

    for (std::size_t x : jres.elements) {
        b.check(kJGroup, in_j[g.inv[x]], "x=" + std::to_string(x));
        for (std::size_t y : jres.elements) {
            const std::string w = "(x,y)=(" + std::to_string(x) + "," + std::to_string(y) + ")";
            b.check(kJGroup, g.vd(x, y) == g.dv(x, y) && in_j[g.vd(x, y)], w);
        }
    }

    // G = J⊢E and G = E⊣J, bijectively and multiplicatively.
    {
        std::vector<bool> hit_je(n, false), hit_ed(n, false);
        bool inj_je = true, inj_ed = true;
        for (std::size_t h : jres.elements)
            for (std::size_t u : e) {
                std::size_t p = g.vd(h, u);
                if (hit_je[p]) inj_je = false;
                hit_je[p] = true;
                std::size_t q = g.dv(u, h);
                if (hit_ed[q]) inj_ed = false;
                hit_ed[q] = true;
            }
        b.check(kJE, inj_je, "J⊢E misses or repeats an element");
        b.check(kED, inj_ed, "E⊣J misses or repeats an element");
        for (std::size_t h : jres.elements)
            for (std::size_t u : e)
                for (std::size_t k : jres.elements)
                    for (std::size_t f : e) {
                        const std::string w = "(j,e,k,f)=(" + std::to_string(h) + "," +
                                              std::to_string(u) + "," + std::to_string(k) + "," +
                                              std::to_string(f) + ")";
                        b.check(kJE,
                                g.vd(g.vd(h, u), g.vd(k, f)) == g.vd(g.vd(h, k), g.vd(u, f)), w);
                        b.check(kED,
                                g.dv(g.dv(u, h), g.dv(f, k)) == g.dv(g.dv(u, f), g.dv(h, k)), w);
                    }
    }

    return report;
}

FiniteRack induced_rack(const FiniteDigroup& g) {
    FiniteRack q;
    q.size = g.size;
    q.point = g.unit;
    q.table.assign(g.size, std::vector<std::size_t>(g.size));
    for (std::size_t x = 0; x < g.size; ++x)
        for (std::size_t y = 0; y < g.size; ++y) q.table[x][y] = g.conj(x, y);
    return q;
}

SuiteReport induced_rack_suite(const FiniteDigroup& g) {
    SuiteReport report;
    SuiteBuilder b(report);
    const std::size_t n = g.size;
    const FiniteRack q = induced_rack(g);
    const std::vector<std::size_t> e = bar_units(g);
    const InverseGroupResult jres = inverse_group(g);
    std::vector<bool> in_e(n, false);
    for (std::size_t u : e) in_e[u] = true;

    const char* kAxioms = "rack-axioms";
    const char* kPoint = "conj-point-behavior";
    const char* kAbsorbV = "conj-absorbs-vdash";
    const char* kAbsorbD = "conj-absorbs-dashv";
    const char* kExchange = "vdash-conj-exchange";
    const char* kExchangeConj = "vdash-conj-exchange-after-conj";
    const char* kDistV = "conj-distributes-over-vdash";
    const char* kDistD = "conj-distributes-over-dashv";
    const char* kDistC = "conj-left-distributivity";
    const char* kPreserveE = "conj-preserves-bar-units";
    const char* kJActs = "j-acts-on-e";
    for (const char* name : {kAxioms, kPoint, kAbsorbV, kAbsorbD, kExchange, kExchangeConj,
                             kDistV, kDistD, kDistC, kPreserveE, kJActs}) {
        b.declare(name);
    }

    {
        RackReport rr = check_rack(q);
        std::string w;
        if (!rr.distrib_violations.empty()) {
            auto [x, y, z] = rr.distrib_violations.front();
            w = "distributivity at " + triple_str(x, y, z);
        } else if (!rr.non_permutation_rows.empty()) {
            w = "row " + std::to_string(rr.non_permutation_rows.front()) + " is not a permutation";
        } else if (!rr.point_left_violations.empty() || !rr.point_right_violations.empty()) {
            w = "point axiom";
        }
        b.check(kAxioms, rr.ok(), w);
    }

    for (std::size_t x = 0; x < n; ++x) {
        b.check(kPoint, q.op(g.unit, x) == x && q.op(x, g.unit) == g.unit, "x=" + std::to_string(x));
        for (std::size_t y = 0; y < n; ++y) {
            const std::string w2 = "(x,y)=(" + std::to_string(x) + "," + std::to_string(y) + ")";
            // x⊢y = (x∘y)⊣x. With ⊣ replaced by ⊢ the identity is false off J
            // (take x = 1, y a bar-unit: it would force y = (y⁻¹)⁻¹); what
            // survives with ⊢ is equality after conjugating by z.
            b.check(kExchange, g.vd(x, y) == g.dv(q.op(x, y), x), w2);
            for (std::size_t z = 0; z < n; ++z) {
                const std::string w = triple_str(x, y, z);
                b.check(kExchangeConj, q.op(g.vd(x, y), z) == q.op(g.vd(q.op(x, y), x), z), w);
                b.check(kAbsorbV, q.op(x, q.op(y, z)) == q.op(g.vd(x, y), z), w);
                b.check(kAbsorbD, q.op(x, q.op(y, z)) == q.op(g.dv(x, y), z), w);
                b.check(kDistV, q.op(x, g.vd(y, z)) == g.vd(q.op(x, y), q.op(x, z)), w);
                b.check(kDistD, q.op(x, g.dv(y, z)) == g.dv(q.op(x, y), q.op(x, z)), w);
                b.check(kDistC, q.op(x, q.op(y, z)) == q.op(q.op(x, y), q.op(x, z)), w);
            }
        }
        for (std::size_t u : e) {
            b.check(kPreserveE, in_e[q.op(x, u)],
                    "(x,u)=(" + std::to_string(x) + "," + std::to_string(u) + ")");
        }
    }

    for (std::size_t h : jres.elements)
        for (std::size_t k : jres.elements)
            for (std::size_t u : e) {
                const std::string w = "(j,k,u)=(" + std::to_string(h) + "," + std::to_string(k) +
                                      "," + std::to_string(u) + ")";
                b.check(kJActs,
                        q.op(h, q.op(k, u)) == q.op(g.vd(h, k), u) && q.op(g.unit, u) == u &&
                            in_e[q.op(h, u)],
                        w);
            }

    return report;
}

bool digroups_isomorphic(const FiniteDigroup& a, const FiniteDigroup& b) {
    if (a.size != b.size) return false;
    const std::size_t n = a.size;

    // Elements must map within their E/J membership class, unit to unit.
    auto classes = [](const FiniteDigroup& g) {
        std::vector<std::size_t> c(g.size, 0);
        for (std::size_t u : bar_units(g)) c[u] |= 1u;
        for (std::size_t x = 0; x < g.size; ++x) c[g.inv[x]] |= 2u;
        return c;
    };
    const std::vector<std::size_t> ca = classes(a), cb = classes(b);
    {
        std::vector<std::size_t> sa = ca, sb = cb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }

    std::vector<std::size_t> map(n, n);
    std::vector<bool> used(n, false);
    map[a.unit] = b.unit;
    used[b.unit] = true;

    std::function<bool(std::size_t)> search = [&](std::size_t x) -> bool {
        if (x == n) {
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t q = 0; q < n; ++q) {
                    if (map[a.vd(p, q)] != b.vd(map[p], map[q])) return false;
                    if (map[a.dv(p, q)] != b.dv(map[p], map[q])) return false;
                }
            return true;
        }
        if (map[x] != n) return search(x + 1);
        for (std::size_t img = 0; img < n; ++img) {
            if (used[img] || ca[x] != cb[img]) continue;
            map[x] = img;
            used[img] = true;
            bool ok = true;
            for (std::size_t y = 0; y < n && ok; ++y) {
                if (map[y] == n) continue;
                if (map[a.vd(x, y)] != n && map[a.vd(x, y)] != b.vd(img, map[y])) ok = false;
                if (ok && map[a.vd(y, x)] != n && map[a.vd(y, x)] != b.vd(map[y], img)) ok = false;
                if (ok && map[a.dv(x, y)] != n && map[a.dv(x, y)] != b.dv(img, map[y])) ok = false;
                if (ok && map[a.dv(y, x)] != n && map[a.dv(y, x)] != b.dv(map[y], img)) ok = false;
            }
            if (ok && search(x + 1)) return true;
            map[x] = n;
            used[img] = false;
        }
        return false;
    };
    return search(0);
}

std::vector<FiniteDigroup> enumerate_digroups_structure(std::size_t order) {
    if (order == 0 || order > 8) {
        throw std::invalid_argument("enumerate_digroups_structure: order must be in 1..8");
    }

    std::vector<FiniteDigroup> classes;
    auto add_class = [&classes](const FiniteDigroup& g) {
        for (const FiniteDigroup& seen : classes) {
            if (digroups_isomorphic(seen, g)) return;
        }
        classes.push_back(g);
    };

    for (std::size_t e_size = 1; e_size <= order; ++e_size) {
        if (order % e_size != 0) continue;
        const std::size_t j_size = order / e_size;

        // Basepoint-fixing permutations of E = {0, .., e_size-1}, point 0.
        std::vector<std::vector<std::size_t>> perms;
        {
            std::vector<std::size_t> tail;
            for (std::size_t i = 1; i < e_size; ++i) tail.push_back(i);
            do {
                std::vector<std::size_t> full(e_size);
                for (std::size_t i = 1; i < e_size; ++i) full[i] = tail[i - 1];
                perms.push_back(full);
            } while (std::next_permutation(tail.begin(), tail.end()));
        }
        std::size_t id_perm = 0;
        for (std::size_t p = 0; p < perms.size(); ++p) {
            bool is_id = true;
            for (std::size_t i = 0; i < e_size; ++i) is_id = is_id && perms[p][i] == i;
            if (is_id) id_perm = p;
        }

        for (const FiniteGroup& j : small_groups(j_size)) {
            std::vector<std::size_t> free_elems;
            for (std::size_t h = 0; h < j.size; ++h) {
                if (h != j.unit) free_elems.push_back(h);
            }
            std::vector<std::size_t> choice(j.size, id_perm);

            std::vector<std::size_t> stack(free_elems.size(), 0);
            for (;;) {
                for (std::size_t i = 0; i < free_elems.size(); ++i) choice[free_elems[i]] = stack[i];

                bool hom = true;
                for (std::size_t h = 0; h < j.size && hom; ++h)
                    for (std::size_t k = 0; k < j.size && hom; ++k)
                        for (std::size_t u = 0; u < e_size && hom; ++u)
                            if (perms[choice[j.op(h, k)]][u] != perms[choice[h]][perms[choice[k]][u]])
                                hom = false;
                if (hom) {
                    FiniteDigroup g;
                    g.size = e_size * j_size;
                    g.unit = j.unit;  // element (u=0, h=unit)
                    g.vdash.assign(g.size, std::vector<std::size_t>(g.size));
                    g.dashv.assign(g.size, std::vector<std::size_t>(g.size));
                    g.inv.assign(g.size, 0);
                    for (std::size_t u = 0; u < e_size; ++u)
                        for (std::size_t h = 0; h < j.size; ++h) {
                            const std::size_t x = u * j_size + h;
                            g.inv[x] = j.inv[h];
                            for (std::size_t v = 0; v < e_size; ++v)
                                for (std::size_t k = 0; k < j.size; ++k) {
                                    g.vdash[x][v * j_size + k] =
                                        perms[choice[h]][v] * j_size + j.op(h, k);
                                    g.dashv[x][v * j_size + k] = u * j_size + j.op(h, k);
                                }
                        }
                    add_class(g);
                }

                std::size_t pos = 0;
                while (pos < stack.size() && ++stack[pos] == perms.size()) {
                    stack[pos] = 0;
                    ++pos;
                }
                if (pos == stack.size()) break;
            }
        }
    }
    return classes;
}

// ---------------------------------------------------------------------------
// Backtracking enumerator over {G1, G2, G5, G6}.
//
// The encoding uses only consequences of that axiom subset (no G3/G4 facts):
// G6 gives x⊢x⁻¹ = 1, so with associativity every left translation of ⊢ is
// surjective, hence a permutation; dually every right translation of ⊣ is a
// permutation. G5 pins the unit's translations to the identity, and the
// common inverse is forced to inv[x] = L⊢(x)⁻¹(1).
//
// Writing pi_x = L⊢(x) and rho_z = R⊣(z), the remaining constraints are
//   assoc(⊢):  pi_x ∘ pi_y  = pi_{pi_x(y)}
//   assoc(⊣):  rho_c ∘ rho_b = rho_{rho_c(b)}
//   G2:        every rho commutes with every pi
//   G6(⊣):     rho_x(inv[x]) = 1
// which both phases below search with closure propagation.

namespace {

struct PermUniverse {
    std::size_t n = 0;
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::vector<std::int32_t>> comp;  // comp[p][q] = index of p ∘ q
    std::vector<std::int32_t> inverse;
    std::int32_t id = -1;

    explicit PermUniverse(std::size_t n_) : n(n_) {
        std::vector<std::size_t> p(n);
        for (std::size_t i = 0; i < n; ++i) p[i] = i;
        std::unordered_map<std::uint64_t, std::int32_t> index;
        do {
            index[key(p)] = static_cast<std::int32_t>(perms.size());
            perms.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
        const std::size_t m = perms.size();
        comp.assign(m, std::vector<std::int32_t>(m));
        inverse.assign(m, 0);
        std::vector<std::size_t> buf(n);
        for (std::size_t a = 0; a < m; ++a) {
            for (std::size_t b = 0; b < m; ++b) {
                for (std::size_t i = 0; i < n; ++i) buf[i] = perms[a][perms[b][i]];
                comp[a][b] = index.at(key(buf));
            }
            for (std::size_t i = 0; i < n; ++i) buf[perms[a][i]] = i;
            inverse[a] = index.at(key(buf));
        }
        for (std::size_t i = 0; i < n; ++i) p[i] = i;
        id = index.at(key(p));
    }

    std::uint64_t key(const std::vector<std::size_t>& p) const {
        std::uint64_t k = 0;
        for (std::size_t v : p) k = k * 8 + v;
        return k;
    }
};

/// DFS over maps element -> permutation index subject to the closure rule
/// f(a) ∘ f(b) = f( f(a)(b) ), a fixed partial assignment, a per-element
/// admissibility predicate, and a candidate pool.
class TranslationSearch {
public:
    TranslationSearch(const PermUniverse& u, std::size_t n,
                      std::vector<std::int32_t> fixed,
                      const std::vector<std::int32_t>& candidates,
                      std::function<bool(std::size_t, std::int32_t)> admissible,
                      std::function<void(const std::vector<std::int32_t>&)> emit)
        : u_(u),
          n_(n),
          assigned_(std::move(fixed)),
          candidates_(candidates),
          admissible_(std::move(admissible)),
          emit_(std::move(emit)) {}

    void run() {
        Trail trail;
        bool ok = true;
        for (std::size_t x = 0; x < n_ && ok; ++x) {
            if (assigned_[x] >= 0) ok = propagate_from(x, trail);
        }
        if (ok) dfs();
        undo(trail);
    }

private:
    using Trail = std::vector<std::size_t>;

    bool assign(std::size_t x, std::int32_t p, Trail& trail) {
        if (assigned_[x] >= 0) return assigned_[x] == p;
        if (!admissible_(x, p)) return false;
        assigned_[x] = p;
        trail.push_back(x);
        return propagate_from(x, trail);
    }

    bool process_pair(std::size_t a, std::size_t b, Trail& trail) {
        const std::int32_t pa = assigned_[a], pb = assigned_[b];
        if (pa < 0 || pb < 0) return true;
        return assign(u_.perms[pa][b], u_.comp[pa][pb], trail);
    }

    bool propagate_from(std::size_t x, Trail& trail) {
        for (std::size_t y = 0; y < n_; ++y) {
            if (assigned_[y] < 0) continue;
            if (!process_pair(x, y, trail) || !process_pair(y, x, trail)) return false;
        }
        return true;
    }

    void undo(Trail& trail) {
        for (auto it = trail.rbegin(); it != trail.rend(); ++it) assigned_[*it] = -1;
        trail.clear();
    }

    void dfs() {
        std::size_t x = 0;
        while (x < n_ && assigned_[x] >= 0) ++x;
        if (x == n_) {
            emit_(assigned_);
            return;
        }
        for (std::int32_t p : candidates_) {
            Trail trail;
            if (assign(x, p, trail)) dfs();
            undo(trail);
        }
    }

    const PermUniverse& u_;
    std::size_t n_;
    std::vector<std::int32_t> assigned_;
    const std::vector<std::int32_t>& candidates_;
    std::function<bool(std::size_t, std::int32_t)> admissible_;
    std::function<void(const std::vector<std::int32_t>&)> emit_;
};

}  // namespace

std::vector<FiniteDigroup> enumerate_digroups_backtracking(std::size_t order, BacktrackStats* stats) {
    if (order == 0 || order > 6) {
        throw std::invalid_argument("enumerate_digroups_backtracking: order must be in 1..6");
    }
    const std::size_t n = order;
    PermUniverse u(n);

    std::vector<std::int32_t> all_perms;
    for (std::size_t p = 0; p < u.perms.size(); ++p) all_perms.push_back(static_cast<std::int32_t>(p));

    std::vector<FiniteDigroup> classes;
    BacktrackStats local;

    std::vector<std::int32_t> row_fixed(n, -1);
    row_fixed[0] = u.id;  // G5: 1 ⊢ x = x with the unit at index 0

    auto on_rows = [&](const std::vector<std::int32_t>& rows) {
        // inv[x] is forced by x ⊢ inv[x] = 1.
        std::vector<std::size_t> inv(n);
        for (std::size_t x = 0; x < n; ++x) inv[x] = u.perms[u.inverse[rows[x]]][0];

        // G2: candidate columns of ⊣ must commute with every row of ⊢.
        std::vector<std::int32_t> centralizer;
        for (std::int32_t p : all_perms) {
            bool commutes = true;
            for (std::size_t x = 0; x < n && commutes; ++x) {
                commutes = (u.comp[p][rows[x]] == u.comp[rows[x]][p]);
            }
            if (commutes) centralizer.push_back(p);
        }

        std::vector<std::int32_t> col_fixed(n, -1);
        col_fixed[0] = u.id;  // G5: x ⊣ 1 = x

        auto on_cols = [&](const std::vector<std::int32_t>& cols) {
            FiniteDigroup g;
            g.size = n;
            g.unit = 0;
            g.vdash.assign(n, std::vector<std::size_t>(n));
            g.dashv.assign(n, std::vector<std::size_t>(n));
            g.inv = inv;
            for (std::size_t x = 0; x < n; ++x)
                for (std::size_t y = 0; y < n; ++y) {
                    g.vdash[x][y] = u.perms[rows[x]][y];
                    g.dashv[x][y] = u.perms[cols[y]][x];
                }

            DigroupReport rep = check_digroup(g);
            if (!rep.g1_vdash.empty() || !rep.g1_dashv.empty() || !rep.g2.empty() ||
                !rep.g5.empty() || !rep.g6.empty()) {
                throw std::logic_error("backtracking produced a non-model of {G1,G2,G5,G6}");
            }
            ++local.tables_found;
            if (!rep.g3.empty() || !rep.g4.empty()) ++local.g3_g4_failures;

            for (const FiniteDigroup& seen : classes) {
                if (digroups_isomorphic(seen, g)) return;
            }
            classes.push_back(std::move(g));
        };

        TranslationSearch col_search(
            u, n, col_fixed, centralizer,
            [&](std::size_t x, std::int32_t p) { return u.perms[p][inv[x]] == 0; },  // G6: x⁻¹ ⊣ x = 1
            on_cols);
        col_search.run();
    };

    TranslationSearch row_search(
        u, n, row_fixed, all_perms, [](std::size_t, std::int32_t) { return true; }, on_rows);
    row_search.run();

    if (stats) *stats = local;
    return classes;
}

std::map<std::pair<std::size_t, std::size_t>, std::size_t> count_by_factorization(
    const std::vector<FiniteDigroup>& digroups) {
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> counts;
    for (const FiniteDigroup& g : digroups) {
        const std::size_t e = bar_units(g).size();
        const std::size_t j = inverse_group(g).elements.size();
        ++counts[{e, j}];
    }
    return counts;
}

}  // namespace leibrack

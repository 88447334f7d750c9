#include "leibrack/rack.hpp"

#include <algorithm>
#include <stdexcept>

namespace leibrack {

RackReport check_rack(const FiniteRack& q) {
    RackReport report;
    const std::size_t n = q.size;
    if (q.table.size() != n) throw std::invalid_argument("rack: table size mismatch");
    for (const auto& row : q.table) {
        if (row.size() != n) throw std::invalid_argument("rack: table row size mismatch");
    }

    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                if (q.op(x, q.op(y, z)) != q.op(q.op(x, y), q.op(x, z)))
                    report.distrib_violations.push_back({x, y, z});

    for (std::size_t x = 0; x < n; ++x) {
        std::vector<bool> seen(n, false);
        bool bad = false;
        for (std::size_t y = 0; y < n; ++y) {
            if (q.op(x, y) >= n || seen[q.op(x, y)]) {
                bad = true;
                break;
            }
            seen[q.op(x, y)] = true;
        }
        if (bad) report.non_permutation_rows.push_back(x);
    }

    for (std::size_t x = 0; x < n; ++x) {
        if (q.op(q.point, x) != x) report.point_left_violations.push_back(x);
        if (q.op(x, q.point) != q.point) report.point_right_violations.push_back(x);
    }
    return report;
}

std::vector<std::size_t> phi(const FiniteRack& q, std::size_t x) { return q.table[x]; }

GroupReport check_group(const FiniteGroup& g) {
    GroupReport report;
    const std::size_t n = g.size;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                if (g.op(g.op(x, y), z) != g.op(x, g.op(y, z)))
                    report.assoc_violations.push_back({x, y, z});
    for (std::size_t x = 0; x < n; ++x) {
        if (g.op(g.unit, x) != x || g.op(x, g.unit) != x) report.unit_violations.push_back(x);
        if (g.op(x, g.inv[x]) != g.unit || g.op(g.inv[x], x) != g.unit)
            report.inverse_violations.push_back(x);
    }
    return report;
}

FiniteRack conjugation_rack(const FiniteGroup& g) {
    if (!check_group(g).ok()) throw std::invalid_argument("conjugation_rack: group axioms fail");
    FiniteRack q;
    q.size = g.size;
    q.point = g.unit;
    q.table.assign(g.size, std::vector<std::size_t>(g.size));
    for (std::size_t x = 0; x < g.size; ++x)
        for (std::size_t y = 0; y < g.size; ++y) q.table[x][y] = g.op(g.op(x, y), g.inv[x]);
    return q;
}

FiniteGroup cyclic_group(std::size_t n) {
    if (n == 0) throw std::invalid_argument("cyclic_group: order must be positive");
    FiniteGroup g;
    g.size = n;
    g.unit = 0;
    g.table.assign(n, std::vector<std::size_t>(n));
    g.inv.assign(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) g.table[x][y] = (x + y) % n;
        g.inv[x] = (n - x) % n;
    }
    return g;
}

namespace {

FiniteGroup group_from_table(std::vector<std::vector<std::size_t>> table, std::size_t unit) {
    FiniteGroup g;
    g.size = table.size();
    g.unit = unit;
    g.table = std::move(table);
    g.inv.assign(g.size, 0);
    for (std::size_t x = 0; x < g.size; ++x)
        for (std::size_t y = 0; y < g.size; ++y)
            if (g.table[x][y] == unit && g.table[y][x] == unit) g.inv[x] = y;
    if (!check_group(g).ok()) throw std::logic_error("group_from_table: invalid table");
    return g;
}

/// Permutations of {0,1,2} in a fixed order: id, (01), (02), (12), (012), (021).
const std::vector<std::array<std::size_t, 3>>& s3_elements() {
    static const std::vector<std::array<std::size_t, 3>> elems = {
        {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    return elems;
}

}  // namespace

FiniteGroup klein_four_group() { return direct_product(cyclic_group(2), cyclic_group(2)); }

FiniteGroup symmetric_group_3() {
    const auto& elems = s3_elements();
    std::vector<std::vector<std::size_t>> table(6, std::vector<std::size_t>(6));
    for (std::size_t x = 0; x < 6; ++x) {
        for (std::size_t y = 0; y < 6; ++y) {
            std::array<std::size_t, 3> comp{};  // (x∘y)(i) = x(y(i))
            for (std::size_t i = 0; i < 3; ++i) comp[i] = elems[x][elems[y][i]];
            table[x][y] = std::find(elems.begin(), elems.end(), comp) - elems.begin();
        }
    }
    return group_from_table(std::move(table), 0);
}

FiniteGroup dihedral_group_8() {
    // Elements r^a s^b with r^4 = s^2 = 1, s r s = r^-1; index = a + 4b.
    std::vector<std::vector<std::size_t>> table(8, std::vector<std::size_t>(8));
    for (std::size_t a1 = 0; a1 < 4; ++a1)
        for (std::size_t b1 = 0; b1 < 2; ++b1)
            for (std::size_t a2 = 0; a2 < 4; ++a2)
                for (std::size_t b2 = 0; b2 < 2; ++b2) {
                    std::size_t a = b1 ? (a1 + 4 - a2) % 4 : (a1 + a2) % 4;
                    std::size_t b = (b1 + b2) % 2;
                    table[a1 + 4 * b1][a2 + 4 * b2] = a + 4 * b;
                }
    return group_from_table(std::move(table), 0);
}

FiniteGroup quaternion_group() {
    // {1, -1, i, -i, j, -j, k, -k} as indices 0..7; sign s in {0,1}, axis in
    // {1, i, j, k}; index = 2*axis + s.
    auto mul = [](std::size_t x, std::size_t y) {
        static const int axis_table[4][4] = {  // result axis for 1,i,j,k
            {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static const int sign_table[4][4] = {  // extra sign from axis product
            {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
        std::size_t ax = x / 2, sx = x % 2, ay = y / 2, sy = y % 2;
        std::size_t axis = axis_table[ax][ay];
        std::size_t sign = (sx + sy + sign_table[ax][ay]) % 2;
        return 2 * axis + sign;
    };
    std::vector<std::vector<std::size_t>> table(8, std::vector<std::size_t>(8));
    for (std::size_t x = 0; x < 8; ++x)
        for (std::size_t y = 0; y < 8; ++y) table[x][y] = mul(x, y);
    return group_from_table(std::move(table), 0);
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    FiniteGroup g;
    g.size = a.size * b.size;
    g.unit = a.unit * b.size + b.unit;
    g.table.assign(g.size, std::vector<std::size_t>(g.size));
    g.inv.assign(g.size, 0);
    for (std::size_t x = 0; x < g.size; ++x) {
        for (std::size_t y = 0; y < g.size; ++y) {
            g.table[x][y] = a.op(x / b.size, y / b.size) * b.size + b.op(x % b.size, y % b.size);
        }
        g.inv[x] = a.inv[x / b.size] * b.size + b.inv[x % b.size];
    }
    return g;
}

std::vector<FiniteGroup> small_groups(std::size_t order) {
    switch (order) {
        case 1:
        case 2:
        case 3:
        case 5:
        case 7:
            return {cyclic_group(order)};
        case 4:
            return {cyclic_group(4), klein_four_group()};
        case 6:
            return {cyclic_group(6), symmetric_group_3()};
        case 8:
            return {cyclic_group(8), direct_product(cyclic_group(4), cyclic_group(2)),
                    direct_product(klein_four_group(), cyclic_group(2)), dihedral_group_8(),
                    quaternion_group()};
        default:
            throw std::invalid_argument("small_groups: order must be in 1..8");
    }
}

namespace {

bool extend_group_iso(const FiniteGroup& a, const FiniteGroup& b, std::vector<std::size_t>& map,
                      std::vector<bool>& used, std::size_t x) {
    const std::size_t n = a.size;
    if (x == n) return true;
    if (map[x] != n) return extend_group_iso(a, b, map, used, x + 1);
    for (std::size_t img = 0; img < n; ++img) {
        if (used[img]) continue;
        map[x] = img;
        used[img] = true;
        // propagate products against already-mapped elements
        bool ok = true;
        std::vector<std::pair<std::size_t, std::size_t>> assigned;
        for (std::size_t y = 0; y < n && ok; ++y) {
            if (map[y] == n) continue;
            for (auto [p, q] : {std::pair{x, y}, std::pair{y, x}}) {
                std::size_t pq = a.op(p, q);
                std::size_t img_pq = b.op(map[p], map[q]);
                if (map[pq] == n) {
                    if (used[img_pq]) {
                        ok = false;
                        break;
                    }
                    map[pq] = img_pq;
                    used[img_pq] = true;
                    assigned.push_back({pq, img_pq});
                } else if (map[pq] != img_pq) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok && extend_group_iso(a, b, map, used, x + 1)) return true;
        for (auto [p, q] : assigned) {
            map[p] = n;
            used[q] = false;
        }
        map[x] = n;
        used[img] = false;
    }
    return false;
}

}  // namespace

bool groups_isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
    if (a.size != b.size) return false;
    const std::size_t n = a.size;
    std::vector<std::size_t> map(n, n);
    std::vector<bool> used(n, false);
    map[a.unit] = b.unit;
    used[b.unit] = true;
    return extend_group_iso(a, b, map, used, 0);
}

FiniteGroup relabel_group(const FiniteGroup& g, const std::vector<std::size_t>& p) {
    FiniteGroup r;
    r.size = g.size;
    r.unit = p[g.unit];
    r.table.assign(g.size, std::vector<std::size_t>(g.size));
    r.inv.assign(g.size, 0);
    for (std::size_t x = 0; x < g.size; ++x) {
        for (std::size_t y = 0; y < g.size; ++y) r.table[p[x]][p[y]] = p[g.op(x, y)];
        r.inv[p[x]] = p[g.inv[x]];
    }
    return r;
}

FiniteRack relabel_rack(const FiniteRack& q, const std::vector<std::size_t>& p) {
    FiniteRack r;
    r.size = q.size;
    r.point = p[q.point];
    r.table.assign(q.size, std::vector<std::size_t>(q.size));
    for (std::size_t x = 0; x < q.size; ++x)
        for (std::size_t y = 0; y < q.size; ++y) r.table[p[x]][p[y]] = p[q.op(x, y)];
    return r;
}

DVec FloatAlgebra::bracket(const DVec& x, const DVec& y) const {
    if (x.size() != dim || y.size() != dim) throw std::invalid_argument("bracket: size mismatch");
    DVec r(dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) {
        if (x[i] == 0.0) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            double f = x[i] * y[j];
            if (f == 0.0) continue;
            for (std::size_t k = 0; k < dim; ++k) r[k] += f * cijk(i, j, k);
        }
    }
    return r;
}

DMatrix FloatAlgebra::ad(const DVec& x) const {
    DMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (x[i] == 0.0) continue;
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k) m.at(k, j) += x[i] * cijk(i, j, k);
    }
    return m;
}

FloatAlgebra to_float(const LeibnizAlgebra& g) {
    FloatAlgebra f(g.dim());
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = 0; j < g.dim(); ++j)
            for (std::size_t k = 0; k < g.dim(); ++k) f.set(i, j, k, g.c(i, j, k).to_double());
    return f;
}

double max_leibniz_residual(const FloatAlgebra& g) {
    const std::size_t n = g.dim;
    double worst = 0.0;
    auto ei = [n](std::size_t i) {
        DVec v(n, 0.0);
        v[i] = 1.0;
        return v;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                DVec lhs = g.bracket(ei(i), g.bracket(ei(j), ei(k)));
                DVec r1 = g.bracket(g.bracket(ei(i), ei(j)), ei(k));
                DVec r2 = g.bracket(ei(j), g.bracket(ei(i), ei(k)));
                for (std::size_t t = 0; t < n; ++t) {
                    worst = std::max(worst, std::fabs(lhs[t] - r1[t] - r2[t]));
                }
            }
    return worst;
}

DVec exp_ad_rack_op(const FloatAlgebra& g, const DVec& x, const DVec& y, double tol_axiom) {
    if (max_leibniz_residual(g) > tol_axiom) {
        throw std::invalid_argument("exp_ad_rack_op: algebra is not numerically Leibniz");
    }
    return matvec(expm(g.ad(x)), y);
}

std::pair<DMatrix, DMatrix> tangent_bundle_rack_op(const DMatrix& X, const DMatrix& a,
                                                   const DMatrix& Y, const DMatrix& b) {
    std::optional<DMatrix> ainv = inverse(a);
    if (!ainv) throw std::invalid_argument("tangent_bundle_rack_op: singular group element");
    DMatrix first = X + a * Y * (*ainv) - (*ainv) * X * a;
    DMatrix second = a * b * (*ainv);
    return {first, second};
}

}  // namespace leibrack

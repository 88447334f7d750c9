#include "leibrack/fixtures.hpp"

namespace leibrack {

LeibnizAlgebra ex22_algebra() {
    LieAlgebra h(1, {"E12"});
    Representation rep;
    rep.module_dim = 2;
    Matrix e12(2, 2);
    e12.at(0, 1) = Rational(1);
    rep.rho = {e12};
    return demisemidirect(h, rep);
}

LieAlgebra gl_lie(std::size_t n) {
    const std::size_t dim = n * n;
    std::vector<std::string> names;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            names.push_back("E" + std::to_string(a + 1) + std::to_string(b + 1));
    LieAlgebra g(dim, names);
    // [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = 0; d < n; ++d) {
                    const std::size_t i = a * n + b, j = c * n + d;
                    Vec val(dim);
                    if (b == c) val[a * n + d] += Rational(1);
                    if (d == a) val[c * n + b] -= Rational(1);
                    g.set_basis_bracket(i, j, val);
                }
    return g;
}

Representation gl_standard_representation(std::size_t n) {
    Representation rep;
    rep.module_dim = n;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Matrix e(n, n);
            e.at(a, b) = Rational(1);
            rep.rho.push_back(std::move(e));
        }
    return rep;
}

LeibnizAlgebra ex21_n2_algebra() {
    // h = gl(2) ⊕ gl(2) with the module action through the second factor.
    const LieAlgebra gl2 = gl_lie(2);
    const std::size_t m = gl2.dim();
    LieAlgebra h(2 * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k) {
                h.set_c(i, j, k, gl2.c(i, j, k));
                h.set_c(m + i, m + j, m + k, gl2.c(i, j, k));
            }
    Representation rep;
    rep.module_dim = 2;
    const Representation std2 = gl_standard_representation(2);
    for (std::size_t i = 0; i < m; ++i) rep.rho.push_back(Matrix(2, 2));
    for (std::size_t i = 0; i < m; ++i) rep.rho.push_back(std2.rho[i]);
    return demisemidirect(h, rep);
}

LieAlgebra heisenberg_lie() {
    LieAlgebra g(3, {"x", "y", "z"});
    g.set_c(0, 1, 2, Rational(1));
    g.set_c(1, 0, 2, Rational(-1));
    return g;
}

Matrix heisenberg_twist_derivation() {
    Matrix d(3, 3);
    d.at(0, 1) = Rational(1);  // y -> x
    return d;
}

LeibnizAlgebra heisenberg_dtwist_algebra() {
    return d_twist(heisenberg_lie(), heisenberg_twist_derivation());
}

LieAlgebra so3_lie() {
    LieAlgebra g(3, {"L1", "L2", "L3"});
    g.set_c(0, 1, 2, Rational(1));
    g.set_c(1, 0, 2, Rational(-1));
    g.set_c(1, 2, 0, Rational(1));
    g.set_c(2, 1, 0, Rational(-1));
    g.set_c(2, 0, 1, Rational(1));
    g.set_c(0, 2, 1, Rational(-1));
    return g;
}

LieAlgebra abelian_lie(std::size_t dim) { return LieAlgebra(dim); }

Representation so3_standard_representation() {
    Representation rep;
    rep.module_dim = 3;
    Matrix lx(3, 3), ly(3, 3), lz(3, 3);
    lx.at(1, 2) = Rational(-1);
    lx.at(2, 1) = Rational(1);
    ly.at(0, 2) = Rational(1);
    ly.at(2, 0) = Rational(-1);
    lz.at(0, 1) = Rational(-1);
    lz.at(1, 0) = Rational(1);
    rep.rho = {lx, ly, lz};
    return rep;
}

Dialgebra ex23_dialgebra(std::size_t v_dim) {
    const std::size_t n = v_dim, dim = n + n * n;
    Dialgebra d(dim);
    for (std::size_t i = 0; i < n; ++i) d.basis_names.push_back("u" + std::to_string(i + 1));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            d.basis_names.push_back("E" + std::to_string(a + 1) + std::to_string(b + 1));

    auto mat_index = [n](std::size_t a, std::size_t b) { return n + a * n + b; };
    // (u,X)⊢(v,Y) = (Xv, XY): E_ab ⊢ u_m = delta_bm u_a; E_ab ⊢ E_cd = delta_bc E_ad
    // (u,X)⊣(v,Y) = (0, XY): E_ab ⊣ E_cd = delta_bc E_ad
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            for (std::size_t m = 0; m < n; ++m) {
                if (b == m) d.set_vd(mat_index(a, b), m, a, Rational(1));
            }
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t dd = 0; dd < n; ++dd) {
                    if (b == c) {
                        d.set_vd(mat_index(a, b), mat_index(c, dd), mat_index(a, dd), Rational(1));
                        d.set_dv(mat_index(a, b), mat_index(c, dd), mat_index(a, dd), Rational(1));
                    }
                }
        }
    return d;
}

FiniteDigroup standard6_digroup() {
    const FiniteGroup z2 = cyclic_group(2);
    // H = Z2 = {1, s}; s swaps a and b in M = {e, a, b}.
    std::vector<std::vector<std::size_t>> action = {{0, 1, 2}, {0, 2, 1}};
    return standard_digroup(3, 0, z2, action);
}

FiniteDigroup standard24_digroup() {
    const FiniteGroup s3 = symmetric_group_3();
    // S3 permutes {a,b,c} = indices {1,2,3} of M = {e,a,b,c}. Element order
    // matches the catalog: id,(01),(02),(12),(012),(021).
    const std::vector<std::array<std::size_t, 3>> perms = {
        {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    std::vector<std::vector<std::size_t>> action;
    for (const auto& p : perms) {
        std::vector<std::size_t> row(4);
        row[0] = 0;
        for (std::size_t i = 0; i < 3; ++i) row[1 + i] = 1 + p[i];
        action.push_back(std::move(row));
    }
    return standard_digroup(4, 0, s3, action);
}

FiniteDigroup z2_group_digroup() {
    const FiniteGroup z2 = cyclic_group(2);
    FiniteDigroup g;
    g.size = 2;
    g.unit = 0;
    g.vdash = z2.table;
    g.dashv = z2.table;
    g.inv = z2.inv;
    return g;
}

FiniteRack one_element_rack() {
    FiniteRack q;
    q.size = 1;
    q.point = 0;
    q.table = {{0}};
    return q;
}

FiniteRack trivial_rack(std::size_t n) {
    FiniteRack q;
    q.size = n;
    q.point = 0;
    q.table.assign(n, std::vector<std::size_t>(n));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) q.table[x][y] = y;
    return q;
}

std::optional<LeibnizAlgebra> builtin_algebra(const std::string& name) {
    if (name == "ex2.2") return ex22_algebra();
    if (name == "ex2.1-n2") return ex21_n2_algebra();
    if (name == "heisenberg-dtwist") return heisenberg_dtwist_algebra();
    if (name == "heisenberg") return heisenberg_lie();
    if (name == "so3") return so3_lie();
    if (name == "abelian-3") return abelian_lie(3);
    return std::nullopt;
}

std::optional<Dialgebra> builtin_dialgebra(const std::string& name) {
    if (name == "ex2.3-r2") return ex23_dialgebra(2);
    if (name == "ex2.3-r1") return ex23_dialgebra(1);
    return std::nullopt;
}

std::optional<FiniteRack> builtin_rack(const std::string& name) {
    if (name == "s3-conj") return conjugation_rack(symmetric_group_3());
    if (name == "z2-conj") return conjugation_rack(cyclic_group(2));
    if (name == "one") return one_element_rack();
    if (name == "trivial-4") return trivial_rack(4);
    return std::nullopt;
}

std::optional<FiniteDigroup> builtin_digroup(const std::string& name) {
    if (name == "standard-6") return standard6_digroup();
    if (name == "standard-24") return standard24_digroup();
    if (name == "group-z2") return z2_group_digroup();
    return std::nullopt;
}

std::optional<LinearLieGroupModel> builtin_model(const std::string& name) {
    if (name == "so3-standard") return so3_standard_model();
    if (name == "ex2.2") return ex22_model();
    if (name == "abelian-trivial") return abelian_trivial_model();
    return std::nullopt;
}

std::vector<std::string> builtin_names() {
    return {"ex2.2",     "ex2.1-n2",  "heisenberg-dtwist", "heisenberg", "so3",
            "abelian-3", "ex2.3-r2",  "ex2.3-r1",          "s3-conj",    "z2-conj",
            "one",       "trivial-4", "standard-6",        "standard-24", "group-z2",
            "so3-standard", "abelian-trivial"};
}

}  // namespace leibrack

#include "leibrack/leibniz.hpp"

#include <stdexcept>

namespace leibrack {

LeibnizAlgebra::LeibnizAlgebra(std::size_t dim, std::vector<std::string> basis_names)
    : dim_(dim), names_(std::move(basis_names)), c_(dim * dim * dim) {
    if (names_.empty()) {
        for (std::size_t i = 0; i < dim; ++i) names_.push_back("e" + std::to_string(i + 1));
    }
    if (names_.size() != dim) throw std::invalid_argument("basis name count mismatch");
}

void LeibnizAlgebra::set_basis_bracket(std::size_t i, std::size_t j, const Vec& value) {
    if (value.size() != dim_) throw std::invalid_argument("bracket value size mismatch");
    for (std::size_t k = 0; k < dim_; ++k) set_c(i, j, k, value[k]);
}

Vec LeibnizAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
    Vec v(dim_);
    for (std::size_t k = 0; k < dim_; ++k) v[k] = c(i, j, k);
    return v;
}

Vec LeibnizAlgebra::bracket(const Vec& x, const Vec& y) const {
    if (x.size() != dim_ || y.size() != dim_) {
        throw std::invalid_argument("bracket: dimension mismatch");
    }
    Vec r(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j].is_zero()) continue;
            Rational f = x[i] * y[j];
            for (std::size_t k = 0; k < dim_; ++k) {
                if (!c(i, j, k).is_zero()) r[k] += f * c(i, j, k);
            }
        }
    }
    return r;
}

Matrix LeibnizAlgebra::ad_matrix(const Vec& x) const {
    if (x.size() != dim_) throw std::invalid_argument("ad: dimension mismatch");
    Matrix m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            for (std::size_t k = 0; k < dim_; ++k) {
                if (!c(i, j, k).is_zero()) m.at(k, j) += x[i] * c(i, j, k);
            }
        }
    }
    return m;
}

Matrix LeibnizAlgebra::ad_basis(std::size_t i) const {
    Matrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k) m.at(k, j) = c(i, j, k);
    return m;
}

Matrix LeibnizAlgebra::right_mult_basis(std::size_t i) const {
    Matrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k) m.at(k, j) = c(j, i, k);
    return m;
}

bool LeibnizAlgebra::is_skew() const {
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            for (std::size_t k = 0; k < dim_; ++k)
                if (c(i, j, k) != -c(j, i, k)) return false;
    return true;
}

LeibnizReport check_leibniz(const LeibnizAlgebra& g) {
    LeibnizReport report;
    const std::size_t n = g.dim();
    for (std::size_t i = 0; i < n; ++i) {
        Vec ei = unit_vec(n, i);
        for (std::size_t j = 0; j < n; ++j) {
            Vec cij = g.basis_bracket(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                // [ei,[ej,ek]] - [[ei,ej],ek] - [ej,[ei,ek]]
                Vec lhs = g.bracket(ei, g.basis_bracket(j, k));
                sub_assign(lhs, g.bracket(cij, unit_vec(n, k)));
                sub_assign(lhs, g.bracket(unit_vec(n, j), g.basis_bracket(i, k)));
                if (!is_zero_vec(lhs)) report.violations.push_back({i, j, k, std::move(lhs)});
            }
        }
    }
    return report;
}

Subspace squares_ideal(const LeibnizAlgebra& g) {
    if (!check_leibniz(g).ok()) {
        throw std::invalid_argument("squares_ideal: input fails the Leibniz identity");
    }
    const std::size_t n = g.dim();

    // Polarization: squares of sums span exactly the symmetric bracket image.
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < n; ++i) gens.push_back(g.basis_bracket(i, i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec s = g.basis_bracket(i, j);
            add_assign(s, g.basis_bracket(j, i));
            gens.push_back(std::move(s));
        }
    Subspace s = Subspace::span(n, gens);

    // Close under left and right multiplication until the dimension stabilizes.
    for (;;) {
        std::vector<Vec> next = s.basis();
        for (const Vec& v : s.basis()) {
            for (std::size_t i = 0; i < n; ++i) {
                next.push_back(g.bracket(unit_vec(n, i), v));
                next.push_back(g.bracket(v, unit_vec(n, i)));
            }
        }
        Subspace grown = Subspace::span(n, next);
        if (grown.dim() == s.dim()) break;
        s = grown;
    }
    return s;
}

Subspace ker_ad(const LeibnizAlgebra& g) {
    const std::size_t n = g.dim();
    // Rows indexed by (j,k): sum_i x_i c(i,j,k) = 0.
    Matrix m(n * n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i) m.at(j * n + k, i) = g.c(i, j, k);
    return nullspace(m);
}

Subspace lie_center(const LieAlgebra& h) {
    if (!h.is_skew()) throw std::invalid_argument("lie_center: input is not skew-symmetric");
    return ker_ad(h);
}

bool is_ideal(const LeibnizAlgebra& g, const Subspace& v) {
    if (v.ambient_dim() != g.dim()) throw std::invalid_argument("is_ideal: ambient mismatch");
    const std::size_t n = g.dim();
    for (const Vec& b : v.basis()) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!v.contains(g.bracket(unit_vec(n, i), b))) return false;
            if (!v.contains(g.bracket(b, unit_vec(n, i)))) return false;
        }
    }
    return true;
}

QuotientResult quotient(const LeibnizAlgebra& g, const Subspace& ideal) {
    if (!is_ideal(g, ideal)) throw std::invalid_argument("quotient: subspace is not an ideal");
    const std::size_t n = g.dim();
    const std::vector<std::size_t> comp = ideal.complement_coords();
    const std::size_t q = comp.size();

    // pi(x): reduce mod the ideal, then read off the complement coordinates.
    Matrix proj(q, n);
    for (std::size_t t = 0; t < n; ++t) {
        Vec red = ideal.reduce(unit_vec(n, t));
        for (std::size_t a = 0; a < q; ++a) proj.at(a, t) = red[comp[a]];
    }

    std::vector<std::string> names;
    for (std::size_t a = 0; a < q; ++a) names.push_back(g.basis_names()[comp[a]]);
    LeibnizAlgebra qa(q, names);
    for (std::size_t a = 0; a < q; ++a) {
        for (std::size_t b = 0; b < q; ++b) {
            Vec br = g.bracket(unit_vec(n, comp[a]), unit_vec(n, comp[b]));
            qa.set_basis_bracket(a, b, proj.apply(br));
        }
    }
    return {std::move(qa), std::move(proj)};
}

SplittingResult find_splitting(const LeibnizAlgebra& g, const Subspace& e) {
    SplittingResult result;
    if (!is_ideal(g, e)) {
        result.precondition_error = "candidate subspace is not an ideal";
        return result;
    }
    Subspace s = squares_ideal(g);
    if (!e.contains(s)) {
        result.precondition_error = "squares ideal is not contained in the candidate ideal";
        return result;
    }
    Subspace k = ker_ad(g);
    if (!k.contains(e)) {
        result.precondition_error = "candidate ideal is not contained in ker(ad)";
        return result;
    }
    result.precondition_ok = true;

    const std::size_t n = g.dim();
    auto [qalg, proj] = quotient(g, e);
    const std::size_t q = qalg.dim();
    const std::vector<std::size_t> comp = e.complement_coords();
    const std::size_t ed = e.dim();

    if (q == 0) {
        result.complement = Subspace::zero(n);
        return result;
    }

    // Section sigma = sigma0 + tau with sigma0(x_a) = f_a (standard vector at a
    // complement coordinate) and tau valued in e. Since e ⊆ ker(ad), the
    // homomorphism condition sigma([x_a,x_b]) = [sigma x_a, sigma x_b] is
    // linear in the unknowns t[c][m] of tau:
    //   sum_c qc(a,b,c)(f_c + tau_c) = [f_a, f_b] + [f_a, tau_b].
    const std::size_t unknowns = q * ed;
    Matrix sys(n * q * q, unknowns);
    Vec rhs(n * q * q);

    std::vector<Matrix> ad_f(q, Matrix());
    for (std::size_t a = 0; a < q; ++a) ad_f[a] = g.ad_basis(comp[a]);

    for (std::size_t a = 0; a < q; ++a) {
        for (std::size_t b = 0; b < q; ++b) {
            const std::size_t eq_base = (a * q + b) * n;
            // rhs = [f_a, f_b] - sum_c qc(a,b,c) f_c
            Vec r = g.bracket(unit_vec(n, comp[a]), unit_vec(n, comp[b]));
            for (std::size_t c = 0; c < q; ++c) {
                if (!qalg.c(a, b, c).is_zero()) r[comp[c]] -= qalg.c(a, b, c);
            }
            for (std::size_t row = 0; row < n; ++row) rhs[eq_base + row] = r[row];

            for (std::size_t c = 0; c < q; ++c) {
                for (std::size_t m = 0; m < ed; ++m) {
                    const std::size_t col = c * ed + m;
                    const Vec& w = e.basis()[m];
                    for (std::size_t row = 0; row < n; ++row) {
                        Rational v;
                        if (!qalg.c(a, b, c).is_zero()) v += qalg.c(a, b, c) * w[row];
                        if (c == b) v -= ad_f[a].apply(w)[row];
                        sys.at(eq_base + row, col) = v;
                    }
                }
            }
        }
    }

    std::optional<Vec> t = solve(sys, rhs);
    if (!t) return result;  // precondition_ok with no complement: no splitting exists

    std::vector<Vec> h_gens;
    for (std::size_t a = 0; a < q; ++a) {
        Vec v = unit_vec(n, comp[a]);
        for (std::size_t m = 0; m < ed; ++m) add_assign(v, scaled(e.basis()[m], (*t)[a * ed + m]));
        h_gens.push_back(std::move(v));
    }
    Subspace h = Subspace::span(n, h_gens);

    // Exact sanity: complement, bracket-closed, skew on h.
    auto [sum, inter] = sum_and_intersection(e, h);
    if (h.dim() != q || sum.dim() != n || inter.dim() != 0) {
        throw std::logic_error("find_splitting: solver produced a non-complement");
    }
    for (const Vec& x : h.basis()) {
        for (const Vec& y : h.basis()) {
            Vec xy = g.bracket(x, y);
            if (!h.contains(xy)) throw std::logic_error("find_splitting: complement not closed");
            Vec yx = g.bracket(y, x);
            add_assign(yx, xy);
            if (!is_zero_vec(yx)) throw std::logic_error("find_splitting: complement not skew");
        }
    }
    result.complement = h;
    return result;
}

std::optional<RepDefect> representation_defect(const LieAlgebra& h, const Representation& rep) {
    const std::size_t n = h.dim();
    if (rep.rho.size() != n) throw std::invalid_argument("representation: matrix count mismatch");
    for (const Matrix& m : rep.rho) {
        if (m.rows() != rep.module_dim || m.cols() != rep.module_dim) {
            throw std::invalid_argument("representation: matrix size mismatch");
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Matrix lhs(rep.module_dim, rep.module_dim);
            for (std::size_t k = 0; k < n; ++k) {
                if (h.c(i, j, k).is_zero()) continue;
                for (std::size_t r = 0; r < rep.module_dim; ++r)
                    for (std::size_t s = 0; s < rep.module_dim; ++s)
                        lhs.at(r, s) += h.c(i, j, k) * rep.rho[k].at(r, s);
            }
            Matrix rhs = rep.rho[i] * rep.rho[j] - rep.rho[j] * rep.rho[i];
            if (!(lhs == rhs)) return RepDefect{i, j};
        }
    }
    return std::nullopt;
}

LeibnizAlgebra demisemidirect(const LieAlgebra& h, const Representation& rep) {
    if (!h.is_skew()) throw std::invalid_argument("demisemidirect: h is not skew-symmetric");
    if (auto defect = representation_defect(h, rep)) {
        throw std::invalid_argument("demisemidirect: representation axiom failure at basis pair (" +
                                    std::to_string(defect->i) + "," + std::to_string(defect->j) + ")");
    }
    const std::size_t d = rep.module_dim, nh = h.dim(), n = d + nh;

    std::vector<std::string> names;
    for (std::size_t i = 0; i < d; ++i) names.push_back("u" + std::to_string(i + 1));
    for (std::size_t i = 0; i < nh; ++i) names.push_back(h.basis_names()[i]);

    LeibnizAlgebra g(n, names);
    for (std::size_t i = 0; i < nh; ++i) {
        // [X_i, v_j] = rho(X_i) v_j into the module block
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) g.set_c(d + i, j, k, rep.rho[i].at(k, j));
        // [X_i, X_j] from h into the h block
        for (std::size_t j = 0; j < nh; ++j)
            for (std::size_t k = 0; k < nh; ++k) g.set_c(d + i, d + j, d + k, h.c(i, j, k));
    }
    return g;
}

Vec Dialgebra::vdash(const Vec& x, const Vec& y) const {
    if (x.size() != dim || y.size() != dim) throw std::invalid_argument("vdash: size mismatch");
    Vec r(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (y[j].is_zero()) continue;
            Rational f = x[i] * y[j];
            for (std::size_t k = 0; k < dim; ++k)
                if (!vd(i, j, k).is_zero()) r[k] += f * vd(i, j, k);
        }
    }
    return r;
}

Vec Dialgebra::dashv(const Vec& x, const Vec& y) const {
    if (x.size() != dim || y.size() != dim) throw std::invalid_argument("dashv: size mismatch");
    Vec r(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (y[j].is_zero()) continue;
            Rational f = x[i] * y[j];
            for (std::size_t k = 0; k < dim; ++k)
                if (!dv(i, j, k).is_zero()) r[k] += f * dv(i, j, k);
        }
    }
    return r;
}

DialgebraReport check_dialgebra(const Dialgebra& d) {
    DialgebraReport report;
    const std::size_t n = d.dim;
    auto ei = [n](std::size_t i) { return unit_vec(n, i); };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Vec vd_ij = d.vdash(ei(i), ei(j));
            Vec dv_ij = d.dashv(ei(i), ei(j));
            for (std::size_t k = 0; k < n; ++k) {
                Vec vd_jk = d.vdash(ei(j), ei(k));
                Vec dv_jk = d.dashv(ei(j), ei(k));

                Vec a1 = d.vdash(vd_ij, ei(k));
                sub_assign(a1, d.vdash(ei(i), vd_jk));
                if (!is_zero_vec(a1)) report.assoc_vdash.push_back({i, j, k, std::move(a1)});

                Vec a2 = d.dashv(dv_ij, ei(k));
                sub_assign(a2, d.dashv(ei(i), dv_jk));
                if (!is_zero_vec(a2)) report.assoc_dashv.push_back({i, j, k, std::move(a2)});

                Vec r1 = d.vdash(ei(i), dv_jk);
                sub_assign(r1, d.dashv(vd_ij, ei(k)));
                if (!is_zero_vec(r1)) report.d1.push_back({i, j, k, std::move(r1)});

                Vec r2 = d.dashv(ei(i), vd_jk);
                sub_assign(r2, d.dashv(ei(i), dv_jk));
                if (!is_zero_vec(r2)) report.d2.push_back({i, j, k, std::move(r2)});

                Vec r3 = d.vdash(dv_ij, ei(k));
                sub_assign(r3, d.vdash(vd_ij, ei(k)));
                if (!is_zero_vec(r3)) report.d3.push_back({i, j, k, std::move(r3)});
            }
        }
    }
    return report;
}

LeibnizAlgebra dialgebra_bracket(const Dialgebra& d) {
    if (!check_dialgebra(d).ok()) {
        throw std::invalid_argument("dialgebra_bracket: dialgebra axioms fail");
    }
    LeibnizAlgebra g(d.dim, d.basis_names.empty() ? std::vector<std::string>{} : d.basis_names);
    for (std::size_t i = 0; i < d.dim; ++i)
        for (std::size_t j = 0; j < d.dim; ++j)
            for (std::size_t k = 0; k < d.dim; ++k) g.set_c(i, j, k, d.vd(i, j, k) - d.dv(j, i, k));
    return g;
}

std::optional<RepDefect> derivation_defect(const LieAlgebra& h, const Matrix& d) {
    const std::size_t n = h.dim();
    if (d.rows() != n || d.cols() != n) throw std::invalid_argument("derivation: size mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Vec lhs = d.apply(h.basis_bracket(i, j));
            Vec rhs = h.bracket(d.col(i), unit_vec(n, j));
            add_assign(rhs, h.bracket(unit_vec(n, i), d.col(j)));
            sub_assign(lhs, rhs);
            if (!is_zero_vec(lhs)) return RepDefect{i, j};
        }
    }
    return std::nullopt;
}

LeibnizAlgebra d_twist(const LieAlgebra& h, const Matrix& d) {
    if (!h.is_skew()) throw std::invalid_argument("d_twist: h is not skew-symmetric");
    if (auto defect = derivation_defect(h, d)) {
        throw std::invalid_argument("d_twist: not a derivation at basis pair (" +
                                    std::to_string(defect->i) + "," + std::to_string(defect->j) + ")");
    }
    if (!(d * d).is_zero()) throw std::invalid_argument("d_twist: D^2 != 0");

    const std::size_t n = h.dim();
    LeibnizAlgebra g(n, h.basis_names());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            g.set_basis_bracket(i, j, h.bracket(unit_vec(n, i), d.col(j)));
        }
    }
    return g;
}

}  // namespace leibrack

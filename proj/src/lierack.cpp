#include "leibrack/lierack.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace leibrack {

DMatrix LinearLieGroupModel::alg_element(const DVec& coords) const {
    if (coords.size() != alg_dim()) throw std::invalid_argument("alg_element: coordinate mismatch");
    DMatrix m(ambient_dim, ambient_dim);
    for (std::size_t i = 0; i < coords.size(); ++i) m = m + lie_basis[i].scaled(coords[i]);
    return m;
}

DMatrix LinearLieGroupModel::rho_element(const DVec& coords) const {
    if (coords.size() != alg_dim()) throw std::invalid_argument("rho_element: coordinate mismatch");
    DMatrix m(module_dim, module_dim);
    for (std::size_t i = 0; i < coords.size(); ++i) m = m + rho_basis[i].scaled(coords[i]);
    return m;
}

GroupElement LinearLieGroupModel::exp_element(const DVec& coords) const {
    return {expm(alg_element(coords)), expm(rho_element(coords))};
}

GroupElement LinearLieGroupModel::identity_element() const {
    return {DMatrix::identity(ambient_dim), DMatrix::identity(module_dim)};
}

ModelReport check_model(const LinearLieGroupModel& model) {
    ModelReport report;
    const std::size_t k = model.alg_dim();
    if (model.rho_basis.size() != k) throw std::invalid_argument("model: rho basis count mismatch");
    for (const DMatrix& x : model.lie_basis) {
        if (x.rows != model.ambient_dim || x.cols != model.ambient_dim) {
            throw std::invalid_argument("model: lie basis size mismatch");
        }
    }
    for (const DMatrix& r : model.rho_basis) {
        if (r.rows != model.module_dim || r.cols != model.module_dim) {
            throw std::invalid_argument("model: rho basis size mismatch");
        }
    }

    if (k > 0) {
        // Linear independence via the Gram matrix of the flattened basis.
        DMatrix gram(k, k);
        for (std::size_t p = 0; p < k; ++p)
            for (std::size_t q = 0; q < k; ++q) {
                double s = 0.0;
                for (std::size_t t = 0; t < model.lie_basis[p].a.size(); ++t)
                    s += model.lie_basis[p].a[t] * model.lie_basis[q].a[t];
                gram.at(p, q) = s;
            }
        report.basis_independent = solve_dense(gram, DVec(k, 0.0)).has_value();
    }

    for (std::size_t i = 0; i < k && report.basis_independent; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            DMatrix comm = model.lie_basis[i] * model.lie_basis[j] -
                           model.lie_basis[j] * model.lie_basis[i];
            double res = 0.0;
            std::optional<DVec> coords = span_coordinates(model.lie_basis, comm, &res);
            if (!coords) {
                report.basis_independent = false;
                break;
            }
            report.closure_residual = std::max(report.closure_residual, res);

            DMatrix rho_comm(model.module_dim, model.module_dim);
            for (std::size_t t = 0; t < k; ++t) rho_comm = rho_comm + model.rho_basis[t].scaled((*coords)[t]);
            DMatrix rho_bracket = model.rho_basis[i] * model.rho_basis[j] -
                                  model.rho_basis[j] * model.rho_basis[i];
            report.rep_residual = std::max(report.rep_residual, max_abs_diff(rho_comm, rho_bracket));
        }
    }
    return report;
}

FloatAlgebra model_lie_constants(const LinearLieGroupModel& model) {
    const std::size_t k = model.alg_dim();
    FloatAlgebra lie(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            DMatrix comm = model.lie_basis[i] * model.lie_basis[j] -
                           model.lie_basis[j] * model.lie_basis[i];
            std::optional<DVec> coords = span_coordinates(model.lie_basis, comm);
            if (!coords) throw std::invalid_argument("model_lie_constants: dependent basis");
            for (std::size_t t = 0; t < k; ++t) lie.set(i, j, t, (*coords)[t]);
        }
    return lie;
}

FloatAlgebra model_closed_form_bracket(const LinearLieGroupModel& model) {
    const std::size_t d = model.module_dim, k = model.alg_dim();
    const FloatAlgebra lie = model_lie_constants(model);
    FloatAlgebra g(d + k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t t = 0; t < d; ++t) g.set(d + i, j, t, model.rho_basis[i].at(t, j));
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t t = 0; t < k; ++t) g.set(d + i, d + j, d + t, lie.cijk(i, j, t));
    }
    return g;
}

RackPoint rack_op(const LinearLieGroupModel& model, const RackPoint& x, const RackPoint& y) {
    (void)model;
    std::optional<DMatrix> ainv = inverse(x.g.ambient);
    std::optional<DMatrix> ainv_mod = inverse(x.g.on_module);
    if (!ainv || !ainv_mod) throw std::invalid_argument("rack_op: singular group element");
    RackPoint r;
    r.v = matvec(x.g.on_module, y.v);
    r.g.ambient = x.g.ambient * y.g.ambient * (*ainv);
    r.g.on_module = x.g.on_module * y.g.on_module * (*ainv_mod);
    return r;
}

std::pair<RackPoint, RackPoint> digroup_ops(const LinearLieGroupModel& model, const RackPoint& x,
                                            const RackPoint& y) {
    (void)model;
    RackPoint vdash;
    vdash.v = matvec(x.g.on_module, y.v);
    vdash.g.ambient = x.g.ambient * y.g.ambient;
    vdash.g.on_module = x.g.on_module * y.g.on_module;
    RackPoint dashv;
    dashv.v = x.v;
    dashv.g = vdash.g;
    return {vdash, dashv};
}

RackPoint digroup_inv(const LinearLieGroupModel& model, const RackPoint& x) {
    std::optional<DMatrix> ainv = inverse(x.g.ambient);
    std::optional<DMatrix> ainv_mod = inverse(x.g.on_module);
    if (!ainv || !ainv_mod) throw std::invalid_argument("digroup_inv: singular group element");
    RackPoint r;
    r.v.assign(model.module_dim, 0.0);
    r.g.ambient = *ainv;
    r.g.on_module = *ainv_mod;
    return r;
}

DMatrix big_phi_closed(const LinearLieGroupModel& model, const RackPoint& x,
                       double* projection_residual) {
    const std::size_t d = model.module_dim, k = model.alg_dim(), n = d + k;
    std::optional<DMatrix> ainv = inverse(x.g.ambient);
    if (!ainv) throw std::invalid_argument("big_phi_closed: singular group element");

    DMatrix phi(n, n);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) phi.at(r, c) = x.g.on_module.at(r, c);

    double worst = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
        DMatrix ad_aj = x.g.ambient * model.lie_basis[j] * (*ainv);
        double res = 0.0;
        std::optional<DVec> coords = span_coordinates(model.lie_basis, ad_aj, &res);
        if (!coords) throw std::invalid_argument("big_phi_closed: dependent lie basis");
        worst = std::max(worst, res);
        for (std::size_t r = 0; r < k; ++r) phi.at(d + r, d + j) = (*coords)[r];
    }
    if (projection_residual) *projection_residual = worst;
    return phi;
}

DMatrix big_phi_fd(const LinearLieGroupModel& model, const RackPoint& x, double step,
                   double* projection_residual) {
    const std::size_t d = model.module_dim, k = model.alg_dim(), n = d + k;
    DMatrix phi(n, n);
    double worst = 0.0;

    for (std::size_t j = 0; j < n; ++j) {
        RackPoint plus, minus;
        if (j < d) {
            plus.v.assign(d, 0.0);
            plus.v[j] = step;
            plus.g = model.identity_element();
            minus.v.assign(d, 0.0);
            minus.v[j] = -step;
            minus.g = model.identity_element();
        } else {
            DVec coords(k, 0.0);
            coords[j - d] = step;
            plus.v.assign(d, 0.0);
            plus.g = model.exp_element(coords);
            coords[j - d] = -step;
            minus.v.assign(d, 0.0);
            minus.g = model.exp_element(coords);
        }
        RackPoint zp = rack_op(model, x, plus);
        RackPoint zm = rack_op(model, x, minus);

        for (std::size_t r = 0; r < d; ++r) phi.at(r, j) = (zp.v[r] - zm.v[r]) / (2.0 * step);

        DMatrix dh = (zp.g.ambient - zm.g.ambient).scaled(1.0 / (2.0 * step));
        double res = 0.0;
        std::optional<DVec> coords = span_coordinates(model.lie_basis, dh, &res);
        if (!coords) throw std::invalid_argument("big_phi_fd: dependent lie basis");
        worst = std::max(worst, res);
        for (std::size_t r = 0; r < k; ++r) phi.at(d + r, j) = (*coords)[r];
    }
    if (projection_residual) *projection_residual = worst;
    return phi;
}

namespace {

RackPoint tangent_curve_point(const LinearLieGroupModel& model, std::size_t direction, double s) {
    const std::size_t d = model.module_dim, k = model.alg_dim();
    RackPoint p;
    p.v.assign(d, 0.0);
    DVec coords(k, 0.0);
    if (direction < d) {
        p.v[direction] = s;
    } else {
        coords[direction - d] = s;
    }
    p.g = model.exp_element(coords);
    return p;
}

}  // namespace

TangentBracketResult tangent_bracket(const LinearLieGroupModel& model, const DiffOptions& opts) {
    ModelReport mr = check_model(model);
    if (!mr.ok()) throw std::invalid_argument("tangent_bracket: model invariants fail");

    const std::size_t d = model.module_dim, k = model.alg_dim(), n = d + k;
    TangentBracketResult result;
    result.bracket = FloatAlgebra(n);

    const double s = opts.outer_step;
    for (std::size_t i = 0; i < n; ++i) {
        DMatrix phi_plus = big_phi_fd(model, tangent_curve_point(model, i, s), opts.phi_step);
        DMatrix phi_minus = big_phi_fd(model, tangent_curve_point(model, i, -s), opts.phi_step);
        DMatrix ad_i = (phi_plus - phi_minus).scaled(1.0 / (2.0 * s));
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t t = 0; t < n; ++t) result.bracket.set(i, j, t, ad_i.at(t, j));
    }

    const FloatAlgebra closed = model_closed_form_bracket(model);
    for (std::size_t idx = 0; idx < result.bracket.c.size(); ++idx) {
        result.dev_from_closed_form =
            std::max(result.dev_from_closed_form, std::fabs(result.bracket.c[idx] - closed.c[idx]));
    }
    result.leibniz_residual = max_leibniz_residual(result.bracket);

    // Sampled first-derivative cross-checks.
    Rng rng(opts.seed);
    for (std::size_t sample = 0; sample < opts.samples; ++sample) {
        RackPoint x;
        x.v = rng.unit(d);
        x.g = model.exp_element(rng.unit(k));
        DMatrix fd = big_phi_fd(model, x, opts.phi_step);
        DMatrix cl = big_phi_closed(model, x);
        result.phi_fd_vs_closed = std::max(result.phi_fd_vs_closed, max_abs_diff(fd, cl));

        // Phi(x) is an automorphism of the closed-form bracket.
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t t = 0; t < n; ++t) {
                DVec ej(n, 0.0), et(n, 0.0);
                ej[j] = 1.0;
                et[t] = 1.0;
                DVec lhs = matvec(cl, closed.bracket(ej, et));
                DVec rhs = closed.bracket(matvec(cl, ej), matvec(cl, et));
                result.phi_automorphism_residual =
                    std::max(result.phi_automorphism_residual, vec_max_abs_diff(lhs, rhs));
            }
    }
    return result;
}

RoundtripReport verify_split_rack_roundtrip(const LeibnizAlgebra& g, const Subspace& e,
                                            const Subspace& h, const DiffOptions& opts) {
    RoundtripReport report;
    const std::size_t n = g.dim(), d = e.dim(), k = h.dim();
    if (d + k != n) {
        report.error = "e and h do not span the algebra";
        return report;
    }

    // Change of basis to (e-basis, h-basis) coordinates.
    Matrix p(n, n);
    for (std::size_t c = 0; c < d; ++c)
        for (std::size_t r = 0; r < n; ++r) p.at(r, c) = e.basis()[c][r];
    for (std::size_t c = 0; c < k; ++c)
        for (std::size_t r = 0; r < n; ++r) p.at(r, d + c) = h.basis()[c][r];
    std::optional<Matrix> pinv = inverse(p);
    if (!pinv) {
        report.error = "e + h is not a direct sum";
        return report;
    }

    LeibnizAlgebra adapted(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            adapted.set_basis_bracket(a, b, pinv->apply(g.bracket(p.col(a), p.col(b))));
        }

    // In adapted coordinates: [h_a, w_m] must stay in e and [h_a, h_b] in h.
    std::vector<Matrix> rho(k, Matrix(d, d));
    LeibnizAlgebra lie(k);
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t m = 0; m < d; ++m) {
            Vec br = adapted.basis_bracket(d + a, m);
            for (std::size_t t = d; t < n; ++t) {
                if (!br[t].is_zero()) {
                    report.error = "h·e leaves e in the adapted basis";
                    return report;
                }
            }
            for (std::size_t t = 0; t < d; ++t) rho[a].at(t, m) = br[t];
        }
        for (std::size_t b = 0; b < k; ++b) {
            Vec br = adapted.basis_bracket(d + a, d + b);
            for (std::size_t t = 0; t < d; ++t) {
                if (!br[t].is_zero()) {
                    report.error = "h is not bracket-closed in the adapted basis";
                    return report;
                }
            }
            for (std::size_t t = 0; t < k; ++t) lie.set_c(a, b, t, br[d + t]);
        }
    }

    // Derived subalgebra [h,h] and the first-row embedding of h/[h,h].
    std::vector<Vec> derived_gens;
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) derived_gens.push_back(lie.basis_bracket(a, b));
    Subspace derived = Subspace::span(k, derived_gens);
    const std::vector<std::size_t> ab_coords = derived.complement_coords();
    const std::size_t r = ab_coords.size();

    // Realization of h_a: block-diag(rho_a, ad_a, nu(p(h_a))) where nu is the
    // first-row embedding of the abelianization.  Each block is a Lie
    // homomorphism into matrices, and the last one separates central
    // directions killed by both rho and ad.
    const std::size_t m_dim = d + k + r + 1;
    std::vector<Matrix> realization_exact;
    for (std::size_t a = 0; a < k; ++a) {
        Matrix block(m_dim, m_dim);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) block.at(i, j) = rho[a].at(i, j);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) block.at(d + i, d + j) = lie.c(a, j, i);
        Vec abel = derived.reduce(unit_vec(k, a));
        for (std::size_t i = 0; i < r; ++i) block.at(d + k, d + k + 1 + i) = abel[ab_coords[i]];
        realization_exact.push_back(std::move(block));
    }

    // Faithfulness: the stacked flattened realization must have rank k.
    if (k > 0) {
        Matrix stacked(m_dim * m_dim, k);
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t i = 0; i < m_dim; ++i)
                for (std::size_t j = 0; j < m_dim; ++j)
                    stacked.at(i * m_dim + j, a) = realization_exact[a].at(i, j);
        if (rank(stacked) != k) {
            report.error = "h has no faithful realization from action, ad, and abelianization";
            return report;
        }
    }

    LinearLieGroupModel model;
    model.ambient_dim = m_dim;
    model.module_dim = d;
    for (std::size_t a = 0; a < k; ++a) {
        DMatrix xm(m_dim, m_dim), rm(d, d);
        for (std::size_t i = 0; i < m_dim; ++i)
            for (std::size_t j = 0; j < m_dim; ++j) xm.at(i, j) = realization_exact[a].at(i, j).to_double();
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) rm.at(i, j) = rho[a].at(i, j).to_double();
        model.lie_basis.push_back(std::move(xm));
        model.rho_basis.push_back(std::move(rm));
    }

    report.realizable = true;
    TangentBracketResult tb = tangent_bracket(model, opts);
    report.leibniz_residual = tb.leibniz_residual;
    report.phi_fd_vs_closed = tb.phi_fd_vs_closed;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t t = 0; t < n; ++t) {
                report.dev_from_input =
                    std::max(report.dev_from_input,
                             std::fabs(tb.bracket.cijk(i, j, t) - adapted.c(i, j, t).to_double()));
            }
    return report;
}

LinearLieGroupModel so3_standard_model() {
    LinearLieGroupModel m;
    m.ambient_dim = 3;
    m.module_dim = 3;
    DMatrix lx(3, 3), ly(3, 3), lz(3, 3);
    lx.at(1, 2) = -1.0;
    lx.at(2, 1) = 1.0;
    ly.at(0, 2) = 1.0;
    ly.at(2, 0) = -1.0;
    lz.at(0, 1) = -1.0;
    lz.at(1, 0) = 1.0;
    m.lie_basis = {lx, ly, lz};
    m.rho_basis = {lx, ly, lz};
    return m;
}

LinearLieGroupModel ex22_model() {
    LinearLieGroupModel m;
    m.ambient_dim = 2;
    m.module_dim = 2;
    DMatrix e12(2, 2);
    e12.at(0, 1) = 1.0;
    m.lie_basis = {e12};
    m.rho_basis = {e12};
    return m;
}

LinearLieGroupModel abelian_trivial_model() {
    LinearLieGroupModel m;
    m.ambient_dim = 2;
    m.module_dim = 2;
    DMatrix e12(2, 2);
    e12.at(0, 1) = 1.0;
    m.lie_basis = {e12};
    m.rho_basis = {DMatrix(2, 2)};
    return m;
}

}  // namespace leibrack

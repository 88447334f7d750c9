#include "leibrack/cli.hpp"

#include "leibrack/fixtures.hpp"
#include "leibrack/io.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <sstream>

namespace leibrack::cli {

GlobalOpts::GlobalOpts() : seed(kDefaultSeed), step(kPhiStep) {}

namespace {

std::ostream& out_of(const GlobalOpts& o) { return o.out ? *o.out : std::cout; }
std::ostream& err_of(const GlobalOpts& o) { return o.err ? *o.err : std::cerr; }

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

std::string triple_str(std::size_t i, std::size_t j, std::size_t k) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

/// Witness list capped for readability; checkers keep the full lists.
template <typename T, typename Fmt>
std::vector<std::string> cap_witnesses(const std::vector<T>& items, Fmt format,
                                       std::size_t cap = 10) {
    std::vector<std::string> w;
    for (std::size_t i = 0; i < items.size() && i < cap; ++i) w.push_back(format(items[i]));
    if (items.size() > cap) {
        w.push_back("... and " + std::to_string(items.size() - cap) + " more");
    }
    return w;
}

void add_leibniz_checks(Report& report, const LeibnizAlgebra& g) {
    LeibnizReport lr = check_leibniz(g);
    report.add("leibniz-identity", lr.ok(),
               cap_witnesses(lr.violations, [](const TripleViolation& v) {
                   return "triple " + triple_str(v.i, v.j, v.k);
               }));
}

void add_rack_checks(Report& report, const FiniteRack& q) {
    RackReport rr = check_rack(q);
    report.add("left-distributivity", rr.distrib_violations.empty(),
               cap_witnesses(rr.distrib_violations, [](const std::array<std::size_t, 3>& t) {
                   return "triple " + triple_str(t[0], t[1], t[2]);
               }));
    report.add("row-permutations", rr.non_permutation_rows.empty(),
               cap_witnesses(rr.non_permutation_rows,
                             [](std::size_t x) { return "row " + std::to_string(x); }));
    std::vector<std::size_t> point_bad = rr.point_left_violations;
    point_bad.insert(point_bad.end(), rr.point_right_violations.begin(),
                     rr.point_right_violations.end());
    report.add("point-axiom", point_bad.empty(),
               cap_witnesses(point_bad, [](std::size_t x) { return "element " + std::to_string(x); }));
}

void add_digroup_checks(Report& report, const FiniteDigroup& g) {
    DigroupReport dr = check_digroup(g);
    auto tw = [](const std::array<std::size_t, 3>& t) {
        return "triple " + triple_str(t[0], t[1], t[2]);
    };
    auto ew = [](std::size_t x) { return "element " + std::to_string(x); };
    report.add("G1-assoc-vdash", dr.g1_vdash.empty(), cap_witnesses(dr.g1_vdash, tw));
    report.add("G1-assoc-dashv", dr.g1_dashv.empty(), cap_witnesses(dr.g1_dashv, tw));
    report.add("G2-mixed-assoc", dr.g2.empty(), cap_witnesses(dr.g2, tw));
    report.add("G3-dashv-absorbs-vdash", dr.g3.empty(), cap_witnesses(dr.g3, tw));
    report.add("G4-vdash-absorbs-dashv", dr.g4.empty(), cap_witnesses(dr.g4, tw));
    report.add("G5-bar-unit", dr.g5.empty(), cap_witnesses(dr.g5, ew));
    report.add("G6-inverses", dr.g6.empty(), cap_witnesses(dr.g6, ew));
    report.add("inverse-uniqueness", dr.non_unique_inverse.empty(),
               cap_witnesses(dr.non_unique_inverse, ew));
    report.add("group-flag", true,
               {dr.is_group ? "digroup is a group (vdash == dashv)" : "not a group"});
}

void add_dialgebra_checks(Report& report, const Dialgebra& d) {
    DialgebraReport dr = check_dialgebra(d);
    auto tw = [](const TripleViolation& v) { return "triple " + triple_str(v.i, v.j, v.k); };
    report.add("assoc-vdash", dr.assoc_vdash.empty(), cap_witnesses(dr.assoc_vdash, tw));
    report.add("assoc-dashv", dr.assoc_dashv.empty(), cap_witnesses(dr.assoc_dashv, tw));
    report.add("D1-mixed-assoc", dr.d1.empty(), cap_witnesses(dr.d1, tw));
    report.add("D2-dashv-absorbs-vdash", dr.d2.empty(), cap_witnesses(dr.d2, tw));
    report.add("D3-vdash-absorbs-dashv", dr.d3.empty(), cap_witnesses(dr.d3, tw));
}

int finish(const Report& report, const GlobalOpts& opts) {
    print_report(report, out_of(opts), opts.json);
    return report.pass() ? kExitPass : kExitCheckFailed;
}

std::string subspace_witness(const Subspace& s) {
    std::string w = "dim " + std::to_string(s.dim());
    if (s.dim() == 0) return w + ", zero subspace";
    w += ", basis:";
    for (const Vec& b : s.basis()) {
        w += " [";
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (i) w += ",";
            w += b[i].str();
        }
        w += "]";
    }
    return w;
}

}  // namespace

int cmd_check(const std::string& target, const std::string& kind, const GlobalOpts& opts) {
    Report report;
    report.subject = target;
    try {
        if (kind == "leibniz") {
            std::optional<LeibnizAlgebra> g = builtin_algebra(target);
            if (!g) g = algebra_from_json(load_json_file(target));
            add_leibniz_checks(report, *g);
        } else if (kind == "rack") {
            std::optional<FiniteRack> q = builtin_rack(target);
            if (!q) q = rack_from_json(load_json_file(target));
            add_rack_checks(report, *q);
        } else if (kind == "digroup") {
            std::optional<FiniteDigroup> g = builtin_digroup(target);
            if (!g) g = digroup_from_json(load_json_file(target));
            add_digroup_checks(report, *g);
        } else if (kind == "dialgebra") {
            std::optional<Dialgebra> d = builtin_dialgebra(target);
            if (!d) d = dialgebra_from_json(load_json_file(target));
            add_dialgebra_checks(report, *d);
        } else {
            err_of(opts) << "unknown kind: " << kind << "\n";
            return kExitParseError;
        }
    } catch (const ParseError& e) {
        err_of(opts) << "parse error: " << e.what() << "\n";
        return kExitParseError;
    }
    return finish(report, opts);
}

int cmd_analyze(const std::string& target, const GlobalOpts& opts) {
    Report report;
    report.subject = target;
    LeibnizAlgebra g;
    std::vector<std::pair<std::string, Subspace>> candidates;
    try {
        std::optional<LeibnizAlgebra> loaded = builtin_algebra(target);
        if (!loaded) loaded = algebra_from_json(load_json_file(target));
        g = *loaded;
        if (opts.ideal_path) {
            Subspace user = subspace_from_json(load_json_file(*opts.ideal_path));
            if (user.ambient_dim() != g.dim()) throw ParseError("--ideal: ambient dimension mismatch");
            candidates.push_back({"user-ideal", user});
        }
    } catch (const ParseError& e) {
        err_of(opts) << "parse error: " << e.what() << "\n";
        return kExitParseError;
    }

    LeibnizReport lr = check_leibniz(g);
    report.add("leibniz-identity", lr.ok(),
               cap_witnesses(lr.violations, [](const TripleViolation& v) {
                   return "triple " + triple_str(v.i, v.j, v.k);
               }));
    if (!lr.ok()) return finish(report, opts);

    const Subspace s = squares_ideal(g);
    const Subspace k = ker_ad(g);
    report.add("squares-ideal", true, {subspace_witness(s)});
    report.add("ker-ad", true, {subspace_witness(k)});
    report.add("squares-ideal-is-ideal", is_ideal(g, s));
    {
        auto [qalg, proj] = quotient(g, s);
        report.add("lie-quotient-skew", qalg.is_skew());
    }

    candidates.insert(candidates.begin(), {"ker(ad)", k});
    candidates.insert(candidates.begin(), {"squares-ideal", s});

    for (const auto& [name, e] : candidates) {
        SplittingResult sr = find_splitting(g, e);
        if (!sr.precondition_ok) {
            report.add("sandwich-" + name, false, {sr.precondition_error});
            continue;
        }
        report.add("sandwich-" + name, true,
                   {"squares ideal ⊆ candidate ⊆ ker(ad), candidate " + subspace_witness(e)});
        if (sr.complement) {
            report.add("splitting-" + name, true, {"complement " + subspace_witness(*sr.complement)});
        } else {
            report.add("splitting-" + name, true, {"no splitting exists"});
        }
    }
    return finish(report, opts);
}

int cmd_digroup(const std::string& target, const std::string& subcommand, const GlobalOpts& opts) {
    FiniteDigroup g;
    try {
        std::optional<FiniteDigroup> loaded = builtin_digroup(target);
        if (!loaded) loaded = digroup_from_json(load_json_file(target));
        g = *loaded;
    } catch (const ParseError& e) {
        err_of(opts) << "parse error: " << e.what() << "\n";
        return kExitParseError;
    }

    Report report;
    report.subject = target;
    add_digroup_checks(report, g);
    if (!report.pass()) {
        // digroup axioms abort the pipelines
        return finish(report, opts);
    }

    if (subcommand == "decompose") {
        DigroupDecomposition dec = decompose(g);
        std::vector<std::string> w;
        w.push_back("|E| = " + std::to_string(dec.bar_units.size()));
        w.push_back("|J| = " + std::to_string(dec.j.elements.size()));
        std::string e_str = "E = {";
        for (std::size_t i = 0; i < dec.bar_units.size(); ++i) {
            e_str += (i ? "," : "") + std::to_string(dec.bar_units[i]);
        }
        w.push_back(e_str + "}");
        std::string j_str = "J = {";
        for (std::size_t i = 0; i < dec.j.elements.size(); ++i) {
            j_str += (i ? "," : "") + std::to_string(dec.j.elements[i]);
        }
        w.push_back(j_str + "}");
        for (std::size_t u = 0; u < dec.bar_units.size(); ++u)
            for (std::size_t h = 0; h < dec.j.elements.size(); ++h) {
                w.push_back("theta(" + std::to_string(dec.bar_units[u]) + "," +
                            std::to_string(dec.j.elements[h]) + ") = " + std::to_string(dec.iso[u][h]));
            }
        report.add("decomposition-isomorphism", dec.verified, w);
        return finish(report, opts);
    }
    if (subcommand == "rack") {
        FiniteRack q = induced_rack(g);
        out_of(opts) << rack_to_json(q).dump(2) << "\n";
        return kExitPass;
    }
    if (subcommand == "suite") {
        for (const SuiteReport& suite : {right_group_suite(g), induced_rack_suite(g)}) {
            for (const IdentityCheck& c : suite.checks) {
                report.add(c.name, c.pass, c.pass ? std::vector<std::string>{} :
                                                    std::vector<std::string>{c.witness});
            }
        }
        return finish(report, opts);
    }
    err_of(opts) << "unknown digroup subcommand: " << subcommand << "\n";
    return kExitParseError;
}

int cmd_diff(const std::string& target, const GlobalOpts& opts) {
    LinearLieGroupModel model;
    try {
        std::optional<LinearLieGroupModel> loaded = builtin_model(target);
        if (!loaded) loaded = model_from_json(load_json_file(target));
        model = *loaded;
    } catch (const ParseError& e) {
        err_of(opts) << "parse error: " << e.what() << "\n";
        return kExitParseError;
    }

    Report report;
    report.subject = target;
    ModelReport mr = check_model(model);
    report.add("model-invariants", mr.ok(),
               {"closure residual " + fmt(mr.closure_residual),
                "representation residual " + fmt(mr.rep_residual),
                mr.basis_independent ? "basis independent" : "basis dependent"},
               std::max(mr.closure_residual, mr.rep_residual));
    if (!mr.ok()) return finish(report, opts);

    DiffOptions dopts;
    dopts.seed = opts.seed;
    dopts.phi_step = opts.step;
    TangentBracketResult tb = tangent_bracket(model, dopts);

    const double tol_bracket = opts.tol.value_or(kTolBracket);
    const double tol_phi = opts.tol.value_or(kTolPhi);

    std::vector<std::string> constants;
    const std::size_t n = tb.bracket.dim;
    for (std::size_t i = 0; i < n && constants.size() < 40; ++i)
        for (std::size_t j = 0; j < n && constants.size() < 40; ++j) {
            std::string entry;
            for (std::size_t t = 0; t < n; ++t) {
                double v = tb.bracket.cijk(i, j, t);
                if (std::fabs(v) > 1e-6) {
                    entry += (entry.empty() ? "" : " + ") + fmt(v) + "*e" + std::to_string(t + 1);
                }
            }
            if (!entry.empty()) {
                constants.push_back("[e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) +
                                    "] = " + entry);
            }
        }
    report.add("estimated-structure-constants", true, constants);
    report.add("tangent-constants-vs-closed-form", tb.dev_from_closed_form < tol_bracket,
               {"max deviation " + fmt(tb.dev_from_closed_form)}, tb.dev_from_closed_form);
    report.add("tangent-leibniz-residual", tb.leibniz_residual < tol_bracket,
               {"residual " + fmt(tb.leibniz_residual)}, tb.leibniz_residual);
    report.add("phi-fd-vs-closed-form", tb.phi_fd_vs_closed < tol_phi,
               {"max difference " + fmt(tb.phi_fd_vs_closed)}, tb.phi_fd_vs_closed);
    report.add("phi-bracket-automorphism", tb.phi_automorphism_residual < tol_phi,
               {"residual " + fmt(tb.phi_automorphism_residual)}, tb.phi_automorphism_residual);
    return finish(report, opts);
}

int cmd_enumerate(std::size_t order, const GlobalOpts& opts) {
    if (order == 0 || order > 8) {
        err_of(opts) << "enumerate: order must be in 1..8\n";
        return kExitParseError;
    }
    Report report;
    report.subject = "digroups of order " + std::to_string(order);

    std::vector<FiniteDigroup> structural = enumerate_digroups_structure(order);
    auto s_counts = count_by_factorization(structural);
    std::vector<std::string> w;
    for (const auto& [key, count] : s_counts) {
        w.push_back("(|E|,|J|) = (" + std::to_string(key.first) + "," + std::to_string(key.second) +
                    "): " + std::to_string(count));
    }
    w.push_back("total: " + std::to_string(structural.size()));
    report.add("structure-enumeration", true, w);

    if (order <= 6) {
        BacktrackStats stats;
        std::vector<FiniteDigroup> backtracked = enumerate_digroups_backtracking(order, &stats);
        auto b_counts = count_by_factorization(backtracked);
        std::vector<std::string> bw;
        for (const auto& [key, count] : b_counts) {
            bw.push_back("(|E|,|J|) = (" + std::to_string(key.first) + "," +
                         std::to_string(key.second) + "): " + std::to_string(count));
        }
        bw.push_back("total: " + std::to_string(backtracked.size()));
        bw.push_back(std::to_string(stats.tables_found) + " raw tables with unit 0");
        report.add("backtracking-enumeration", true, bw);
        report.add("enumerator-agreement", s_counts == b_counts,
                   {"structure-theorem and backtracking class counts " +
                    std::string(s_counts == b_counts ? "agree" : "disagree")});
        report.add("g3-g4-redundancy", stats.g3_g4_failures == 0,
                   {"every {G1,G2,G5,G6} table satisfies G3 and G4 (" +
                    std::to_string(stats.tables_found) + " tables checked)"});
    }
    return finish(report, opts);
}

int cmd_expad(const std::string& target, const GlobalOpts& opts) {
    LeibnizAlgebra g;
    try {
        std::optional<LeibnizAlgebra> loaded = builtin_algebra(target);
        if (!loaded) loaded = algebra_from_json(load_json_file(target));
        g = *loaded;
    } catch (const ParseError& e) {
        err_of(opts) << "parse error: " << e.what() << "\n";
        return kExitParseError;
    }

    Report report;
    report.subject = target;
    const FloatAlgebra f = to_float(g);
    const std::size_t n = f.dim;

    const double axiom_res = max_leibniz_residual(f);
    report.add("float-leibniz-residual", axiom_res < kTolRack, {"residual " + fmt(axiom_res)},
               axiom_res);
    if (axiom_res >= kTolRack) return finish(report, opts);

    const double tol_rack = opts.tol.value_or(kTolRack);
    Rng rng(opts.seed);

    double distrib = 0.0;
    for (int i = 0; i < 100; ++i) {
        DVec x = rng.unit(n), y = rng.unit(n), z = rng.unit(n);
        DVec lhs = exp_ad_rack_op(f, x, exp_ad_rack_op(f, y, z));
        DVec rhs = exp_ad_rack_op(f, exp_ad_rack_op(f, x, y), exp_ad_rack_op(f, x, z));
        distrib = std::max(distrib, vec_max_abs_diff(lhs, rhs));
    }
    report.add("left-distributivity", distrib < tol_rack, {"max residual " + fmt(distrib)}, distrib);

    // exp(ad X) exp(ad Y) = exp(ad(exp(ad X)Y)) exp(ad X)
    double chain = 0.0;
    for (int i = 0; i < 100; ++i) {
        DVec x = rng.unit(n), y = rng.unit(n);
        DMatrix lhs = expm(f.ad(x)) * expm(f.ad(y));
        DMatrix rhs = expm(f.ad(exp_ad_rack_op(f, x, y))) * expm(f.ad(x));
        chain = std::max(chain, max_abs_diff(lhs, rhs));
    }
    report.add("conjugation-chain-identity", chain < tol_rack, {"max residual " + fmt(chain)}, chain);

    // Recover the constants: d/dt exp(ad(t e_i)) y at t = 0 columnwise.
    const double h = opts.step;
    double recover = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        DVec ei(n, 0.0);
        ei[i] = 1.0;
        DMatrix plus = expm(f.ad(vec_scaled(ei, h)));
        DMatrix minus = expm(f.ad(vec_scaled(ei, -h)));
        DMatrix ad_i = (plus - minus).scaled(1.0 / (2.0 * h));
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t t = 0; t < n; ++t) {
                recover = std::max(recover, std::fabs(ad_i.at(t, j) - f.cijk(i, j, t)));
            }
    }
    report.add("tangent-recovery", recover < opts.tol.value_or(kTolBracket),
               {"max deviation " + fmt(recover)}, recover);

    if (target == "heisenberg-dtwist") {
        // Closed form X∘Y = Y - X_y·Y_y·e_z from the order-2 nilpotent ad.
        double closed = 0.0;
        for (int i = 0; i < 100; ++i) {
            DVec x = rng.unit(3), y = rng.unit(3);
            DVec expect = y;
            expect[2] -= x[1] * y[1];
            closed = std::max(closed, vec_max_abs_diff(exp_ad_rack_op(f, x, y), expect));
        }
        report.add("nilpotent-closed-form", closed < 1e-12, {"max deviation " + fmt(closed)}, closed);
    }
    return finish(report, opts);
}

}  // namespace leibrack::cli

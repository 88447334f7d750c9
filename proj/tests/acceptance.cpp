// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails. Runs entirely from built-in fixtures.

#include "leibrack/cli.hpp"
#include "leibrack/fixtures.hpp"
#include "leibrack/io.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace leibrack;

namespace {

int failures = 0;
std::vector<std::string> notes;

#define REQUIRE_C(cond)                                                          \
    do {                                                                         \
        if (!(cond)) {                                                           \
            notes.push_back(std::string("    failed: ") + #cond + " at line " + \
                            std::to_string(__LINE__));                           \
            return false;                                                        \
        }                                                                        \
    } while (0)

void run_criterion(int number, const std::string& label, double budget_seconds,
                   bool (*body)()) {
    notes.clear();
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body();
    } catch (const std::exception& e) {
        notes.push_back(std::string("    exception: ") + e.what());
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > budget_seconds) {
        ok = false;
        notes.push_back("    exceeded time budget of " + std::to_string(budget_seconds) + " s");
    }
    std::printf("[%s] criterion %d: %s (%.2f s)\n", ok ? "PASS" : "FAIL", number, label.c_str(),
                elapsed);
    for (const std::string& n : notes) std::printf("%s\n", n.c_str());
    if (!ok) ++failures;
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& contents) {
        static int counter = 0;
        path = "acceptance_fixture_" + std::to_string(counter++) + ".json";
        std::ofstream out(path);
        out << contents;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

// ---------------------------------------------------------------------------

bool criterion1_module_example_analysis() {
    LeibnizAlgebra g = ex22_algebra();
    REQUIRE_C(check_leibniz(g).ok());

    Subspace s = squares_ideal(g);
    REQUIRE_C(s.dim() == 1);
    REQUIRE_C(s == Subspace::span(3, {unit_vec(3, 0)}));  // span of the first module vector

    Subspace k = ker_ad(g);
    REQUIRE_C(k.dim() == 2);

    SplittingResult over_k = find_splitting(g, k);
    REQUIRE_C(over_k.precondition_ok);
    REQUIRE_C(over_k.complement.has_value());
    REQUIRE_C(*over_k.complement == Subspace::span(3, {unit_vec(3, 2)}));

    SplittingResult over_s = find_splitting(g, s);
    REQUIRE_C(over_s.precondition_ok);
    REQUIRE_C(!over_s.complement.has_value());

    std::ostringstream out;
    cli::GlobalOpts opts;
    opts.out = &out;
    REQUIRE_C(cli::cmd_analyze("ex2.2", opts) == cli::kExitPass);
    REQUIRE_C(out.str().find("no splitting exists") != std::string::npos);
    return true;
}

bool criterion2_two_factor_example() {
    LeibnizAlgebra g = ex21_n2_algebra();
    REQUIRE_C(g.dim() == 10);
    REQUIRE_C(check_leibniz(g).ok());

    Subspace s = squares_ideal(g);
    Subspace k = ker_ad(g);
    REQUIRE_C(s.dim() == 2);
    REQUIRE_C(k.dim() == 3);

    for (const Subspace& e : {s, k}) {
        SplittingResult split = find_splitting(g, e);
        REQUIRE_C(split.precondition_ok);
        REQUIRE_C(split.complement.has_value());
        const Subspace& h = *split.complement;

        // Rebuild: in the adapted basis the algebra must literally be the
        // demisemidirect product of its extracted parts.
        const std::size_t n = g.dim(), d = e.dim(), kk = h.dim();
        REQUIRE_C(d + kk == n);
        Matrix p(n, n);
        for (std::size_t c = 0; c < d; ++c)
            for (std::size_t r = 0; r < n; ++r) p.at(r, c) = e.basis()[c][r];
        for (std::size_t c = 0; c < kk; ++c)
            for (std::size_t r = 0; r < n; ++r) p.at(r, d + c) = h.basis()[c][r];
        auto pinv = inverse(p);
        REQUIRE_C(pinv.has_value());

        LeibnizAlgebra adapted(n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                adapted.set_basis_bracket(a, b, pinv->apply(g.bracket(p.col(a), p.col(b))));

        LieAlgebra lie(kk);
        Representation rep;
        rep.module_dim = d;
        rep.rho.assign(kk, Matrix(d, d));
        for (std::size_t a = 0; a < kk; ++a) {
            for (std::size_t m = 0; m < d; ++m) {
                Vec br = adapted.basis_bracket(d + a, m);
                for (std::size_t t = 0; t < d; ++t) rep.rho[a].at(t, m) = br[t];
            }
            for (std::size_t b = 0; b < kk; ++b) {
                Vec br = adapted.basis_bracket(d + a, d + b);
                for (std::size_t t = 0; t < kk; ++t) lie.set_c(a, b, t, br[d + t]);
            }
        }
        REQUIRE_C(adapted == demisemidirect(lie, rep));  // exact rational equality
    }
    return true;
}

bool criterion3_dialgebra_consistency() {
    Dialgebra d = ex23_dialgebra(2);
    DialgebraReport r = check_dialgebra(d);
    REQUIRE_C(r.ok());
    REQUIRE_C(dialgebra_bracket(d) == demisemidirect(gl_lie(2), gl_standard_representation(2)));
    return true;
}

bool criterion4_digroup_suite() {
    FiniteDigroup g = standard6_digroup();
    DigroupReport dr = check_digroup(g);
    REQUIRE_C(dr.ok());
    REQUIRE_C(!dr.is_group);

    REQUIRE_C(bar_units(g).size() == 3);
    InverseGroupResult j = inverse_group(g);
    REQUIRE_C(groups_isomorphic(j.group, cyclic_group(2)));

    DigroupDecomposition dec = decompose(g);  // intertwining checked on all 36 pairs, both ops
    REQUIRE_C(dec.verified);
    REQUIRE_C(dec.bar_units.size() == 3);
    REQUIRE_C(dec.j.elements.size() == 2);

    FiniteRack q = induced_rack(g);
    REQUIRE_C(check_rack(q).ok());
    SuiteReport conj = induced_rack_suite(g);
    REQUIRE_C(conj.ok());
    SuiteReport rg = right_group_suite(g);
    REQUIRE_C(rg.ok());
    return true;
}

bool criterion5_axiom_redundancy() {
    for (std::size_t order = 1; order <= 6; ++order) {
        BacktrackStats stats;
        std::vector<FiniteDigroup> back = enumerate_digroups_backtracking(order, &stats);
        REQUIRE_C(stats.g3_g4_failures == 0);
        std::vector<FiniteDigroup> structural = enumerate_digroups_structure(order);
        REQUIRE_C(count_by_factorization(back) == count_by_factorization(structural));
    }
    return true;
}

bool criterion6_numerical_tangent_algebra() {
    TangentBracketResult tb = tangent_bracket(so3_standard_model());
    REQUIRE_C(tb.dev_from_closed_form < 1e-3);
    REQUIRE_C(tb.phi_fd_vs_closed < 1e-6);
    REQUIRE_C(tb.leibniz_residual < 1e-3);
    return true;
}

bool criterion7_exp_ad_rack() {
    FloatAlgebra f = to_float(heisenberg_dtwist_algebra());
    Rng rng(kDefaultSeed);

    double closed = 0.0;
    for (int t = 0; t < 100; ++t) {
        DVec x = rng.unit(3), y = rng.unit(3);
        DVec expect = y;
        expect[2] -= x[1] * y[1];
        closed = std::max(closed, vec_max_abs_diff(exp_ad_rack_op(f, x, y), expect));
    }
    REQUIRE_C(closed < 1e-12);

    double distrib = 0.0;
    for (int t = 0; t < 100; ++t) {
        DVec x = rng.unit(3), y = rng.unit(3), z = rng.unit(3);
        DVec lhs = exp_ad_rack_op(f, x, exp_ad_rack_op(f, y, z));
        DVec rhs = exp_ad_rack_op(f, exp_ad_rack_op(f, x, y), exp_ad_rack_op(f, x, z));
        distrib = std::max(distrib, vec_max_abs_diff(lhs, rhs));
    }
    REQUIRE_C(distrib < 1e-9);

    // recovered tangent bracket equals the input constants
    double recover = 0.0;
    const double h = kPhiStep;
    for (std::size_t i = 0; i < 3; ++i) {
        DVec ei(3, 0.0);
        ei[i] = 1.0;
        DMatrix plus = expm(f.ad(vec_scaled(ei, h)));
        DMatrix minus = expm(f.ad(vec_scaled(ei, -h)));
        DMatrix ad_i = (plus - minus).scaled(1.0 / (2.0 * h));
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t t = 0; t < 3; ++t)
                recover = std::max(recover, std::fabs(ad_i.at(t, j) - f.cijk(i, j, t)));
    }
    REQUIRE_C(recover < 1e-3);
    return true;
}

bool criterion8_tangent_bundle_subrack() {
    LinearLieGroupModel so3 = so3_standard_model();
    Rng rng(kDefaultSeed);
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        DMatrix x = so3.alg_element(rng.unit(3));
        DMatrix y = so3.alg_element(rng.unit(3));
        auto [first, second] = tangent_bundle_rack_op(x, expm(x), y, expm(y));
        auto einv = inverse(expm(x));
        REQUIRE_C(einv.has_value());
        DMatrix ad_y = expm(x) * y * (*einv);
        worst = std::max(worst, max_abs_diff(first, ad_y));
        worst = std::max(worst, max_abs_diff(second, expm(ad_y)));
    }
    REQUIRE_C(worst < 1e-10);
    return true;
}

bool criterion9_mutation_sensitivity() {
    cli::GlobalOpts opts;

    // Leibniz identity: add [e2,e3] = e2; fails at the (e3,e2,e3) triple.
    {
        LeibnizAlgebra g = ex22_algebra();
        g.set_c(1, 2, 1, Rational(1));
        TempFile f(algebra_to_json(g).dump());
        std::ostringstream out;
        opts.out = &out;
        REQUIRE_C(cli::cmd_check(f.path, "leibniz", opts) == cli::kExitCheckFailed);
        REQUIRE_C(out.str().find("[FAIL] leibniz-identity") != std::string::npos);
        REQUIRE_C(out.str().find("witness: triple (2,1,2)") != std::string::npos);
    }

    // Rack axioms: one transposed entry in the S3 conjugation table.
    {
        FiniteRack q = conjugation_rack(symmetric_group_3());
        q.table[1][4] = q.table[4][1];
        TempFile f(rack_to_json(q).dump());
        std::ostringstream out;
        opts.out = &out;
        REQUIRE_C(cli::cmd_check(f.path, "rack", opts) == cli::kExitCheckFailed);
        REQUIRE_C(out.str().find("[FAIL] left-distributivity") != std::string::npos);
        REQUIRE_C(out.str().find("witness: triple") != std::string::npos);
        REQUIRE_C(out.str().find("[FAIL] row-permutations") != std::string::npos);
        REQUIRE_C(out.str().find("[PASS] point-axiom") != std::string::npos);
    }

    // Digroup axioms: change (a,1)⊣(b,s); G1/G2 catch it, G5/G6 stay clean.
    {
        FiniteDigroup g = standard6_digroup();
        g.dashv[2][5] = 4;
        TempFile f(digroup_to_json(g).dump());
        std::ostringstream out;
        opts.out = &out;
        REQUIRE_C(cli::cmd_check(f.path, "digroup", opts) == cli::kExitCheckFailed);
        const std::string text = out.str();
        REQUIRE_C(text.find("[FAIL] G1-assoc-dashv") != std::string::npos ||
                  text.find("[FAIL] G2-mixed-assoc") != std::string::npos);
        REQUIRE_C(text.find("witness: triple") != std::string::npos);
        REQUIRE_C(text.find("[PASS] G5-bar-unit") != std::string::npos);
        REQUIRE_C(text.find("[PASS] G6-inverses") != std::string::npos);
    }

    // Dialgebra axioms: reverse the second factor of the right product; the
    // mixed axiom D1 names the failure while both associativities stay clean.
    {
        Dialgebra d = ex23_dialgebra(2);
        std::fill(d.dashv_c.begin(), d.dashv_c.end(), Rational(0));
        auto mat = [](std::size_t a, std::size_t b) { return 2 + a * 2 + b; };
        for (std::size_t a = 0; a < 2; ++a)
            for (std::size_t b = 0; b < 2; ++b)
                for (std::size_t c = 0; c < 2; ++c) d.set_dv(mat(a, b), mat(c, a), mat(c, b), Rational(1));
        TempFile f(dialgebra_to_json(d).dump());
        std::ostringstream out;
        opts.out = &out;
        REQUIRE_C(cli::cmd_check(f.path, "dialgebra", opts) == cli::kExitCheckFailed);
        const std::string text = out.str();
        REQUIRE_C(text.find("[FAIL] D1-mixed-assoc") != std::string::npos);
        REQUIRE_C(text.find("witness: triple") != std::string::npos);
        REQUIRE_C(text.find("[PASS] assoc-vdash") != std::string::npos);
        REQUIRE_C(text.find("[PASS] assoc-dashv") != std::string::npos);
    }
    return true;
}

}  // namespace

int main() {
    run_criterion(1, "squares ideal, ker(ad), and splittings of the 3-dim module example", 1.0,
                  criterion1_module_example_analysis);
    run_criterion(2, "dim-10 two-gl-factor example splits over both ideals with exact rebuild",
                  5.0, criterion2_two_factor_example);
    run_criterion(3, "module-endomorphism dialgebra satisfies D1-D3 and matches the split bracket",
                  5.0, criterion3_dialgebra_consistency);
    run_criterion(4, "order-6 digroup: axioms, E and J, decomposition, conjugation rack suite",
                  1.0, criterion4_digroup_suite);
    run_criterion(5, "orders 1-6: {G1,G2,G5,G6} search confirms G3,G4 and matches the structure count",
                  60.0, criterion5_axiom_redundancy);
    run_criterion(6, "so3 model: twice-differentiated rack matches the split bracket", 10.0,
                  criterion6_numerical_tangent_algebra);
    run_criterion(7, "exp(ad) rack on the twisted Heisenberg algebra: closed form and recovery",
                  10.0, criterion7_exp_ad_rack);
    run_criterion(8, "tangent-bundle rack: the exponential graph closes entrywise", 10.0,
                  criterion8_tangent_bundle_subrack);
    run_criterion(9, "single-entry mutations are caught by the intended axiom with a witness",
                  10.0, criterion9_mutation_sensitivity);

    if (failures != 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "leibrack/cli.hpp"
#include "leibrack/fixtures.hpp"
#include "leibrack/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace leibrack;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& contents) {
        static int counter = 0;
        path = "leibrack_test_" + std::to_string(counter++) + ".json";
        std::ofstream out(path);
        out << contents;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

int run_check(const std::string& target, const std::string& kind, std::string* text = nullptr) {
    std::ostringstream out, err;
    cli::GlobalOpts opts;
    opts.out = &out;
    opts.err = &err;
    int code = cli::cmd_check(target, kind, opts);
    if (text) *text = out.str() + err.str();
    return code;
}

}  // namespace

TEST_CASE("structure files round trip") {
    SUBCASE("algebra") {
        for (const LeibnizAlgebra& g :
             {ex22_algebra(), ex21_n2_algebra(), heisenberg_dtwist_algebra()}) {
            CHECK(algebra_from_json(algebra_to_json(g)) == g);
        }
    }
    SUBCASE("dialgebra") {
        Dialgebra d = ex23_dialgebra(2);
        Dialgebra back = dialgebra_from_json(dialgebra_to_json(d));
        CHECK(back.vdash_c == d.vdash_c);
        CHECK(back.dashv_c == d.dashv_c);
    }
    SUBCASE("rack and group") {
        FiniteRack q = conjugation_rack(symmetric_group_3());
        FiniteRack qb = rack_from_json(rack_to_json(q));
        CHECK(qb.table == q.table);
        CHECK(qb.point == q.point);

        FiniteGroup g = symmetric_group_3();
        FiniteGroup gb = group_from_json(group_to_json(g));
        CHECK(gb.table == g.table);
        CHECK(gb.inv == g.inv);
    }
    SUBCASE("digroup") {
        FiniteDigroup g = standard6_digroup();
        FiniteDigroup gb = digroup_from_json(digroup_to_json(g));
        CHECK(gb.vdash == g.vdash);
        CHECK(gb.dashv == g.dashv);
        CHECK(gb.inv == g.inv);
        CHECK(gb.unit == g.unit);
    }
    SUBCASE("model") {
        LinearLieGroupModel m = so3_standard_model();
        LinearLieGroupModel mb = model_from_json(model_to_json(m));
        REQUIRE(mb.lie_basis.size() == 3);
        for (std::size_t i = 0; i < 3; ++i) {
            CHECK(max_abs_diff(mb.lie_basis[i], m.lie_basis[i]) == 0.0);
            CHECK(max_abs_diff(mb.rho_basis[i], m.rho_basis[i]) == 0.0);
        }
    }
    SUBCASE("subspace") {
        Subspace s = Subspace::span(3, {{Rational(1), Rational(2), Rational(1, 3)}});
        CHECK(subspace_from_json(subspace_to_json(s)) == s);
    }
}

TEST_CASE("rationals serialize in lowest-terms p/q form") {
    nlohmann::json j = algebra_to_json(heisenberg_dtwist_algebra());
    bool saw_minus_one = false;
    for (const auto& entry : j.at("brackets")) {
        for (const auto& v : entry.at("val")) saw_minus_one |= (v.get<std::string>() == "-1");
    }
    CHECK(saw_minus_one);

    LeibnizAlgebra g(1);
    g.set_c(0, 0, 0, Rational(2, 4));
    CHECK(algebra_to_json(g).at("brackets")[0].at("val")[0].get<std::string>() == "1/2");
}

TEST_CASE("parse errors carry context") {
    // omitted bracket lists are fine (all zero), but bad entries are not
    CHECK(algebra_from_json(nlohmann::json{{"dim", 2}}) == LeibnizAlgebra(2));
    CHECK_THROWS_AS(
        algebra_from_json(nlohmann::json::parse(R"({"dim":2,"brackets":[{"i":5,"j":0,"val":["1","0"]}]})")),
        ParseError);
    CHECK_THROWS_AS(
        algebra_from_json(nlohmann::json::parse(R"({"dim":1,"brackets":[{"i":0,"j":0,"val":["1/0"]}]})")),
        ParseError);
    CHECK_THROWS_AS(rack_from_json(nlohmann::json::parse(R"({"size":2,"point":0,"table":[[0,1]]})")),
                    ParseError);
    CHECK_THROWS_AS(digroup_from_json(nlohmann::json::parse(R"({"size":1,"unit":0})")), ParseError);
    CHECK_THROWS_AS(load_json_file("does_not_exist.json"), ParseError);
}

TEST_CASE("reports round trip through json") {
    Report r;
    r.subject = "sample";
    r.add("first", true);
    r.add("second", false, {"witness one", "witness two"}, 0.125);
    r.add("third", true, {}, 3.5e-10);
    CHECK(report_from_json(report_to_json(r)) == r);
    CHECK_FALSE(r.pass());

    std::ostringstream text;
    print_report(r, text, false);
    CHECK(text.str().find("[FAIL] second") != std::string::npos);
    CHECK(text.str().find("witness one") != std::string::npos);
    CHECK(text.str().find("verdict: fail") != std::string::npos);

    std::ostringstream as_json;
    print_report(r, as_json, true);
    CHECK(report_from_json(nlohmann::json::parse(as_json.str())) == r);
}

TEST_CASE("check command exit codes") {
    SUBCASE("built-in fixtures pass") {
        CHECK(run_check("ex2.2", "leibniz") == cli::kExitPass);
        CHECK(run_check("s3-conj", "rack") == cli::kExitPass);
        CHECK(run_check("standard-6", "digroup") == cli::kExitPass);
        CHECK(run_check("ex2.3-r2", "dialgebra") == cli::kExitPass);
    }
    SUBCASE("files load and check") {
        TempFile f(algebra_to_json(ex22_algebra()).dump());
        CHECK(run_check(f.path, "leibniz") == cli::kExitPass);
    }
    SUBCASE("axiom failures exit 1 and print a witness") {
        FiniteDigroup g = standard6_digroup();
        g.dashv[2][5] = 4;
        TempFile f(digroup_to_json(g).dump());
        std::string text;
        CHECK(run_check(f.path, "digroup", &text) == cli::kExitCheckFailed);
        CHECK(text.find("witness: triple") != std::string::npos);
        CHECK(text.find("verdict: fail") != std::string::npos);
    }
    SUBCASE("empty or malformed files exit 2") {
        TempFile empty("");
        CHECK(run_check(empty.path, "leibniz") == cli::kExitParseError);
        TempFile bad("{\"dim\": }");
        CHECK(run_check(bad.path, "digroup") == cli::kExitParseError);
        CHECK(run_check("no_such_file.json", "rack") == cli::kExitParseError);
        CHECK(run_check("ex2.2", "nonsense-kind") == cli::kExitParseError);
    }
}

TEST_CASE("analyze and digroup commands produce machine-readable reports") {
    std::ostringstream out;
    cli::GlobalOpts opts;
    opts.out = &out;
    opts.json = true;

    SUBCASE("analyze emits parseable json that round trips") {
        CHECK(cli::cmd_analyze("ex2.2", opts) == cli::kExitPass);
        Report r = report_from_json(nlohmann::json::parse(out.str()));
        CHECK(r.pass());
        CHECK(report_from_json(report_to_json(r)) == r);
        bool saw_split = false;
        for (const CheckResult& c : r.checks) {
            if (c.name == "splitting-ker(ad)") {
                saw_split = true;
                REQUIRE_FALSE(c.witnesses.empty());
                CHECK(c.witnesses[0].find("complement") != std::string::npos);
            }
        }
        CHECK(saw_split);
    }
    SUBCASE("digroup rack output re-checks as a rack") {
        CHECK(cli::cmd_digroup("standard-6", "rack", opts) == cli::kExitPass);
        FiniteRack q = rack_from_json(nlohmann::json::parse(out.str()));
        CHECK(check_rack(q).ok());
        TempFile f(out.str());
        CHECK(run_check(f.path, "rack") == cli::kExitPass);
    }
    SUBCASE("digroup decompose reports the factor sizes") {
        CHECK(cli::cmd_digroup("standard-6", "decompose", opts) == cli::kExitPass);
        Report r = report_from_json(nlohmann::json::parse(out.str()));
        bool saw = false;
        for (const CheckResult& c : r.checks) {
            if (c.name == "decomposition-isomorphism") {
                saw = true;
                REQUIRE(c.witnesses.size() >= 2);
                CHECK(c.witnesses[0] == "|E| = 3");
                CHECK(c.witnesses[1] == "|J| = 2");
            }
        }
        CHECK(saw);

        std::ostringstream out2;
        cli::GlobalOpts opts2;
        opts2.out = &out2;
        opts2.json = true;
        CHECK(cli::cmd_digroup("group-z2", "decompose", opts2) == cli::kExitPass);
        Report rg = report_from_json(nlohmann::json::parse(out2.str()));
        for (const CheckResult& c : rg.checks) {
            if (c.name == "decomposition-isomorphism") CHECK(c.witnesses[0] == "|E| = 1");
        }
    }
    SUBCASE("digroup suite passes on the standard fixture") {
        CHECK(cli::cmd_digroup("standard-6", "suite", opts) == cli::kExitPass);
        Report r = report_from_json(nlohmann::json::parse(out.str()));
        CHECK(r.pass());
        bool saw_exchange = false;
        for (const CheckResult& c : r.checks) saw_exchange |= (c.name == "vdash-conj-exchange");
        CHECK(saw_exchange);
    }
    SUBCASE("ideal flag feeds an extra splitting candidate") {
        TempFile ideal(subspace_to_json(Subspace::span(3, {unit_vec(3, 0)})).dump());
        cli::GlobalOpts with_ideal;
        std::ostringstream out2;
        with_ideal.out = &out2;
        with_ideal.json = true;
        with_ideal.ideal_path = ideal.path;
        CHECK(cli::cmd_analyze("ex2.2", with_ideal) == cli::kExitPass);
        Report r = report_from_json(nlohmann::json::parse(out2.str()));
        bool saw_user = false;
        for (const CheckResult& c : r.checks) {
            if (c.name == "splitting-user-ideal") {
                saw_user = true;
                REQUIRE_FALSE(c.witnesses.empty());
                CHECK(c.witnesses[0] == "no splitting exists");
            }
        }
        CHECK(saw_user);
    }
}

TEST_CASE("diff accepts model files") {
    TempFile f(model_to_json(ex22_model()).dump());
    std::ostringstream out;
    cli::GlobalOpts opts;
    opts.out = &out;
    opts.json = true;
    CHECK(cli::cmd_diff(f.path, opts) == cli::kExitPass);
    Report r = report_from_json(nlohmann::json::parse(out.str()));
    CHECK(r.pass());

    // model whose basis commutator leaves the span: invariant failure, exit 1
    LinearLieGroupModel bad;
    bad.ambient_dim = 2;
    bad.module_dim = 2;
    DMatrix e12(2, 2), e21(2, 2);
    e12.at(0, 1) = 1.0;
    e21.at(1, 0) = 1.0;
    bad.lie_basis = {e12, e21};
    bad.rho_basis = {e12, e21};
    TempFile g(model_to_json(bad).dump());
    std::ostringstream out2;
    cli::GlobalOpts opts2;
    opts2.out = &out2;
    CHECK(cli::cmd_diff(g.path, opts2) == cli::kExitCheckFailed);
}

TEST_CASE("sampled commands are deterministic under a fixed seed") {
    auto run = [](std::uint64_t seed) {
        std::ostringstream out;
        cli::GlobalOpts opts;
        opts.out = &out;
        opts.seed = seed;
        REQUIRE(cli::cmd_diff("so3-standard", opts) == cli::kExitPass);
        REQUIRE(cli::cmd_expad("heisenberg-dtwist", opts) == cli::kExitPass);
        return out.str();
    };
    CHECK(run(12345) == run(12345));
    CHECK(run(kDefaultSeed) == run(kDefaultSeed));
}

TEST_CASE("expad command validates the twisted Heisenberg closed form") {
    std::ostringstream out;
    cli::GlobalOpts opts;
    opts.out = &out;
    opts.json = true;
    CHECK(cli::cmd_expad("heisenberg-dtwist", opts) == cli::kExitPass);
    Report r = report_from_json(nlohmann::json::parse(out.str()));
    bool saw_closed_form = false;
    for (const CheckResult& c : r.checks) {
        if (c.name == "nilpotent-closed-form") {
            saw_closed_form = true;
            CHECK(c.pass);
            REQUIRE(c.residual.has_value());
            CHECK(*c.residual < 1e-12);
        }
    }
    CHECK(saw_closed_form);
}

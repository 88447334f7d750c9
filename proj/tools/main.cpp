#include "leibrack/cli.hpp"

#include <CLI11.hpp>

#include <string>

int main(int argc, char** argv) {
    CLI::App app{"leibrack: Leibniz algebras, racks, and digroups toolkit"};
    app.require_subcommand(1);

    leibrack::cli::GlobalOpts opts;
    double tol = -1.0;
    std::string ideal;
    app.add_flag("--json", opts.json, "emit machine-readable JSON reports");
    app.add_option("--seed", opts.seed, "seed for sampled float checks");
    app.add_option("--step", opts.step, "finite-difference step");
    app.add_option("--tol", tol, "override check tolerances");
    app.add_option("--ideal", ideal, "subspace file with an extra splitting candidate");

    std::string target, kind, sub;
    std::size_t order = 0;

    CLI::App* check = app.add_subcommand("check", "verify the axioms of a structure");
    check->add_option("target", target, "built-in name or JSON file")->required();
    check->add_option("--kind", kind, "leibniz | rack | digroup | dialgebra")->required();

    CLI::App* analyze = app.add_subcommand("analyze", "squares ideal, ker(ad), splittings");
    analyze->add_option("target", target, "built-in name or algebra file")->required();

    CLI::App* digroup = app.add_subcommand("digroup", "digroup pipelines");
    digroup->add_option("subcommand", sub, "decompose | rack | suite")->required();
    digroup->add_option("target", target, "built-in name or digroup file")->required();

    CLI::App* diff = app.add_subcommand("diff", "differentiate a linear Lie rack model");
    diff->add_option("target", target, "built-in model name or model file")->required();

    CLI::App* enumerate = app.add_subcommand("enumerate", "count digroups of a given order");
    enumerate->add_option("order", order, "order (1..8)")->required();

    CLI::App* expad = app.add_subcommand("expad", "exp(ad) rack checks on an algebra");
    expad->add_option("target", target, "built-in name or algebra file")->required();

    // global flags may follow the subcommand
    for (CLI::App* sub : {check, analyze, digroup, diff, enumerate, expad}) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);
    if (tol > 0) opts.tol = tol;
    if (!ideal.empty()) opts.ideal_path = ideal;

    if (check->parsed()) return leibrack::cli::cmd_check(target, kind, opts);
    if (analyze->parsed()) return leibrack::cli::cmd_analyze(target, opts);
    if (digroup->parsed()) return leibrack::cli::cmd_digroup(target, sub, opts);
    if (diff->parsed()) return leibrack::cli::cmd_diff(target, opts);
    if (enumerate->parsed()) return leibrack::cli::cmd_enumerate(order, opts);
    if (expad->parsed()) return leibrack::cli::cmd_expad(target, opts);
    return leibrack::cli::kExitParseError;
}

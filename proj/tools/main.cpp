#include <iostream>
#include <numbers>

#include "CLI11.hpp"

#include "qconc/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Analytic lower bounds of concurrence for N x N bipartite states"};
    app.require_subcommand(1);

    qconc::cli::EvalOptions eval_opt;
    CLI::App* eval = app.add_subcommand(
        "eval", "Evaluate concurrence lower bounds on a JSON-serialized density matrix");
    eval->add_option("input", eval_opt.input_path, "State file: {\"dim\": N, \"matrix\": ...}")
        ->required();
    eval->add_option("--bounds", eval_opt.bounds, "Comma-separated subset of phi,ppt,realign")
        ->delimiter(',');
    eval->add_option("--detection-tol", eval_opt.detection_tol,
                     "Bound value above which entanglement counts as detected");
    eval->add_option("--tol", eval_opt.validation_tol,
                     "Validation tolerance for the density-matrix invariants");

    qconc::cli::SweepOptions sweep_opt;
    CLI::App* sweep = app.add_subcommand(
        "sweep", "Sweep the example-family slice over theta and write bounds as CSV");
    sweep->add_option("--q2", sweep_opt.q2, "Fixed q2 of the slice");
    sweep->add_option("--q4", sweep_opt.q4, "Fixed q4 of the slice");
    sweep->add_option("--theta-min", sweep_opt.theta_min, "Start of the theta grid (radians)");
    sweep->add_option("--theta-max", sweep_opt.theta_max,
                      "End of the theta grid (radians, at most pi/4)");
    sweep->add_option("--steps", sweep_opt.steps, "Number of inclusive grid points (>= 2)");
    sweep->add_option("--out", sweep_opt.out_path, "Output CSV path (default: stdout)");
    sweep->add_flag("--closed-form", sweep_opt.closed_form,
                    "Use the closed-form bounds instead of the numeric path");

    qconc::cli::ThresholdOptions threshold_opt;
    CLI::App* threshold = app.add_subcommand(
        "threshold", "Bisect for the smallest theta at which a bound detects entanglement");
    threshold->add_option("bound", threshold_opt.bound_name, "One of phi, ppt, realign, witness")
        ->required();
    threshold->add_option("--q2", threshold_opt.q2, "Fixed q2 of the slice");
    threshold->add_option("--q4", threshold_opt.q4, "Fixed q4 of the slice");
    threshold->add_option("--tol", threshold_opt.tol, "Bisection interval tolerance");
    threshold->add_option("--detection-tol", threshold_opt.detection_tol,
                          "Detection level the bound must exceed");

    qconc::cli::SelftestOptions selftest_opt;
    CLI::App* selftest =
        app.add_subcommand("selftest", "Run the oracle and state-family invariant suites");
    selftest->add_option("--level", selftest_opt.level, "full or quick (10x reduced counts)");
    selftest->add_option("--seed", selftest_opt.seed, "Seed for the sample generators");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return qconc::cli::kExitInvalidInput;
    }

    if (eval->parsed()) return qconc::cli::cmd_eval(eval_opt, std::cout, std::cerr);
    if (sweep->parsed()) return qconc::cli::cmd_sweep(sweep_opt, std::cout, std::cerr);
    if (threshold->parsed()) return qconc::cli::cmd_threshold(threshold_opt, std::cout, std::cerr);
    if (selftest->parsed()) return qconc::cli::cmd_selftest(selftest_opt, std::cout, std::cerr);
    return qconc::cli::kExitInvalidInput;
}

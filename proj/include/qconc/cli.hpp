#pragma once

#include <cstdint>
#include <iosfwd>
#include <numbers>
#include <string>
#include <vector>

#include "qconc/bipartite.hpp"
#include "qconc/bounds.hpp"

namespace qconc::cli {

// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 1;
inline constexpr int kExitNumericalFailure = 2;

/// Bound value with 12 fractional digits, for human-readable reports.
std::string format_fixed12(double value);

/// Shortest decimal that round-trips to the same double, for CSV cells.
std::string format_roundtrip(double value);

/// Parse and validate a state file: { "dim": N, "matrix": [[[re,im],...],...] }
/// with N^2 rows of N^2 [re,im] pairs. Throws qconc::Error with a message
/// naming the violated invariant.
DensityMatrix read_state_json(const std::string& path, double tol = kDensityTol);

struct EvalOptions {
    std::string input_path;
    std::vector<std::string> bounds = {"phi", "ppt", "realign"};
    double detection_tol = kDetectionTol;
    double validation_tol = kDensityTol;
};
int cmd_eval(const EvalOptions& opt, std::ostream& out, std::ostream& err);

struct SweepRow {
    double theta = 0.0;
    double q1 = 0.0;
    double q3 = 0.0;
    double bound_phi = 0.0;
    double bound_ppt = 0.0;
    double bound_realign = 0.0;
    double bound_witness = 0.0;
};

struct SweepOptions {
    double q2 = 0.5;
    double q4 = 0.01;
    double theta_min = 0.0;
    double theta_max = std::numbers::pi / 4.0;
    int steps = 200;
    std::string out_path;  // empty: write CSV to stdout
    bool closed_form = false;
};

/// Grid evaluation used by cmd_sweep; throws on invalid parameters.
std::vector<SweepRow> sweep_rows(const SweepOptions& opt);
int cmd_sweep(const SweepOptions& opt, std::ostream& out, std::ostream& err);

struct ThresholdOptions {
    std::string bound_name;
    double q2 = 0.5;
    double q4 = 0.01;
    double tol = 1e-6;  // bisection interval width
    double detection_tol = kDetectionTol;
};
int cmd_threshold(const ThresholdOptions& opt, std::ostream& out, std::ostream& err);

struct SelftestOptions {
    std::string level = "full";  // "full" or "quick" (10x reduced counts)
    std::uint64_t seed = 12345;
};
int cmd_selftest(const SelftestOptions& opt, std::ostream& out, std::ostream& err);

} // namespace qconc::cli

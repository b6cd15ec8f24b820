#include "qconc/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "qconc/oracle.hpp"
#include "qconc/rng.hpp"
#include "qconc/states.hpp"

namespace qconc::cli {

namespace {

using nlohmann::json;

const std::vector<std::string> kKnownBounds = {"phi", "ppt", "realign", "witness"};

bool is_known_bound(const std::string& name) {
    return std::find(kKnownBounds.begin(), kKnownBounds.end(), name) != kKnownBounds.end();
}

} // namespace

std::string format_fixed12(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12f", value);
    return buf;
}

std::string format_roundtrip(double value) {
    char buf[64];
    const auto result = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, result.ptr);
}

// ---------------------------------------------------------------------------
// State file IO
// ---------------------------------------------------------------------------

DensityMatrix read_state_json(const std::string& path, double tol) {
    std::ifstream in(path);
    if (!in) throw InvalidParams("cannot open state file '" + path + "'");

    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw InvalidParams("state file '" + path + "': JSON parse error: " + e.what());
    }

    if (!doc.is_object() || !doc.contains("dim") || !doc.contains("matrix"))
        throw InvalidParams("state file '" + path + "': expected object with dim and matrix");
    if (!doc["dim"].is_number_unsigned() || doc["dim"].get<std::size_t>() == 0)
        throw InvalidParams("state file '" + path + "': dim must be a positive integer");

    const std::size_t dim = doc["dim"].get<std::size_t>();
    const std::size_t d2 = dim * dim;
    const json& rows = doc["matrix"];
    if (!rows.is_array() || rows.size() != d2)
        throw InvalidParams("state file '" + path + "': matrix must have " + std::to_string(d2) +
                            " rows");

    std::vector<Complex> entries;
    entries.reserve(d2 * d2);
    for (const json& row : rows) {
        if (!row.is_array() || row.size() != d2)
            throw InvalidParams("state file '" + path + "': each matrix row must have " +
                                std::to_string(d2) + " [re, im] pairs");
        for (const json& cell : row) {
            if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() ||
                !cell[1].is_number())
                throw InvalidParams("state file '" + path + "': matrix cells must be [re, im]");
            entries.emplace_back(cell[0].get<double>(), cell[1].get<double>());
        }
    }
    return DensityMatrix(dim, CMatrix(d2, d2, std::move(entries)), tol);
}

// ---------------------------------------------------------------------------
// eval
// ---------------------------------------------------------------------------

int cmd_eval(const EvalOptions& opt, std::ostream& out, std::ostream& err) {
    for (const std::string& name : opt.bounds) {
        if (!is_known_bound(name)) {
            err << "eval: unknown bound '" << name << "'\n";
            return kExitInvalidInput;
        }
        if (name == "witness") {
            err << "eval: the witness bound is defined only for the example family; "
                   "use the sweep or threshold commands\n";
            return kExitInvalidInput;
        }
    }

    try {
        const DensityMatrix rho = read_state_json(opt.input_path, opt.validation_tol);
        const BoundReport report = evaluate_bounds(rho, opt.detection_tol);

        const auto want = [&](const char* name) {
            return std::find(opt.bounds.begin(), opt.bounds.end(), name) != opt.bounds.end();
        };

        out << "n = " << report.n << "\n";
        std::vector<std::string> detected;
        if (want("phi")) {
            out << "phi_trace_norm = " << format_fixed12(report.phi_trace_norm) << "\n";
            out << "phi = " << format_fixed12(report.phi_bound) << "\n";
            if (report.phi_bound > opt.detection_tol) detected.push_back("phi");
        }
        if (want("ppt")) {
            out << "ppt_trace_norm = " << format_fixed12(report.ppt_trace_norm) << "\n";
            out << "ppt = " << format_fixed12(report.ppt_bound) << "\n";
            if (report.ppt_bound > opt.detection_tol) detected.push_back("ppt");
        }
        if (want("realign")) {
            out << "realign_trace_norm = " << format_fixed12(report.realign_trace_norm) << "\n";
            out << "realign = " << format_fixed12(report.realign_bound) << "\n";
            if (report.realign_bound > opt.detection_tol) detected.push_back("realign");
        }
        out << "detected_by:";
        for (const std::string& name : detected) out << " " << name;
        out << "\n";
        return kExitOk;
    } catch (const NoConvergence& e) {
        err << "eval: " << e.what() << "\n";
        return kExitNumericalFailure;
    } catch (const NumericalFailure& e) {
        err << "eval: " << e.what() << "\n";
        return kExitNumericalFailure;
    } catch (const Error& e) {
        err << "eval: " << e.what() << "\n";
        return kExitInvalidInput;
    }
}

// ---------------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------------

std::vector<SweepRow> sweep_rows(const SweepOptions& opt) {
    if (opt.steps < 2) throw InvalidParams("sweep: steps must be >= 2");
    if (!(opt.theta_min <= opt.theta_max))
        throw InvalidParams("sweep: theta range is empty");
    // Validates q2/q4 and the theta endpoints.
    ThetaSlice(opt.q2, opt.q4, opt.theta_min);
    ThetaSlice(opt.q2, opt.q4, opt.theta_max);

    std::vector<SweepRow> rows;
    rows.reserve(opt.steps);
    for (int i = 0; i < opt.steps; ++i) {
        const double frac = static_cast<double>(i) / static_cast<double>(opt.steps - 1);
        const double theta = opt.theta_min + frac * (opt.theta_max - opt.theta_min);
        const HouParams q = slice_to_params(ThetaSlice(opt.q2, opt.q4, theta));
        SweepRow row;
        row.theta = theta;
        row.q1 = q.q1;
        row.q3 = q.q3;
        if (opt.closed_form) {
            row.bound_phi = closed_phi(q);
            row.bound_ppt = closed_ppt(q);
            row.bound_realign = closed_realign(q);
        } else {
            const DensityMatrix rho = hou_state(q);
            row.bound_phi = phi_bound(rho);
            row.bound_ppt = ppt_bound(rho);
            row.bound_realign = realign_bound(rho);
        }
        row.bound_witness = closed_witness(q);
        rows.push_back(row);
    }
    return rows;
}

int cmd_sweep(const SweepOptions& opt, std::ostream& out, std::ostream& err) {
    std::vector<SweepRow> rows;
    try {
        rows = sweep_rows(opt);
    } catch (const NoConvergence& e) {
        err << "sweep: " << e.what() << "\n";
        return kExitNumericalFailure;
    } catch (const Error& e) {
        err << "sweep: " << e.what() << "\n";
        return kExitInvalidInput;
    }

    std::ofstream file;
    if (!opt.out_path.empty()) {
        file.open(opt.out_path);
        if (!file) {
            err << "sweep: cannot open output file '" << opt.out_path << "'\n";
            return kExitInvalidInput;
        }
    }
    std::ostream& csv = opt.out_path.empty() ? out : file;

    csv << "theta,q1,q3,bound_phi,bound_ppt,bound_realign,bound_witness\n";
    for (const SweepRow& row : rows) {
        csv << format_roundtrip(row.theta) << ',' << format_roundtrip(row.q1) << ','
            << format_roundtrip(row.q3) << ',' << format_roundtrip(row.bound_phi) << ','
            << format_roundtrip(row.bound_ppt) << ',' << format_roundtrip(row.bound_realign)
            << ',' << format_roundtrip(row.bound_witness) << '\n';
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// threshold
// ---------------------------------------------------------------------------

int cmd_threshold(const ThresholdOptions& opt, std::ostream& out, std::ostream& err) {
    if (!is_known_bound(opt.bound_name)) {
        err << "threshold: unknown bound '" << opt.bound_name << "'\n";
        return kExitInvalidInput;
    }
    if (!(opt.tol > 0.0)) {
        err << "threshold: tol must be positive\n";
        return kExitInvalidInput;
    }

    const auto bound_at = [&](double theta) -> double {
        const HouParams q = slice_to_params(ThetaSlice(opt.q2, opt.q4, theta));
        if (opt.bound_name == "witness") return closed_witness(q);
        const DensityMatrix rho = hou_state(q);
        if (opt.bound_name == "phi") return phi_bound(rho);
        if (opt.bound_name == "ppt") return ppt_bound(rho);
        return realign_bound(rho);
    };

    try {
        double lo = 0.0;
        double hi = std::numbers::pi / 4.0;
        const double f_lo = bound_at(lo) - opt.detection_tol;
        const double f_hi = bound_at(hi) - opt.detection_tol;
        if (f_lo > 0.0 || f_hi <= 0.0) {
            out << "no crossing\n";
            return kExitInvalidInput;
        }
        while (hi - lo > opt.tol) {
            const double mid = 0.5 * (lo + hi);
            if (bound_at(mid) - opt.detection_tol > 0.0)
                hi = mid;
            else
                lo = mid;
        }
        out << format_fixed12(0.5 * (lo + hi)) << "\n";
        return kExitOk;
    } catch (const NoConvergence& e) {
        err << "threshold: " << e.what() << "\n";
        return kExitNumericalFailure;
    } catch (const Error& e) {
        err << "threshold: " << e.what() << "\n";
        return kExitInvalidInput;
    }
}

// ---------------------------------------------------------------------------
// selftest
// ---------------------------------------------------------------------------

namespace {

struct SuiteOutcome {
    std::string name;
    std::size_t samples = 0;
    bool pass = true;
    std::string counterexample;
};

// Runs `body(sample_index)` and records the first failure.
SuiteOutcome run_suite(const std::string& name, std::size_t samples,
                       const std::function<CheckResult(std::size_t)>& body) {
    SuiteOutcome outcome{name, samples, true, ""};
    for (std::size_t i = 0; i < samples; ++i) {
        const CheckResult r = body(i);
        if (!r.pass) {
            outcome.pass = false;
            outcome.counterexample = r.details;
            break;
        }
    }
    return outcome;
}

std::string format_q(const HouParams& q) {
    std::ostringstream os;
    os << "q = (" << q.q1 << ", " << q.q2 << ", " << q.q3 << ", " << q.q4 << ")";
    return os.str();
}

HouParams random_hou(Rng& rng) {
    while (true) {
        double v[4];
        double sum = 0.0;
        for (double& x : v) {
            x = rng.uniform();
            sum += x;
        }
        if (sum < 1e-12) continue;
        double q[4];
        double acc = 0.0;
        for (int i = 0; i < 3; ++i) {
            q[i] = v[i] / sum;
            acc += q[i];
        }
        q[3] = 1.0 - acc;  // exact simplex membership
        if (q[3] >= 0.0) return HouParams(q[0], q[1], q[2], q[3]);
    }
}

} // namespace

int cmd_selftest(const SelftestOptions& opt, std::ostream& out, std::ostream& err) {
    if (opt.level != "full" && opt.level != "quick") {
        err << "selftest: level must be 'full' or 'quick'\n";
        return kExitInvalidInput;
    }
    const std::size_t scale = opt.level == "quick" ? 10 : 1;
    const auto count = [&](std::size_t full) { return std::max<std::size_t>(1, full / scale); };

    Rng rng(opt.seed);
    std::vector<SuiteOutcome> outcomes;

    const std::vector<std::size_t> dims = {2, 3, 4, 5, 6};

    // Pure-state concurrence: the two formulas of the defining identity agree.
    outcomes.push_back(run_suite("oracle/concurrence_dual_formula", dims.size() * count(500),
                                 [&](std::size_t i) -> CheckResult {
        const std::size_t n = dims[i % dims.size()];
        const SchmidtVector alpha = random_schmidt(n, rng);
        const double direct = pure_concurrence(alpha);
        const CMatrix rho1 = partial_trace_second(density_from_pure(pure_from_schmidt(alpha)));
        const double purity = (rho1 * rho1).trace().real();
        const double reduced = std::sqrt(std::max(0.0, 2.0 * (1.0 - purity)));
        if (std::abs(direct - reduced) > 1e-12)
            return {false, "formulas differ: " + std::to_string(direct) + " vs " +
                               std::to_string(reduced)};
        return {};
    }));

    outcomes.push_back(run_suite("oracle/functional_property", dims.size() * count(1000),
                                 [&](std::size_t i) {
        return functional_property_check(random_schmidt(dims[i % dims.size()], rng));
    }));

    outcomes.push_back(run_suite("oracle/t_structure", dims.size() * count(500),
                                 [&](std::size_t i) {
        return t_structure_check(random_schmidt(dims[i % dims.size()], rng), 1e-9);
    }));

    outcomes.push_back(run_suite("oracle/charpoly", dims.size() * count(500),
                                 [&](std::size_t i) {
        return charpoly_check(random_schmidt(dims[i % dims.size()], rng), 1e-7);
    }));

    outcomes.push_back(run_suite("oracle/root_relations", dims.size() * count(500),
                                 [&](std::size_t i) -> CheckResult {
        const RootReport r = root_relations_check(random_schmidt(dims[i % dims.size()], rng));
        return {r.ok, r.violation};
    }));

    outcomes.push_back(run_suite("oracle/chen_inequality", dims.size() * count(1000),
                                 [&](std::size_t i) {
        return chen_inequality_check(random_schmidt(dims[i % dims.size()], rng));
    }));

    const std::vector<std::size_t> roof_dims = {2, 3, 4};
    const std::size_t roof_samples = opt.level == "quick" ? 20 : 200;
    outcomes.push_back(run_suite("oracle/sandwich", roof_dims.size() * count(200),
                                 [&](std::size_t i) -> CheckResult {
        const std::size_t n = roof_dims[i % roof_dims.size()];
        const std::size_t rank = 1 + rng.next_u64() % (n * n);
        const DensityMatrix rho = random_density(n, rank, rng);
        const double lower =
            std::max({phi_bound(rho), ppt_bound(rho), realign_bound(rho), 0.0});
        const double upper = convex_roof_upper(rho, roof_samples, rng.next_u64());
        if (lower > upper + 1e-6)
            return {false, "lower bound " + std::to_string(lower) + " above roof estimate " +
                               std::to_string(upper) + " (n = " + std::to_string(n) +
                               ", rank = " + std::to_string(rank) + ")"};
        return {};
    }));

    // Family state invariants across a simplex grid (120 composition points).
    {
        SuiteOutcome outcome{"states/hou_grid_invariants", 0, true, ""};
        const int grid = 7;
        for (int a = 0; a <= grid && outcome.pass; ++a)
            for (int b = 0; a + b <= grid && outcome.pass; ++b)
                for (int c = 0; a + b + c <= grid && outcome.pass; ++c) {
                    const int d = grid - a - b - c;
                    const HouParams q(static_cast<double>(a) / grid,
                                      static_cast<double>(b) / grid,
                                      static_cast<double>(c) / grid,
                                      static_cast<double>(d) / grid);
                    ++outcome.samples;
                    try {
                        hou_state(q);
                    } catch (const Error& e) {
                        outcome.pass = false;
                        outcome.counterexample = format_q(q) + ": " + e.what();
                    }
                }
        outcomes.push_back(outcome);
    }

    outcomes.push_back(run_suite("states/closed_vs_numeric", count(1000),
                                 [&](std::size_t) -> CheckResult {
        const HouParams q = random_hou(rng);
        const DensityMatrix rho = hou_state(q);
        const double dphi = std::abs(phi_bound(rho) - closed_phi(q));
        const double dppt = std::abs(ppt_bound(rho) - closed_ppt(q));
        const double dre = std::abs(realign_bound(rho) - closed_realign(q));
        if (dphi > 1e-9 || dppt > 1e-9 || dre > 1e-9)
            return {false, "closed/numeric gaps (phi, ppt, realign) = (" + std::to_string(dphi) +
                               ", " + std::to_string(dppt) + ", " + std::to_string(dre) + "); " +
                               format_q(q)};
        return {};
    }));

    outcomes.push_back(run_suite("states/hou_eigenvalue_list", count(100),
                                 [&](std::size_t) -> CheckResult {
        const HouParams q = random_hou(rng);
        std::vector<double> expected = hou_eigenvalues(q);
        std::sort(expected.begin(), expected.end());
        std::vector<double> got = hermitian_eigs(apply_id_phi(hou_state(q))).eigenvalues;
        double worst = 0.0;
        for (std::size_t k = 0; k < got.size(); ++k)
            worst = std::max(worst, std::abs(got[k] - expected[k]));
        if (worst > 1e-10)
            return {false, "eigenvalue multiset deviates by " + std::to_string(worst) + "; " +
                               format_q(q)};
        return {};
    }));

    outcomes.push_back(run_suite("states/phi_sign_iff_q1_above_q4", count(1000),
                                 [&](std::size_t i) -> CheckResult {
        HouParams q = random_hou(rng);
        if (i % 5 == 0) {
            // exercise the q1 == q4 boundary exactly
            const double t = 0.5 * rng.uniform();
            const double rest = 0.5 * (1.0 - 2.0 * t);
            q = HouParams(t, rest, rest, t);
        }
        const bool positive = closed_phi(q) > 0.0;
        if (positive != (q.q1 > q.q4))
            return {false, "sign mismatch: closed_phi = " + std::to_string(closed_phi(q)) +
                               "; " + format_q(q)};
        return {};
    }));

    bool all_pass = true;
    for (const SuiteOutcome& outcome : outcomes) {
        if (outcome.pass) {
            out << "[PASS] " << outcome.name << " (" << outcome.samples << " samples)\n";
        } else {
            all_pass = false;
            out << "[FAIL] " << outcome.name << ": " << outcome.counterexample << "\n";
        }
    }
    out << "selftest: " << (all_pass ? "all suites passed" : "FAILURES") << " (level="
        << opt.level << ")\n";
    if (!all_pass) {
        err << "selftest failed\n";
        return kExitNumericalFailure;
    }
    return kExitOk;
}

} // namespace qconc::cli

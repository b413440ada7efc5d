// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Usage: tsent_acceptance <path-to-cli> <scratch-dir>

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tsent/entanglement.hpp"
#include "tsent/metrics.hpp"
#include "tsent/pawclock.hpp"
#include "tsent/sweeps.hpp"
#include "tsent/verify.hpp"

using namespace tsent;

namespace {

constexpr double kPi = std::numbers::pi;

int failures = 0;

void report(int criterion, const std::string& name, bool ok, const std::string& detail) {
    std::printf("[%s] criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", criterion, name.c_str(),
                detail.c_str());
    if (!ok) ++failures;
}

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// --- criterion 1: S(A) anchors from the Fig. 4 caption -----------------------

void criterion_entropy_anchors() {
    const double s_third = entanglement::internal_entropy(model::phi_state_from_population(1.0 / 3.0));
    const double s_fifth = entanglement::internal_entropy(model::phi_state_from_population(1.0 / 5.0));
    const bool ok = std::abs(s_third - 0.9183) <= 1e-3 && std::abs(s_fifth - 0.7219) <= 1e-3;
    report(1, "S(A) anchors at |alpha|^2 = 1/3 and 1/5", ok,
           "S(1/3)=" + num(s_third) + " S(1/5)=" + num(s_fifth) + ", tol 1e-3");
}

// --- criterion 2: entropy at the orthogonal state ----------------------------

void criterion_orthogonal_entropy() {
    const double e_perp =
        pawclock::ets_entropy(pawclock::interacting_probs_continuous(std::acos(0.0)));
    const bool ok = std::abs(e_perp - 0.684) <= 5e-3;
    report(2, "interacting E(T,S) at dpsi = 0", ok, "E=" + num(e_perp) + ", target 0.684 +- 0.005");
}

// --- criterion 3: maximal-entanglement curve coincides with interacting ------

void criterion_coincidence() {
    const verify::CheckResult r = verify::check_coincidence(201);
    report(3, "|alpha|^2 = 1/2 curve coincides with the interacting curve", r.pass,
           "max |dE| = " + num(r.max_error) + " over 201 points, tol 1e-12");
}

// --- criterion 4: closed forms vs brute-force eigenvalues --------------------

void criterion_oracle_equivalence() {
    const verify::CheckResult ni = verify::check_noninteracting_probs_oracle(20250801, 200);
    const verify::CheckResult in = verify::check_interacting_probs_oracle(20250802, 200);
    report(4, "closed-form p vs brute-force eigenvalues, 200 samples per scenario",
           ni.pass && in.pass,
           "max error ni=" + num(ni.max_error) + " int=" + num(in.max_error) + ", tol 1e-10");
}

// --- criterion 5: N = 2 formulas reduce to the qubit clock -------------------

void criterion_n2_reduction() {
    double max_err = 0.0;
    for (int i = 0; i < 50; ++i) {
        for (int j = 0; j < 50; ++j) {
            const double alpha_sq = static_cast<double>(i) / 49.0;
            const double theta = kPi * j / 49.0;
            const pawclock::ProbPair via_gamma = pawclock::noninteracting_probs(
                alpha_sq, pawclock::gamma_sq_discrete(alpha_sq, theta, 2));
            const pawclock::ProbPair via_overlap =
                pawclock::qubit_clock_probs(metrics::fidelity_noninteracting(alpha_sq, theta));
            max_err = std::max(max_err, std::abs(via_gamma.p_plus() - via_overlap.p_plus()));
            max_err = std::max(max_err, std::abs(via_gamma.p_minus() - via_overlap.p_minus()));
        }
    }
    report(5, "N = 2 reduction over a 50x50 grid", max_err <= 1e-12,
           "max error " + num(max_err) + ", tol 1e-12");
}

// --- criterion 6: convergence of the discrete eigenvalue ---------------------

void criterion_convergence() {
    bool ok = true;
    std::string detail;
    for (int scenario = 0; scenario < 2; ++scenario) {
        const bool interacting = scenario == 1;
        const double angle = interacting ? kPi / 2.0 : kPi;
        std::vector<int> grid;
        for (int n = 8; n <= (1 << 20); n *= 2) grid.push_back(n);
        const auto rows = pawclock::convergence_report(
            interacting ? pawclock::Scenario::interacting()
                        : pawclock::Scenario::non_interacting(0.5),
            angle, grid);

        double err_1024 = 0.0;
        double err_final = 0.0;
        bool monotone = true;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].n_ticks == 1024) err_1024 = rows[i].abs_error;
            if (i + 1 == rows.size()) err_final = rows[i].abs_error;
            if (i > 0 && rows[i].abs_error > rows[i - 1].abs_error) monotone = false;
        }
        ok = ok && err_1024 < 1e-3 && err_final < 1e-6 && monotone;
        detail += std::string(interacting ? "int" : "ni") + ": e(2^10)=" + num(err_1024) +
                  " e(2^20)=" + num(err_final) + (monotone ? " monotone" : " NOT-monotone") + "; ";
    }
    report(6, "discrete p+ converges to the limit (1e-3 at 2^10, 1e-6 at 2^20)", ok, detail);
}

// --- criterion 7: monotonicity suites ----------------------------------------

void criterion_monotonicity() {
    bool tau_ok = true;
    for (double dpsi : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        const double a_min = (1.0 - dpsi) / 2.0;  // reachability boundary
        double prev_s = -1.0;
        double prev_tau = 10.0;
        for (int k = 0; k < 512; ++k) {
            const double alpha_sq = a_min + (0.5 - a_min) * k / 511.0;
            const double s = entanglement::binary_entropy(alpha_sq);
            const double tau = metrics::tau_for_distance(alpha_sq, dpsi);
            if (!(s > prev_s) || !(tau < prev_tau)) tau_ok = false;
            prev_s = s;
            prev_tau = tau;
        }
    }

    bool ets_ok = true;
    bool clock_vs_continuous_ok = true;
    for (double time : {0.2, 0.5, 1.0, kPi / 2.0}) {
        const double theta = 2.0 * time;
        double prev_qc = -1.0;
        double prev_cont = -1.0;
        for (int k = 0; k < 512; ++k) {
            const double s = static_cast<double>(k) / 511.0;
            const double alpha_sq = entanglement::alpha_sq_for_entropy(s);
            const double e_qc = pawclock::ets_entropy(
                pawclock::qubit_clock_probs(metrics::fidelity_noninteracting(alpha_sq, theta)));
            const double e_cont = pawclock::ets_entropy(pawclock::noninteracting_probs(
                alpha_sq, pawclock::gamma_sq_continuous(alpha_sq, theta)));
            if (k > 0 && (!(e_qc > prev_qc) || !(e_cont > prev_cont))) ets_ok = false;
            if (e_cont > e_qc + 1e-12) clock_vs_continuous_ok = false;
            prev_qc = e_qc;
            prev_cont = e_cont;
        }
    }

    report(7, "monotonicity: tau vs S(A), E(T,S) vs S(A), continuous <= qubit clock",
           tau_ok && ets_ok && clock_vs_continuous_ok,
           std::string("tau ") + (tau_ok ? "ok" : "BAD") + ", E " + (ets_ok ? "ok" : "BAD") +
               ", bound " + (clock_vs_continuous_ok ? "ok" : "BAD"));
}

// --- criterion 8: speed-limit comparison --------------------------------------

void criterion_speed_limits() {
    std::mt19937_64 gen(20250803);
    std::uniform_real_distribution<double> dist(0.05, 4.0);
    bool ok = true;
    for (int trial = 0; trial < 100; ++trial) {
        const double eps = dist(gen);
        const double lambda = dist(gen);
        const double t_ni = metrics::orthogonalization_time(model::NonInteractingModel{eps}, 0.5);
        const double t_i = metrics::orthogonalization_time(model::InteractingModel{eps, lambda});
        if ((t_i < t_ni) != (lambda > eps)) ok = false;
    }
    report(8, "t*_I < t*_NI exactly when lambda > epsilon, 100 samples", ok,
           ok ? "all samples consistent" : "mismatch found");
}

// --- criterion 9: CLI determinism ---------------------------------------------

int run_command(const std::string& cmd) {
    const int status = std::system(cmd.c_str());
    if (status == -1) return -1;
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void criterion_cli_determinism(const std::string& cli, const std::filesystem::path& scratch) {
    std::filesystem::create_directories(scratch);
    const std::string log = " 2>> " + (scratch / "stderr.log").string();

    const std::vector<std::pair<std::string, std::string>> runs = {
        {"speed", "speed --grid-points 101"},
        {"qubit-clock", "qubit-clock --grid-points 101"},
        {"continuous", "continuous --grid-points 101"},
        {"fidelity-sweep", "fidelity-sweep --grid-points 101"},
        {"converge", "converge"},
        {"verify", "verify --seed 12345"},
    };

    bool ok = true;
    std::string detail;
    for (const auto& [name, args] : runs) {
        const std::filesystem::path out_a = scratch / (name + "_a.csv");
        const std::filesystem::path out_b = scratch / (name + "_b.csv");
        const int rc_a =
            run_command(cli + " " + args + " --out " + out_a.string() + log);
        const int rc_b =
            run_command(cli + " " + args + " --out " + out_b.string() + log);
        if (rc_a != 0 || rc_b != 0) {
            ok = false;
            detail += name + ": nonzero exit; ";
            continue;
        }
        const std::string bytes_a = slurp(out_a);
        if (bytes_a.empty() || bytes_a != slurp(out_b)) {
            ok = false;
            detail += name + ": outputs differ; ";
        }
    }

    // a config file must reproduce the equivalent flag invocation, with flags
    // taking precedence over file values
    const std::filesystem::path cfg = scratch / "sweep.cfg";
    {
        std::ofstream out(cfg);
        out << "time=0.5\ngrid-points=51\n";
    }
    const std::filesystem::path cfg_out = scratch / "cfg.csv";
    const std::filesystem::path flag_out = scratch / "flag.csv";
    const std::filesystem::path override_out = scratch / "override.csv";
    bool cfg_ok =
        run_command(cli + " continuous --config " + cfg.string() + " --out " + cfg_out.string() +
                    log) == 0 &&
        run_command(cli + " continuous --time 0.5 --grid-points 51 --out " + flag_out.string() +
                    log) == 0 &&
        run_command(cli + " continuous --config " + cfg.string() +
                    " --grid-points 41 --time 0.5 --out " + override_out.string() + log) == 0;
    if (cfg_ok) {
        cfg_ok = slurp(cfg_out) == slurp(flag_out);
        const std::string overridden = slurp(override_out);
        std::ostringstream direct;
        const double t[1] = {0.5};
        sweeps::write_clock_csv(sweeps::compute_continuous(t, 41), direct);
        cfg_ok = cfg_ok && overridden == direct.str();
    }
    if (!cfg_ok) {
        ok = false;
        detail += "config-file path mismatch; ";
    }

    report(9, "byte-identical CLI output for identical configs", ok,
           ok ? "6 subcommands + config file" : detail);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: tsent_acceptance <path-to-cli> <scratch-dir>\n";
        return 2;
    }

    criterion_entropy_anchors();
    criterion_orthogonal_entropy();
    criterion_coincidence();
    criterion_oracle_equivalence();
    criterion_n2_reduction();
    criterion_convergence();
    criterion_monotonicity();
    criterion_speed_limits();
    criterion_cli_determinism(argv[1], argv[2]);

    if (failures > 0) {
        std::printf("ACCEPTANCE: FAIL (%d criterion%s)\n", failures, failures == 1 ? "" : "s");
        return 1;
    }
    std::printf("ACCEPTANCE: PASS (9/9 criteria)\n");
    return 0;
}

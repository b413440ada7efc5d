#include "tsent/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

#include "tsent/metrics.hpp"

namespace tsent::verify {

using linalg::cplx;
using linalg::ComplexMatrix;
using linalg::StateVector;
using model::PhiState;
using pawclock::ProbPair;

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

PhiState random_phi_state(Rng& rng, double alpha_sq) {
    const double pa = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const double pb = rng.uniform(0.0, 2.0 * std::numbers::pi);
    return PhiState{std::sqrt(alpha_sq) * cplx{std::cos(pa), std::sin(pa)},
                    std::sqrt(1.0 - alpha_sq) * cplx{std::cos(pb), std::sin(pb)}};
}

ComplexMatrix random_hermitian4(Rng& rng, double scale) {
    ComplexMatrix h(4);
    for (int r = 0; r < 4; ++r) {
        h(r, r) = rng.uniform(-scale, scale);
        for (int c = r + 1; c < 4; ++c) {
            const cplx z{rng.uniform(-scale, scale), rng.uniform(-scale, scale)};
            h(r, c) = z;
            h(c, r) = std::conj(z);
        }
    }
    return h;
}

ComplexMatrix pure_density(const PhiState& psi) {
    ComplexMatrix rho(4);
    linalg::accumulate_outer(rho, psi.embed(), 1.0);
    return rho;
}

struct Worst {
    double max_error = 0.0;
    std::string input;

    void update(double err, std::string in) {
        if (err >= max_error) {
            max_error = err;
            input = std::move(in);
        }
    }
};

CheckResult make_result(std::string name, int samples, const Worst& w, double tolerance) {
    return CheckResult{std::move(name), samples, w.max_error, tolerance, w.max_error <= tolerance,
                       w.input};
}

double prob_pair_distance(const ProbPair& lhs, const ProbPair& rhs) {
    return std::max(std::abs(lhs.p_plus() - rhs.p_plus()),
                    std::abs(lhs.p_minus() - rhs.p_minus()));
}

// Top two eigenvalues of the brute-force reduced density operator.
ProbPair bruteforce_probs(const pawclock::ClockSpec& spec) {
    const ComplexMatrix rho = pawclock::reduced_density_bruteforce(pawclock::trajectory(spec));
    return entanglement::prob_pair_from_eigenvalues(linalg::hermitian_eigenvalues(rho));
}

}  // namespace

ProbPair noninteracting_closed_form(double alpha_sq, double theta, int n_ticks) {
    return pawclock::noninteracting_probs(alpha_sq,
                                          pawclock::gamma_sq_discrete(alpha_sq, theta, n_ticks));
}

CheckResult check_propagator_norm(std::uint64_t seed, int samples) {
    Rng rng(seed);
    Worst w;
    for (int i = 0; i < samples; ++i) {
        const ComplexMatrix h = random_hermitian4(rng, 2.0);
        const double t = rng.uniform(0.0, 10.0);
        StateVector psi(4);
        double nrm = 0.0;
        for (int k = 0; k < 4; ++k) {
            psi[k] = cplx{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
            nrm += std::norm(psi[k]);
        }
        nrm = std::sqrt(nrm);
        for (int k = 0; k < 4; ++k) psi[k] /= nrm;

        const StateVector evolved = linalg::apply(linalg::propagator(h, t), psi);
        w.update(std::abs(evolved.norm() - 1.0), "t=" + num(t) + " h00=" + num(std::real(h(0, 0))));
    }
    return make_result("propagator-preserves-norm", samples, w, 1e-12);
}

CheckResult check_partial_trace_eigenvalues(std::uint64_t seed, int samples) {
    Rng rng(seed);
    Worst w;
    for (int i = 0; i < samples; ++i) {
        const double alpha_sq = rng.uniform(0.0, 1.0);
        const PhiState psi = random_phi_state(rng, alpha_sq);
        const std::vector<double> eigs =
            linalg::hermitian_eigenvalues(linalg::partial_trace_b(pure_density(psi)));
        const double lo = std::min(alpha_sq, 1.0 - alpha_sq);
        const double hi = std::max(alpha_sq, 1.0 - alpha_sq);
        const double err = std::max(std::abs(eigs[0] - lo), std::abs(eigs[1] - hi));
        w.update(err, "alpha_sq=" + num(alpha_sq));
    }
    return make_result("partial-trace-schmidt-eigenvalues", samples, w, 1e-12);
}

CheckResult check_noninteracting_evolution(std::uint64_t seed, int samples) {
    Rng rng(seed);
    Worst w;
    for (int i = 0; i < samples; ++i) {
        const double alpha_sq = rng.uniform(0.0, 1.0);
        const double eps = rng.uniform(0.1, 3.0);
        const double t = rng.uniform(0.0, 10.0);
        const PhiState psi = random_phi_state(rng, alpha_sq);
        const model::NonInteractingModel m{eps};

        const StateVector closed = model::evolve_noninteracting(psi, m, t).embed();
        const StateVector exact =
            linalg::apply(linalg::propagator(model::hamiltonian_matrix(m), t), psi.embed());

        double err = 0.0;
        for (int k = 0; k < 4; ++k) err = std::max(err, std::abs(closed[k] - exact[k]));
        w.update(err, "alpha_sq=" + num(alpha_sq) + " eps*t=" + num(eps * t));
    }
    return make_result("noninteracting-evolution-vs-propagator", samples, w, 1e-12);
}

CheckResult check_interacting_evolution(std::uint64_t seed, int samples) {
    Rng rng(seed);
    Worst w;
    for (int i = 0; i < samples; ++i) {
        const double lambda = rng.uniform(0.1, 3.0);
        const double t = rng.uniform(0.0, 4.0 * std::numbers::pi) / lambda;
        const model::InteractingModel m{0.0, lambda};

        const StateVector closed = model::evolve_interacting(m, t).embed();
        StateVector initial(4);
        initial[0] = 1.0;
        const StateVector exact =
            linalg::apply(linalg::propagator(model::hamiltonian_matrix(m), t), initial);

        double err = 0.0;
        for (int k = 0; k < 4; ++k) err = std::max(err, std::abs(closed[k] - exact[k]));
        w.update(err, "lambda=" + num(lambda) + " t=" + num(t));
    }
    return make_result("interacting-evolution-vs-propagator", samples, w, 1e-12);
}

CheckResult check_internal_entropy_oracle(std::uint64_t seed, int samples) {
    Rng rng(seed);
    Worst w;
    for (int i = 0; i < samples; ++i) {
        const double alpha_sq = rng.uniform(0.0, 1.0);
        const PhiState psi = random_phi_state(rng, alpha_sq);
        const std::vector<double> eigs =
            linalg::hermitian_eigenvalues(linalg::partial_trace_b(pure_density(psi)));
        const double oracle = entanglement::shannon_entropy_bits(eigs);
        const double err = std::abs(entanglement::internal_entropy(psi) - oracle);
        w.update(err, "alpha_sq=" + num(alpha_sq));
    }
    return make_result("internal-entropy-vs-spectral-oracle", samples, w, 1e-10);
}

CheckResult check_quadratic_entropy_oracle(std::uint64_t seed, int samples) {
    Rng rng(seed);
    Worst w;
    for (int i = 0; i < samples; ++i) {
        const double alpha_sq = rng.uniform(0.0, 1.0);
        const PhiState psi = random_phi_state(rng, alpha_sq);
        const double oracle =
            2.0 * (1.0 - linalg::purity(linalg::partial_trace_b(pure_density(psi))));
        const double err = std::abs(entanglement::internal_quadratic_entropy(psi) - oracle);
        w.update(err, "alpha_sq=" + num(alpha_sq));
    }
    return make_result("quadratic-entropy-vs-purity-oracle", samples, w, 1e-12);
}

CheckResult check_noninteracting_probs_oracle(std::uint64_t seed, int samples,
                                              const NonInteractingProbsFn& closed_form) {
    Rng rng(seed);
    Worst w;
    for (int i = 0; i < samples; ++i) {
        const double alpha_sq = rng.uniform(0.0, 1.0);
        const double theta = rng.uniform(0.0, 2.0 * std::numbers::pi);
        const int n = rng.uniform_int(2, 256);
        const pawclock::ClockSpec spec{n, theta, pawclock::Scenario::non_interacting(alpha_sq)};
        const double err =
            prob_pair_distance(closed_form(alpha_sq, theta, n), bruteforce_probs(spec));
        w.update(err, "alpha_sq=" + num(alpha_sq) + " theta=" + num(theta) + " n=" + std::to_string(n));
    }
    return make_result("noninteracting-probs-vs-bruteforce", samples, w, 1e-10);
}

CheckResult check_interacting_probs_oracle(std::uint64_t seed, int samples) {
    Rng rng(seed);
    Worst w;
    for (int i = 0; i < samples; ++i) {
        const double phi = rng.uniform(0.0, 2.0 * std::numbers::pi);
        const int n = rng.uniform_int(2, 256);
        const pawclock::ClockSpec spec{n, phi, pawclock::Scenario::interacting()};
        const double err =
            prob_pair_distance(pawclock::interacting_probs_discrete(phi, n), bruteforce_probs(spec));
        w.update(err, "phi=" + num(phi) + " n=" + std::to_string(n));
    }
    return make_result("interacting-probs-vs-bruteforce", samples, w, 1e-10);
}

CheckResult check_abc_consistency(std::uint64_t seed, int samples) {
    Rng rng(seed);
    Worst w;
    for (int i = 0; i < samples; ++i) {
        const double phi = rng.uniform(0.0, 2.0 * std::numbers::pi);
        const int n = rng.uniform_int(2, 2048);
        const ProbPair via_abc = pawclock::abc_eigenvalues(pawclock::abc_elements(phi, n));
        const double err =
            prob_pair_distance(via_abc, pawclock::interacting_probs_discrete(phi, n));
        w.update(err, "phi=" + num(phi) + " n=" + std::to_string(n));
    }
    return make_result("abc-eigenvalues-vs-closed-form", samples, w, 1e-12);
}

CheckResult check_qubit_clock_reduction(std::uint64_t seed, int samples) {
    Rng rng(seed);
    Worst w;
    for (int i = 0; i < samples; ++i) {
        const double alpha_sq = rng.uniform(0.0, 1.0);
        const double theta = rng.uniform(0.0, 2.0 * std::numbers::pi);
        const ProbPair via_gamma = noninteracting_closed_form(alpha_sq, theta, 2);
        const ProbPair via_overlap =
            pawclock::qubit_clock_probs(metrics::fidelity_noninteracting(alpha_sq, theta));
        w.update(prob_pair_distance(via_gamma, via_overlap),
                 "alpha_sq=" + num(alpha_sq) + " theta=" + num(theta));
    }
    return make_result("n2-reduction-vs-qubit-clock", samples, w, 1e-12);
}

CheckResult check_coincidence(int grid_points) {
    Worst w;
    for (int i = 0; i < grid_points; ++i) {
        const double dpsi = static_cast<double>(i) / (grid_points - 1);
        const double theta = metrics::theta_from_fidelity(0.5, dpsi);
        const double e_ni = pawclock::ets_entropy(
            pawclock::noninteracting_probs(0.5, pawclock::gamma_sq_continuous(0.5, theta)));
        const double e_int =
            pawclock::ets_entropy(pawclock::interacting_probs_continuous(std::acos(dpsi)));
        w.update(std::abs(e_ni - e_int), "dpsi=" + num(dpsi));
    }
    return make_result("maximal-entanglement-coincidence", grid_points, w, 1e-12);
}

CheckResult check_fidelity_round_trip(std::uint64_t seed, int samples) {
    Rng rng(seed);
    Worst w;
    for (int i = 0; i < samples; ++i) {
        const double alpha_sq = rng.uniform(0.001, 0.999);
        const double theta = rng.uniform(0.0, std::numbers::pi);
        const double back =
            metrics::theta_from_fidelity(alpha_sq, metrics::fidelity_noninteracting(alpha_sq, theta));
        w.update(std::abs(back - theta), "alpha_sq=" + num(alpha_sq) + " theta=" + num(theta));
    }
    return make_result("fidelity-inversion-round-trip", samples, w, 1e-10);
}

CheckResult check_tau_theta_relation(std::uint64_t seed, int samples) {
    Rng rng(seed);
    Worst w;
    for (int i = 0; i < samples; ++i) {
        const double alpha_sq = rng.uniform(0.001, 0.999);
        const double theta = rng.uniform(0.0, std::numbers::pi);
        const double tau =
            metrics::tau_for_distance(alpha_sq, metrics::fidelity_noninteracting(alpha_sq, theta));
        w.update(std::abs(tau - theta / 2.0),
                 "alpha_sq=" + num(alpha_sq) + " theta=" + num(theta));
    }
    return make_result("tau-equals-half-theta", samples, w, 1e-10);
}

std::vector<CheckResult> run_all(std::uint64_t seed) {
    std::vector<CheckResult> results;
    results.push_back(check_propagator_norm(seed + 1));
    results.push_back(check_partial_trace_eigenvalues(seed + 2));
    results.push_back(check_noninteracting_evolution(seed + 3));
    results.push_back(check_interacting_evolution(seed + 4));
    results.push_back(check_internal_entropy_oracle(seed + 5));
    results.push_back(check_quadratic_entropy_oracle(seed + 6));
    results.push_back(check_noninteracting_probs_oracle(seed + 7));
    results.push_back(check_interacting_probs_oracle(seed + 8));
    results.push_back(check_abc_consistency(seed + 9));
    results.push_back(check_qubit_clock_reduction(seed + 10));
    results.push_back(check_coincidence());
    results.push_back(check_fidelity_round_trip(seed + 11));
    results.push_back(check_tau_theta_relation(seed + 12));
    return results;
}

bool all_passed(std::span<const CheckResult> results) {
    for (const CheckResult& r : results) {
        if (!r.pass) return false;
    }
    return true;
}

void write_report(std::span<const CheckResult> results, std::uint64_t seed, std::ostream& out) {
    char line[220];
    std::snprintf(line, sizeof line, "tsent verification report (seed %llu)\n\n",
                  static_cast<unsigned long long>(seed));
    out << line;
    std::snprintf(line, sizeof line, "%-42s %8s %12s %12s  %s\n", "check", "samples", "max-error",
                  "tolerance", "status");
    out << line;

    int passed = 0;
    for (const CheckResult& r : results) {
        std::snprintf(line, sizeof line, "%-42s %8d %12.3e %12.0e  %s\n", r.name.c_str(),
                      r.samples, r.max_error, r.tolerance, r.pass ? "pass" : "FAIL");
        out << line;
        if (!r.pass) {
            std::snprintf(line, sizeof line, "    offending input: %s\n", r.worst_input.c_str());
            out << line;
        }
        if (r.pass) ++passed;
    }
    std::snprintf(line, sizeof line, "\nRESULT: %s (%d/%zu checks)\n",
                  passed == static_cast<int>(results.size()) ? "PASS" : "FAIL", passed,
                  results.size());
    out << line;
}

}  // namespace tsent::verify

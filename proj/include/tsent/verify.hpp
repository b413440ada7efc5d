#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "tsent/pawclock.hpp"

// Randomized cross-checks of every closed form against the brute-force
// linear-algebra path. Sampling is fully deterministic for a given seed, so
// two runs produce byte-identical reports.
namespace tsent::verify {

/// Deterministic uniform sampling on top of mt19937_64 raw output (the
/// standard distributions are implementation-defined, which would break
/// report reproducibility across toolchains).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform(double lo, double hi) {
        const double u = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }

    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::mt19937_64 gen_;
};

struct CheckResult {
    std::string name;
    int samples;
    double max_error;
    double tolerance;
    bool pass;
    std::string worst_input;  // echoed in the report when the check fails
};

/// Closed-form eigenvalue pair for the non-interacting scenario, injectable
/// so a corrupted formula can be shown to fail the oracle comparison.
using NonInteractingProbsFn = std::function<pawclock::ProbPair(double alpha_sq, double theta, int n_ticks)>;

/// Default closed form: noninteracting_probs over gamma_sq_discrete.
pawclock::ProbPair noninteracting_closed_form(double alpha_sq, double theta, int n_ticks);

CheckResult check_propagator_norm(std::uint64_t seed, int samples = 1000);
CheckResult check_partial_trace_eigenvalues(std::uint64_t seed, int samples = 200);
CheckResult check_noninteracting_evolution(std::uint64_t seed, int samples = 100);
CheckResult check_interacting_evolution(std::uint64_t seed, int samples = 100);
CheckResult check_internal_entropy_oracle(std::uint64_t seed, int samples = 100);
CheckResult check_quadratic_entropy_oracle(std::uint64_t seed, int samples = 100);
CheckResult check_noninteracting_probs_oracle(std::uint64_t seed, int samples = 200,
                                              const NonInteractingProbsFn& closed_form =
                                                  noninteracting_closed_form);
CheckResult check_interacting_probs_oracle(std::uint64_t seed, int samples = 200);
CheckResult check_abc_consistency(std::uint64_t seed, int samples = 200);
CheckResult check_qubit_clock_reduction(std::uint64_t seed, int samples = 200);
CheckResult check_coincidence(int grid_points = 201);
CheckResult check_fidelity_round_trip(std::uint64_t seed, int samples = 100);
CheckResult check_tau_theta_relation(std::uint64_t seed, int samples = 100);

/// Every check, with per-check seeds derived from the given seed.
std::vector<CheckResult> run_all(std::uint64_t seed);

bool all_passed(std::span<const CheckResult> results);

/// Plain-text table, one line per check; failing checks echo their worst
/// sampled input.
void write_report(std::span<const CheckResult> results, std::uint64_t seed, std::ostream& out);

}  // namespace tsent::verify

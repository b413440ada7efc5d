#pragma once

#include <span>
#include <vector>

#include "tsent/entanglement.hpp"
#include "tsent/model.hpp"

// History states over an N-tick clock, the reduced system density operator
// obtained by tracing the clock out, and its eigenvalue pair in closed form
// for finite N and in the N -> infinity limit. Clock states are taken
// exactly orthonormal, so the trace over the clock is the uniform mixture of
// the N snapshots.
namespace tsent::pawclock {

using entanglement::ProbPair;
using linalg::cplx;

enum class ScenarioKind { non_interacting, interacting };

/// Which closed-form family a clock trajectory follows. Non-interacting
/// trajectories carry the conserved population |alpha|^2; the interacting
/// scenario always starts from |00>.
struct Scenario {
    ScenarioKind kind;
    double alpha_sq;  // used by the non-interacting scenario only

    static Scenario non_interacting(double alpha_sq);
    static Scenario interacting();
};

/// N >= 2 clock ticks driving the state to target_angle (theta_t = 2 eps t
/// for the non-interacting scenario, phi_t = lambda t for the interacting
/// one) in N-1 equal steps.
struct ClockSpec {
    int n_ticks;
    double target_angle;
    Scenario scenario;

    ClockSpec(int n_ticks, double target_angle, Scenario scenario);
};

/// The N snapshots; snapshot k sits at angle target_angle * k / (N-1).
std::vector<model::PhiState> trajectory(const ClockSpec& spec);

/// (1/N) sum_k |psi_k><psi_k|, the reduced density operator for orthonormal
/// clock states. Rank <= 2 with support in span{|00>, |11>}.
linalg::ComplexMatrix reduced_density_bruteforce(std::span<const model::PhiState> traj);

/// Eigenvalues (1 +- overlap)/2 of the N = 2 qubit-clock reduced state.
ProbPair qubit_clock_probs(double overlap);

/// |gamma(t)|^2, the squared coherence of the reduced state.
struct GammaValue {
    double gamma_sq;
};

/// Finite-N |gamma|^2 = |a|^2(1-|a|^2)/N^2 * [cos(N theta/(N-1)) - 1] /
/// [cos(theta/(N-1)) - 1], evaluated through the equivalent Dirichlet-kernel
/// ratio sin^2(N x/2)/sin^2(x/2) with a series fallback below 1e-6.
GammaValue gamma_sq_discrete(double alpha_sq, double theta, int n_ticks);

/// N -> infinity limit 2|a|^2(1-|a|^2)(1-cos theta)/theta^2.
GammaValue gamma_sq_continuous(double alpha_sq, double theta);

/// p+- = (1 +- sqrt(1 - 4(|a|^2(1-|a|^2) - |gamma|^2)))/2.
ProbPair noninteracting_probs(double alpha_sq, GammaValue gamma);

/// Finite-N eigenvalues for the interacting scenario,
/// (1 +- |sin(N phi/(N-1))| / (N |sin(phi/(N-1))|))/2.
ProbPair interacting_probs_discrete(double phi, int n_ticks);

/// Limit eigenvalues (1 +- |sin(phi)/phi|)/2.
ProbPair interacting_probs_continuous(double phi);

/// Matrix elements of the interacting reduced state in the {|00>, |11>}
/// block, as the three explicit snapshot sums.
struct AbcElements {
    double a;
    double b;
    cplx c;
};

AbcElements abc_elements(double phi, int n_ticks);

/// Eigenvalues of [[a, c], [conj(c), b]].
ProbPair abc_eigenvalues(const AbcElements& abc);

/// E(T,S) in bits; at most 1 since the reduced state has rank <= 2.
double ets_entropy(const ProbPair& p);

struct ConvergenceRow {
    int n_ticks;
    double p_plus_discrete;
    double p_plus_continuous;
    double abs_error;
};

/// Discrete-vs-limit comparison of p+ over an ascending N grid.
std::vector<ConvergenceRow> convergence_report(const Scenario& scenario, double angle,
                                               std::span<const int> n_grid);

}  // namespace tsent::pawclock

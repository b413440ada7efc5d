#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "tsent/pawclock.hpp"

// Deterministic CSV datasets behind the CLI subcommands. Parameter lists are
// sorted ascending before sweeping, so rows come out in the lexicographic
// order of (outer parameter, inner grid value). Values are written with 12
// significant digits; a non-finite value is a hard error.
namespace tsent::sweeps {

/// %.12g rendering; throws std::logic_error on NaN or infinity.
std::string format_value(double v);

struct SpeedRow {
    double distance;
    double alpha_sq;
    double s_a;
    double s2_a;
    double tau;
};

struct SpeedResult {
    std::vector<SpeedRow> rows;
    int omitted;  // (distance, S_A) pairs dropped as unreachable
};

/// Evolution time to travel each distance, against the internal entanglement
/// swept uniformly over S_A in [0, 1].
SpeedResult compute_speed(std::span<const double> distances, int grid_points);

struct ClockRow {
    double time;
    double alpha_sq;
    double s_a;
    double e_ts;
    double s2_a;
    double e2_ts;
};

/// Time-system entanglement of the two-tick qubit clock; times are in units
/// hbar/eps, so theta = 2 t.
std::vector<ClockRow> compute_qubit_clock(std::span<const double> times, int grid_points);

/// Same sweep in the continuous-clock limit.
std::vector<ClockRow> compute_continuous(std::span<const double> times, int grid_points);

struct FidelityRow {
    std::string curve_id;
    double dpsi;
    double e_ts;
};

/// E(T,S) against fidelity: one continuous-limit curve per |alpha|^2 (cut at
/// its minimum reachable fidelity) plus, optionally, the interacting curve
/// over the full range.
std::vector<FidelityRow> compute_fidelity_sweep(std::span<const double> alpha_sqs,
                                                bool include_interacting, int grid_points);

void write_speed_csv(const SpeedResult& result, std::ostream& out);
void write_clock_csv(std::span<const ClockRow> rows, std::ostream& out);
void write_fidelity_csv(std::span<const FidelityRow> rows, std::ostream& out);
void write_convergence_csv(std::span<const pawclock::ConvergenceRow> rows, std::ostream& out);

}  // namespace tsent::sweeps

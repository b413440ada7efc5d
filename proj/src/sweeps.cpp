#include "tsent/sweeps.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "tsent/metrics.hpp"

namespace tsent::sweeps {

namespace {

void check_grid_points(int grid_points) {
    if (grid_points < 2) throw std::invalid_argument("grid_points must be >= 2");
}

std::vector<double> sorted(std::span<const double> values) {
    std::vector<double> v(values.begin(), values.end());
    std::sort(v.begin(), v.end());
    return v;
}

double grid_value(int index, int grid_points) {
    return static_cast<double>(index) / (grid_points - 1);
}

struct EntanglementPoint {
    double alpha_sq;
    double s_a;
    double s2_a;
};

EntanglementPoint entanglement_point(double s_a) {
    const double alpha_sq = entanglement::alpha_sq_for_entropy(s_a);
    return EntanglementPoint{alpha_sq, s_a, 4.0 * alpha_sq * (1.0 - alpha_sq)};
}

}  // namespace

std::string format_value(double v) {
    if (!std::isfinite(v)) throw std::logic_error("refusing to write non-finite value");
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

SpeedResult compute_speed(std::span<const double> distances, int grid_points) {
    check_grid_points(grid_points);
    SpeedResult result{{}, 0};
    for (double dpsi : sorted(distances)) {
        if (dpsi < 0.0 || dpsi > 1.0)
            throw std::invalid_argument("speed: distances must be in [0, 1]");
        for (int i = 0; i < grid_points; ++i) {
            const EntanglementPoint pt = entanglement_point(grid_value(i, grid_points));
            if (dpsi < metrics::min_reachable_fidelity(pt.alpha_sq) - 1e-12) {
                ++result.omitted;
                continue;
            }
            const double tau = metrics::tau_for_distance(pt.alpha_sq, dpsi);
            result.rows.push_back(SpeedRow{dpsi, pt.alpha_sq, pt.s_a, pt.s2_a, tau});
        }
    }
    return result;
}

namespace {

std::vector<ClockRow> compute_clock_rows(std::span<const double> times, int grid_points,
                                         bool continuous_limit) {
    check_grid_points(grid_points);
    std::vector<ClockRow> rows;
    for (double time : sorted(times)) {
        if (time < 0.0) throw std::invalid_argument("clock sweep: times must be >= 0");
        const double theta = 2.0 * time;  // t in units hbar/eps
        for (int i = 0; i < grid_points; ++i) {
            const EntanglementPoint pt = entanglement_point(grid_value(i, grid_points));
            const pawclock::ProbPair probs =
                continuous_limit
                    ? pawclock::noninteracting_probs(
                          pt.alpha_sq, pawclock::gamma_sq_continuous(pt.alpha_sq, theta))
                    : pawclock::qubit_clock_probs(
                          metrics::fidelity_noninteracting(pt.alpha_sq, theta));
            rows.push_back(ClockRow{time, pt.alpha_sq, pt.s_a, pawclock::ets_entropy(probs),
                                    pt.s2_a, entanglement::quadratic_entropy_from_probs(probs)});
        }
    }
    return rows;
}

}  // namespace

std::vector<ClockRow> compute_qubit_clock(std::span<const double> times, int grid_points) {
    return compute_clock_rows(times, grid_points, false);
}

std::vector<ClockRow> compute_continuous(std::span<const double> times, int grid_points) {
    return compute_clock_rows(times, grid_points, true);
}

std::vector<FidelityRow> compute_fidelity_sweep(std::span<const double> alpha_sqs,
                                                bool include_interacting, int grid_points) {
    check_grid_points(grid_points);
    std::vector<FidelityRow> rows;

    if (include_interacting) {
        for (int i = 0; i < grid_points; ++i) {
            const double dpsi = grid_value(i, grid_points);
            const metrics::FidelityPoint pt{dpsi, std::acos(dpsi)};
            rows.push_back(FidelityRow{"interacting", pt.dpsi,
                                       pawclock::ets_entropy(
                                           pawclock::interacting_probs_continuous(pt.angle))});
        }
    }

    for (double alpha_sq : sorted(alpha_sqs)) {
        if (alpha_sq < 0.0 || alpha_sq > 1.0)
            throw std::invalid_argument("fidelity sweep: |alpha|^2 must be in [0, 1]");
        const std::string curve_id = "noninteracting_alpha_sq=" + format_value(alpha_sq);
        const double cutoff = metrics::min_reachable_fidelity(alpha_sq);
        for (int i = 0; i < grid_points; ++i) {
            const double dpsi = grid_value(i, grid_points);
            if (dpsi < cutoff - 1e-12) continue;  // curve cut at the maximum distance
            const metrics::FidelityPoint pt{dpsi, metrics::theta_from_fidelity(alpha_sq, dpsi)};
            const pawclock::ProbPair probs = pawclock::noninteracting_probs(
                alpha_sq, pawclock::gamma_sq_continuous(alpha_sq, pt.angle));
            rows.push_back(FidelityRow{curve_id, pt.dpsi, pawclock::ets_entropy(probs)});
        }
    }
    return rows;
}

void write_speed_csv(const SpeedResult& result, std::ostream& out) {
    out << "distance,alpha_sq,S_A,S2_A,tau\n";
    for (const SpeedRow& r : result.rows) {
        out << format_value(r.distance) << ',' << format_value(r.alpha_sq) << ','
            << format_value(r.s_a) << ',' << format_value(r.s2_a) << ',' << format_value(r.tau)
            << '\n';
    }
}

void write_clock_csv(std::span<const ClockRow> rows, std::ostream& out) {
    out << "time,alpha_sq,S_A,E_TS,S2_A,E2_TS\n";
    for (const ClockRow& r : rows) {
        out << format_value(r.time) << ',' << format_value(r.alpha_sq) << ','
            << format_value(r.s_a) << ',' << format_value(r.e_ts) << ',' << format_value(r.s2_a)
            << ',' << format_value(r.e2_ts) << '\n';
    }
}

void write_fidelity_csv(std::span<const FidelityRow> rows, std::ostream& out) {
    out << "curve_id,dpsi,E_TS\n";
    for (const FidelityRow& r : rows) {
        out << r.curve_id << ',' << format_value(r.dpsi) << ',' << format_value(r.e_ts) << '\n';
    }
}

void write_convergence_csv(std::span<const pawclock::ConvergenceRow> rows, std::ostream& out) {
    out << "N,p_plus_discrete,p_plus_continuous,abs_error\n";
    for (const pawclock::ConvergenceRow& r : rows) {
        out << r.n_ticks << ',' << format_value(r.p_plus_discrete) << ','
            << format_value(r.p_plus_continuous) << ',' << format_value(r.abs_error) << '\n';
    }
}

}  // namespace tsent::sweeps

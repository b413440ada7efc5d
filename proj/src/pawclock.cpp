#include "tsent/pawclock.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tsent::pawclock {

namespace {

// sin(z)/z, with the 4th-order series below 1e-6 where the direct quotient
// would divide two vanishing quantities.
double sinc(double z) {
    if (std::abs(z) < 1e-6) {
        const double z2 = z * z;
        return 1.0 - z2 / 6.0 + z2 * z2 / 120.0;
    }
    return std::sin(z) / z;
}

// Reduce to [-pi/2, pi/2]; sin^2 is pi-periodic, and for integer N the
// identity sin^2(N(h - k pi)) = sin^2(N h) keeps the Dirichlet ratio intact.
double reduce_half_period(double h) {
    return h - std::round(h / std::numbers::pi) * std::numbers::pi;
}

// sin^2(N h) / sin^2(h) written as (N sinc(N d) / sinc(d))^2 with d the
// reduced angle, stable for every h including h -> 0.
double dirichlet_ratio(double h, int n) {
    const double d = reduce_half_period(h);
    const double r = static_cast<double>(n) * sinc(n * d) / sinc(d);
    return r * r;
}

void check_alpha_sq(double alpha_sq) {
    if (!(alpha_sq >= 0.0 && alpha_sq <= 1.0))
        throw std::invalid_argument("|alpha|^2 must be in [0, 1]");
}

void check_ticks(int n_ticks) {
    if (n_ticks < 2) throw std::invalid_argument("clock needs at least 2 ticks");
}

void check_angle(double angle) {
    if (!(angle >= 0.0)) throw std::invalid_argument("evolution angle must be >= 0");
}

}  // namespace

Scenario Scenario::non_interacting(double alpha_sq) {
    check_alpha_sq(alpha_sq);
    return Scenario{ScenarioKind::non_interacting, alpha_sq};
}

Scenario Scenario::interacting() { return Scenario{ScenarioKind::interacting, 0.0}; }

ClockSpec::ClockSpec(int n_ticks_, double target_angle_, Scenario scenario_)
    : n_ticks(n_ticks_), target_angle(target_angle_), scenario(scenario_) {
    check_ticks(n_ticks);
    check_angle(target_angle);
}

std::vector<model::PhiState> trajectory(const ClockSpec& spec) {
    std::vector<model::PhiState> traj;
    traj.reserve(static_cast<size_t>(spec.n_ticks));
    const double step = spec.target_angle / (spec.n_ticks - 1);
    for (int k = 0; k < spec.n_ticks; ++k) {
        const double angle = step * k;
        if (spec.scenario.kind == ScenarioKind::non_interacting) {
            const double a = std::sqrt(spec.scenario.alpha_sq);
            const double b = std::sqrt(1.0 - spec.scenario.alpha_sq);
            traj.emplace_back(cplx{a, 0.0}, b * cplx{std::cos(angle), -std::sin(angle)});
        } else {
            traj.emplace_back(cplx{std::cos(angle), 0.0}, cplx{0.0, std::sin(angle)});
        }
    }
    return traj;
}

linalg::ComplexMatrix reduced_density_bruteforce(std::span<const model::PhiState> traj) {
    if (traj.empty()) throw std::invalid_argument("reduced_density_bruteforce: empty trajectory");
    linalg::ComplexMatrix rho(4);
    const double weight = 1.0 / static_cast<double>(traj.size());
    for (const model::PhiState& psi : traj) linalg::accumulate_outer(rho, psi.embed(), weight);
    return rho;
}

ProbPair qubit_clock_probs(double overlap) {
    if (overlap < -1e-10 || overlap > 1.0 + 1e-10)
        throw std::invalid_argument("qubit_clock_probs: overlap must be in [0, 1]");
    const double ov = std::clamp(overlap, 0.0, 1.0);
    return ProbPair{(1.0 + ov) / 2.0, (1.0 - ov) / 2.0};
}

GammaValue gamma_sq_discrete(double alpha_sq, double theta, int n_ticks) {
    check_alpha_sq(alpha_sq);
    check_angle(theta);
    check_ticks(n_ticks);
    const double pref = alpha_sq * (1.0 - alpha_sq);
    const double half_step = theta / (2.0 * (n_ticks - 1));
    const double ratio = dirichlet_ratio(half_step, n_ticks);
    return GammaValue{pref * ratio / (static_cast<double>(n_ticks) * n_ticks)};
}

GammaValue gamma_sq_continuous(double alpha_sq, double theta) {
    check_alpha_sq(alpha_sq);
    check_angle(theta);
    const double s = sinc(theta / 2.0);
    return GammaValue{alpha_sq * (1.0 - alpha_sq) * s * s};
}

ProbPair noninteracting_probs(double alpha_sq, GammaValue gamma) {
    check_alpha_sq(alpha_sq);
    const double pref = alpha_sq * (1.0 - alpha_sq);
    if (gamma.gamma_sq < 0.0 || gamma.gamma_sq > pref + 1e-12)
        throw std::invalid_argument("noninteracting_probs: |gamma|^2 outside [0, |a|^2(1-|a|^2)]");
    double disc = 1.0 - 4.0 * (pref - gamma.gamma_sq);
    if (disc < -1e-12)
        throw std::invalid_argument("noninteracting_probs: inconsistent inputs (negative discriminant)");
    if (disc < 0.0) disc = 0.0;
    const double root = std::sqrt(disc);
    return ProbPair{(1.0 + root) / 2.0, (1.0 - root) / 2.0};
}

ProbPair interacting_probs_discrete(double phi, int n_ticks) {
    check_angle(phi);
    check_ticks(n_ticks);
    const double step = phi / (n_ticks - 1);
    const double d = reduce_half_period(step);
    // |sin(N x)| / (N |sin x|) for x = phi/(N-1), the simplified form of the
    // csc^2 eigenvalue expression.
    const double ratio = std::abs(sinc(n_ticks * d)) / sinc(d);
    return ProbPair{(1.0 + ratio) / 2.0, (1.0 - ratio) / 2.0};
}

ProbPair interacting_probs_continuous(double phi) {
    check_angle(phi);
    const double ratio = std::abs(sinc(phi));
    return ProbPair{(1.0 + ratio) / 2.0, (1.0 - ratio) / 2.0};
}

AbcElements abc_elements(double phi, int n_ticks) {
    check_angle(phi);
    check_ticks(n_ticks);
    const double step = phi / (n_ticks - 1);
    double a = 0.0;
    double b = 0.0;
    double csum = 0.0;
    for (int k = 0; k < n_ticks; ++k) {
        const double c = std::cos(step * k);
        const double s = std::sin(step * k);
        a += c * c;
        b += s * s;
        csum += std::sin(2.0 * step * k);
    }
    const double n = static_cast<double>(n_ticks);
    const AbcElements abc{a / n, b / n, cplx{0.0, -csum / (2.0 * n)}};
    if (std::abs(abc.a + abc.b - 1.0) > 1e-12)
        throw std::logic_error("abc_elements: diagonal does not sum to 1");
    if (std::norm(abc.c) > abc.a * abc.b + 1e-12)
        throw std::logic_error("abc_elements: |c|^2 exceeds a*b");
    return abc;
}

ProbPair abc_eigenvalues(const AbcElements& abc) {
    const double mean = (abc.a + abc.b) / 2.0;
    const double half_gap = (abc.a - abc.b) / 2.0;
    const double gap = std::sqrt(half_gap * half_gap + std::norm(abc.c));
    return ProbPair{mean + gap, mean - gap};
}

double ets_entropy(const ProbPair& p) {
    const double probs[2] = {p.p_plus(), p.p_minus()};
    return entanglement::shannon_entropy_bits(probs);
}

std::vector<ConvergenceRow> convergence_report(const Scenario& scenario, double angle,
                                               std::span<const int> n_grid) {
    check_angle(angle);
    for (size_t i = 0; i < n_grid.size(); ++i) {
        check_ticks(n_grid[i]);
        if (i > 0 && n_grid[i] <= n_grid[i - 1])
            throw std::invalid_argument("convergence_report: N grid must be strictly ascending");
    }

    const double p_cont =
        scenario.kind == ScenarioKind::non_interacting
            ? noninteracting_probs(scenario.alpha_sq, gamma_sq_continuous(scenario.alpha_sq, angle))
                  .p_plus()
            : interacting_probs_continuous(angle).p_plus();

    std::vector<ConvergenceRow> rows;
    rows.reserve(n_grid.size());
    for (int n : n_grid) {
        const double p_disc =
            scenario.kind == ScenarioKind::non_interacting
                ? noninteracting_probs(scenario.alpha_sq,
                                       gamma_sq_discrete(scenario.alpha_sq, angle, n))
                      .p_plus()
                : interacting_probs_discrete(angle, n).p_plus();
        rows.push_back(ConvergenceRow{n, p_disc, p_cont, std::abs(p_disc - p_cont)});
    }
    return rows;
}

}  // namespace tsent::pawclock

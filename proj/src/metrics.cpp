#include "tsent/metrics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tsent::metrics {

namespace {

void check_alpha_sq(double alpha_sq) {
    if (!(alpha_sq >= 0.0 && alpha_sq <= 1.0))
        throw std::invalid_argument("|alpha|^2 must be in [0, 1]");
}

void check_dpsi(double dpsi) {
    if (!(dpsi >= 0.0 && dpsi <= 1.0))
        throw std::invalid_argument("fidelity must be in [0, 1]");
}

// arccos with the argument clamped when roundoff pushes it past [-1, 1].
double safe_acos(double x) {
    if (x > 1.0 && x <= 1.0 + 1e-12) x = 1.0;
    if (x < -1.0 && x >= -1.0 - 1e-12) x = -1.0;
    return std::acos(x);
}

}  // namespace

FidelityPoint::FidelityPoint(double dpsi_, double angle_) : dpsi(dpsi_), angle(angle_) {
    check_dpsi(dpsi);
    if (!(angle >= 0.0)) throw std::invalid_argument("FidelityPoint: angle must be >= 0");
}

double fidelity_noninteracting(double alpha_sq, double theta) {
    check_alpha_sq(alpha_sq);
    if (!(theta >= 0.0)) throw std::invalid_argument("fidelity_noninteracting: theta must be >= 0");
    const double pref = alpha_sq * (1.0 - alpha_sq);
    double radicand = 1.0 + 2.0 * pref * (std::cos(theta) - 1.0);
    if (radicand < -1e-12)
        throw std::runtime_error("fidelity_noninteracting: negative radicand");
    if (radicand < 0.0) radicand = 0.0;
    return std::sqrt(radicand);
}

double fidelity_interacting(double phi) {
    if (!std::isfinite(phi)) throw std::invalid_argument("fidelity_interacting: non-finite phi");
    return std::abs(std::cos(phi));
}

double min_reachable_fidelity(double alpha_sq) {
    check_alpha_sq(alpha_sq);
    return std::abs(1.0 - 2.0 * alpha_sq);
}

double theta_from_fidelity(double alpha_sq, double dpsi) {
    check_alpha_sq(alpha_sq);
    check_dpsi(dpsi);
    const double pref = alpha_sq * (1.0 - alpha_sq);
    if (pref == 0.0) {
        // Stationary up to a global phase: only dpsi = 1 is reachable.
        if (dpsi >= 1.0 - 1e-12) return 0.0;
        throw std::domain_error("target distance unreachable for this entanglement");
    }
    if (dpsi < min_reachable_fidelity(alpha_sq) - 1e-12)
        throw std::domain_error("target distance unreachable for this entanglement");
    return safe_acos((dpsi * dpsi - 1.0) / (2.0 * pref) + 1.0);
}

double tau_for_distance(double alpha_sq, double dpsi) {
    return theta_from_fidelity(alpha_sq, dpsi) / 2.0;
}

double orthogonalization_time(const model::NonInteractingModel& m, double alpha_sq) {
    check_alpha_sq(alpha_sq);
    if (std::abs(alpha_sq - 0.5) > 1e-12)
        throw std::domain_error(
            "orthogonalization_time: only |alpha|^2 = 1/2 reaches an orthogonal state");
    return std::numbers::pi / (2.0 * m.epsilon);
}

double orthogonalization_time(const model::InteractingModel& m) {
    return std::numbers::pi / (2.0 * m.lambda);
}

}  // namespace tsent::metrics

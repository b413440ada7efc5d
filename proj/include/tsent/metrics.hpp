#pragma once

#include "tsent/model.hpp"

// Fidelity between evolved and initial states, the evolution time needed to
// reach a given fidelity, and the orthogonalization speed limits of the two
// scenarios. Times are in units of hbar/epsilon (non-interacting) or
// hbar/lambda (interacting).
namespace tsent::metrics {

/// A (fidelity, angle) sample on one of the closed-form curves.
struct FidelityPoint {
    double dpsi;
    double angle;
    FidelityPoint(double dpsi, double angle);
};

/// |<psi(t)|psi(0)>| = sqrt(1 + 2|a|^2(1-|a|^2)(cos theta - 1)),
/// theta = 2 eps t.
double fidelity_noninteracting(double alpha_sq, double theta);

/// |cos phi| for phi = lambda t.
double fidelity_interacting(double phi);

/// Fidelity at theta = pi, i.e. |1 - 2|a|^2|: the farthest point reachable
/// under local dynamics.
double min_reachable_fidelity(double alpha_sq);

/// Principal-branch inversion of fidelity_noninteracting, theta in [0, pi].
/// Throws std::domain_error when dpsi is below min_reachable_fidelity.
double theta_from_fidelity(double alpha_sq, double dpsi);

/// First-passage time (in units hbar/eps) to fidelity dpsi:
/// tau = arccos((dpsi^2 - 1)/(2|a|^2(1-|a|^2)) + 1) / 2.
double tau_for_distance(double alpha_sq, double dpsi);

/// pi/(2 eps); requires |alpha|^2 = 1/2, the only population that reaches an
/// orthogonal state under local dynamics.
double orthogonalization_time(const model::NonInteractingModel& m, double alpha_sq);

/// pi/(2 lambda).
double orthogonalization_time(const model::InteractingModel& m);

}  // namespace tsent::metrics

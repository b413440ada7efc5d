#include "tsent/model.hpp"

#include <cmath>
#include <stdexcept>

namespace tsent::model {

PhiState::PhiState(cplx alpha, cplx beta) : alpha_(alpha), beta_(beta) {
    const double nrm = std::norm(alpha) + std::norm(beta);
    if (std::abs(nrm - 1.0) > 1e-12)
        throw std::invalid_argument("PhiState: |alpha|^2 + |beta|^2 must be 1");
}

linalg::StateVector PhiState::embed() const {
    linalg::StateVector v(4);
    v[0] = alpha_;
    v[3] = beta_;
    return v;
}

PhiState phi_state_from_population(double alpha_sq) {
    if (alpha_sq < 0.0 || alpha_sq > 1.0)
        throw std::invalid_argument("phi_state_from_population: |alpha|^2 must be in [0, 1]");
    return PhiState{std::sqrt(alpha_sq), std::sqrt(1.0 - alpha_sq)};
}

double overlap(const PhiState& a, const PhiState& b) {
    return std::abs(std::conj(a.alpha()) * b.alpha() + std::conj(a.beta()) * b.beta());
}

NonInteractingModel::NonInteractingModel(double epsilon_) : epsilon(epsilon_) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("NonInteractingModel: epsilon must be > 0");
}

InteractingModel::InteractingModel(double epsilon_, double lambda_)
    : epsilon(epsilon_), lambda(lambda_) {
    if (epsilon < 0.0) throw std::invalid_argument("InteractingModel: epsilon must be >= 0");
    if (!(lambda > 0.0)) throw std::invalid_argument("InteractingModel: lambda must be > 0");
}

PhiState evolve_noninteracting(const PhiState& state, const NonInteractingModel& m, double t) {
    if (t < 0.0) throw std::invalid_argument("evolve_noninteracting: negative evolution time");
    const double theta = 2.0 * m.epsilon * t;
    const cplx phase{std::cos(theta), -std::sin(theta)};
    return PhiState{state.alpha(), state.beta() * phase};
}

PhiState evolve_interacting(const InteractingModel& m, double t) {
    if (t < 0.0) throw std::invalid_argument("evolve_interacting: negative evolution time");
    const double phi = m.lambda * t;
    return PhiState{cplx{std::cos(phi), 0.0}, cplx{0.0, std::sin(phi)}};
}

linalg::ComplexMatrix hamiltonian_matrix(const NonInteractingModel& m) {
    const double e = m.epsilon;
    const double d[4] = {0.0, e, e, 2.0 * e};
    return linalg::ComplexMatrix::diag(d);
}

linalg::ComplexMatrix hamiltonian_matrix(const InteractingModel& m) {
    const double e = m.epsilon;
    const double d[4] = {0.0, e, e, 2.0 * e};
    linalg::ComplexMatrix h = linalg::ComplexMatrix::diag(d);
    h(0, 3) = -m.lambda;
    h(3, 0) = -m.lambda;
    return h;
}

double closed_form_gap(const InteractingModel& m, double t) {
    const linalg::ComplexMatrix u = linalg::propagator(hamiltonian_matrix(m), t);
    linalg::StateVector initial(4);
    initial[0] = 1.0;
    const linalg::StateVector exact = linalg::apply(u, initial);
    const linalg::StateVector closed = evolve_interacting(m, t).embed();

    double s = 0.0;
    for (int i = 0; i < 4; ++i) s += std::norm(exact[i] - closed[i]);
    return std::sqrt(s);
}

}  // namespace tsent::model

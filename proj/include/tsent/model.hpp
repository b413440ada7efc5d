#pragma once

#include <complex>

#include "tsent/linalg.hpp"

// Two-qubit states confined to span{|00>, |11>} and the two Hamiltonians
// acting on them: local level splittings only, or local splittings plus a
// |00><11| + |11><00| coupling. Units are hbar = 1 throughout.
namespace tsent::model {

using linalg::cplx;

/// Pure state alpha|00> + beta|11>, normalized within 1e-12.
class PhiState {
public:
    PhiState(cplx alpha, cplx beta);

    cplx alpha() const { return alpha_; }
    cplx beta() const { return beta_; }
    double alpha_sq() const { return std::norm(alpha_); }

    /// Embedding into the 4-dimensional basis {|00>, |01>, |10>, |11>}.
    linalg::StateVector embed() const;

private:
    cplx alpha_;
    cplx beta_;
};

/// From a population |alpha|^2 in [0, 1], with real nonnegative amplitudes.
PhiState phi_state_from_population(double alpha_sq);

/// Overlap magnitude |<a|b>|.
double overlap(const PhiState& a, const PhiState& b);

/// Both qubits split by energy epsilon > 0; no coupling.
struct NonInteractingModel {
    double epsilon;
    explicit NonInteractingModel(double epsilon);
};

/// Level splitting epsilon >= 0 plus coupling lambda > 0 between |00> and |11>.
struct InteractingModel {
    double epsilon;
    double lambda;
    InteractingModel(double epsilon, double lambda);
};

/// alpha|00> + beta e^{-2 i epsilon t}|11>. Local dynamics: populations are
/// unchanged, so every internal entanglement measure is constant in t.
PhiState evolve_noninteracting(const PhiState& state, const NonInteractingModel& m, double t);

/// cos(lambda t)|00> + i sin(lambda t)|11>, starting from |00>.
/// This is the epsilon-independent closed form; see closed_form_gap for the
/// deviation from the full propagator when epsilon > 0.
PhiState evolve_interacting(const InteractingModel& m, double t);

/// 4x4 matrix in the basis {|00>, |01>, |10>, |11>}: diag(0, e, e, 2e).
linalg::ComplexMatrix hamiltonian_matrix(const NonInteractingModel& m);

/// diag(0, e, e, 2e) with -lambda at entries (0,3) and (3,0).
linalg::ComplexMatrix hamiltonian_matrix(const InteractingModel& m);

/// Norm distance between exp(-iHt)|00> and the closed form of
/// evolve_interacting. Zero (to roundoff) when epsilon == 0; strictly
/// positive for generic epsilon > 0, where the |11> level picks up an extra
/// 2*epsilon splitting the closed form does not track.
double closed_form_gap(const InteractingModel& m, double t);

}  // namespace tsent::model

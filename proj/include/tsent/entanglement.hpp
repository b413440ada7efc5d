#pragma once

#include <span>

#include "tsent/model.hpp"

// Entropy functionals and the entanglement measures of one qubit inside the
// two-qubit state. Everything is base-2.
namespace tsent::entanglement {

/// The two nonzero eigenvalues of a rank-<=2 reduced density operator,
/// ordered p_plus >= p_minus. Values are clipped to [0, 1] on construction;
/// a clip larger than 1e-10 is reported on stderr.
class ProbPair {
public:
    ProbPair(double p_plus, double p_minus);

    double p_plus() const { return p_plus_; }
    double p_minus() const { return p_minus_; }

private:
    double p_plus_;
    double p_minus_;
};

/// The larger two of a set of eigenvalues, as a ProbPair.
ProbPair prob_pair_from_eigenvalues(std::span<const double> eigenvalues_ascending);

/// -sum p log2 p with 0 log2 0 = 0. Probabilities must sum to 1 within 1e-8;
/// entries below -1e-10 are rejected, tinier negatives are treated as 0.
double shannon_entropy_bits(std::span<const double> probs);

/// Binary entropy H2(p) in bits.
double binary_entropy(double p);

/// S(A): von Neumann entropy of either qubit's reduced state,
/// -(|a|^2 log2 |a|^2 + (1-|a|^2) log2 (1-|a|^2)).
double internal_entropy(const model::PhiState& state);

/// S2(A) = 4 |a|^2 (1 - |a|^2), the purity-based quadratic measure.
double internal_quadratic_entropy(const model::PhiState& state);

/// E2 = 4 p+ p-.
double quadratic_entropy_from_probs(const ProbPair& p);

/// Inverts binary_entropy on [0, 1/2] by bisection (tolerance 1e-12 on
/// |alpha|^2, at most 200 iterations).
double alpha_sq_for_entropy(double target_entropy);

}  // namespace tsent::entanglement

#include "tsent/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace tsent::entanglement {

namespace {

// Clip to [0, 1]; clips beyond 1e-10 are worth knowing about.
double clip_probability(double p) {
    const double clipped = p < 0.0 ? 0.0 : (p > 1.0 ? 1.0 : p);
    if (std::abs(clipped - p) > 1e-10)
        std::fprintf(stderr, "tsent: clipped probability %.17g to %.17g\n", p, clipped);
    return clipped;
}

double plog2p(double p) {
    if (p < 1e-300) return 0.0;
    return p * std::log2(p);
}

}  // namespace

ProbPair::ProbPair(double p_plus, double p_minus) {
    if (!std::isfinite(p_plus) || !std::isfinite(p_minus))
        throw std::invalid_argument("ProbPair: non-finite probability");
    if (p_plus < -1e-8 || p_minus < -1e-8 || p_plus > 1.0 + 1e-8 || p_minus > 1.0 + 1e-8)
        throw std::invalid_argument("ProbPair: probability far outside [0, 1]");
    if (std::abs(p_plus + p_minus - 1.0) > 1e-10)
        throw std::invalid_argument("ProbPair: probabilities must sum to 1 within 1e-10");
    if (p_plus + 1e-12 < p_minus) throw std::invalid_argument("ProbPair: p_plus < p_minus");
    p_plus_ = clip_probability(std::max(p_plus, p_minus));
    p_minus_ = clip_probability(std::min(p_plus, p_minus));
}

ProbPair prob_pair_from_eigenvalues(std::span<const double> eigenvalues_ascending) {
    if (eigenvalues_ascending.size() < 2)
        throw std::invalid_argument("prob_pair_from_eigenvalues: need at least two eigenvalues");
    const size_t n = eigenvalues_ascending.size();
    return ProbPair{eigenvalues_ascending[n - 1], eigenvalues_ascending[n - 2]};
}

double shannon_entropy_bits(std::span<const double> probs) {
    double sum = 0.0;
    for (double p : probs) {
        if (p < -1e-10) throw std::invalid_argument("shannon_entropy_bits: negative probability");
        if (p > 1.0 + 1e-10) throw std::invalid_argument("shannon_entropy_bits: probability > 1");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-8)
        throw std::invalid_argument("shannon_entropy_bits: probabilities must sum to 1");

    double h = 0.0;
    for (double p : probs) h -= plog2p(p < 0.0 ? 0.0 : p);
    return h;
}

double binary_entropy(double p) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("binary_entropy: p must be in [0, 1]");
    return -plog2p(p) - plog2p(1.0 - p);
}

double internal_entropy(const model::PhiState& state) { return binary_entropy(state.alpha_sq()); }

double internal_quadratic_entropy(const model::PhiState& state) {
    const double a = state.alpha_sq();
    return 4.0 * a * (1.0 - a);
}

double quadratic_entropy_from_probs(const ProbPair& p) { return 4.0 * p.p_plus() * p.p_minus(); }

double alpha_sq_for_entropy(double target_entropy) {
    if (target_entropy < 0.0 || target_entropy > 1.0)
        throw std::invalid_argument("alpha_sq_for_entropy: target must be in [0, 1]");
    if (target_entropy == 0.0) return 0.0;
    if (target_entropy == 1.0) return 0.5;

    // H2 is strictly increasing on [0, 1/2].
    double lo = 0.0;
    double hi = 0.5;
    for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (binary_entropy(mid) < target_entropy) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace tsent::entanglement

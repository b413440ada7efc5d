#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "tsent/metrics.hpp"

using namespace tsent;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("non-interacting fidelity") {
    CHECK(metrics::fidelity_noninteracting(0.3, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(metrics::fidelity_noninteracting(0.5, kPi) <= 1e-12);
    CHECK(metrics::fidelity_noninteracting(0.2, kPi) == doctest::Approx(0.6).epsilon(1e-14));

    SUBCASE("2 pi periodic") {
        for (double theta : {0.3, 1.1, 2.9}) {
            CHECK(metrics::fidelity_noninteracting(0.3, theta) ==
                  doctest::Approx(metrics::fidelity_noninteracting(0.3, theta + 2.0 * kPi))
                      .epsilon(1e-13));
        }
    }

    SUBCASE("equals the overlap of evolved and initial model states") {
        std::mt19937_64 gen(61);
        std::uniform_real_distribution<double> dist(0.0, 1.0);
        const model::NonInteractingModel m{1.0};
        for (int trial = 0; trial < 100; ++trial) {
            const double alpha_sq = dist(gen);
            const double t = 5.0 * dist(gen);
            const model::PhiState start = model::phi_state_from_population(alpha_sq);
            const double direct = model::overlap(model::evolve_noninteracting(start, m, t), start);
            CHECK(metrics::fidelity_noninteracting(alpha_sq, 2.0 * t) ==
                  doctest::Approx(direct).epsilon(1e-12));
        }
    }

    SUBCASE("the minimum over theta is |1 - 2 alpha_sq|, reached at pi") {
        for (double alpha_sq : {0.1, 0.2, 0.35, 0.5}) {
            const double floor = metrics::min_reachable_fidelity(alpha_sq);
            CHECK(metrics::fidelity_noninteracting(alpha_sq, kPi) ==
                  doctest::Approx(floor).epsilon(1e-12));
            for (double theta = 0.0; theta <= 2.0 * kPi; theta += 0.05)
                CHECK(metrics::fidelity_noninteracting(alpha_sq, theta) >= floor - 1e-12);
        }
    }
}

TEST_CASE("interacting fidelity") {
    CHECK(metrics::fidelity_interacting(0.0) == 1.0);
    CHECK(metrics::fidelity_interacting(kPi / 2.0) <= 1e-15);
    CHECK(metrics::fidelity_interacting(kPi / 4.0) ==
          doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-15));
    // beyond the principal branch it is |cos|
    CHECK(metrics::fidelity_interacting(3.0 * kPi / 4.0) ==
          doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-15));

    SUBCASE("equals the overlap with |00>") {
        const model::InteractingModel m{0.0, 1.0};
        const model::PhiState start = model::evolve_interacting(m, 0.0);
        for (double phi = 0.0; phi <= kPi / 2.0; phi += 0.05) {
            CHECK(metrics::fidelity_interacting(phi) ==
                  doctest::Approx(model::overlap(model::evolve_interacting(m, phi), start))
                      .epsilon(1e-13));
        }
    }
}

TEST_CASE("minimum reachable fidelity") {
    CHECK(metrics::min_reachable_fidelity(0.5) == 0.0);
    CHECK(metrics::min_reachable_fidelity(0.0) == 1.0);
    CHECK(metrics::min_reachable_fidelity(0.2) == doctest::Approx(0.6).epsilon(1e-15));
}

TEST_CASE("first-passage time tau") {
    CHECK(metrics::tau_for_distance(0.3, 1.0) == 0.0);
    CHECK(metrics::tau_for_distance(0.5, 0.0) == doctest::Approx(kPi / 2.0).epsilon(1e-15));
    // 1/2 arccos(1 - 0.36/(4/9)) = 1/2 arccos(0.19)
    CHECK(metrics::tau_for_distance(1.0 / 3.0, 0.8) ==
          doctest::Approx(0.6898170901319185).epsilon(1e-14));
    // at the exact reachability boundary the passage time is pi/2
    CHECK(metrics::tau_for_distance(0.2, 0.6) == doctest::Approx(kPi / 2.0).epsilon(1e-7));

    SUBCASE("unreachable targets raise domain errors") {
        CHECK_THROWS_AS(metrics::tau_for_distance(0.2, 0.5), std::domain_error);
        CHECK_THROWS_AS(metrics::tau_for_distance(0.0, 0.9), std::domain_error);
        CHECK_THROWS_AS(metrics::tau_for_distance(1.0, 0.9), std::domain_error);
        CHECK(metrics::tau_for_distance(0.0, 1.0) == 0.0);
    }

    SUBCASE("root-finding oracle: tau is half the angle where fidelity hits the target") {
        const double target = 0.8;
        const double alpha_sq = 1.0 / 3.0;
        double lo = 0.0;
        double hi = kPi;  // fidelity decreases monotonically on [0, pi]
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (metrics::fidelity_noninteracting(alpha_sq, mid) > target) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        CHECK(metrics::tau_for_distance(alpha_sq, target) ==
              doctest::Approx(0.5 * lo).epsilon(1e-9));
    }

    SUBCASE("strictly decreasing in the population product for fixed distance") {
        for (double dpsi : {0.9, 0.7, 0.5}) {
            double prev = kPi;  // larger than any tau
            for (int i = 1; i <= 50; ++i) {
                const double alpha_sq = 0.5 * i / 50.0;
                if (dpsi < metrics::min_reachable_fidelity(alpha_sq)) continue;
                const double tau = metrics::tau_for_distance(alpha_sq, dpsi);
                CHECK(tau < prev);
                prev = tau;
            }
        }
    }
}

TEST_CASE("inverting the fidelity for the principal angle") {
    CHECK(metrics::theta_from_fidelity(0.3, 1.0) == 0.0);
    CHECK(metrics::theta_from_fidelity(0.5, 0.0) == doctest::Approx(kPi).epsilon(1e-15));
    CHECK(metrics::theta_from_fidelity(1.0 / 3.0, 0.8) ==
          doctest::Approx(1.379634180263837).epsilon(1e-14));
    CHECK_THROWS_AS(metrics::theta_from_fidelity(0.2, 0.3), std::domain_error);

    SUBCASE("round trip over random inputs") {
        std::mt19937_64 gen(67);
        std::uniform_real_distribution<double> adist(0.01, 0.99);
        std::uniform_real_distribution<double> tdist(0.0, kPi);
        for (int trial = 0; trial < 100; ++trial) {
            const double alpha_sq = adist(gen);
            const double theta = tdist(gen);
            const double fid = metrics::fidelity_noninteracting(alpha_sq, theta);
            CHECK(std::abs(metrics::theta_from_fidelity(alpha_sq, fid) - theta) <= 1e-10);
            CHECK(std::abs(metrics::tau_for_distance(alpha_sq, fid) - theta / 2.0) <= 1e-10);
        }
    }
}

TEST_CASE("orthogonalization times") {
    CHECK(metrics::orthogonalization_time(model::NonInteractingModel{1.0}, 0.5) ==
          doctest::Approx(kPi / 2.0).epsilon(1e-15));
    CHECK(metrics::orthogonalization_time(model::InteractingModel{0.0, 2.0}) ==
          doctest::Approx(kPi / 4.0).epsilon(1e-15));
    CHECK_THROWS_AS(metrics::orthogonalization_time(model::NonInteractingModel{1.0}, 0.3),
                    std::domain_error);

    SUBCASE("interaction wins exactly when lambda > epsilon") {
        std::mt19937_64 gen(71);
        std::uniform_real_distribution<double> dist(0.05, 4.0);
        for (int trial = 0; trial < 100; ++trial) {
            const double eps = dist(gen);
            const double lambda = dist(gen);
            const double t_ni =
                metrics::orthogonalization_time(model::NonInteractingModel{eps}, 0.5);
            const double t_i = metrics::orthogonalization_time(model::InteractingModel{eps, lambda});
            CHECK((t_i < t_ni) == (lambda > eps));
        }
        const double same_eps = 1.7;
        CHECK(metrics::orthogonalization_time(model::NonInteractingModel{same_eps}, 0.5) ==
              metrics::orthogonalization_time(model::InteractingModel{same_eps, same_eps}));
    }
}

TEST_CASE("FidelityPoint validation") {
    CHECK_NOTHROW(metrics::FidelityPoint(0.5, 1.0));
    CHECK_THROWS_AS(metrics::FidelityPoint(1.2, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(metrics::FidelityPoint(0.5, -1.0), std::invalid_argument);
}

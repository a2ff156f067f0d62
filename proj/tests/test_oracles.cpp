#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "entconv/optimizer.hpp"
#include "entconv/oracles.hpp"

using namespace entconv;

namespace {

DensityMatrix werner(double p) {
    Eigen::VectorXcd bell = Eigen::VectorXcd::Zero(4);
    bell[0] = bell[3] = 1.0 / std::sqrt(2.0);
    return {{2, 2},
            p * (bell * bell.adjoint()) + (1.0 - p) * Eigen::MatrixXcd::Identity(4, 4) / 4.0};
}

} // namespace

TEST_CASE("spin-flip concurrence") {
    Eigen::VectorXcd bell = Eigen::VectorXcd::Zero(4);
    bell[0] = bell[3] = 1.0 / std::sqrt(2.0);
    CHECK(wootters_concurrence(DensityMatrix({2, 2}, bell * bell.adjoint())) ==
          doctest::Approx(1.0).epsilon(1e-10));

    CHECK(wootters_concurrence(DensityMatrix({2, 2}, Eigen::MatrixXcd::Identity(4, 4) / 4.0)) ==
          doctest::Approx(0.0).epsilon(1e-10));

    // Werner family closed form max(0, (3p-1)/2)
    for (double p : {0.3, 0.6, 0.8, 1.0}) {
        const double expected = std::max(0.0, (3.0 * p - 1.0) / 2.0);
        CHECK(wootters_concurrence(werner(p)) == doctest::Approx(expected).epsilon(1e-10));
    }

    CHECK_THROWS_AS(wootters_concurrence(random_density({3, 3}, 2, 1)), std::invalid_argument);
}

TEST_CASE("orthogonal-support family construction") {
    SUBCASE("eta = 1 is the pure branch") {
        const DensityMatrix s = theorem4_state(Theorem4Params::from_c1_squared(1.0, 0.7));
        CHECK((s.matrix() * s.matrix() - s.matrix()).cwiseAbs().maxCoeff() < 1e-12);
        CHECK(eigendecompose(s).rank == 1);
    }
    SUBCASE("eta = 0 is the product branch") {
        const DensityMatrix s = theorem4_state(Theorem4Params::from_c1_squared(0.0, 0.7));
        CHECK(s.matrix()(8, 8).real() == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("eta = 1/2 splits evenly") {
        const DensityMatrix s = theorem4_state(Theorem4Params::from_c1_squared(0.5, 0.5));
        const SpectralData sp = eigendecompose(s);
        CHECK(sp.rank == 2);
        CHECK(sp.eigenvalues[0] == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(sp.eigenvalues[1] == doctest::Approx(0.5).epsilon(1e-12));
    }
}

TEST_CASE("closed-form family values") {
    const Theorem4Params half = Theorem4Params::from_c1_squared(0.5, 0.5);
    CHECK(theorem4_value(half, entropy_monotone()) ==
          doctest::Approx(0.5623351446188083).epsilon(1e-12));
    CHECK(theorem4_value(half, avg_entanglement_monotone()) ==
          doctest::Approx(0.34657359027997264).epsilon(1e-12));

    // pure-state limit: F(|phi0>)
    const Theorem4Params pure = Theorem4Params::from_c1_squared(1.0, 0.75);
    Eigen::VectorXd lambda(2);
    lambda << 0.75, 0.25;
    CHECK(theorem4_value(pure, entropy_monotone()) ==
          doctest::Approx(entropy_monotone().eval(lambda)).epsilon(1e-12));

    // the formula sorts |c1|^2, |c2|^2, so the parameter order cannot matter
    const Theorem4Params a(0.4, cxd(std::sqrt(0.3), 0), cxd(std::sqrt(0.7), 0));
    const Theorem4Params b(0.4, cxd(std::sqrt(0.7), 0), cxd(std::sqrt(0.3), 0));
    CHECK(theorem4_value(a, entropy_monotone()) ==
          doctest::Approx(theorem4_value(b, entropy_monotone())).epsilon(1e-14));
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(Theorem4Params(1.5, cxd(1, 0), cxd(0, 0)), std::invalid_argument);
    CHECK_THROWS_AS(Theorem4Params(0.5, cxd(1, 0), cxd(0.5, 0)), std::invalid_argument);
    CHECK_THROWS_AS(Theorem4Params::from_c1_squared(0.5, 1.2), std::invalid_argument);
}

TEST_CASE("sampling upper bound") {
    SUBCASE("rank-1 source is exact for any budget") {
        const PureState psi = random_pure({2, 2}, 13);
        const DensityMatrix rho = DensityMatrix::from_pure(psi);
        const double bf = brute_force_ef(rho, entropy_monotone(), 10, 1);
        CHECK(bf == doctest::Approx(eval_pure(entropy_monotone(), psi)).epsilon(1e-12));
    }
    SUBCASE("approaches the family optimum from above") {
        const DensityMatrix sigma = theorem4_state(Theorem4Params::from_c1_squared(0.5, 0.5));
        const double bf = brute_force_ef(sigma, entropy_monotone(), 20000, 2);
        CHECK(bf >= 0.5623351446188083 - 1e-6);
        CHECK(bf <= 0.5623351446188083 + 5e-3);
    }
    SUBCASE("separable diagonal states are found at zero") {
        Rng rng(15);
        Eigen::VectorXd diag(4);
        for (int k = 0; k < 4; ++k)
            diag[k] = 0.05 + rng.uniform();
        diag /= diag.sum();
        Eigen::MatrixXcd mat = diag.cast<cxd>().asDiagonal();
        const DensityMatrix rho({2, 2}, mat);
        CHECK(brute_force_ef(rho, concurrence_monotone(), 1000, 3) <= 1e-6);
    }
    SUBCASE("refinement only improves on sampling") {
        const DensityMatrix sigma = theorem4_state(Theorem4Params::from_c1_squared(0.3, 0.75));
        SolverConfig cfg;
        cfg.restarts = 8;
        cfg.cardinality = 4;
        cfg.seed = 4;
        const double solved = minimize_ef(sigma, entropy_monotone(), cfg).value;
        CHECK(brute_force_ef(sigma, entropy_monotone(), 2000, 5) >= solved - 1e-9);

        const DensityMatrix rho = random_density({2, 2}, 2, 16);
        const double solved2 = minimize_ef(rho, concurrence_monotone(), cfg).value;
        CHECK(brute_force_ef(rho, concurrence_monotone(), 2000, 6) >= solved2 - 1e-9);
    }
    SUBCASE("budget must be positive") {
        const DensityMatrix rho = random_density({2, 2}, 2, 17);
        CHECK_THROWS_AS(brute_force_ef(rho, entropy_monotone(), 0, 1), std::invalid_argument);
    }
}

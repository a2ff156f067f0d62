#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "entconv/states.hpp"

using namespace entconv;

namespace {

PureState make_pure(Dims dims, std::initializer_list<cxd> amps) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(amps.size()));
    Eigen::Index i = 0;
    for (const cxd& a : amps)
        v[i++] = a;
    return {dims, std::move(v)};
}

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

} // namespace

TEST_CASE("schmidt decomposition on canonical states") {
    const PureState bell = make_pure({2, 2}, {kInvSqrt2, 0, 0, kInvSqrt2});
    const SchmidtVector lb = schmidt_decompose(bell);
    CHECK(lb.size() == 2);
    CHECK(lb[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(lb[1] == doctest::Approx(0.5).epsilon(1e-12));

    const PureState product = make_pure({2, 2}, {0, 1, 0, 0});
    const SchmidtVector lp = schmidt_decompose(product);
    CHECK(lp[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(lp[1] == doctest::Approx(0.0).epsilon(1e-12));

    const PureState tilted =
        make_pure({2, 2}, {std::sqrt(0.7), 0, 0, std::sqrt(0.3)});
    const SchmidtVector lt = schmidt_decompose(tilted);
    CHECK(lt[0] == doctest::Approx(0.7).epsilon(1e-12));
    CHECK(lt[1] == doctest::Approx(0.3).epsilon(1e-12));
}

TEST_CASE("schmidt vectors are invariant under local unitaries") {
    for (int i = 0; i < 10; ++i) {
        const Dims dims = i % 2 ? Dims{2, 3} : Dims{3, 3};
        const PureState psi = random_pure(dims, 100 + i);
        const LocalUnitary lu = random_local_unitary(dims, 200 + i);
        const Eigen::VectorXd a = schmidt_decompose(psi).entries();
        const Eigen::VectorXd b = schmidt_decompose(lu.apply(psi)).entries();
        CHECK((a - b).cwiseAbs().maxCoeff() < 1e-8);
    }
}

TEST_CASE("majorization order") {
    const auto sv = [](std::initializer_list<double> xs) {
        Eigen::VectorXd v(static_cast<Eigen::Index>(xs.size()));
        Eigen::Index i = 0;
        for (double x : xs)
            v[i++] = x;
        return SchmidtVector(std::move(v));
    };

    CHECK(majorizes(sv({1.0, 0.0}), sv({0.5, 0.5})));
    CHECK_FALSE(majorizes(sv({0.5, 0.3, 0.2}), sv({0.6, 0.4, 0.0})));

    // incomparable pair: partial sums cross
    const SchmidtVector x = sv({0.6, 0.2, 0.2});
    const SchmidtVector y = sv({0.5, 0.5, 0.0});
    CHECK_FALSE(majorizes(x, y));
    CHECK_FALSE(majorizes(y, x));

    SUBCASE("zero padding handles different lengths") {
        CHECK(majorizes(sv({1.0, 0.0}), sv({0.5, 0.3, 0.2})));
        CHECK(majorizes(sv({0.9, 0.1, 0.0}), sv({0.7, 0.3})));
    }

    SUBCASE("axioms on random vectors") {
        std::vector<SchmidtVector> samples;
        for (int i = 0; i < 12; ++i)
            samples.push_back(schmidt_decompose(random_pure({3, 3}, 300 + i)));
        for (const auto& s : samples)
            CHECK(majorizes(s, s)); // reflexive
        const Eigen::VectorXd uniform = Eigen::VectorXd::Constant(3, 1.0 / 3.0);
        for (const auto& s : samples)
            CHECK(majorizes(s, SchmidtVector(uniform))); // uniform is the bottom
        for (const auto& a : samples)
            for (const auto& b : samples)
                for (const auto& c : samples)
                    if (majorizes(a, b) && majorizes(b, c))
                        CHECK(majorizes(a, c)); // transitive
    }
}

TEST_CASE("weighted averages of Schmidt vectors stay valid") {
    for (int trial = 0; trial < 8; ++trial) {
        Rng rng(400 + trial);
        const int n = 2 + static_cast<int>(rng.next_u64() % 4);
        Eigen::VectorXd w(n);
        for (int i = 0; i < n; ++i)
            w[i] = rng.uniform() + 1e-3;
        w /= w.sum();
        Eigen::VectorXd avg = Eigen::VectorXd::Zero(2);
        for (int i = 0; i < n; ++i)
            avg += w[i] * schmidt_decompose(random_pure({2, 4}, 500 + 10 * trial + i)).entries();
        const SchmidtVector result(avg); // constructor enforces the invariants
        CHECK(result.entries().sum() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(result[0] >= result[1]);
    }
}

TEST_CASE("eigendecomposition") {
    SUBCASE("pure projector") {
        const PureState psi = make_pure({2, 2}, {0, 1, 0, 0});
        const SpectralData sp = eigendecompose(DensityMatrix::from_pure(psi));
        CHECK(sp.rank == 1);
        CHECK(sp.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("maximally mixed") {
        const DensityMatrix rho({2, 2}, Eigen::MatrixXcd::Identity(4, 4) / 4.0);
        const SpectralData sp = eigendecompose(rho);
        CHECK(sp.rank == 4);
        for (int i = 0; i < 4; ++i)
            CHECK(sp.eigenvalues[i] == doctest::Approx(0.25).epsilon(1e-12));
    }
    SUBCASE("two orthogonal supports") {
        Eigen::VectorXcd phi0 = Eigen::VectorXcd::Zero(9);
        phi0[0] = phi0[4] = kInvSqrt2;
        Eigen::VectorXcd ket33 = Eigen::VectorXcd::Zero(9);
        ket33[8] = 1.0;
        const DensityMatrix sigma(
            {3, 3}, 0.5 * (phi0 * phi0.adjoint()) + 0.5 * (ket33 * ket33.adjoint()));
        const SpectralData sp = eigendecompose(sigma);
        CHECK(sp.rank == 2);
        CHECK(sp.eigenvalues[0] == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(sp.eigenvalues[1] == doctest::Approx(0.5).epsilon(1e-12));
    }
    SUBCASE("reconstruction") {
        for (int i = 0; i < 6; ++i) {
            const DensityMatrix rho = random_density({2, 3}, 1 + i % 4, 600 + i);
            const SpectralData sp = eigendecompose(rho);
            Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(6, 6);
            for (int j = 0; j < sp.rank; ++j)
                sum += sp.eigenvalues[j] * sp.eigenvectors[j].projector();
            CHECK((sum - rho.matrix()).cwiseAbs().maxCoeff() < 1e-8);
        }
    }
}

TEST_CASE("seeded generators") {
    const PureState a = random_pure({2, 2}, 7);
    const PureState b = random_pure({2, 2}, 7);
    CHECK((a.amplitudes() - b.amplitudes()).cwiseAbs().maxCoeff() == 0.0);
    const PureState c = random_pure({2, 2}, 8);
    CHECK((a.amplitudes() - c.amplitudes()).cwiseAbs().maxCoeff() > 0.0);

    CHECK(eigendecompose(random_density({2, 2}, 1, 9)).rank == 1);
    CHECK(eigendecompose(random_density({2, 2}, 3, 9)).rank == 3);

    const LocalUnitary lu = random_local_unitary({2, 3}, 11);
    CHECK((lu.on_a.adjoint() * lu.on_a - Eigen::MatrixXcd::Identity(2, 2)).cwiseAbs().maxCoeff() <
          1e-10);
    CHECK((lu.on_b.adjoint() * lu.on_b - Eigen::MatrixXcd::Identity(3, 3)).cwiseAbs().maxCoeff() <
          1e-10);
}

TEST_CASE("validation rejects malformed inputs") {
    Eigen::VectorXcd short_vec(3);
    short_vec << 1.0, 0.0, 0.0;
    CHECK_THROWS_AS(PureState({2, 2}, short_vec), std::invalid_argument);

    Eigen::VectorXcd off_norm(4);
    off_norm << 0.9, 0.0, 0.0, 0.0; // |psi|^2 = 0.81, far beyond the slack
    CHECK_THROWS_AS(PureState({2, 2}, off_norm), std::invalid_argument);

    // just inside the slack: silently renormalized
    Eigen::VectorXcd near_norm(4);
    near_norm << std::sqrt(1.0 + 5e-9), 0.0, 0.0, 0.0;
    const PureState ok({2, 2}, near_norm);
    CHECK(ok.amplitudes().squaredNorm() == doctest::Approx(1.0).epsilon(1e-14));

    Eigen::MatrixXcd non_herm = Eigen::MatrixXcd::Identity(4, 4) / 4.0;
    non_herm(0, 1) = 0.1;
    CHECK_THROWS_AS(DensityMatrix({2, 2}, non_herm), std::invalid_argument);

    Eigen::MatrixXcd neg = Eigen::MatrixXcd::Identity(4, 4) / 2.0;
    neg(3, 3) = -0.5;
    CHECK_THROWS_AS(DensityMatrix({2, 2}, neg), std::invalid_argument);

    CHECK_THROWS_AS(random_density({2, 2}, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(random_density({2, 2}, 5, 1), std::invalid_argument);
}

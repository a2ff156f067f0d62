#include "entconv/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <fmt/format.h>

#include "entconv/decompositions.hpp"
#include "entconv/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace entconv {

Theorem4Params::Theorem4Params(double eta, cxd c1, cxd c2) : eta_(eta), c1_(c1), c2_(c2) {
    if (eta_ < 0.0 || eta_ > 1.0)
        throw std::invalid_argument(fmt::format("eta = {} outside [0, 1]", eta_));
    const double norm = std::norm(c1_) + std::norm(c2_);
    if (std::abs(norm - 1.0) > 1e-10)
        throw std::invalid_argument(
            fmt::format("|c1|^2 + |c2|^2 = {:.12g} violates normalization", norm));
}

Theorem4Params Theorem4Params::from_c1_squared(double eta, double c1_squared) {
    if (c1_squared < 0.0 || c1_squared > 1.0)
        throw std::invalid_argument(fmt::format("|c1|^2 = {} outside [0, 1]", c1_squared));
    return {eta, cxd(std::sqrt(c1_squared), 0.0), cxd(std::sqrt(1.0 - c1_squared), 0.0)};
}

double wootters_concurrence(const DensityMatrix& rho) {
    if (!(rho.dims() == Dims{2, 2}))
        throw std::invalid_argument(fmt::format("concurrence needs a 2x2 bipartite state, got {}x{}",
                                                rho.dims().a, rho.dims().b));
    Eigen::Matrix2cd sy;
    sy << cxd(0, 0), cxd(0, -1), cxd(0, 1), cxd(0, 0);
    const Eigen::MatrixXcd yy = kron(sy, sy);
    const Eigen::MatrixXcd flipped = yy * rho.matrix().conjugate() * yy;

    // Eigenvalues of rho * flipped equal those of the Hermitian
    // sqrt(rho) * flipped * sqrt(rho); the latter is numerically safer.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.matrix());
    const Eigen::MatrixXcd root = es.operatorSqrt();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es2(root * flipped * root);
    Eigen::VectorXd nu = es2.eigenvalues().cwiseMax(0.0).cwiseSqrt(); // ascending
    return std::max(0.0, nu[3] - nu[2] - nu[1] - nu[0]);
}

DensityMatrix theorem4_state(const Theorem4Params& params) {
    const Dims dims{3, 3};
    Eigen::VectorXcd phi0 = Eigen::VectorXcd::Zero(9);
    phi0[0] = params.c1(); // |11>
    phi0[4] = params.c2(); // |22>
    Eigen::VectorXcd ket33 = Eigen::VectorXcd::Zero(9);
    ket33[8] = 1.0; // |33>

    Eigen::MatrixXcd sigma = params.eta() * (phi0 * phi0.adjoint()) +
                             (1.0 - params.eta()) * (ket33 * ket33.adjoint());
    return {dims, std::move(sigma)};
}

SchmidtVector theorem4_schmidt_vector(const Theorem4Params& params) {
    const double hi = std::max(std::norm(params.c1()), std::norm(params.c2()));
    const double lo = std::min(std::norm(params.c1()), std::norm(params.c2()));
    Eigen::VectorXd lambda(3);
    lambda << params.eta() * hi + (1.0 - params.eta()), params.eta() * lo, 0.0;
    return SchmidtVector(std::move(lambda));
}

double theorem4_value(const Theorem4Params& params, const MonotoneSpec& spec) {
    return eval_pure(spec, theorem4_schmidt_vector(params));
}

double brute_force_ef(const DensityMatrix& rho, const MonotoneSpec& spec, int budget,
                      std::uint64_t seed, int cardinality, int threads) {
    if (budget < 1)
        throw std::invalid_argument("budget must be >= 1");
    const SpectralData spectral = eigendecompose(rho);
    const int r = spectral.rank;
    const int m = cardinality == 0 ? r * r : cardinality;
    if (m < r)
        throw std::invalid_argument(fmt::format("cardinality {} below rank {}", m, r));

    Eigen::MatrixXcd scaled(rho.total_dim(), r);
    for (int j = 0; j < r; ++j)
        scaled.col(j) = std::sqrt(spectral.eigenvalues[j]) * spectral.eigenvectors[j].amplitudes();
    const Dims dims = rho.dims();
    const int len = dims.schmidt_length();

    const auto sample_value = [&](const Eigen::MatrixXcd& v) {
        const Eigen::MatrixXcd members = scaled * v.transpose();
        Eigen::VectorXd avg = Eigen::VectorXd::Zero(len);
        for (int i = 0; i < m; ++i) {
            Eigen::Map<const Eigen::Matrix<cxd, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
                coeff(members.col(i).data(), dims.a, dims.b);
            Eigen::JacobiSVD<Eigen::MatrixXcd> svd(coeff);
            avg += svd.singularValues().array().square().matrix();
        }
        return spec.eval(avg / avg.sum());
    };

    // Sample 0 is the spectral ensemble; min over pure samples is exact order
    // independent, so the parallel reduction is deterministic.
    double best = sample_value(Isometry::identity(m, r).entries());

#ifdef _OPENMP
    const int nt = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(static) reduction(min : best) num_threads(nt) if (threads != 1)
#endif
    for (int s = 1; s < budget; ++s) {
        Rng rng(seed, static_cast<std::uint64_t>(s));
        const double value = sample_value(rng.haar_isometry(m, r));
        if (value < best)
            best = value;
    }
    return best;
}

} // namespace entconv

#include "entconv/decompositions.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include <fmt/format.h>

namespace entconv {

Ensemble::Ensemble(Eigen::VectorXd weights, std::vector<PureState> states)
    : weights_(std::move(weights)), states_(std::move(states)) {
    if (weights_.size() != static_cast<Eigen::Index>(states_.size()))
        throw std::invalid_argument(fmt::format("ensemble has {} weights for {} states",
                                                weights_.size(), states_.size()));
    if (states_.empty())
        throw std::invalid_argument("ensemble must have at least one member");
    double sum = 0.0;
    for (Eigen::Index i = 0; i < weights_.size(); ++i) {
        if (weights_[i] <= 0.0)
            throw std::invalid_argument(
                fmt::format("ensemble weight {} = {:.3e} is not positive", i, weights_[i]));
        sum += weights_[i];
    }
    if (std::abs(sum - 1.0) > tol::prob_sum)
        throw std::invalid_argument(
            fmt::format("ensemble weights violate unit sum: sum = {:.12g}", sum));
    weights_ /= sum;
    const Dims d = states_.front().dims();
    for (const PureState& psi : states_)
        if (!(psi.dims() == d))
            throw std::invalid_argument("ensemble members must share dims");
}

Dims Ensemble::dims() const {
    return states_.front().dims();
}

DensityMatrix Ensemble::to_density() const {
    const int d = dims().total();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 0; i < size(); ++i)
        m.noalias() += weights_[i] * states_[i].projector();
    return {dims(), std::move(m)};
}

Isometry::Isometry(Eigen::MatrixXcd entries) : entries_(std::move(entries)) {
    if (entries_.rows() < entries_.cols())
        throw std::invalid_argument(fmt::format("isometry must be tall, got {}x{}",
                                                entries_.rows(), entries_.cols()));
    const Eigen::MatrixXcd gram = entries_.adjoint() * entries_;
    const double dev =
        (gram - Eigen::MatrixXcd::Identity(entries_.cols(), entries_.cols())).cwiseAbs().maxCoeff();
    if (dev > tol::isometry_orth)
        throw std::invalid_argument(fmt::format(
            "isometry columns violate orthonormality: max |V^dag V - I| = {:.3e}", dev));
}

Isometry Isometry::identity(int rows, int cols) {
    Eigen::MatrixXcd v = Eigen::MatrixXcd::Zero(rows, cols);
    v.topRows(cols) = Eigen::MatrixXcd::Identity(cols, cols);
    return Isometry(std::move(v));
}

Isometry random_isometry(int rows, int cols, Rng& rng) {
    return Isometry(rng.haar_isometry(rows, cols));
}

Ensemble hjw_ensemble(const SpectralData& spec, const Isometry& v) {
    if (v.cols() != spec.rank)
        throw std::invalid_argument(fmt::format(
            "isometry has {} columns but the spectral decomposition has rank {}", v.cols(),
            spec.rank));
    if (v.rows() > spec.rank * spec.rank + 4)
        throw std::invalid_argument(
            fmt::format("ensemble cardinality {} exceeds the cap rank^2 + 4 = {}", v.rows(),
                        spec.rank * spec.rank + 4));

    const Dims dims = spec.dims;
    const int d = dims.total();
    // Columns of `scaled` are sqrt(mu_j) |e_j>; member i is scaled * row_i(V).
    Eigen::MatrixXcd scaled(d, spec.rank);
    for (int j = 0; j < spec.rank; ++j)
        scaled.col(j) = std::sqrt(spec.eigenvalues[j]) * spec.eigenvectors[j].amplitudes();
    const Eigen::MatrixXcd members = scaled * v.entries().transpose(); // d x m

    std::vector<double> weights;
    std::vector<PureState> states;
    double total = 0.0;
    for (int i = 0; i < v.rows(); ++i) {
        const double p = members.col(i).squaredNorm();
        if (p < tol::weight_drop)
            continue;
        weights.push_back(p);
        total += p;
        states.emplace_back(dims, members.col(i) / std::sqrt(p));
    }
    // Absorb the spectral cutoff deficit and the dropped members.
    Eigen::Map<Eigen::VectorXd> w(weights.data(), weights.size());
    w /= total;
    return {w, std::move(states)};
}

SchmidtVector average_schmidt_vector(const Ensemble& e) {
    Eigen::VectorXd avg = Eigen::VectorXd::Zero(e.dims().schmidt_length());
    for (int i = 0; i < e.size(); ++i)
        avg += e.weights()[i] * schmidt_decompose(e.states()[i]).entries();
    return SchmidtVector(std::move(avg));
}

bool ensemble_reconstructs(const Ensemble& e, const DensityMatrix& rho) {
    if (!(e.dims() == rho.dims()))
        return false;
    const int d = rho.total_dim();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 0; i < e.size(); ++i)
        m.noalias() += e.weights()[i] * e.states()[i].projector();
    return (m - rho.matrix()).cwiseAbs().maxCoeff() <= tol::reconstruction;
}

} // namespace entconv

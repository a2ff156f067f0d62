#include "entconv/states.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace entconv {

namespace {

void require_dims(const Dims& dims) {
    if (dims.a < 1 || dims.b < 1)
        throw std::invalid_argument(
            fmt::format("dims must be positive, got {}x{}", dims.a, dims.b));
}

} // namespace

PureState::PureState(Dims dims, Eigen::VectorXcd amplitudes)
    : dims_(dims), amps_(std::move(amplitudes)) {
    require_dims(dims_);
    if (amps_.size() != dims_.total())
        throw std::invalid_argument(
            fmt::format("amplitude length {} does not match dims {}x{} = {}", amps_.size(),
                        dims_.a, dims_.b, dims_.total()));
    const double sq_norm = amps_.squaredNorm();
    if (std::abs(sq_norm - 1.0) >= tol::norm_slack)
        throw std::invalid_argument(fmt::format(
            "pure state violates the unit-norm invariant: |psi|^2 = {:.12g}", sq_norm));
    amps_ /= std::sqrt(sq_norm);
}

Eigen::Map<const Eigen::Matrix<cxd, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
PureState::coefficient_matrix() const {
    return {amps_.data(), dims_.a, dims_.b};
}

Eigen::MatrixXcd PureState::projector() const {
    return amps_ * amps_.adjoint();
}

SchmidtVector::SchmidtVector(Eigen::VectorXd entries) : entries_(std::move(entries)) {
    if (entries_.size() < 1)
        throw std::invalid_argument("Schmidt vector must not be empty");
    double sum = 0.0;
    for (Eigen::Index i = 0; i < entries_.size(); ++i) {
        if (entries_[i] < -tol::prob_sum)
            throw std::invalid_argument(fmt::format(
                "Schmidt vector violates non-negativity: entry {} = {:.3e}", i, entries_[i]));
        if (entries_[i] < 0.0)
            entries_[i] = 0.0;
        if (i > 0 && entries_[i] > entries_[i - 1] + tol::prob_sum)
            throw std::invalid_argument(fmt::format(
                "Schmidt vector violates decreasing order at entry {}: {:.12g} > {:.12g}", i,
                entries_[i], entries_[i - 1]));
        sum += entries_[i];
    }
    if (std::abs(sum - 1.0) > tol::prob_sum)
        throw std::invalid_argument(
            fmt::format("Schmidt vector violates unit sum: sum = {:.12g}", sum));
    // Canonicalize: exact decreasing order (repairs sub-tolerance inversions)
    // and exact unit sum.
    std::sort(entries_.data(), entries_.data() + entries_.size(), std::greater<double>());
    entries_ /= sum;
}

DensityMatrix::DensityMatrix(Dims dims, Eigen::MatrixXcd matrix)
    : dims_(dims), mat_(std::move(matrix)) {
    require_dims(dims_);
    const int d = dims_.total();
    if (mat_.rows() != d || mat_.cols() != d)
        throw std::invalid_argument(fmt::format("density matrix must be {}x{}, got {}x{}", d, d,
                                                mat_.rows(), mat_.cols()));
    const double herm_dev = (mat_ - mat_.adjoint()).cwiseAbs().maxCoeff();
    if (herm_dev > 2.0 * tol::hermitian_entry)
        throw std::invalid_argument(fmt::format(
            "density matrix violates Hermiticity: max |M - M^dag| = {:.3e}", herm_dev));
    mat_ = 0.5 * (mat_ + mat_.adjoint().eval());

    const double trace = mat_.trace().real();
    if (std::abs(trace - 1.0) >= tol::trace_slack)
        throw std::invalid_argument(
            fmt::format("density matrix violates unit trace: trace = {:.12g}", trace));
    mat_ /= trace;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(mat_, Eigen::EigenvaluesOnly);
    const double min_eig = es.eigenvalues().minCoeff();
    if (min_eig < -tol::psd_slack)
        throw std::invalid_argument(fmt::format(
            "density matrix violates positivity: min eigenvalue = {:.3e}", min_eig));
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
    return {psi.dims(), psi.projector()};
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& lhs, const Eigen::MatrixXcd& rhs) {
    Eigen::MatrixXcd out(lhs.rows() * rhs.rows(), lhs.cols() * rhs.cols());
    for (Eigen::Index i = 0; i < lhs.rows(); ++i)
        for (Eigen::Index j = 0; j < lhs.cols(); ++j)
            out.block(i * rhs.rows(), j * rhs.cols(), rhs.rows(), rhs.cols()) = lhs(i, j) * rhs;
    return out;
}

Eigen::MatrixXcd LocalUnitary::full() const {
    return kron(on_a, on_b);
}

PureState LocalUnitary::apply(const PureState& psi) const {
    return {psi.dims(), full() * psi.amplitudes()};
}

DensityMatrix LocalUnitary::apply(const DensityMatrix& rho) const {
    const Eigen::MatrixXcd u = full();
    return {rho.dims(), u * rho.matrix() * u.adjoint()};
}

SchmidtVector schmidt_decompose(const PureState& psi) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(psi.coefficient_matrix());
    Eigen::VectorXd sq = svd.singularValues().array().square();
    return SchmidtVector(std::move(sq));
}

bool majorizes(Eigen::VectorXd x, Eigen::VectorXd y, double slack) {
    const Eigen::Index n = std::max(x.size(), y.size());
    double px = 0.0, py = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        px += i < x.size() ? x[i] : 0.0; // shorter vector is zero-padded
        py += i < y.size() ? y[i] : 0.0;
        if (px < py - slack)
            return false;
    }
    return true;
}

bool majorizes(const SchmidtVector& x, const SchmidtVector& y) {
    return majorizes(x.entries(), y.entries(), tol::majorization_slack);
}

SpectralData eigendecompose(const DensityMatrix& rho, double cutoff) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.matrix());
    if (es.info() != Eigen::Success)
        throw std::runtime_error("eigendecomposition failed to converge");

    SpectralData out;
    out.dims = rho.dims();
    const Eigen::VectorXd& evals = es.eigenvalues(); // ascending
    const int d = static_cast<int>(evals.size());
    std::vector<double> kept;
    for (int i = d - 1; i >= 0; --i) {
        if (evals[i] <= cutoff)
            break;
        kept.push_back(evals[i]);
        out.eigenvectors.emplace_back(rho.dims(), es.eigenvectors().col(i));
    }
    out.rank = static_cast<int>(kept.size());
    out.eigenvalues = Eigen::Map<const Eigen::VectorXd>(kept.data(), out.rank);
    return out;
}

PureState random_pure(Dims dims, std::uint64_t seed) {
    require_dims(dims);
    Rng rng(seed);
    Eigen::VectorXcd v = rng.gaussian_matrix(dims.total(), 1).col(0);
    v /= v.norm();
    return {dims, std::move(v)};
}

DensityMatrix random_density(Dims dims, int rank, std::uint64_t seed) {
    require_dims(dims);
    if (rank < 1 || rank > dims.total())
        throw std::invalid_argument(
            fmt::format("invalid rank {} for total dimension {}", rank, dims.total()));
    Rng rng(seed);
    const Eigen::MatrixXcd g = rng.gaussian_matrix(dims.total(), rank);
    Eigen::MatrixXcd m = g * g.adjoint();
    m /= m.trace().real();
    return {dims, std::move(m)};
}

LocalUnitary random_local_unitary(Dims dims, std::uint64_t seed) {
    require_dims(dims);
    Rng rng(seed);
    LocalUnitary u;
    u.on_a = rng.haar_unitary(dims.a);
    u.on_b = rng.haar_unitary(dims.b);
    return u;
}

} // namespace entconv

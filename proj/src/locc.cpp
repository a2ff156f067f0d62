#include "entconv/locc.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include <fmt/format.h>

namespace entconv {

LocalChannel::LocalChannel(Side side, std::vector<Eigen::MatrixXcd> kraus)
    : side_(side), kraus_(std::move(kraus)) {
    if (kraus_.empty())
        throw std::invalid_argument("channel needs at least one Kraus operator");
    const Eigen::Index d = kraus_.front().rows();
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(d, d);
    for (const Eigen::MatrixXcd& k : kraus_) {
        if (k.rows() != d || k.cols() != d)
            throw std::invalid_argument("Kraus operators must be square and equally sized");
        sum.noalias() += k.adjoint() * k;
    }
    const double dev = (sum - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff();
    if (dev > tol::isometry_orth)
        throw std::invalid_argument(fmt::format(
            "channel violates completeness: max |sum M^dag M - I| = {:.3e}", dev));
}

int LocalChannel::local_dim() const {
    return static_cast<int>(kraus_.front().rows());
}

LocalChannel random_local_channel(int dim, int n_kraus, Side side, std::uint64_t seed) {
    if (dim < 1 || n_kraus < 1)
        throw std::invalid_argument("dim and n_kraus must be >= 1");
    Rng rng(seed);
    std::vector<Eigen::MatrixXcd> blocks;
    blocks.reserve(n_kraus);
    Eigen::MatrixXcd gram = Eigen::MatrixXcd::Zero(dim, dim);
    for (int k = 0; k < n_kraus; ++k) {
        blocks.push_back(rng.gaussian_matrix(dim, dim));
        gram.noalias() += blocks.back().adjoint() * blocks.back();
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram);
    const Eigen::MatrixXcd inv_root = es.operatorInverseSqrt();
    for (Eigen::MatrixXcd& b : blocks)
        b = b * inv_root;
    return {side, std::move(blocks)};
}

namespace {

Eigen::MatrixXcd lift(const Eigen::MatrixXcd& op, Side side, const Dims& dims) {
    if (side == Side::A)
        return kron(op, Eigen::MatrixXcd::Identity(dims.b, dims.b));
    return kron(Eigen::MatrixXcd::Identity(dims.a, dims.a), op);
}

void require_side_dim(const DensityMatrix& rho, const LocalChannel& ch) {
    const int expected = ch.side() == Side::A ? rho.dims().a : rho.dims().b;
    if (ch.local_dim() != expected)
        throw std::invalid_argument(
            fmt::format("channel acts on dimension {} but side {} has dimension {}",
                        ch.local_dim(), ch.side() == Side::A ? 'A' : 'B', expected));
}

} // namespace

std::vector<ChannelBranch> apply_channel_branches(const DensityMatrix& rho,
                                                  const LocalChannel& ch) {
    require_side_dim(rho, ch);
    std::vector<ChannelBranch> branches;
    for (const Eigen::MatrixXcd& k : ch.kraus()) {
        const Eigen::MatrixXcd lifted = lift(k, ch.side(), rho.dims());
        Eigen::MatrixXcd raw = lifted * rho.matrix() * lifted.adjoint();
        const double p = raw.trace().real();
        if (p < 1e-12)
            continue;
        branches.push_back({p, DensityMatrix(rho.dims(), raw / p)});
    }
    return branches;
}

DensityMatrix apply_channel(const DensityMatrix& rho, const LocalChannel& ch) {
    require_side_dim(rho, ch);
    const int d = rho.total_dim();
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
    for (const Eigen::MatrixXcd& k : ch.kraus()) {
        const Eigen::MatrixXcd lifted = lift(k, ch.side(), rho.dims());
        out.noalias() += lifted * rho.matrix() * lifted.adjoint();
    }
    return {rho.dims(), std::move(out)};
}

bool nielsen_convertible(const PureState& phi, const PureState& psi) {
    if (!(phi.dims() == psi.dims()))
        throw std::invalid_argument("conversion check needs matching dims");
    return majorizes(schmidt_decompose(psi), schmidt_decompose(phi));
}

bool pure_to_ensemble_convertible(const PureState& phi, const Ensemble& e) {
    if (!(phi.dims() == e.dims()))
        throw std::invalid_argument("conversion check needs matching dims");
    return majorizes(average_schmidt_vector(e), schmidt_decompose(phi));
}

StrongMonotonicityReport strong_monotonicity_check(const DensityMatrix& rho,
                                                   const MonotoneSpec& spec,
                                                   const LocalChannel& ch,
                                                   const SolverConfig& cfg, double slack) {
    StrongMonotonicityReport report;
    report.slack = slack;
    report.lhs = minimize_ef(rho, spec, cfg).value;
    for (const ChannelBranch& branch : apply_channel_branches(rho, ch)) {
        const double value = minimize_ef(branch.state, spec, cfg).value;
        report.branch_probabilities.push_back(branch.probability);
        report.branch_values.push_back(value);
        report.rhs += branch.probability * value;
    }
    report.pass = report.lhs + slack >= report.rhs;
    return report;
}

} // namespace entconv

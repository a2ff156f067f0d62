#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "entconv/decompositions.hpp"
#include "entconv/monotones.hpp"
#include "entconv/optimizer.hpp"
#include "entconv/states.hpp"

namespace entconv {

enum class Side { A, B };

/// One-sided local operation given by Kraus operators {M_k} on the chosen
/// subsystem, complete in the sense sum_k M_k^dag M_k = I (1e-10).
class LocalChannel {
  public:
    LocalChannel(Side side, std::vector<Eigen::MatrixXcd> kraus);

    Side side() const { return side_; }
    const std::vector<Eigen::MatrixXcd>& kraus() const { return kraus_; }
    int local_dim() const;
    int n_kraus() const { return static_cast<int>(kraus_.size()); }

  private:
    Side side_;
    std::vector<Eigen::MatrixXcd> kraus_;
};

/// Random channel from Gaussian blocks normalized by the inverse square root
/// of their Gram sum, so completeness holds by construction. A single Kraus
/// operator comes out unitary.
LocalChannel random_local_channel(int dim, int n_kraus, Side side, std::uint64_t seed);

struct ChannelBranch {
    double probability = 0.0;
    DensityMatrix state;
};

/// Measurement branches p_k = Tr(M_k rho M_k^dag), rho_k = M_k rho M_k^dag / p_k.
/// Branches with p_k < 1e-12 are dropped; the remaining probabilities sum to
/// one within 1e-10.
std::vector<ChannelBranch> apply_channel_branches(const DensityMatrix& rho,
                                                  const LocalChannel& ch);

/// Deterministic (non-selective) channel output sum_k M_k rho M_k^dag.
DensityMatrix apply_channel(const DensityMatrix& rho, const LocalChannel& ch);

/// Pure-to-pure LOCC convertibility: phi -> psi iff the Schmidt vector of psi
/// majorizes that of phi.
bool nielsen_convertible(const PureState& phi, const PureState& psi);

/// phi -> {p_i, psi_i} iff the ensemble's average Schmidt vector majorizes
/// the Schmidt vector of phi.
bool pure_to_ensemble_convertible(const PureState& phi, const Ensemble& e);

struct StrongMonotonicityReport {
    double lhs = 0.0;   // solver value on rho
    double rhs = 0.0;   // sum_k p_k * solver value on rho_k
    double slack = 0.0;
    bool pass = false;
    std::vector<double> branch_probabilities;
    std::vector<double> branch_values;
};

/// Checks lhs + slack >= rhs on the channel's branches. Both sides are upper
/// bound estimates, so only violations beyond the slack (default 5e-3) flag a
/// real problem.
StrongMonotonicityReport strong_monotonicity_check(const DensityMatrix& rho,
                                                   const MonotoneSpec& spec,
                                                   const LocalChannel& ch,
                                                   const SolverConfig& cfg,
                                                   double slack = 5e-3);

} // namespace entconv

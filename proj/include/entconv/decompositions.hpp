#pragma once

#include <vector>

#include <Eigen/Dense>

#include "entconv/rng.hpp"
#include "entconv/states.hpp"

namespace entconv {

/// Weighted pure-state realization {p_i, |psi_i>} of a density matrix.
/// Weights are positive and sum to one (1e-10); all members share dims.
class Ensemble {
  public:
    Ensemble() = default;
    Ensemble(Eigen::VectorXd weights, std::vector<PureState> states);

    const Eigen::VectorXd& weights() const { return weights_; }
    const std::vector<PureState>& states() const { return states_; }
    int size() const { return static_cast<int>(states_.size()); }
    Dims dims() const;

    DensityMatrix to_density() const;

  private:
    Eigen::VectorXd weights_;
    std::vector<PureState> states_;
};

/// Dense m x r matrix with orthonormal columns (V^dag V = I within 1e-10).
class Isometry {
  public:
    Isometry() = default;
    explicit Isometry(Eigen::MatrixXcd entries);

    /// [I_r; 0]: the isometry that reproduces the spectral ensemble.
    static Isometry identity(int rows, int cols);

    const Eigen::MatrixXcd& entries() const { return entries_; }
    int rows() const { return static_cast<int>(entries_.rows()); }
    int cols() const { return static_cast<int>(entries_.cols()); }

  private:
    Eigen::MatrixXcd entries_;
};

Isometry random_isometry(int rows, int cols, Rng& rng);

/// All pure-state ensembles of a density matrix arise this way: member i is
/// the normalization of  |psi~_i> = sum_j V_ij sqrt(mu_j) |e_j>  with weight
/// p_i = <psi~_i|psi~_i>. Members with p_i < tol::weight_drop are dropped.
/// V must have exactly `spec.rank` columns.
Ensemble hjw_ensemble(const SpectralData& spec, const Isometry& v);

/// Weighted average of the members' Schmidt vectors. This is itself a valid
/// Schmidt vector and identifies the pure state the ensemble certifies as
/// LOCC-convertible to the mixture.
SchmidtVector average_schmidt_vector(const Ensemble& e);

/// True iff sum_i p_i |psi_i><psi_i| equals rho within tol::reconstruction in
/// max entry norm.
bool ensemble_reconstructs(const Ensemble& e, const DensityMatrix& rho);

} // namespace entconv

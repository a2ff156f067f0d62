#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "entconv/rng.hpp"

namespace entconv {

using cxd = std::complex<double>;

// Shared numeric tolerances. Values chosen for the dimensions this library
// targets (local dimensions up to ~64); see the individual checks for what
// each one guards.
namespace tol {
inline constexpr double norm_slack = 1e-8;      // renormalize silently below this
inline constexpr double hermitian_entry = 1e-10;
inline constexpr double trace_slack = 1e-8;
inline constexpr double psd_slack = 1e-10;
inline constexpr double prob_sum = 1e-10;
inline constexpr double majorization_slack = 1e-10;
inline constexpr double reconstruction = 1e-8;
inline constexpr double rank_cutoff = 1e-12;    // numerical-rank eigenvalue cutoff
inline constexpr double weight_drop = 1e-14;    // ensemble members below this are dropped
inline constexpr double isometry_orth = 1e-10;
} // namespace tol

struct Dims {
    int a = 0; // dimension of subsystem A
    int b = 0; // dimension of subsystem B

    int total() const { return a * b; }
    int schmidt_length() const { return a < b ? a : b; }
    bool operator==(const Dims&) const = default;
};

/// Normalized pure state on a dA x dB bipartite space. Amplitudes are stored
/// in row-major product order: amplitude(i*dB + j) multiplies |i>|j>.
/// Norm deviations below tol::norm_slack are silently renormalized; anything
/// worse is rejected.
class PureState {
  public:
    PureState() = default;
    PureState(Dims dims, Eigen::VectorXcd amplitudes);

    const Dims& dims() const { return dims_; }
    const Eigen::VectorXcd& amplitudes() const { return amps_; }

    /// The dA x dB coefficient matrix view of the amplitude vector.
    Eigen::Map<const Eigen::Matrix<cxd, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
    coefficient_matrix() const;

    Eigen::MatrixXcd projector() const;

  private:
    Dims dims_;
    Eigen::VectorXcd amps_;
};

/// Probability vector of squared Schmidt coefficients, sorted in decreasing
/// order and summing to one. Entries are probabilities, not amplitudes.
class SchmidtVector {
  public:
    SchmidtVector() = default;
    explicit SchmidtVector(Eigen::VectorXd entries);

    const Eigen::VectorXd& entries() const { return entries_; }
    int size() const { return static_cast<int>(entries_.size()); }
    double operator[](int i) const { return entries_[i]; }

  private:
    Eigen::VectorXd entries_;
};

/// Hermitian, PSD, unit-trace matrix on the bipartite space. The constructor
/// rejects inputs violating Hermiticity (1e-10 entrywise), positivity
/// (min eigenvalue >= -1e-10) or trace normalization (1e-8); trace deviations
/// inside the slack are renormalized.
class DensityMatrix {
  public:
    DensityMatrix() = default;
    DensityMatrix(Dims dims, Eigen::MatrixXcd matrix);

    static DensityMatrix from_pure(const PureState& psi);

    const Dims& dims() const { return dims_; }
    const Eigen::MatrixXcd& matrix() const { return mat_; }
    int total_dim() const { return dims_.total(); }

  private:
    Dims dims_;
    Eigen::MatrixXcd mat_;
};

/// Positive part of a spectral decomposition: eigenvalues above the cutoff in
/// decreasing order with their (orthonormal) eigenvectors.
struct SpectralData {
    Dims dims;
    Eigen::VectorXd eigenvalues;
    std::vector<PureState> eigenvectors;
    int rank = 0;
};

struct LocalUnitary {
    Eigen::MatrixXcd on_a; // dA x dA
    Eigen::MatrixXcd on_b; // dB x dB

    Eigen::MatrixXcd full() const; // on_a (x) on_b
    PureState apply(const PureState& psi) const;
    DensityMatrix apply(const DensityMatrix& rho) const;
};

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& lhs, const Eigen::MatrixXcd& rhs);

/// Squared singular values of the state's coefficient matrix, sorted
/// decreasing and renormalized to sum exactly one.
SchmidtVector schmidt_decompose(const PureState& psi);

/// True iff x majorizes y: every descending partial sum of x dominates the
/// matching partial sum of y (slack tol::majorization_slack). Vectors of
/// different length are compared after zero-padding the shorter one.
bool majorizes(const SchmidtVector& x, const SchmidtVector& y);
bool majorizes(Eigen::VectorXd x, Eigen::VectorXd y, double slack = tol::majorization_slack);

SpectralData eigendecompose(const DensityMatrix& rho, double cutoff = tol::rank_cutoff);

PureState random_pure(Dims dims, std::uint64_t seed);
DensityMatrix random_density(Dims dims, int rank, std::uint64_t seed);
LocalUnitary random_local_unitary(Dims dims, std::uint64_t seed);

} // namespace entconv

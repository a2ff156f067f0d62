#pragma once

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

namespace entconv {

// Splittable deterministic generator (SplitMix64 core). Every random draw in
// the library flows through this type so that results depend only on
// (seed, stream) and never on platform library internals or thread schedule.
// Stream k of a fixed seed always produces the same sequence, which is what
// makes solver restarts reducible in any order.
class Rng {
  public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

    std::uint64_t next_u64();

    /// Uniform double in [0, 1).
    double uniform();

    /// Standard normal via Box-Muller (explicit, platform-independent).
    double normal();

    /// Complex with independent standard-normal real and imaginary parts.
    std::complex<double> complex_normal();

    Eigen::MatrixXcd gaussian_matrix(int rows, int cols);

    /// Haar-distributed unitary: QR of a Gaussian matrix with the usual
    /// R-diagonal phase fix.
    Eigen::MatrixXcd haar_unitary(int n);

    /// Haar-style isometry with orthonormal columns, rows >= cols.
    Eigen::MatrixXcd haar_isometry(int rows, int cols);

  private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace entconv

#include "entconv/rng.hpp"

#include <cmath>
#include <numbers>

namespace entconv {

namespace {

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

} // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream)
    : state_(mix64(seed + 0x9E3779B97F4A7C15ull) ^
             mix64(stream * 0xBF58476D1CE4E5B9ull + 0x94D049BB133111EBull)) {}

std::uint64_t Rng::next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    return mix64(z);
}

double Rng::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // u1 in (0,1] keeps the log finite
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

std::complex<double> Rng::complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re, im};
}

Eigen::MatrixXcd Rng::gaussian_matrix(int rows, int cols) {
    Eigen::MatrixXcd g(rows, cols);
    // Fill row-major so the draw order is independent of Eigen's storage.
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            g(i, j) = complex_normal();
    return g;
}

Eigen::MatrixXcd Rng::haar_isometry(int rows, int cols) {
    Eigen::MatrixXcd g = gaussian_matrix(rows, cols);
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(rows, cols);
    // Fix column phases by the R diagonal so the distribution is Haar.
    const Eigen::MatrixXcd& qrmat = qr.matrixQR();
    for (int j = 0; j < cols; ++j) {
        const std::complex<double> d = qrmat(j, j);
        const double mag = std::abs(d);
        if (mag > 0.0)
            q.col(j) *= d / mag;
    }
    return q;
}

Eigen::MatrixXcd Rng::haar_unitary(int n) {
    return haar_isometry(n, n);
}

} // namespace entconv

#pragma once

#include <cstdint>

#include "entconv/monotones.hpp"
#include "entconv/states.hpp"

namespace entconv {

/// Parameters of the analytically solvable 3x3 family
///   sigma = eta |phi0><phi0| + (1-eta) |33><33|,
///   |phi0> = c1 |11> + c2 |22>.
class Theorem4Params {
  public:
    Theorem4Params(double eta, cxd c1, cxd c2);

    /// Convenience for real coefficients given |c1|^2.
    static Theorem4Params from_c1_squared(double eta, double c1_squared);

    double eta() const { return eta_; }
    cxd c1() const { return c1_; }
    cxd c2() const { return c2_; }

  private:
    double eta_;
    cxd c1_, c2_;
};

/// Wootters spin-flip concurrence of a two-qubit density matrix:
/// C = max(0, nu1 - nu2 - nu3 - nu4) with nu_i the decreasing square roots of
/// the eigenvalues of rho (sy (x) sy) rho* (sy (x) sy).
double wootters_concurrence(const DensityMatrix& rho);

/// The 9x9 density matrix of the family above.
DensityMatrix theorem4_state(const Theorem4Params& params);

/// Schmidt vector of the optimal input state |theta>:
/// (eta*max(|c1|^2,|c2|^2) + (1-eta), eta*min(|c1|^2,|c2|^2), 0).
SchmidtVector theorem4_schmidt_vector(const Theorem4Params& params);

/// Closed-form conversion value F(|theta>) of the family.
double theorem4_value(const Theorem4Params& params, const MonotoneSpec& spec);

/// Sampling upper bound: evaluates f(average Schmidt vector) on `budget`
/// isometries without local refinement and returns the minimum. Sample 0 is
/// always the identity isometry (the spectral ensemble); the rest are random.
double brute_force_ef(const DensityMatrix& rho, const MonotoneSpec& spec, int budget,
                      std::uint64_t seed, int cardinality = 0, int threads = 0);

} // namespace entconv

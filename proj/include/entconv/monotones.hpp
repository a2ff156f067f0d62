#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "entconv/states.hpp"

namespace entconv {

/// A pure-state entanglement monotone realized as a symmetric concave
/// function f of the Schmidt probability vector. `eval` receives the vector
/// sorted in decreasing order (callers on unsorted data must sort first,
/// which is what makes permutation symmetry hold by construction).
/// `is_linear` marks f affine in the sorted vector.
struct MonotoneSpec {
    std::string name;
    std::function<double(const Eigen::VectorXd&)> eval;
    bool is_linear = false;
};

/// Von Neumann entropy of the Schmidt vector, in nats.
const MonotoneSpec& entropy_monotone();

/// Two-qubit pure-state concurrence 2*sqrt(l1*l2). Only defined for Schmidt
/// rank <= 2; vectors with a third entry above 1e-10 are a domain error.
const MonotoneSpec& concurrence_monotone();

/// Average distillable entanglement of the Schmidt vector:
///   f(l) = sum_{n=2..d} n (l_n - l_{n+1}) ln n,   l_{d+1} := 0.
/// Linear in the sorted vector.
const MonotoneSpec& avg_entanglement_monotone();

MonotoneSpec custom_monotone(std::string name,
                             std::function<double(const Eigen::VectorXd&)> f,
                             bool is_linear);

/// Lookup by the stable CLI identifiers: "entropy", "concurrence", "avg_e".
const MonotoneSpec& monotone_by_name(std::string_view name);
std::vector<std::string> builtin_monotone_names();

double eval_pure(const MonotoneSpec& spec, const SchmidtVector& lambda);
double eval_pure(const MonotoneSpec& spec, const PureState& psi);

struct SchurConcavityReport {
    struct Violation {
        Eigen::VectorXd x; // majorizing vector
        Eigen::VectorXd y; // majorized vector
        double fx = 0.0;
        double fy = 0.0;
    };

    int samples = 0;
    int violations = 0;
    double max_violation = 0.0;      // largest f(x) - f(y) observed over violating pairs
    std::vector<Violation> worst;    // a few worst offenders, for diagnostics

    bool passed() const { return violations == 0; }
};

/// Sampled Schur-concavity check: draws x at random, builds y as a mixture of
/// random permutations of x (a doubly-stochastic image, so x majorizes y by
/// construction) and verifies f(x) <= f(y) + 1e-9. Violations are collected,
/// not thrown.
SchurConcavityReport check_schur_concavity(const MonotoneSpec& spec, int n_samples,
                                           std::uint64_t seed);

} // namespace entconv

#include "entconv/monotones.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

#include "entconv/rng.hpp"

namespace entconv {

namespace {

double entropy_eval(const Eigen::VectorXd& lambda) {
    double h = 0.0;
    for (Eigen::Index i = 0; i < lambda.size(); ++i)
        if (lambda[i] > 0.0)
            h -= lambda[i] * std::log(lambda[i]);
    return h;
}

double concurrence_eval(const Eigen::VectorXd& lambda) {
    for (Eigen::Index i = 2; i < lambda.size(); ++i)
        if (lambda[i] > 1e-10)
            throw std::domain_error(fmt::format(
                "concurrence needs Schmidt rank <= 2, entry {} = {:.3e}", i, lambda[i]));
    if (lambda.size() < 2)
        return 0.0;
    return 2.0 * std::sqrt(std::max(0.0, lambda[0] * lambda[1]));
}

double avg_entanglement_eval(const Eigen::VectorXd& lambda) {
    const Eigen::Index d = lambda.size();
    double value = 0.0;
    for (Eigen::Index n = 2; n <= d; ++n) {
        const double next = n < d ? lambda[n] : 0.0; // lambda_{d+1} := 0
        value += static_cast<double>(n) * (lambda[n - 1] - next) * std::log(static_cast<double>(n));
    }
    return value;
}

// Flat random probability vector (Dirichlet(1)), sorted decreasing.
Eigen::VectorXd random_sorted_prob_vector(int d, Rng& rng) {
    Eigen::VectorXd v(d);
    for (int i = 0; i < d; ++i)
        v[i] = -std::log(1.0 - rng.uniform());
    v /= v.sum();
    std::sort(v.data(), v.data() + d, std::greater<double>());
    return v;
}

} // namespace

const MonotoneSpec& entropy_monotone() {
    static const MonotoneSpec spec{"entropy", entropy_eval, false};
    return spec;
}

const MonotoneSpec& concurrence_monotone() {
    static const MonotoneSpec spec{"concurrence", concurrence_eval, false};
    return spec;
}

const MonotoneSpec& avg_entanglement_monotone() {
    static const MonotoneSpec spec{"avg_e", avg_entanglement_eval, true};
    return spec;
}

MonotoneSpec custom_monotone(std::string name, std::function<double(const Eigen::VectorXd&)> f,
                             bool is_linear) {
    return {std::move(name), std::move(f), is_linear};
}

const MonotoneSpec& monotone_by_name(std::string_view name) {
    if (name == "entropy")
        return entropy_monotone();
    if (name == "concurrence")
        return concurrence_monotone();
    if (name == "avg_e")
        return avg_entanglement_monotone();
    throw std::invalid_argument(fmt::format("unknown monotone '{}'", name));
}

std::vector<std::string> builtin_monotone_names() {
    return {"entropy", "concurrence", "avg_e"};
}

double eval_pure(const MonotoneSpec& spec, const SchmidtVector& lambda) {
    // SchmidtVector is sorted by construction.
    return spec.eval(lambda.entries());
}

double eval_pure(const MonotoneSpec& spec, const PureState& psi) {
    return eval_pure(spec, schmidt_decompose(psi));
}

SchurConcavityReport check_schur_concavity(const MonotoneSpec& spec, int n_samples,
                                           std::uint64_t seed) {
    if (n_samples < 1)
        throw std::invalid_argument("n_samples must be >= 1");

    SchurConcavityReport report;
    report.samples = n_samples;
    Rng rng(seed);

    for (int s = 0; s < n_samples; ++s) {
        const int d = 2 + static_cast<int>(rng.next_u64() % 5); // dimensions 2..6
        const Eigen::VectorXd x = random_sorted_prob_vector(d, rng);

        // y = mixture of random permutations of x: a doubly-stochastic image,
        // so x majorizes y.
        const int n_perms = 3;
        Eigen::VectorXd w(n_perms);
        for (int k = 0; k < n_perms; ++k)
            w[k] = -std::log(1.0 - rng.uniform());
        w /= w.sum();

        Eigen::VectorXd y = Eigen::VectorXd::Zero(d);
        std::vector<int> perm(d);
        for (int k = 0; k < n_perms; ++k) {
            for (int i = 0; i < d; ++i)
                perm[i] = i;
            for (int i = d - 1; i > 0; --i)
                std::swap(perm[i], perm[rng.next_u64() % (i + 1)]);
            for (int i = 0; i < d; ++i)
                y[i] += w[k] * x[perm[i]];
        }
        std::sort(y.data(), y.data() + d, std::greater<double>());

        const double fx = spec.eval(x);
        const double fy = spec.eval(y);
        if (fx > fy + 1e-9) {
            ++report.violations;
            report.max_violation = std::max(report.max_violation, fx - fy);
            if (report.worst.size() < 5)
                report.worst.push_back({x, y, fx, fy});
        }
    }
    return report;
}

} // namespace entconv

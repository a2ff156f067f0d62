#include "entconv/optimizer.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include <fmt/format.h>

#include <unsupported/Eigen/MatrixFunctions>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace entconv {

namespace {

using RowMat = Eigen::Matrix<cxd, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

struct ObjectiveContext {
    Dims dims;
    int rank = 0;
    Eigen::MatrixXcd scaled; // eigvecs * diag(sqrt(mu)), D x rank
    const MonotoneSpec* spec = nullptr;
    SolverMode mode = SolverMode::EF;
};

// f(sum_i lambda_i) for EF, sum_i p_i f(lambda_i / p_i) for the roof, where
// lambda_i are the squared singular values of the unnormalized member
// sqrt-weighted by p_i. Sorted per member before summing, which is what the
// average Schmidt vector requires.
double evaluate(const ObjectiveContext& ctx, const Eigen::MatrixXcd& v) {
    const Eigen::MatrixXcd members = ctx.scaled * v.transpose(); // D x m
    const int m = static_cast<int>(members.cols());
    const int len = ctx.dims.schmidt_length();

    Eigen::VectorXd avg = Eigen::VectorXd::Zero(len);
    double roof = 0.0;
    double total = 0.0;
    for (int i = 0; i < m; ++i) {
        Eigen::Map<const RowMat> coeff(members.col(i).data(), ctx.dims.a, ctx.dims.b);
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(coeff);
        const Eigen::VectorXd sq = svd.singularValues().array().square();
        const double p = sq.sum();
        total += p;
        if (ctx.mode == SolverMode::EF) {
            avg += sq;
        } else if (p > tol::weight_drop) {
            roof += p * ctx.spec->eval(sq / p);
        }
    }
    if (ctx.mode == SolverMode::EF)
        return ctx.spec->eval(avg / total);
    return roof / total;
}

Eigen::MatrixXcd skew_from_params(const Eigen::VectorXd& a, int m) {
    Eigen::MatrixXcd skew = Eigen::MatrixXcd::Zero(m, m);
    int idx = 0;
    for (int i = 0; i < m; ++i)
        skew(i, i) = cxd(0.0, a[idx++]);
    for (int p = 0; p < m; ++p) {
        for (int q = p + 1; q < m; ++q) {
            const cxd entry(a[idx], a[idx + 1]);
            idx += 2;
            skew(p, q) = entry;
            skew(q, p) = -std::conj(entry);
        }
    }
    return skew;
}

struct RestartOutcome {
    double value = 0.0;
    Eigen::MatrixXcd isometry;
    bool converged = false;
};

// One seeded restart: start from the spectral ensemble (restart 0) or a Haar
// isometry, then coordinate descent on the real parameters of the
// skew-Hermitian generator A in V = exp(A) V0. Steps decay geometrically
// after sweeps without improvement; the stall window decides convergence.
RestartOutcome run_restart(const ObjectiveContext& ctx, const SolverConfig& cfg, int m,
                           int restart_index) {
    Rng rng(cfg.seed, static_cast<std::uint64_t>(restart_index));
    Eigen::MatrixXcd base;
    if (restart_index == 0) {
        base = Eigen::MatrixXcd::Zero(m, ctx.rank);
        base.topRows(ctx.rank) = Eigen::MatrixXcd::Identity(ctx.rank, ctx.rank);
    } else {
        base = rng.haar_isometry(m, ctx.rank);
    }

    RestartOutcome out;
    out.isometry = base;
    out.value = evaluate(ctx, base);

    const int n_params = m * m;
    Eigen::VectorXd a = Eigen::VectorXd::Zero(n_params);
    double step = cfg.step_scale;
    std::vector<double> best_history;
    best_history.reserve(cfg.max_iters);

    int it = 0;
    // Valid monotones are nonnegative (Schur-concave with f(1,0,...) = 0), so
    // an objective of zero is the floor.
    while (it < cfg.max_iters && out.value > 0.0 && !out.converged) {
        bool sweep_accepted = false;
        for (int c = 0; c < n_params && it < cfg.max_iters; ++c) {
            ++it;
            const double saved = a[c];
            for (const double sign : {1.0, -1.0}) {
                a[c] = saved + sign * step;
                Eigen::MatrixXcd candidate = skew_from_params(a, m).exp() * base;
                const double value = evaluate(ctx, candidate);
                if (value < out.value) {
                    out.value = value;
                    out.isometry = std::move(candidate);
                    sweep_accepted = true;
                    break;
                }
                a[c] = saved;
            }
            best_history.push_back(out.value);
            if (it >= cfg.stall_iters &&
                best_history[it - cfg.stall_iters] - out.value < cfg.objective_tol) {
                out.converged = true;
                break;
            }
            if (out.value <= 0.0)
                break;
        }
        if (!sweep_accepted && !out.converged) {
            step *= 0.5;
            if (step < 1e-13)
                out.converged = true; // step exhausted below any useful resolution
        }
    }
    if (out.value <= 0.0)
        out.converged = true;
    return out;
}

void validate_config(const SolverConfig& cfg, int rank) {
    if (cfg.restarts < 1 || cfg.max_iters < 1 || cfg.stall_iters < 1)
        throw std::invalid_argument("solver config: restarts, max_iters and stall_iters must be positive");
    if (cfg.objective_tol <= 0.0 || cfg.step_scale <= 0.0)
        throw std::invalid_argument("solver config: objective_tol and step_scale must be positive");
    if (cfg.threads < 0)
        throw std::invalid_argument("solver config: threads must be >= 0");
    if (cfg.cardinality != 0 &&
        (cfg.cardinality < rank || cfg.cardinality > rank * rank + 4))
        throw std::invalid_argument(
            fmt::format("solver config: cardinality {} outside [rank, rank^2+4] = [{}, {}]",
                        cfg.cardinality, rank, rank * rank + 4));
}

SolverResult minimize(const DensityMatrix& rho, const MonotoneSpec& spec,
                      const SolverConfig& cfg, SolverMode mode) {
    const SpectralData spectral = eigendecompose(rho);
    validate_config(cfg, spectral.rank);
    const int m = cfg.cardinality == 0 ? spectral.rank * spectral.rank : cfg.cardinality;

    ObjectiveContext ctx;
    ctx.dims = rho.dims();
    ctx.rank = spectral.rank;
    ctx.scaled.resize(rho.total_dim(), spectral.rank);
    for (int j = 0; j < spectral.rank; ++j)
        ctx.scaled.col(j) =
            std::sqrt(spectral.eigenvalues[j]) * spectral.eigenvectors[j].amplitudes();
    ctx.spec = &spec;
    ctx.mode = mode;

    std::vector<RestartOutcome> outcomes(cfg.restarts);
    if (cfg.threads == 1) {
        // Serial reference path; must agree bit for bit with the parallel one.
        for (int r = 0; r < cfg.restarts; ++r)
            outcomes[r] = run_restart(ctx, cfg, m, r);
    } else {
#ifdef _OPENMP
        const int threads = cfg.threads > 0 ? cfg.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
        for (int r = 0; r < cfg.restarts; ++r)
            outcomes[r] = run_restart(ctx, cfg, m, r);
#else
        for (int r = 0; r < cfg.restarts; ++r)
            outcomes[r] = run_restart(ctx, cfg, m, r);
#endif
    }

    // Reduce by value with the restart index as tie break: independent of
    // thread count and monotone in the number of restarts.
    int best = 0;
    for (int r = 1; r < cfg.restarts; ++r)
        if (outcomes[r].value < outcomes[best].value)
            best = r;

    SolverResult result;
    result.value = outcomes[best].value;
    result.mode = mode;
    result.converged = outcomes[best].converged;
    for (const RestartOutcome& o : outcomes)
        if (o.value <= outcomes[best].value + 10.0 * cfg.objective_tol)
            ++result.restarts_within_tol;
    result.witness_ensemble = hjw_ensemble(spectral, Isometry(outcomes[best].isometry));
    result.witness_vector = average_schmidt_vector(result.witness_ensemble);
    return result;
}

} // namespace

SolverResult minimize_ef(const DensityMatrix& rho, const MonotoneSpec& spec,
                         const SolverConfig& cfg) {
    return minimize(rho, spec, cfg, SolverMode::EF);
}

SolverResult minimize_convex_roof(const DensityMatrix& rho, const MonotoneSpec& spec,
                                  const SolverConfig& cfg) {
    return minimize(rho, spec, cfg, SolverMode::Roof);
}

GapReport compare(const DensityMatrix& rho, const MonotoneSpec& spec, const SolverConfig& cfg,
                  double gap_tol) {
    GapReport report;
    report.gap_tol = gap_tol;
    report.ef = minimize_ef(rho, spec, cfg);
    report.roof = minimize_convex_roof(rho, spec, cfg);
    report.ef_value = report.ef.value;
    report.roof_value = report.roof.value;
    report.gap = report.ef_value - report.roof_value;
    report.gap_significant = report.gap > 10.0 * gap_tol;
    return report;
}

} // namespace entconv

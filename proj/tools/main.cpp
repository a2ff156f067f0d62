#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "entconv/io.hpp"
#include "entconv/locc.hpp"
#include "entconv/monotones.hpp"
#include "entconv/optimizer.hpp"
#include "entconv/oracles.hpp"
#include "entconv/states.hpp"

using json = nlohmann::json;
using namespace entconv;

namespace {

// Exit codes: 0 all requested checks pass, 1 check failures, 2 input errors.
constexpr int kExitChecksFailed = 1;
constexpr int kExitInputError = 2;

struct SolverFlags {
    SolverConfig cfg;

    void attach(CLI::App* cmd) {
        cmd->add_option("--restarts", cfg.restarts, "random restarts (default 64)");
        cmd->add_option("--cardinality", cfg.cardinality,
                        "ensemble size m in [rank, rank^2+4]; 0 = rank^2");
        cmd->add_option("--max-iters", cfg.max_iters, "coordinate trials per restart");
        cmd->add_option("--stall-iters", cfg.stall_iters, "convergence stall window");
        cmd->add_option("--tol", cfg.objective_tol, "objective stall tolerance");
        cmd->add_option("--step", cfg.step_scale, "initial coordinate step");
        cmd->add_option("--seed", cfg.seed, "RNG seed")->envname("ENTCONV_SEED");
        cmd->add_option("--threads", cfg.threads, "solver threads; 0 = all, 1 = serial");
    }
};

json make_report(const std::string& command, const std::string& digest, json config,
                 std::uint64_t seed, json results) {
    return {{"command", command},
            {"input_digest", digest},
            {"config", std::move(config)},
            {"seed", seed},
            {"results", std::move(results)}};
}

void emit(const json& report) {
    fmt::print("{}\n", report.dump(2));
}

PureState bell_state() {
    Eigen::VectorXcd amp = Eigen::VectorXcd::Zero(4);
    amp[0] = amp[3] = 1.0 / std::sqrt(2.0);
    return {{2, 2}, std::move(amp)};
}

PureState product_01_state() {
    Eigen::VectorXcd amp = Eigen::VectorXcd::Zero(4);
    amp[1] = 1.0;
    return {{2, 2}, std::move(amp)};
}

DensityMatrix werner_state(double p) {
    const Eigen::MatrixXcd mixed = Eigen::MatrixXcd::Identity(4, 4) / 4.0;
    return {{2, 2}, p * bell_state().projector() + (1.0 - p) * mixed};
}

DensityMatrix separable_diagonal_state(std::uint64_t seed) {
    Rng rng(seed);
    Eigen::VectorXd diag(4);
    for (int k = 0; k < 4; ++k)
        diag[k] = 0.05 + rng.uniform();
    diag /= diag.sum();
    Eigen::MatrixXcd mat = diag.cast<cxd>().asDiagonal();
    return {{2, 2}, std::move(mat)};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"entconv: operational entanglement monotones of bipartite states"};
    app.require_subcommand(1);
    int rc = 0;

    std::string state_path;
    std::string monotone_name = "entropy";
    SolverFlags solver;

    auto* schmidt_cmd = app.add_subcommand("schmidt", "Schmidt vector of a pure state file");
    schmidt_cmd->add_option("statefile", state_path)->required();
    schmidt_cmd->callback([&] {
        const LoadedState in = load_state_file(state_path);
        if (in.kind != StateKind::Pure)
            throw StateFileError(fmt::format("'{}': schmidt needs a pure state file", state_path));
        const SchmidtVector lambda = schmidt_decompose(in.pure);
        emit(make_report("schmidt", in.digest, json::object(), 0,
                         {{"schmidt_vector", schmidt_vector_json(lambda)}}));
    });

    const auto add_solver_command = [&](const std::string& name, const std::string& desc) {
        auto* cmd = app.add_subcommand(name, desc);
        cmd->add_option("statefile", state_path)->required();
        cmd->add_option("--monotone", monotone_name, "entropy | concurrence | avg_e")->required();
        solver.attach(cmd);
        return cmd;
    };

    add_solver_command("ef", "least convertible pure-state entanglement")->callback([&] {
        const LoadedState in = load_state_file(state_path);
        const SolverResult res =
            minimize_ef(in.as_density(), monotone_by_name(monotone_name), solver.cfg);
        json config = solver_config_json(solver.cfg);
        config["monotone"] = monotone_name;
        emit(make_report("ef", in.digest, std::move(config), solver.cfg.seed,
                         solver_result_json(res)));
    });

    add_solver_command("roof", "convex-roof value")->callback([&] {
        const LoadedState in = load_state_file(state_path);
        const SolverResult res =
            minimize_convex_roof(in.as_density(), monotone_by_name(monotone_name), solver.cfg);
        json config = solver_config_json(solver.cfg);
        config["monotone"] = monotone_name;
        emit(make_report("roof", in.digest, std::move(config), solver.cfg.seed,
                         solver_result_json(res)));
    });

    add_solver_command("compare", "conversion value vs convex roof gap")->callback([&] {
        const LoadedState in = load_state_file(state_path);
        const GapReport gap =
            compare(in.as_density(), monotone_by_name(monotone_name), solver.cfg);
        json config = solver_config_json(solver.cfg);
        config["monotone"] = monotone_name;
        emit(make_report("compare", in.digest, std::move(config), solver.cfg.seed,
                         {{"ef_value", gap.ef_value},
                          {"roof_value", gap.roof_value},
                          {"gap", gap.gap},
                          {"gap_significant", gap.gap_significant},
                          {"gap_tol", gap.gap_tol},
                          {"ef", solver_result_json(gap.ef)},
                          {"roof", solver_result_json(gap.roof)}}));
    });

    double eta = 0.5;
    double c1sq = 0.5;
    auto* th4_cmd = app.add_subcommand("theorem4", "closed-form value of the eta/c1 family");
    th4_cmd->add_option("--eta", eta, "mixing weight in [0,1]")->required();
    th4_cmd->add_option("--c1sq", c1sq, "|c1|^2 in [0,1]")->required();
    th4_cmd->add_option("--monotone", monotone_name)->required();
    th4_cmd->callback([&] {
        const Theorem4Params params = Theorem4Params::from_c1_squared(eta, c1sq);
        const MonotoneSpec& spec = monotone_by_name(monotone_name);
        const std::string digest =
            fnv1a_hex(fmt::format("theorem4:eta={:.17g}:c1sq={:.17g}", eta, c1sq));
        emit(make_report("theorem4", digest,
                         {{"eta", eta}, {"c1sq", c1sq}, {"monotone", monotone_name}}, 0,
                         {{"value", theorem4_value(params, spec)},
                          {"lambda_theta", schmidt_vector_json(theorem4_schmidt_vector(params))}}));
    });

    auto* wootters_cmd = app.add_subcommand("wootters", "two-qubit concurrence closed form");
    wootters_cmd->add_option("statefile", state_path)->required();
    wootters_cmd->callback([&] {
        const LoadedState in = load_state_file(state_path);
        emit(make_report("wootters", in.digest, json::object(), 0,
                         {{"concurrence", wootters_concurrence(in.as_density())}}));
    });

    int n_channels = 10;
    int n_kraus = 2;
    double slack = 5e-3;
    auto* locc_cmd =
        app.add_subcommand("locc-test", "strong monotonicity under random local channels");
    locc_cmd->add_option("statefile", state_path)->required();
    locc_cmd->add_option("--monotone", monotone_name)->required();
    locc_cmd->add_option("--channels", n_channels, "number of random channels");
    locc_cmd->add_option("--kraus", n_kraus, "Kraus operators per channel");
    locc_cmd->add_option("--slack", slack, "inequality slack");
    solver.attach(locc_cmd);
    locc_cmd->callback([&] {
        const LoadedState in = load_state_file(state_path);
        const DensityMatrix rho = in.as_density();
        const MonotoneSpec& spec = monotone_by_name(monotone_name);

        json per_channel = json::array();
        int failures = 0;
        for (int k = 0; k < n_channels; ++k) {
            const Side side = k % 2 == 0 ? Side::A : Side::B;
            const int dim = side == Side::A ? rho.dims().a : rho.dims().b;
            const LocalChannel ch =
                random_local_channel(dim, n_kraus, side, solver.cfg.seed + 7919 * (k + 1));
            const StrongMonotonicityReport rep =
                strong_monotonicity_check(rho, spec, ch, solver.cfg, slack);
            if (!rep.pass)
                ++failures;
            per_channel.push_back({{"channel", k},
                                   {"side", side == Side::A ? "A" : "B"},
                                   {"lhs", rep.lhs},
                                   {"rhs", rep.rhs},
                                   {"slack", rep.slack},
                                   {"pass", rep.pass}});
        }
        json config = solver_config_json(solver.cfg);
        config["monotone"] = monotone_name;
        config["channels"] = n_channels;
        config["kraus"] = n_kraus;
        config["slack"] = slack;
        emit(make_report("locc-test", in.digest, std::move(config), solver.cfg.seed,
                         {{"channels", n_channels},
                          {"failures", failures},
                          {"per_channel", per_channel}}));
        if (failures > 0)
            rc = kExitChecksFailed;
    });

    std::string out_dir = "fixtures";
    std::uint64_t fixtures_seed = 0;
    auto* fixtures_cmd = app.add_subcommand("fixtures", "write the standard state files");
    fixtures_cmd->add_option("--out-dir", out_dir, "target directory");
    fixtures_cmd->add_option("--seed", fixtures_seed)->envname("ENTCONV_SEED");
    fixtures_cmd->callback([&] {
        std::filesystem::create_directories(out_dir);
        json written = json::array();
        const auto put = [&](const std::string& name, const json& j) {
            const std::string path = out_dir + "/" + name;
            write_json_file(path, j);
            written.push_back(path);
        };
        put("bell.json", pure_state_json(bell_state()));
        put("product_01.json", pure_state_json(product_01_state()));
        put("werner_p0.3.json", density_matrix_json(werner_state(0.3)));
        put("werner_p0.6.json", density_matrix_json(werner_state(0.6)));
        put("werner_p0.8.json", density_matrix_json(werner_state(0.8)));
        put("theorem4_eta0.5_c0.5.json",
            density_matrix_json(theorem4_state(Theorem4Params::from_c1_squared(0.5, 0.5))));
        put("theorem4_eta0.3_c0.75.json",
            density_matrix_json(theorem4_state(Theorem4Params::from_c1_squared(0.3, 0.75))));
        put("separable_diag.json", density_matrix_json(separable_diagonal_state(fixtures_seed)));
        emit(make_report("fixtures", "", {{"out_dir", out_dir}}, fixtures_seed,
                         {{"written", written}}));
    });

    const auto start = std::chrono::steady_clock::now();
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help and friends
        app.exit(e);
        return kExitInputError;
    } catch (const std::exception& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return kExitInputError;
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    // Wall time stays out of the report JSON so identical runs stay byte-identical.
    fmt::print(stderr, "# wall time: {:.3f} s\n", elapsed.count());
    return rc;
}

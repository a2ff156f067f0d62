#include "entconv/io.hpp"

#include <fstream>
#include <sstream>

#include <fmt/format.h>

namespace entconv {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw StateFileError(fmt::format("cannot open '{}'", path));
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Eigen::VectorXcd parse_complex_vector(const nlohmann::json& data, int expected,
                                      const std::string& path) {
    if (!data.is_array() || static_cast<int>(data.size()) != expected)
        throw StateFileError(fmt::format("'{}': data must be an array of {} [re, im] pairs",
                                         path, expected));
    Eigen::VectorXcd v(expected);
    for (int i = 0; i < expected; ++i) {
        const nlohmann::json& pair = data[i];
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
            throw StateFileError(
                fmt::format("'{}': data entry {} is not an [re, im] pair", path, i));
        v[i] = cxd(pair[0].get<double>(), pair[1].get<double>());
    }
    return v;
}

nlohmann::json complex_pairs(const Eigen::VectorXcd& v) {
    nlohmann::json out = nlohmann::json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i)
        out.push_back({v[i].real(), v[i].imag()});
    return out;
}

} // namespace

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (const unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return fmt::format("{:016x}", h);
}

Dims LoadedState::dims() const {
    return kind == StateKind::Pure ? pure.dims() : density.dims();
}

DensityMatrix LoadedState::as_density() const {
    return kind == StateKind::Pure ? DensityMatrix::from_pure(pure) : density;
}

LoadedState load_state_file(const std::string& path) {
    const std::string bytes = read_file(path);

    nlohmann::json j;
    try {
        j = nlohmann::json::parse(bytes);
    } catch (const nlohmann::json::parse_error& err) {
        throw StateFileError(fmt::format("'{}' is not valid JSON: {}", path, err.what()));
    }
    if (!j.is_object() || !j.contains("dims") || !j.contains("kind") || !j.contains("data"))
        throw StateFileError(
            fmt::format("'{}': expected an object with dims, kind and data", path));
    if (!j["dims"].is_array() || j["dims"].size() != 2 || !j["dims"][0].is_number_integer() ||
        !j["dims"][1].is_number_integer())
        throw StateFileError(fmt::format("'{}': dims must be [dA, dB]", path));

    const Dims dims{j["dims"][0].get<int>(), j["dims"][1].get<int>()};
    if (dims.a < 1 || dims.b < 1)
        throw StateFileError(fmt::format("'{}': dims must be positive", path));
    const std::string kind = j["kind"].get<std::string>();

    LoadedState out;
    out.digest = fnv1a_hex(bytes);
    if (kind == "pure") {
        out.kind = StateKind::Pure;
        out.pure = PureState(dims, parse_complex_vector(j["data"], dims.total(), path));
    } else if (kind == "density") {
        out.kind = StateKind::Density;
        const int d = dims.total();
        const Eigen::VectorXcd flat = parse_complex_vector(j["data"], d * d, path);
        Eigen::MatrixXcd m(d, d);
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c)
                m(r, c) = flat[r * d + c]; // row-major
        out.density = DensityMatrix(dims, std::move(m));
    } else {
        throw StateFileError(fmt::format("'{}': kind must be \"pure\" or \"density\"", path));
    }
    return out;
}

nlohmann::json pure_state_json(const PureState& psi) {
    return {{"dims", {psi.dims().a, psi.dims().b}},
            {"kind", "pure"},
            {"data", complex_pairs(psi.amplitudes())}};
}

nlohmann::json density_matrix_json(const DensityMatrix& rho) {
    const int d = rho.total_dim();
    Eigen::VectorXcd flat(d * d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
            flat[r * d + c] = rho.matrix()(r, c);
    return {{"dims", {rho.dims().a, rho.dims().b}},
            {"kind", "density"},
            {"data", complex_pairs(flat)}};
}

void write_json_file(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw StateFileError(fmt::format("cannot write '{}'", path));
    out << j.dump(2) << '\n';
}

nlohmann::json schmidt_vector_json(const SchmidtVector& lambda) {
    nlohmann::json out = nlohmann::json::array();
    for (int i = 0; i < lambda.size(); ++i)
        out.push_back(lambda[i]);
    return out;
}

nlohmann::json ensemble_json(const Ensemble& e) {
    nlohmann::json weights = nlohmann::json::array();
    nlohmann::json states = nlohmann::json::array();
    for (int i = 0; i < e.size(); ++i) {
        weights.push_back(e.weights()[i]);
        states.push_back(complex_pairs(e.states()[i].amplitudes()));
    }
    return {{"weights", weights}, {"states", states}};
}

nlohmann::json solver_result_json(const SolverResult& result) {
    return {{"value", result.value},
            {"mode", result.mode == SolverMode::EF ? "ef" : "roof"},
            {"converged", result.converged},
            {"restarts_within_tol", result.restarts_within_tol},
            {"witness_vector", schmidt_vector_json(result.witness_vector)},
            {"witness_ensemble", ensemble_json(result.witness_ensemble)}};
}

nlohmann::json solver_config_json(const SolverConfig& cfg) {
    return {{"restarts", cfg.restarts},
            {"cardinality", cfg.cardinality},
            {"max_iters", cfg.max_iters},
            {"objective_tol", cfg.objective_tol},
            {"stall_iters", cfg.stall_iters},
            {"step_scale", cfg.step_scale},
            {"seed", cfg.seed},
            {"threads", cfg.threads}};
}

} // namespace entconv

#pragma once

#include <string>

#include <json.hpp>

#include "entconv/decompositions.hpp"
#include "entconv/optimizer.hpp"
#include "entconv/states.hpp"

namespace entconv {

/// Raised on malformed state files (bad JSON, wrong schema). State-invariant
/// violations surface as std::invalid_argument from the type constructors.
struct StateFileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class StateKind { Pure, Density };

struct LoadedState {
    StateKind kind = StateKind::Pure;
    PureState pure;        // set when kind == Pure
    DensityMatrix density; // set when kind == Density
    std::string digest;    // fnv1a-64 of the file bytes, hex

    Dims dims() const;
    /// The density matrix either way (projector for pure inputs).
    DensityMatrix as_density() const;
};

LoadedState load_state_file(const std::string& path);

nlohmann::json pure_state_json(const PureState& psi);
nlohmann::json density_matrix_json(const DensityMatrix& rho);
void write_json_file(const std::string& path, const nlohmann::json& j);

std::string fnv1a_hex(const std::string& bytes);

nlohmann::json schmidt_vector_json(const SchmidtVector& lambda);
nlohmann::json ensemble_json(const Ensemble& e);
nlohmann::json solver_result_json(const SolverResult& result);
nlohmann::json solver_config_json(const SolverConfig& cfg);

} // namespace entconv

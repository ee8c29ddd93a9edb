#pragma once

#include "gsamp/graph.hpp"
#include "gsamp/reduction.hpp"
#include "gsamp/sampling.hpp"

#include "json.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gsamp::experiment {

/// Generator name plus parameters, or an edge-list file.
struct GraphSpec {
    std::string generator = "path";  ///< path ring grid complete comet community random_regular sensor edge_list
    std::size_t n = 0;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t degree = 0;         ///< random_regular
    std::size_t center_degree = 0;  ///< comet
    std::size_t communities = 0;    ///< community
    double p_in = 0.3;
    double p_out = 0.01;
    std::size_t k_nearest = 6;  ///< sensor
    std::uint64_t seed = 0;     ///< generator seed, added to the run seed
    std::string edges;          ///< edge_list: path of the edge-list CSV
    std::string coordinates;    ///< edge_list: optional coordinates CSV
};

/// How the reduced graph G1 is obtained from G0.
struct ReductionSpec {
    /// every_other | kron_polarity | kron_keep | generate
    std::string kind = "every_other";
    std::size_t rate = 2;                    ///< every_other; pyramid rate
    std::optional<std::size_t> target_size;  ///< kron_polarity; empty means the polarity count
    double sparsify_ratio = 0.0;             ///< kron_polarity
    std::size_t keep_first = 0;              ///< kron_keep: keep vertices 0..keep_first-1
    std::optional<GraphSpec> target;         ///< generate
};

struct SignalSpec {
    /// bandlimited_random | delta_spectrum | constant | decaying_spectrum |
    /// spectrum_block | cluster_band | coordinate_field
    std::string kind = "bandlimited_random";
    std::size_t cutoff = 0;  ///< bandlimited_random: coefficients with index < cutoff are drawn
    std::size_t index = 0;   ///< delta_spectrum
    double value = 1.0;      ///< constant
    double scale = 12.0;     ///< decaying_spectrum: exp(-k / scale)
    double noise = 0.2;      ///< decaying_spectrum: relative N(0,1) perturbation
    std::size_t count = 0;   ///< spectrum_block: number of leading unit coefficients
    std::optional<std::uint64_t> ordering_seed;      ///< spectrum_block: basis shuffled within eigenvalue groups
    std::vector<std::pair<double, double>> bands;  ///< cluster_band
};

struct OperationSpec {
    /// downsample | upsample | fractional_downsample | fractional_upsample | pyramid
    std::string kind = "downsample";
    /// GD1 GD2 GD2' GD3 GD3' (down) or GU1 GU2 GU2' GU3 GU3' (up)
    std::vector<std::string> operators;
    std::size_t rate = 0;      ///< integer rate for downsample / upsample
    std::size_t low_band = 0;  ///< report energy injected into output indices < low_band
    bool alias_split = false;  ///< report main / aliasing energies of GD2 and GD2'
    std::size_t levels = 3;                ///< pyramid
    std::vector<std::string> schemes;      ///< pyramid: vertex index spectrum
    std::vector<double> fractions;         ///< pyramid NLA fractions
    std::string filter = "exact";          ///< pyramid: exact | chebyshev
    int chebyshev_order = 30;
};

struct ExperimentConfig {
    std::string name;
    GraphSpec graph;
    ReductionSpec reduction;
    SignalSpec signal;
    OperationSpec operation;
    std::uint64_t seed = 0;
};

ExperimentConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const ExperimentConfig& config);
ExperimentConfig load_config(const std::filesystem::path& path);

std::vector<std::string> list_presets();
/// invalid-parameter listing the available names for an unknown preset.
ExperimentConfig preset(const std::string& name);

/// Dry-run checks (sizes, rates, operator names) without eigendecomposition.
/// Returns every problem found; empty means valid.
std::vector<std::string> validate_config(const ExperimentConfig& config);

struct RunResult {
    std::vector<std::string> files;  ///< relative to the output directory, in emission order
    nlohmann::json scalars;
};

/// Writes all artifacts plus manifest.json into out_dir (created if needed).
RunResult run_experiment(const ExperimentConfig& config, const std::filesystem::path& out_dir);

Graph build_graph(const GraphSpec& spec, std::uint64_t run_seed);

/// Energies of the main and aliasing parts of index-domain downsampling,
/// restricted to each of two vertex clusters of the reduced graph.
struct ClusterEnergies {
    std::array<double, 2> main{};
    std::array<double, 2> alias{};
};
/// clusters are given on G0; reduced vertex n belongs to the cluster of corr[n].
ClusterEnergies cluster_split_energies(const SamplingContext& ctx, const GraphSignal& f,
                                       const VertexCorrespondence& corr,
                                       const std::array<VertexSet, 2>& clusters, bool folded);

/// Lowercase hex SHA-256 of a file's bytes.
std::string sha256_file(const std::filesystem::path& path);

}  // namespace gsamp::experiment

#pragma once

#include "gsamp/graph.hpp"
#include "gsamp/sampling.hpp"
#include "gsamp/spectral.hpp"

#include <cstddef>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

namespace gsamp {

enum class FilterMode { exact, chebyshev };

/// Spectral response h(lambda) and how to apply it.
struct FilterSpec {
    std::function<double(double)> response;
    FilterMode mode = FilterMode::exact;
    int order = 30;  ///< Chebyshev polynomial degree

    static FilterSpec identity(FilterMode mode = FilterMode::exact, int order = 30);
    /// h(lambda) = 1 / (1 + 2 lambda).
    static FilterSpec rational_lowpass(FilterMode mode = FilterMode::exact, int order = 30);
};

/// U diag(h(lambda)) U^T f.
GraphSignal filter_exact(const SpectralBasis& basis, const GraphSignal& f, const std::function<double(double)>& response);

/// Chebyshev coefficients c_0..c_K of h on [0, lambda_max] (c_0 not halved).
Eigen::VectorXd chebyshev_coefficients(const std::function<double(double)>& response, double lambda_max, int order);

/// Degree-K Chebyshev approximation of h(L) f via the three-term recurrence
/// on the shifted Laplacian; needs only matrix-vector products with L.
GraphSignal filter_chebyshev(const Laplacian& laplacian, double lambda_max, const GraphSignal& f,
                             const std::function<double(double)>& response, int order);

/// Dispatches on spec.mode. The basis supplies lambda_max in Chebyshev mode.
GraphSignal filter(const SpectralBasis& basis, const Laplacian& laplacian, const GraphSignal& f, const FilterSpec& spec);

/// Sampling pair used at every pyramid level.
enum class SamplingScheme {
    vertex,           ///< GD1 / GU1
    index_folded,     ///< GD2' / GU2'
    spectrum_folded,  ///< GD3' / GU3'
};

enum class ReductionStrategy {
    /// Largest-eigenvector polarity selection, Kron reduction, then sparsification.
    kron_polarity,
    /// Stride selection on path / ring / grid, next level regenerated from the same family.
    structured,
};

struct PyramidConfig {
    SamplingScheme scheme = SamplingScheme::index_folded;
    FilterSpec analysis = FilterSpec::rational_lowpass();
    FilterSpec synthesis = FilterSpec::rational_lowpass();
    ReductionStrategy reduction = ReductionStrategy::kron_polarity;
    double sparsify_ratio = 0.05;
    /// Vertex-count reduction per level (a perfect square for structured grids).
    std::size_t rate = 2;
};

struct PyramidLevel {
    Graph graph;
    Laplacian laplacian;
    std::shared_ptr<const SpectralBasis> basis;
    /// Where the vertices of the next coarser level sit in this one; empty on the coarsest level.
    std::optional<VertexCorrespondence> coarser;
};

/// Graph chain G^(0) ... G^(J) shared by every decomposition built on it.
struct PyramidGeometry {
    std::vector<PyramidLevel> levels;

    std::size_t depth() const noexcept { return levels.empty() ? 0 : levels.size() - 1; }
};

std::shared_ptr<const PyramidGeometry> build_pyramid_geometry(const Graph& graph, std::size_t num_levels,
                                                              const PyramidConfig& config);

struct PyramidDecomposition {
    std::shared_ptr<const PyramidGeometry> geometry;
    std::vector<GraphSignal> details;  ///< prediction errors y^(0) .. y^(J-1)
    GraphSignal coarse;                ///< f^(J)
    PyramidConfig config;

    std::size_t num_levels() const noexcept { return details.size(); }
    std::size_t detail_coefficient_count() const;
};

PyramidDecomposition analyze(std::shared_ptr<const PyramidGeometry> geometry, const GraphSignal& f,
                             const PyramidConfig& config);
PyramidDecomposition analyze(const Graph& graph, const GraphSignal& f, std::size_t num_levels,
                             const PyramidConfig& config);

GraphSignal synthesize(const PyramidDecomposition& decomposition);

/// Keeps the coarse band and the n_kept largest-magnitude detail coefficients
/// pooled over all levels; ties go to the lower (level, index).
PyramidDecomposition nonlinear_approximate(const PyramidDecomposition& decomposition, std::size_t n_kept);

struct NlaPoint {
    double fraction;
    double error;  ///< ||f - f_pred|| / ||f||
};

/// N_kept = round(fraction * |V0|), capped at the number of detail coefficients.
std::vector<NlaPoint> nla_error_curve(const PyramidDecomposition& decomposition, const GraphSignal& f,
                                      const std::vector<double>& fractions);
std::vector<NlaPoint> nla_error_curve(const Graph& graph, const GraphSignal& f, std::size_t num_levels,
                                      const PyramidConfig& config, const std::vector<double>& fractions);

/// CSV `index,value`.
void save_band_csv(const GraphSignal& band, const std::filesystem::path& path);
/// CSV `fraction,error`.
void save_nla_csv(const std::vector<NlaPoint>& curve, const std::filesystem::path& path);

}  // namespace gsamp

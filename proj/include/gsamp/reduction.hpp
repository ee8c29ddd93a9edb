#pragma once

#include "gsamp/graph.hpp"
#include "gsamp/sampling.hpp"
#include "gsamp/spectral.hpp"

#include <array>
#include <cstddef>
#include <filesystem>
#include <utility>
#include <vector>

namespace gsamp {

using VertexSet = std::vector<std::size_t>;

struct ReductionResult {
    Graph graph;
    VertexCorrespondence correspondence;
    /// Kept vertices of the original graph, ascending; kept[i] is reduced vertex i.
    VertexSet kept;
};

/// Schur complement of the Laplacian onto `keep`:
/// L_SS - L_SC L_CC^{-1} L_CS, returned as a graph on the kept vertices.
/// Duplicates in `keep` are ignored. Coordinates of kept vertices carry over.
ReductionResult kron_reduce(const Graph& graph, const VertexSet& keep);

/// Drops edges lighter than threshold_ratio * (heaviest edge). If that splits
/// the graph, the heaviest dropped edges joining different components are put
/// back until it is connected again.
Graph sparsify(const Graph& graph, double threshold_ratio);

/// Stride selection for structured generators: path and ring keep indices that
/// are multiples of M; a grid with M = s*s keeps vertices whose row and column
/// are both multiples of s.
VertexSet select_every_other(const Graph& graph, std::size_t m);

/// select_every_other, with the reduced graph regenerated from the same
/// family (path, ring or grid of the reduced size) instead of Kron-reduced.
ReductionResult reduce_structured(const Graph& graph, std::size_t m);

/// Vertices ranked by their entry in the eigenvector of the largest
/// eigenvalue (descending, ties by index); the first target_size are returned
/// in ascending order. For target_size equal to the positive count this is the
/// positive-polarity set.
VertexSet select_polarity(const SpectralBasis& basis, std::size_t target_size);

/// Number of vertices with a nonnegative (within 1e-10) entry in the
/// eigenvector of the largest eigenvalue.
std::size_t polarity_count(const SpectralBasis& basis);

/// Sign split of the Fiedler vector; entries >= 0 (within 1e-10) go to cluster 0.
std::array<VertexSet, 2> spectral_bisection(const SpectralBasis& basis);

/// f = sum_j f_j / ||f_j||_inf with f_j the cluster-j restriction of the sum of
/// eigenvectors whose eigenvalues lie in bands[j] (inclusive). One band per cluster.
GraphSignal make_cluster_band_signal(const SpectralBasis& basis, const std::vector<VertexSet>& clusters,
                                     const std::vector<std::pair<double, double>>& bands);

/// Cluster label per vertex; vertices outside every cluster get -1.
std::vector<int> cluster_labels(std::size_t vertex_count, const std::vector<VertexSet>& clusters);

/// CSV `vertex,cluster`.
void save_clusters_csv(const std::vector<int>& labels, const std::filesystem::path& path);

}  // namespace gsamp

#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <vector>

namespace gsamp {

using GraphSignal = Eigen::VectorXd;

/// Generator family a graph came from. Structured families keep their vertex
/// order meaningful, which vertex selection by stride relies on.
enum class Topology {
    unknown,
    path,
    ring,
    grid,
    complete,
    comet,
    community,
    random_regular,
    sensor,
};

struct GraphMeta {
    Topology topology = Topology::unknown;
    std::size_t rows = 0;  ///< grid only
    std::size_t cols = 0;  ///< grid only
    /// Block label per vertex (community generator); empty otherwise.
    std::vector<int> groups;
};

/// Undirected weighted graph without self-loops, stored as a dense symmetric
/// adjacency matrix. Immutable once constructed.
class Graph {
public:
    /// Throws invalid-parameter if the adjacency is not square, not symmetric,
    /// has a nonzero diagonal, or carries negative or non-finite weights.
    explicit Graph(Eigen::MatrixXd adjacency, GraphMeta meta = {},
                   std::optional<Eigen::MatrixXd> coordinates = std::nullopt);

    std::size_t size() const noexcept { return static_cast<std::size_t>(adjacency_.rows()); }
    const Eigen::MatrixXd& adjacency() const noexcept { return adjacency_; }
    double weight(std::size_t m, std::size_t n) const
    {
        return adjacency_(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n));
    }
    const GraphMeta& meta() const noexcept { return meta_; }
    const std::optional<Eigen::MatrixXd>& coordinates() const noexcept { return coordinates_; }

    std::size_t edge_count() const;
    Eigen::VectorXd degrees() const;
    bool is_connected() const;
    /// Component label per vertex, labels numbered from 0 in order of first vertex.
    std::vector<int> components() const;

    Graph with_meta(GraphMeta meta) const;

private:
    Eigen::MatrixXd adjacency_;
    GraphMeta meta_;
    std::optional<Eigen::MatrixXd> coordinates_;
};

/// Combinatorial Laplacian L = D - A.
class Laplacian {
public:
    const Eigen::MatrixXd& matrix() const noexcept { return matrix_; }
    std::size_t size() const noexcept { return static_cast<std::size_t>(matrix_.rows()); }

    /// Wraps an existing matrix after checking symmetry and zero row sums.
    static Laplacian from_matrix(Eigen::MatrixXd matrix);

private:
    explicit Laplacian(Eigen::MatrixXd matrix) : matrix_(std::move(matrix)) {}
    friend Laplacian laplacian(const Graph& graph);

    Eigen::MatrixXd matrix_;
};

Laplacian laplacian(const Graph& graph);

}  // namespace gsamp

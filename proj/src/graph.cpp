#include "gsamp/graph.hpp"

#include "gsamp/error.hpp"

#include <cmath>
#include <string>

namespace gsamp {

Graph::Graph(Eigen::MatrixXd adjacency, GraphMeta meta, std::optional<Eigen::MatrixXd> coordinates)
    : adjacency_(std::move(adjacency)), meta_(std::move(meta)), coordinates_(std::move(coordinates))
{
    const Eigen::Index n = adjacency_.rows();
    require(n > 0, "graph must have at least one vertex");
    require(adjacency_.cols() == n, "adjacency must be square");
    for (Eigen::Index i = 0; i < n; ++i) {
        require(adjacency_(i, i) == 0.0,
                "self-loop at vertex " + std::to_string(i));
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double w = adjacency_(i, j);
            require(std::isfinite(w) && w >= 0.0,
                    "edge (" + std::to_string(i) + "," + std::to_string(j) + ") has invalid weight");
            require(w == adjacency_(j, i),
                    "adjacency not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
    }
    if (coordinates_) {
        require(coordinates_->rows() == n, "coordinate rows must match vertex count");
    }
    if (!meta_.groups.empty()) {
        require(static_cast<Eigen::Index>(meta_.groups.size()) == n, "group labels must match vertex count");
    }
    if (meta_.topology == Topology::grid) {
        require(static_cast<Eigen::Index>(meta_.rows * meta_.cols) == n, "grid shape must match vertex count");
    }
}

std::size_t Graph::edge_count() const
{
    std::size_t count = 0;
    const Eigen::Index n = adjacency_.rows();
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            if (adjacency_(i, j) > 0.0) {
                ++count;
            }
        }
    }
    return count;
}

Eigen::VectorXd Graph::degrees() const
{
    return adjacency_.rowwise().sum();
}

std::vector<int> Graph::components() const
{
    const auto n = static_cast<Eigen::Index>(size());
    std::vector<int> label(static_cast<std::size_t>(n), -1);
    std::vector<Eigen::Index> stack;
    int next = 0;
    for (Eigen::Index s = 0; s < n; ++s) {
        if (label[static_cast<std::size_t>(s)] >= 0) {
            continue;
        }
        label[static_cast<std::size_t>(s)] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            const Eigen::Index v = stack.back();
            stack.pop_back();
            for (Eigen::Index u = 0; u < n; ++u) {
                if (adjacency_(v, u) > 0.0 && label[static_cast<std::size_t>(u)] < 0) {
                    label[static_cast<std::size_t>(u)] = next;
                    stack.push_back(u);
                }
            }
        }
        ++next;
    }
    return label;
}

bool Graph::is_connected() const
{
    for (int c : components()) {
        if (c != 0) {
            return false;
        }
    }
    return true;
}

Graph Graph::with_meta(GraphMeta meta) const
{
    return Graph(adjacency_, std::move(meta), coordinates_);
}

Laplacian Laplacian::from_matrix(Eigen::MatrixXd matrix)
{
    const Eigen::Index n = matrix.rows();
    require(n > 0 && matrix.cols() == n, "Laplacian must be a nonempty square matrix");
    const double scale = std::max(1.0, matrix.cwiseAbs().maxCoeff());
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            require(std::abs(matrix(i, j) - matrix(j, i)) <= 1e-12 * scale, "Laplacian must be symmetric");
        }
        require(std::abs(matrix.row(i).sum()) <= 1e-9 * scale,
                "Laplacian row " + std::to_string(i) + " does not sum to zero");
    }
    return Laplacian(std::move(matrix));
}

Laplacian laplacian(const Graph& graph)
{
    const Eigen::MatrixXd& a = graph.adjacency();
    Eigen::MatrixXd l = -a;
    l.diagonal() = a.rowwise().sum();
    return Laplacian(std::move(l));
}

}  // namespace gsamp

#include "gsamp/reduction.hpp"

#include "gsamp/error.hpp"
#include "gsamp/generators.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <string>
#include <tuple>

namespace gsamp {

namespace {

Eigen::MatrixXd take(const Eigen::MatrixXd& m, const VertexSet& rows, const VertexSet& cols)
{
    Eigen::MatrixXd out(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                m(static_cast<Eigen::Index>(rows[i]), static_cast<Eigen::Index>(cols[j]));
        }
    }
    return out;
}

struct DisjointSets {
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    std::size_t find(std::size_t v)
    {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    }

    bool unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a == b) {
            return false;
        }
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    }

    std::vector<std::size_t> parent;
};

}  // namespace

ReductionResult kron_reduce(const Graph& graph, const VertexSet& keep)
{
    const std::size_t n = graph.size();
    VertexSet kept = keep;
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    require(!kept.empty(), "kron_reduce: keep set is empty");
    require(kept.back() < n, "kron_reduce: keep set references a missing vertex");
    require(kept.size() < n, "kron_reduce: keep set must be a proper subset");

    std::vector<bool> is_kept(n, false);
    for (std::size_t v : kept) {
        is_kept[v] = true;
    }
    VertexSet eliminated;
    for (std::size_t v = 0; v < n; ++v) {
        if (!is_kept[v]) {
            eliminated.push_back(v);
        }
    }

    // A component without kept vertices makes the eliminated block singular.
    const std::vector<int> component = graph.components();
    std::vector<bool> anchored(n, false);
    for (std::size_t v : kept) {
        anchored[static_cast<std::size_t>(component[v])] = true;
    }
    for (std::size_t v : eliminated) {
        if (!anchored[static_cast<std::size_t>(component[v])]) {
            fail(ErrorKind::numeric_error, "kron_reduce: eliminated block is singular (component without kept vertices)");
        }
    }

    const Laplacian lap = laplacian(graph);
    const Eigen::MatrixXd& l = lap.matrix();
    const Eigen::MatrixXd l_ss = take(l, kept, kept);
    const Eigen::MatrixXd l_sc = take(l, kept, eliminated);
    const Eigen::MatrixXd l_cc = take(l, eliminated, eliminated);

    const Eigen::LLT<Eigen::MatrixXd> chol(l_cc);
    if (chol.info() != Eigen::Success) {
        fail(ErrorKind::numeric_error, "kron_reduce: eliminated block is not positive definite");
    }
    Eigen::MatrixXd reduced = l_ss - l_sc * chol.solve(l_sc.transpose());
    reduced = 0.5 * (reduced + reduced.transpose()).eval();

    const double scale = std::max(1.0, l.cwiseAbs().maxCoeff());
    const double snap = 1e-10 * scale;
    Eigen::MatrixXd adjacency = -reduced;
    adjacency.diagonal().setZero();
    for (Eigen::Index i = 0; i < adjacency.rows(); ++i) {
        for (Eigen::Index j = 0; j < adjacency.cols(); ++j) {
            double& w = adjacency(i, j);
            if (std::abs(w) <= snap) {
                w = 0.0;
            } else if (w < 0.0) {
                fail(ErrorKind::numeric_error, "kron_reduce: negative reduced edge weight " + std::to_string(w));
            }
        }
    }

    std::optional<Eigen::MatrixXd> coords;
    if (graph.coordinates()) {
        Eigen::MatrixXd xy(static_cast<Eigen::Index>(kept.size()), graph.coordinates()->cols());
        for (std::size_t i = 0; i < kept.size(); ++i) {
            xy.row(static_cast<Eigen::Index>(i)) = graph.coordinates()->row(static_cast<Eigen::Index>(kept[i]));
        }
        coords = std::move(xy);
    }

    Graph reduced_graph(std::move(adjacency), GraphMeta{}, std::move(coords));
    VertexCorrespondence corr(kept, n);
    return ReductionResult{std::move(reduced_graph), std::move(corr), std::move(kept)};
}

Graph sparsify(const Graph& graph, double threshold_ratio)
{
    require(threshold_ratio >= 0.0 && threshold_ratio < 1.0, "sparsify: threshold_ratio must be in [0, 1)");
    const auto n = static_cast<Eigen::Index>(graph.size());
    const Eigen::MatrixXd& a = graph.adjacency();
    const double max_weight = a.maxCoeff();
    if (threshold_ratio == 0.0 || max_weight <= 0.0) {
        return graph;
    }
    const double threshold = threshold_ratio * max_weight;

    Eigen::MatrixXd kept = a;
    std::vector<std::tuple<double, Eigen::Index, Eigen::Index>> dropped;
    DisjointSets sets(graph.size());
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double w = a(i, j);
            if (w <= 0.0) {
                continue;
            }
            if (w < threshold) {
                kept(i, j) = 0.0;
                kept(j, i) = 0.0;
                dropped.emplace_back(w, i, j);
            } else {
                sets.unite(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
            }
        }
    }

    // Heaviest first; ties resolved by vertex pair so the result is deterministic.
    std::sort(dropped.begin(), dropped.end(), [](const auto& x, const auto& y) {
        if (std::get<0>(x) != std::get<0>(y)) {
            return std::get<0>(x) > std::get<0>(y);
        }
        return std::tie(std::get<1>(x), std::get<2>(x)) < std::tie(std::get<1>(y), std::get<2>(y));
    });
    for (const auto& [w, i, j] : dropped) {
        if (sets.unite(static_cast<std::size_t>(i), static_cast<std::size_t>(j))) {
            kept(i, j) = w;
            kept(j, i) = w;
        }
    }
    return Graph(std::move(kept), graph.meta(), graph.coordinates());
}

VertexSet select_every_other(const Graph& graph, std::size_t m)
{
    require(m >= 1, "select_every_other: M must be >= 1");
    VertexSet out;
    const GraphMeta& meta = graph.meta();
    switch (meta.topology) {
    case Topology::path:
    case Topology::ring:
        for (std::size_t v = 0; v < graph.size(); v += m) {
            out.push_back(v);
        }
        return out;
    case Topology::grid: {
        const auto stride = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(m))));
        require(stride * stride == m, "select_every_other: grid rate must be a perfect square");
        for (std::size_t r = 0; r < meta.rows; r += stride) {
            for (std::size_t c = 0; c < meta.cols; c += stride) {
                out.push_back(r * meta.cols + c);
            }
        }
        return out;
    }
    default:
        fail(ErrorKind::invalid_parameter, "select_every_other: graph has no path, ring or grid structure");
    }
}

ReductionResult reduce_structured(const Graph& graph, std::size_t m)
{
    VertexSet kept = select_every_other(graph, m);
    const GraphMeta& meta = graph.meta();
    VertexCorrespondence corr(kept, graph.size());
    switch (meta.topology) {
    case Topology::path:
        return {build_path(kept.size()), std::move(corr), std::move(kept)};
    case Topology::ring:
        return {build_ring(kept.size()), std::move(corr), std::move(kept)};
    default: {
        const auto stride = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(m))));
        const std::size_t rows = (meta.rows + stride - 1) / stride;
        const std::size_t cols = (meta.cols + stride - 1) / stride;
        return {build_grid(rows, cols), std::move(corr), std::move(kept)};
    }
    }
}

std::size_t polarity_count(const SpectralBasis& basis)
{
    const Eigen::VectorXd top = basis.eigenvectors.col(static_cast<Eigen::Index>(basis.size() - 1));
    return static_cast<std::size_t>((top.array() >= -1e-10).count());
}

VertexSet select_polarity(const SpectralBasis& basis, std::size_t target_size)
{
    const std::size_t n = basis.size();
    require(target_size >= 1 && target_size < n, "select_polarity: target size must be in [1, N)");
    const Eigen::VectorXd top = basis.eigenvectors.col(static_cast<Eigen::Index>(n - 1));
    VertexSet order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return top(static_cast<Eigen::Index>(a)) > top(static_cast<Eigen::Index>(b));
    });
    order.resize(target_size);
    std::sort(order.begin(), order.end());
    return order;
}

std::array<VertexSet, 2> spectral_bisection(const SpectralBasis& basis)
{
    require(basis.size() >= 2, "spectral_bisection: graph needs at least two vertices");
    require(basis.eigenvalues(1) > basis.tie_tolerance(), "spectral_bisection: graph is disconnected");
    const Eigen::VectorXd fiedler = basis.eigenvectors.col(1);
    std::array<VertexSet, 2> clusters;
    VertexSet zero;
    for (Eigen::Index v = 0; v < fiedler.size(); ++v) {
        const auto vv = static_cast<std::size_t>(v);
        if (std::abs(fiedler(v)) <= 1e-10) {
            zero.push_back(vv);
        } else {
            clusters[fiedler(v) > 0.0 ? 0 : 1].push_back(vv);
        }
    }
    // vertices on the nodal set go to whichever side is smaller
    for (std::size_t v : zero) {
        auto& side = clusters[clusters[0].size() <= clusters[1].size() ? 0 : 1];
        side.insert(std::upper_bound(side.begin(), side.end(), v), v);
    }
    return clusters;
}

GraphSignal make_cluster_band_signal(const SpectralBasis& basis, const std::vector<VertexSet>& clusters,
                                     const std::vector<std::pair<double, double>>& bands)
{
    require(!clusters.empty() && clusters.size() == bands.size(), "cluster band signal needs one band per cluster");
    const auto n = static_cast<Eigen::Index>(basis.size());
    const double upper = basis.lambda_max() + basis.tie_tolerance();
    GraphSignal f = GraphSignal::Zero(n);
    for (std::size_t j = 0; j < clusters.size(); ++j) {
        const auto [low, high] = bands[j];
        require(low >= 0.0 && low <= high && high <= upper,
                "band " + std::to_string(j) + " must satisfy 0 <= low <= high <= lambda_max");
        GraphSignal band = GraphSignal::Zero(n);
        int members = 0;
        for (Eigen::Index k = 0; k < n; ++k) {
            if (basis.eigenvalues(k) >= low && basis.eigenvalues(k) <= high) {
                band += basis.eigenvectors.col(k);
                ++members;
            }
        }
        require(members > 0, "band " + std::to_string(j) + " contains no eigenvalue");
        GraphSignal part = GraphSignal::Zero(n);
        for (std::size_t v : clusters[j]) {
            require(v < basis.size(), "cluster references a missing vertex");
            part(static_cast<Eigen::Index>(v)) = band(static_cast<Eigen::Index>(v));
        }
        const double peak = part.cwiseAbs().maxCoeff();
        require(peak > 0.0, "cluster " + std::to_string(j) + " signal vanishes on its band");
        f += part / peak;
    }
    return f;
}

std::vector<int> cluster_labels(std::size_t vertex_count, const std::vector<VertexSet>& clusters)
{
    std::vector<int> labels(vertex_count, -1);
    for (std::size_t j = 0; j < clusters.size(); ++j) {
        for (std::size_t v : clusters[j]) {
            require(v < vertex_count, "cluster references a missing vertex");
            labels[v] = static_cast<int>(j);
        }
    }
    return labels;
}

void save_clusters_csv(const std::vector<int>& labels, const std::filesystem::path& path)
{
    std::ofstream out(path);
    if (!out) {
        fail(ErrorKind::io_error, "cannot write " + path.string());
    }
    out << "vertex,cluster\n";
    for (std::size_t v = 0; v < labels.size(); ++v) {
        out << v << ',' << labels[v] << '\n';
    }
}

}  // namespace gsamp

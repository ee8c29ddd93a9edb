#include "gsamp/generators.hpp"

#include "gsamp/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>

namespace gsamp {

namespace {

constexpr int kMaxRetries = 1000;

void connect(Eigen::MatrixXd& a, std::size_t i, std::size_t j, double w = 1.0)
{
    const auto ii = static_cast<Eigen::Index>(i);
    const auto jj = static_cast<Eigen::Index>(j);
    a(ii, jj) = w;
    a(jj, ii) = w;
}

Eigen::MatrixXd zeros(std::size_t n)
{
    const auto nn = static_cast<Eigen::Index>(n);
    return Eigen::MatrixXd::Zero(nn, nn);
}

}  // namespace

Graph build_path(std::size_t n)
{
    require(n >= 2, "path needs n >= 2");
    Eigen::MatrixXd a = zeros(n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        connect(a, i, i + 1);
    }
    return Graph(std::move(a), GraphMeta{Topology::path, 0, 0, {}});
}

Graph build_ring(std::size_t n)
{
    require(n >= 3, "ring needs n >= 3");
    Eigen::MatrixXd a = zeros(n);
    for (std::size_t i = 0; i < n; ++i) {
        connect(a, i, (i + 1) % n);
    }
    return Graph(std::move(a), GraphMeta{Topology::ring, 0, 0, {}});
}

Graph build_grid(std::size_t rows, std::size_t cols)
{
    require(rows >= 1 && cols >= 1 && rows * cols >= 2, "grid needs at least two vertices");
    const std::size_t n = rows * cols;
    Eigen::MatrixXd a = zeros(n);
    Eigen::MatrixXd xy(static_cast<Eigen::Index>(n), 2);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            const std::size_t v = r * cols + c;
            xy(static_cast<Eigen::Index>(v), 0) = static_cast<double>(c) / static_cast<double>(cols);
            xy(static_cast<Eigen::Index>(v), 1) = static_cast<double>(r) / static_cast<double>(rows);
            if (c + 1 < cols) {
                connect(a, v, v + 1);
            }
            if (r + 1 < rows) {
                connect(a, v, v + cols);
            }
        }
    }
    GraphMeta meta{Topology::grid, rows, cols, {}};
    return Graph(std::move(a), std::move(meta), std::move(xy));
}

Graph build_complete(std::size_t n)
{
    require(n >= 2, "complete graph needs n >= 2");
    const auto nn = static_cast<Eigen::Index>(n);
    Eigen::MatrixXd a = Eigen::MatrixXd::Ones(nn, nn);
    a.diagonal().setZero();
    return Graph(std::move(a), GraphMeta{Topology::complete, 0, 0, {}});
}

Graph build_comet(std::size_t n, std::size_t center_degree)
{
    require(center_degree >= 1, "comet needs center_degree >= 1");
    require(center_degree < n, "comet center_degree must be < n");
    Eigen::MatrixXd a = zeros(n);
    for (std::size_t leaf = 1; leaf <= center_degree; ++leaf) {
        connect(a, 0, leaf);
    }
    for (std::size_t v = center_degree; v + 1 < n; ++v) {
        connect(a, v, v + 1);
    }
    return Graph(std::move(a), GraphMeta{Topology::comet, 0, 0, {}});
}

Graph build_community(std::size_t n, std::size_t k_communities, double p_in, double p_out, std::uint64_t seed)
{
    require(k_communities >= 1 && k_communities <= n, "community count must be in [1, n]");
    require(p_in > 0.0 && p_in <= 1.0, "p_in must be in (0, 1]");
    require(p_out >= 0.0 && p_out <= 1.0, "p_out must be in [0, 1]");

    std::vector<int> group(n);
    const std::size_t base = n / k_communities;
    const std::size_t extra = n % k_communities;
    std::size_t v = 0;
    for (std::size_t c = 0; c < k_communities; ++c) {
        const std::size_t count = base + (c < extra ? 1 : 0);
        for (std::size_t i = 0; i < count; ++i) {
            group[v++] = static_cast<int>(c);
        }
    }

    for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
        std::mt19937_64 rng(seed + static_cast<std::uint64_t>(attempt));
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        Eigen::MatrixXd a = zeros(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                const double p = group[i] == group[j] ? p_in : p_out;
                if (unit(rng) < p) {
                    connect(a, i, j);
                }
            }
        }
        Graph g(std::move(a), GraphMeta{Topology::community, 0, 0, group});
        if (g.is_connected()) {
            return g;
        }
    }
    fail(ErrorKind::generation_failure, "community graph stayed disconnected after retries");
}

namespace {

using Edge = std::pair<std::size_t, std::size_t>;

bool has_suitable_pair(const std::set<Edge>& edges, const std::map<std::size_t, int>& pending)
{
    if (pending.empty()) {
        return true;
    }
    for (auto it = pending.begin(); it != pending.end(); ++it) {
        for (auto jt = std::next(it); jt != pending.end(); ++jt) {
            if (!edges.contains({it->first, jt->first})) {
                return true;
            }
        }
    }
    return false;
}

std::optional<std::set<Edge>> try_pairing(std::size_t n, std::size_t degree, std::mt19937_64& rng)
{
    std::set<Edge> edges;
    std::vector<std::size_t> stubs;
    stubs.reserve(n * degree);
    for (std::size_t d = 0; d < degree; ++d) {
        for (std::size_t v = 0; v < n; ++v) {
            stubs.push_back(v);
        }
    }
    while (!stubs.empty()) {
        std::map<std::size_t, int> pending;
        std::shuffle(stubs.begin(), stubs.end(), rng);
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            auto [s1, s2] = std::minmax(stubs[i], stubs[i + 1]);
            if (s1 != s2 && !edges.contains({s1, s2})) {
                edges.insert({s1, s2});
            } else {
                ++pending[s1];
                ++pending[s2];
            }
        }
        if (!has_suitable_pair(edges, pending)) {
            return std::nullopt;
        }
        stubs.clear();
        for (const auto& [v, count] : pending) {
            stubs.insert(stubs.end(), static_cast<std::size_t>(count), v);
        }
    }
    return edges;
}

}  // namespace

Graph build_random_regular(std::size_t n, std::size_t degree, std::uint64_t seed)
{
    require(degree >= 1, "random regular degree must be >= 1");
    require(degree < n, "random regular degree must be < n");
    require((n * degree) % 2 == 0, "n * degree must be even");

    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
        if (auto edges = try_pairing(n, degree, rng)) {
            Eigen::MatrixXd a = zeros(n);
            for (const auto& [i, j] : *edges) {
                connect(a, i, j);
            }
            return Graph(std::move(a), GraphMeta{Topology::random_regular, 0, 0, {}});
        }
    }
    fail(ErrorKind::generation_failure, "random regular pairing failed after " + std::to_string(kMaxRetries) + " retries");
}

Graph build_random_sensor(std::size_t n, std::size_t k_nearest, std::uint64_t seed)
{
    require(n >= 2, "sensor graph needs n >= 2");
    require(k_nearest >= 1 && k_nearest < n, "k_nearest must be in [1, n)");
    const auto nn = static_cast<Eigen::Index>(n);

    for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
        std::mt19937_64 rng(seed + static_cast<std::uint64_t>(attempt));
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        Eigen::MatrixXd xy(nn, 2);
        for (Eigen::Index i = 0; i < nn; ++i) {
            xy(i, 0) = unit(rng);
            xy(i, 1) = unit(rng);
        }

        std::vector<std::vector<std::pair<double, Eigen::Index>>> knn(n);
        double distance_sum = 0.0;
        for (Eigen::Index i = 0; i < nn; ++i) {
            std::vector<std::pair<double, Eigen::Index>> d;
            d.reserve(n - 1);
            for (Eigen::Index j = 0; j < nn; ++j) {
                if (j != i) {
                    d.emplace_back((xy.row(i) - xy.row(j)).norm(), j);
                }
            }
            std::partial_sort(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(k_nearest), d.end());
            d.resize(k_nearest);
            for (const auto& [dist, j] : d) {
                distance_sum += dist;
            }
            knn[static_cast<std::size_t>(i)] = std::move(d);
        }
        const double sigma = distance_sum / static_cast<double>(n * k_nearest);
        require(sigma > 0.0, "sensor points coincide");

        Eigen::MatrixXd a = zeros(n);
        for (Eigen::Index i = 0; i < nn; ++i) {
            for (const auto& [dist, j] : knn[static_cast<std::size_t>(i)]) {
                const double w = std::exp(-dist * dist / (2.0 * sigma * sigma));
                a(i, j) = w;
                a(j, i) = w;
            }
        }
        Graph g(std::move(a), GraphMeta{Topology::sensor, 0, 0, {}}, std::move(xy));
        if (g.is_connected()) {
            return g;
        }
    }
    fail(ErrorKind::generation_failure, "sensor graph stayed disconnected after retries");
}

}  // namespace gsamp

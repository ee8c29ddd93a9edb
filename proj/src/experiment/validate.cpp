#include "gsamp/edge_list.hpp"
#include "gsamp/error.hpp"
#include "gsamp/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace gsamp::experiment {

namespace {

const std::set<std::string> kDown = {"GD1", "GD2", "GD2'", "GD3", "GD3'"};
const std::set<std::string> kUp = {"GU1", "GU2", "GU2'", "GU3", "GU3'"};
const std::set<std::string> kSchemes = {"vertex", "index", "spectrum"};

class Checker {
public:
    void check(bool ok, const std::string& msg)
    {
        if (!ok) {
            problems.push_back(msg);
        }
    }
    std::vector<std::string> problems;
};

std::optional<std::size_t> graph_size(const GraphSpec& g, const std::string& where, Checker& c)
{
    const std::string& gen = g.generator;
    if (gen == "grid") {
        c.check(g.rows >= 1 && g.cols >= 1 && g.rows * g.cols >= 2, where + ": grid needs rows, cols >= 1 and 2+ vertices");
        return g.rows * g.cols;
    }
    if (gen == "edge_list") {
        if (g.edges.empty()) {
            c.check(false, where + ": edge_list needs 'edges'");
            return std::nullopt;
        }
        try {
            return load_edge_list(g.edges).size();
        } catch (const Error& e) {
            c.check(false, where + ": " + e.what());
            return std::nullopt;
        }
    }
    const std::size_t n = g.n;
    if (gen == "path" || gen == "complete") {
        c.check(n >= 2, where + ": " + gen + " needs n >= 2");
    } else if (gen == "ring") {
        c.check(n >= 3, where + ": ring needs n >= 3");
    } else if (gen == "comet") {
        c.check(g.center_degree >= 1 && g.center_degree < n, where + ": comet needs 1 <= center_degree < n");
    } else if (gen == "community") {
        c.check(g.communities >= 1 && g.communities <= n, where + ": community needs 1 <= communities <= n");
        c.check(g.p_in > 0.0 && g.p_in <= 1.0 && g.p_out >= 0.0 && g.p_out <= 1.0,
                where + ": community probabilities out of range");
    } else if (gen == "random_regular") {
        c.check(g.degree >= 1 && g.degree < n && (n * g.degree) % 2 == 0,
                where + ": random_regular needs 1 <= degree < n and n * degree even");
    } else if (gen == "sensor") {
        c.check(n >= 2 && g.k_nearest >= 1 && g.k_nearest < n, where + ": sensor needs n >= 2, 1 <= k_nearest < n");
    } else {
        c.check(false, where + ": unknown generator '" + gen + "'");
        return std::nullopt;
    }
    return n;
}

bool has_structure(const GraphSpec& g)
{
    return g.generator == "path" || g.generator == "ring" || g.generator == "grid";
}

bool has_coordinates(const GraphSpec& g)
{
    return g.generator == "grid" || g.generator == "sensor" || (g.generator == "edge_list" && !g.coordinates.empty());
}

std::optional<std::size_t> reduced_size(const ExperimentConfig& cfg, std::optional<std::size_t> n0, Checker& c)
{
    const ReductionSpec& r = cfg.reduction;
    if (r.kind == "every_other") {
        c.check(r.rate >= 1, "reduction: rate must be >= 1");
        c.check(has_structure(cfg.graph), "reduction: every_other needs a path, ring or grid graph");
        if (!n0 || r.rate == 0 || !has_structure(cfg.graph)) {
            return std::nullopt;
        }
        if (cfg.graph.generator == "grid") {
            const auto s = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(r.rate))));
            c.check(s * s == r.rate, "reduction: grid rate must be a perfect square");
            return ((cfg.graph.rows + s - 1) / s) * ((cfg.graph.cols + s - 1) / s);
        }
        return (*n0 + r.rate - 1) / r.rate;
    }
    if (r.kind == "kron_polarity") {
        c.check(r.sparsify_ratio >= 0.0 && r.sparsify_ratio < 1.0, "reduction: sparsify_ratio must be in [0, 1)");
        if (r.target_size && n0) {
            c.check(*r.target_size >= 1 && *r.target_size < *n0, "reduction: target_size must be in [1, N)");
        }
        return r.target_size;
    }
    if (r.kind == "kron_keep") {
        if (n0) {
            c.check(r.keep_first >= 1 && r.keep_first < *n0, "reduction: keep_first must be in [1, N)");
        }
        return r.keep_first;
    }
    if (r.kind == "generate") {
        if (!r.target) {
            c.check(false, "reduction: generate needs 'target'");
            return std::nullopt;
        }
        return graph_size(*r.target, "reduction.target", c);
    }
    c.check(false, "reduction: unknown kind '" + r.kind + "'");
    return std::nullopt;
}

void check_signal(const SignalSpec& s, std::optional<std::size_t> n, const ExperimentConfig& cfg, bool on_source,
                  Checker& c)
{
    if (s.kind == "bandlimited_random") {
        c.check(s.cutoff >= 1, "signal: cutoff must be >= 1");
        if (n) {
            c.check(s.cutoff <= *n, "signal: cutoff exceeds the graph size " + std::to_string(*n));
        }
    } else if (s.kind == "delta_spectrum") {
        if (n) {
            c.check(s.index < *n, "signal: index must be < " + std::to_string(*n));
        }
    } else if (s.kind == "spectrum_block") {
        c.check(s.count >= 1, "signal: count must be >= 1");
        if (n) {
            c.check(s.count <= *n, "signal: count exceeds the graph size " + std::to_string(*n));
        }
    } else if (s.kind == "decaying_spectrum") {
        c.check(s.scale > 0.0, "signal: scale must be > 0");
    } else if (s.kind == "cluster_band") {
        c.check(on_source, "signal: cluster_band lives on the original graph");
        c.check(s.bands.size() == 2, "signal: cluster_band needs exactly two bands");
        for (const auto& [lo, hi] : s.bands) {
            c.check(lo <= hi, "signal: band bounds must satisfy low <= high");
        }
    } else if (s.kind == "coordinate_field") {
        c.check(on_source && has_coordinates(cfg.graph), "signal: coordinate_field needs a graph with coordinates");
    } else if (s.kind != "constant") {
        c.check(false, "signal: unknown kind '" + s.kind + "'");
    }
}

}  // namespace

std::vector<std::string> validate_config(const ExperimentConfig& cfg)
{
    Checker c;
    const auto n0 = graph_size(cfg.graph, "graph", c);
    const OperationSpec& op = cfg.operation;

    if (op.kind == "pyramid") {
        c.check(cfg.reduction.kind == "every_other" || cfg.reduction.kind == "kron_polarity",
                "reduction: pyramid needs every_other or kron_polarity");
        c.check(cfg.reduction.rate >= 2, "reduction: pyramid rate must be >= 2");
        if (cfg.reduction.kind == "every_other") {
            c.check(has_structure(cfg.graph), "reduction: every_other needs a path, ring or grid graph");
        }
        c.check(cfg.reduction.sparsify_ratio >= 0.0 && cfg.reduction.sparsify_ratio < 1.0,
                "reduction: sparsify_ratio must be in [0, 1)");
        c.check(op.levels >= 1, "operation: levels must be >= 1");
        c.check(!op.schemes.empty(), "operation: schemes must not be empty");
        for (const auto& s : op.schemes) {
            c.check(kSchemes.contains(s), "operation: unknown scheme '" + s + "' (vertex, index, spectrum)");
        }
        for (double f : op.fractions) {
            c.check(f >= 0.0 && f <= 1.0, "operation: fractions must lie in [0, 1]");
        }
        c.check(op.filter == "exact" || op.filter == "chebyshev", "operation: filter must be exact or chebyshev");
        c.check(op.chebyshev_order >= 0, "operation: chebyshev_order must be >= 0");
        if (n0) {
            std::size_t n = *n0;
            for (std::size_t j = 0; j < op.levels && cfg.reduction.rate >= 2; ++j) {
                if (n <= cfg.reduction.rate) {
                    c.check(false, "operation: graph too small for " + std::to_string(op.levels) + " levels");
                    break;
                }
                n = (n + cfg.reduction.rate - 1) / cfg.reduction.rate;
            }
        }
        check_signal(cfg.signal, n0, cfg, true, c);
        return c.problems;
    }

    const auto n1 = reduced_size(cfg, n0, c);
    const bool down = op.kind == "downsample" || op.kind == "fractional_downsample";
    const bool up = op.kind == "upsample" || op.kind == "fractional_upsample";
    if (!down && !up) {
        c.check(false, "operation: unknown kind '" + op.kind + "'");
        return c.problems;
    }
    c.check(!op.operators.empty(), "operation: operators must not be empty");
    const auto& allowed = down ? kDown : kUp;
    for (const auto& name : op.operators) {
        c.check(allowed.contains(name), "operation: operator '" + name + "' does not fit " + op.kind);
        if (name == "GD1" || name == "GU1") {
            c.check(cfg.reduction.kind != "generate", "operation: " + name + " needs a vertex correspondence");
        }
    }
    if (n0 && n1) {
        c.check(*n1 <= *n0, "reduction: reduced graph is larger than the original");
    }
    if (op.kind == "downsample" || op.kind == "upsample") {
        c.check(op.rate >= 1, "operation: rate must be >= 1");
        if (n0 && op.rate >= 1) {
            if (*n0 % op.rate != 0) {
                c.check(false, "operation: rate " + std::to_string(op.rate) + " does not divide N = " +
                                   std::to_string(*n0));
            } else if (n1) {
                c.check(*n1 * op.rate == *n0, "operation: reduced size " + std::to_string(*n1) + " is not N / rate = " +
                                                   std::to_string(*n0 / op.rate));
            }
        }
    }
    if (op.alias_split) {
        c.check(down, "operation: alias_split needs a downsampling operation");
        c.check(std::any_of(op.operators.begin(), op.operators.end(),
                            [](const std::string& s) { return s == "GD2" || s == "GD2'"; }),
                "operation: alias_split needs GD2 or GD2'");
    }
    if (cfg.signal.kind == "cluster_band") {
        c.check(cfg.reduction.kind != "generate", "signal: cluster_band reports need a vertex correspondence");
    }
    if (n1 && op.low_band > 0) {
        c.check(op.low_band <= (down ? *n1 : n0.value_or(op.low_band)), "operation: low_band exceeds the output size");
    }
    check_signal(cfg.signal, down ? n0 : n1, cfg, down, c);
    return c.problems;
}

}  // namespace gsamp::experiment

#include "gsamp/error.hpp"
#include "gsamp/experiment.hpp"

#include <functional>
#include <map>

namespace gsamp::experiment {

namespace {

GraphSpec generated(const std::string& generator, std::size_t n)
{
    GraphSpec g;
    g.generator = generator;
    g.n = n;
    return g;
}

ExperimentConfig base(const std::string& name, GraphSpec graph)
{
    ExperimentConfig c;
    c.name = name;
    c.graph = std::move(graph);
    return c;
}

ExperimentConfig path_downsample()
{
    ExperimentConfig c = base("path-downsample", generated("path", 100));
    c.reduction.rate = 2;
    c.signal.cutoff = 50;
    c.operation.kind = "downsample";
    c.operation.rate = 2;
    c.operation.operators = {"GD1", "GD2", "GD2'", "GD3", "GD3'"};
    return c;
}

ExperimentConfig path_upsample()
{
    ExperimentConfig c = base("path-upsample", generated("path", 100));
    c.reduction.rate = 2;
    c.signal.cutoff = 25;
    c.operation.kind = "upsample";
    c.operation.rate = 2;
    c.operation.operators = {"GU1", "GU2", "GU2'", "GU3", "GU3'"};
    return c;
}

ExperimentConfig grid_downsample()
{
    GraphSpec g;
    g.generator = "grid";
    g.rows = 16;
    g.cols = 16;
    ExperimentConfig c = base("grid-downsample", g);
    c.reduction.rate = 4;
    c.signal.cutoff = 64;
    c.operation.kind = "downsample";
    c.operation.rate = 4;
    c.operation.operators = {"GD1", "GD2", "GD2'", "GD3", "GD3'"};
    return c;
}

ExperimentConfig random_regular_downsample()
{
    GraphSpec g = generated("random_regular", 100);
    g.degree = 10;
    ExperimentConfig c = base("random-regular-downsample", g);
    c.reduction.kind = "kron_polarity";
    c.reduction.target_size = 50;
    c.signal.cutoff = 50;
    c.operation.kind = "downsample";
    c.operation.rate = 2;
    c.operation.operators = {"GD1", "GD2", "GD2'", "GD3", "GD3'"};
    return c;
}

ExperimentConfig aliasing_path()
{
    ExperimentConfig c = base("aliasing-path", generated("path", 100));
    c.reduction.rate = 2;
    c.signal.kind = "decaying_spectrum";
    c.signal.scale = 12.0;
    c.signal.noise = 0.2;
    c.operation.kind = "downsample";
    c.operation.rate = 2;
    c.operation.operators = {"GD2", "GD2'"};
    c.operation.low_band = 5;
    c.operation.alias_split = true;
    return c;
}

ExperimentConfig repeated(const std::string& name, std::optional<std::uint64_t> ordering_seed)
{
    ExperimentConfig c = base(name, generated("complete", 100));
    c.reduction.kind = "kron_keep";
    c.reduction.keep_first = 52;
    c.signal.kind = "spectrum_block";
    c.signal.count = 50;
    c.signal.ordering_seed = ordering_seed;
    c.operation.kind = "fractional_downsample";
    c.operation.operators = {"GD2"};
    c.operation.alias_split = true;
    return c;
}

ExperimentConfig repeated_gd3()
{
    ExperimentConfig c = base("repeated-eigenvalues-gd3", generated("complete", 100));
    c.reduction.kind = "kron_keep";
    c.reduction.keep_first = 52;
    c.signal.kind = "delta_spectrum";
    c.signal.index = 0;
    c.operation.kind = "fractional_downsample";
    c.operation.operators = {"GD3", "GD3'"};
    return c;
}

ExperimentConfig community_fractional()
{
    GraphSpec g = generated("community", 256);
    g.communities = 8;
    GraphSpec t = g;
    t.n = 192;
    t.seed = 1;
    ExperimentConfig c = base("community-fractional", g);
    c.reduction.kind = "generate";
    c.reduction.target = t;
    c.signal.cutoff = 8;
    c.operation.kind = "fractional_downsample";
    c.operation.operators = {"GD2", "GD2'", "GD3", "GD3'"};
    return c;
}

ExperimentConfig comet_fractional()
{
    GraphSpec g = generated("comet", 32);
    g.center_degree = 12;
    GraphSpec t = generated("comet", 24);
    t.center_degree = 9;
    ExperimentConfig c = base("comet-fractional", g);
    c.reduction.kind = "generate";
    c.reduction.target = t;
    c.signal.cutoff = 8;
    c.operation.kind = "fractional_downsample";
    c.operation.operators = {"GD2", "GD2'", "GD3", "GD3'"};
    return c;
}

ExperimentConfig minnesota_energy()
{
    GraphSpec g;
    g.generator = "edge_list";
    ExperimentConfig c = base("minnesota-energy", g);
    c.reduction.kind = "kron_polarity";
    c.signal.kind = "cluster_band";
    c.signal.bands = {{0.06, 0.08}, {3.5, 4.0}};
    c.operation.kind = "fractional_downsample";
    c.operation.operators = {"GD2"};
    c.operation.alias_split = true;
    return c;
}

ExperimentConfig pyramid(const std::string& name, GraphSpec g, const std::string& reduction, std::size_t rate)
{
    ExperimentConfig c = base(name, std::move(g));
    c.reduction.kind = reduction;
    c.reduction.rate = rate;
    c.reduction.sparsify_ratio = reduction == "kron_polarity" ? 0.05 : 0.0;
    c.signal.kind = "coordinate_field";
    c.operation.kind = "pyramid";
    c.operation.levels = 3;
    c.operation.schemes = {"vertex", "index", "spectrum"};
    c.operation.fractions = {0.0, 0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.45, 0.5};
    c.operation.filter = "chebyshev";
    return c;
}

const std::map<std::string, std::function<ExperimentConfig()>>& registry()
{
    static const std::map<std::string, std::function<ExperimentConfig()>> presets = {
        {"path-downsample", path_downsample},
        {"path-upsample", path_upsample},
        {"grid-downsample", grid_downsample},
        {"random-regular-downsample", random_regular_downsample},
        {"aliasing-path", aliasing_path},
        {"repeated-eigenvalues", [] { return repeated("repeated-eigenvalues", 1); }},
        {"repeated-eigenvalues-ordered", [] { return repeated("repeated-eigenvalues-ordered", std::nullopt); }},
        {"repeated-eigenvalues-gd3", repeated_gd3},
        {"community-fractional", community_fractional},
        {"comet-fractional", comet_fractional},
        {"minnesota-energy", minnesota_energy},
        {"pyramid-sensor",
         [] {
             GraphSpec g = generated("sensor", 128);
             return pyramid("pyramid-sensor", g, "kron_polarity", 2);
         }},
        {"pyramid-grid",
         [] {
             GraphSpec g;
             g.generator = "grid";
             g.rows = 16;
             g.cols = 16;
             return pyramid("pyramid-grid", g, "every_other", 4);
         }},
    };
    return presets;
}

}  // namespace

std::vector<std::string> list_presets()
{
    std::vector<std::string> names;
    for (const auto& [name, make] : registry()) {
        names.push_back(name);
    }
    return names;
}

ExperimentConfig preset(const std::string& name)
{
    const auto& presets = registry();
    const auto it = presets.find(name);
    if (it == presets.end()) {
        std::string msg = "unknown preset '" + name + "'; available:";
        for (const auto& [known, make] : presets) {
            msg += " " + known;
        }
        fail(ErrorKind::invalid_parameter, msg);
    }
    return it->second();
}

}  // namespace gsamp::experiment

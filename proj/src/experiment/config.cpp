#include "gsamp/error.hpp"
#include "gsamp/experiment.hpp"

#include <algorithm>
#include <fstream>
#include <set>

namespace gsamp::experiment {

namespace {

using nlohmann::json;

// Collects schema violations so they can be reported together.
class Reader {
public:
    explicit Reader(std::vector<std::string>& problems) : problems_(problems) {}

    template <typename T>
    void field(const json& obj, const std::string& where, const char* key, T& out)
    {
        if (!obj.contains(key)) {
            return;
        }
        try {
            out = obj.at(key).get<T>();
        } catch (const json::exception&) {
            problems_.push_back(where + "." + key + ": wrong type (got " + obj.at(key).type_name() + ")");
        }
    }

    template <typename T>
    void field(const json& obj, const std::string& where, const char* key, std::optional<T>& out)
    {
        if (!obj.contains(key) || obj.at(key).is_null()) {
            return;
        }
        T value{};
        field(obj, where, key, value);
        out = value;
    }

    bool object(const json& obj, const std::string& where, std::initializer_list<const char*> allowed)
    {
        if (!obj.is_object()) {
            problems_.push_back(where + ": expected an object");
            return false;
        }
        const std::set<std::string> keys(allowed.begin(), allowed.end());
        for (const auto& [key, value] : obj.items()) {
            if (!keys.contains(key)) {
                problems_.push_back(where + ": unknown key '" + key + "'");
            }
        }
        return true;
    }

private:
    std::vector<std::string>& problems_;
};

GraphSpec read_graph(Reader& r, const json& j, const std::string& where)
{
    GraphSpec g;
    if (!r.object(j, where,
                  {"generator", "n", "rows", "cols", "degree", "center_degree", "communities", "p_in", "p_out",
                   "k_nearest", "seed", "edges", "coordinates"})) {
        return g;
    }
    r.field(j, where, "generator", g.generator);
    r.field(j, where, "n", g.n);
    r.field(j, where, "rows", g.rows);
    r.field(j, where, "cols", g.cols);
    r.field(j, where, "degree", g.degree);
    r.field(j, where, "center_degree", g.center_degree);
    r.field(j, where, "communities", g.communities);
    r.field(j, where, "p_in", g.p_in);
    r.field(j, where, "p_out", g.p_out);
    r.field(j, where, "k_nearest", g.k_nearest);
    r.field(j, where, "seed", g.seed);
    r.field(j, where, "edges", g.edges);
    r.field(j, where, "coordinates", g.coordinates);
    return g;
}

json write_graph(const GraphSpec& g)
{
    json j{{"generator", g.generator}};
    const std::string& gen = g.generator;
    if (gen == "grid") {
        j["rows"] = g.rows;
        j["cols"] = g.cols;
    } else if (gen == "edge_list") {
        j["edges"] = g.edges;
        if (!g.coordinates.empty()) {
            j["coordinates"] = g.coordinates;
        }
    } else {
        j["n"] = g.n;
    }
    if (gen == "comet") {
        j["center_degree"] = g.center_degree;
    }
    if (gen == "random_regular") {
        j["degree"] = g.degree;
    }
    if (gen == "community") {
        j["communities"] = g.communities;
        j["p_in"] = g.p_in;
        j["p_out"] = g.p_out;
    }
    if (gen == "sensor") {
        j["k_nearest"] = g.k_nearest;
    }
    if (gen == "community" || gen == "random_regular" || gen == "sensor") {
        j["seed"] = g.seed;
    }
    return j;
}

}  // namespace

ExperimentConfig config_from_json(const json& j)
{
    std::vector<std::string> problems;
    Reader r(problems);
    ExperimentConfig c;
    if (r.object(j, "config", {"name", "graph", "reduction", "signal", "operation", "seed"})) {
        r.field(j, "config", "name", c.name);
        r.field(j, "config", "seed", c.seed);
        if (j.contains("graph")) {
            c.graph = read_graph(r, j.at("graph"), "graph");
        } else {
            problems.push_back("config: missing 'graph'");
        }
        if (j.contains("reduction")) {
            const json& red = j.at("reduction");
            if (r.object(red, "reduction",
                         {"kind", "rate", "target_size", "sparsify_ratio", "keep_first", "target"})) {
                r.field(red, "reduction", "kind", c.reduction.kind);
                r.field(red, "reduction", "rate", c.reduction.rate);
                r.field(red, "reduction", "target_size", c.reduction.target_size);
                r.field(red, "reduction", "sparsify_ratio", c.reduction.sparsify_ratio);
                r.field(red, "reduction", "keep_first", c.reduction.keep_first);
                if (red.contains("target")) {
                    c.reduction.target = read_graph(r, red.at("target"), "reduction.target");
                }
            }
        }
        if (j.contains("signal")) {
            const json& s = j.at("signal");
            if (r.object(s, "signal",
                         {"kind", "cutoff", "index", "value", "scale", "noise", "count", "ordering_seed", "bands"})) {
                r.field(s, "signal", "kind", c.signal.kind);
                r.field(s, "signal", "cutoff", c.signal.cutoff);
                r.field(s, "signal", "index", c.signal.index);
                r.field(s, "signal", "value", c.signal.value);
                r.field(s, "signal", "scale", c.signal.scale);
                r.field(s, "signal", "noise", c.signal.noise);
                r.field(s, "signal", "count", c.signal.count);
                r.field(s, "signal", "ordering_seed", c.signal.ordering_seed);
                r.field(s, "signal", "bands", c.signal.bands);
            }
        }
        if (j.contains("operation")) {
            const json& o = j.at("operation");
            if (r.object(o, "operation",
                         {"kind", "operators", "rate", "low_band", "alias_split", "levels", "schemes", "fractions",
                          "filter", "chebyshev_order"})) {
                r.field(o, "operation", "kind", c.operation.kind);
                r.field(o, "operation", "operators", c.operation.operators);
                r.field(o, "operation", "rate", c.operation.rate);
                r.field(o, "operation", "low_band", c.operation.low_band);
                r.field(o, "operation", "alias_split", c.operation.alias_split);
                r.field(o, "operation", "levels", c.operation.levels);
                r.field(o, "operation", "schemes", c.operation.schemes);
                r.field(o, "operation", "fractions", c.operation.fractions);
                r.field(o, "operation", "filter", c.operation.filter);
                r.field(o, "operation", "chebyshev_order", c.operation.chebyshev_order);
            }
        } else {
            problems.push_back("config: missing 'operation'");
        }
    }
    if (!problems.empty()) {
        std::string msg = "invalid config";
        for (const auto& p : problems) {
            msg += "\n  " + p;
        }
        fail(ErrorKind::parse_error, msg);
    }
    return c;
}

json config_to_json(const ExperimentConfig& c)
{
    json red{{"kind", c.reduction.kind}};
    if (c.reduction.kind == "every_other" || c.operation.kind == "pyramid") {
        red["rate"] = c.reduction.rate;
    }
    if (c.reduction.kind == "kron_polarity") {
        red["target_size"] = c.reduction.target_size ? json(*c.reduction.target_size) : json(nullptr);
        red["sparsify_ratio"] = c.reduction.sparsify_ratio;
    }
    if (c.reduction.kind == "kron_keep") {
        red["keep_first"] = c.reduction.keep_first;
    }
    if (c.reduction.target) {
        red["target"] = write_graph(*c.reduction.target);
    }

    const SignalSpec& s = c.signal;
    json sig{{"kind", s.kind}};
    if (s.kind == "bandlimited_random") {
        sig["cutoff"] = s.cutoff;
    } else if (s.kind == "delta_spectrum") {
        sig["index"] = s.index;
    } else if (s.kind == "constant") {
        sig["value"] = s.value;
    } else if (s.kind == "decaying_spectrum") {
        sig["scale"] = s.scale;
        sig["noise"] = s.noise;
    } else if (s.kind == "spectrum_block") {
        sig["count"] = s.count;
        sig["ordering_seed"] = s.ordering_seed ? json(*s.ordering_seed) : json(nullptr);
    } else if (s.kind == "cluster_band") {
        sig["bands"] = s.bands;
    }

    const OperationSpec& o = c.operation;
    json op{{"kind", o.kind}};
    if (o.kind == "pyramid") {
        op["levels"] = o.levels;
        op["schemes"] = o.schemes;
        op["fractions"] = o.fractions;
        op["filter"] = o.filter;
        op["chebyshev_order"] = o.chebyshev_order;
    } else {
        op["operators"] = o.operators;
        if (o.kind == "downsample" || o.kind == "upsample") {
            op["rate"] = o.rate;
        }
        op["low_band"] = o.low_band;
        op["alias_split"] = o.alias_split;
    }
    return json{{"name", c.name},         {"seed", c.seed}, {"graph", write_graph(c.graph)},
                {"reduction", red},       {"signal", sig},  {"operation", op}};
}

ExperimentConfig load_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        fail(ErrorKind::io_error, "cannot open config " + path.string());
    }
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        fail(ErrorKind::parse_error, path.string() + ": " + e.what());
    }
    return config_from_json(j);
}

}  // namespace gsamp::experiment

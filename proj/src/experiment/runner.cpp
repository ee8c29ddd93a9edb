#include "gsamp/edge_list.hpp"
#include "gsamp/error.hpp"
#include "gsamp/experiment.hpp"
#include "gsamp/generators.hpp"
#include "gsamp/pyramid.hpp"
#include "gsamp/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>

namespace gsamp::experiment {

namespace {

using nlohmann::json;

struct Side {
    std::shared_ptr<const Graph> graph;
    std::shared_ptr<const Laplacian> laplacian;
    std::shared_ptr<const SpectralBasis> basis;
};

Side make_side(Graph g)
{
    auto graph = std::make_shared<const Graph>(std::move(g));
    auto l = std::make_shared<const Laplacian>(laplacian(*graph));
    auto basis = std::make_shared<const SpectralBasis>(eigendecompose(*l));
    return {graph, l, basis};
}

class Artifacts {
public:
    explicit Artifacts(std::filesystem::path dir) : dir_(std::move(dir)) {}

    std::filesystem::path next(const std::string& name)
    {
        files_.push_back(name);
        return dir_ / name;
    }

    void signal(const std::string& name, const GraphSignal& f)
    {
        std::ofstream out(next(name));
        if (!out) {
            fail(ErrorKind::io_error, "cannot write " + (dir_ / name).string());
        }
        out.precision(17);
        out << "vertex,value\n";
        for (Eigen::Index i = 0; i < f.size(); ++i) {
            out << i << ',' << f(i) << '\n';
        }
    }

    void spectrum(const std::string& name, const SpectralBasis& basis, const GraphSignal& f)
    {
        save_spectrum_csv(gft(basis, f), next(name));
    }

    const std::vector<std::string>& files() const noexcept { return files_; }
    const std::filesystem::path& dir() const noexcept { return dir_; }

private:
    std::filesystem::path dir_;
    std::vector<std::string> files_;
};

std::string tag(const std::string& op)
{
    std::string out;
    for (char ch : op) {
        out += ch == '\'' ? 'p' : static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    }
    return out;
}

// Deterministic N(0,1) stream built on mt19937_64 and Box-Muller, so outputs
// do not depend on the standard library's distribution implementation.
class Normal {
public:
    explicit Normal(std::uint64_t seed) : rng_(seed) {}

    double operator()()
    {
        if (spare_) {
            const double v = *spare_;
            spare_.reset();
            return v;
        }
        const double u1 = (static_cast<double>(rng_() >> 11) + 1.0) * 0x1.0p-53;
        const double u2 = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
        const double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(2.0 * M_PI * u2);
        return r * std::cos(2.0 * M_PI * u2);
    }

private:
    std::mt19937_64 rng_;
    std::optional<double> spare_;
};

// Smooth ramp plus a step across y = 0.5.
GraphSignal coordinate_field(const Graph& g)
{
    if (!g.coordinates()) {
        fail(ErrorKind::invalid_parameter, "coordinate_field needs vertex coordinates");
    }
    const Eigen::MatrixXd& xy = *g.coordinates();
    GraphSignal f(xy.rows());
    for (Eigen::Index i = 0; i < xy.rows(); ++i) {
        const double x = xy(i, 0);
        const double y = xy(i, 1);
        f(i) = x + y + (y >= 0.5 ? 1.0 : 0.0);
    }
    return f;
}

GraphSignal make_signal(const SignalSpec& s, const Side& side, std::uint64_t seed,
                        std::optional<std::array<VertexSet, 2>>& clusters)
{
    const SpectralBasis& basis = *side.basis;
    const auto n = static_cast<Eigen::Index>(basis.size());
    Eigen::VectorXd coeffs = Eigen::VectorXd::Zero(n);
    if (s.kind == "bandlimited_random") {
        Normal normal(seed);
        for (Eigen::Index k = 0; k < static_cast<Eigen::Index>(s.cutoff); ++k) {
            coeffs(k) = normal();
        }
        return igft(basis, coeffs);
    }
    if (s.kind == "delta_spectrum") {
        coeffs(static_cast<Eigen::Index>(s.index)) = 1.0;
        return igft(basis, coeffs);
    }
    if (s.kind == "constant") {
        return GraphSignal::Constant(n, s.value);
    }
    if (s.kind == "decaying_spectrum") {
        Normal normal(seed);
        for (Eigen::Index k = 0; k < n; ++k) {
            coeffs(k) = std::exp(-static_cast<double>(k) / s.scale) * (1.0 + s.noise * normal());
        }
        return igft(basis, coeffs);
    }
    if (s.kind == "spectrum_block") {
        coeffs.head(static_cast<Eigen::Index>(s.count)).setOnes();
        if (s.ordering_seed) {
            return igft(eigendecompose(*side.laplacian, *s.ordering_seed), coeffs);
        }
        return igft(basis, coeffs);
    }
    if (s.kind == "cluster_band") {
        clusters = spectral_bisection(basis);
        return make_cluster_band_signal(basis, {(*clusters)[0], (*clusters)[1]}, s.bands);
    }
    if (s.kind == "coordinate_field") {
        return coordinate_field(*side.graph);
    }
    fail(ErrorKind::invalid_parameter, "unknown signal kind '" + s.kind + "'");
}

struct Reduced {
    Side side;
    std::optional<VertexCorrespondence> corr;
};

Reduced reduce(const ExperimentConfig& cfg, const Side& g0, std::uint64_t seed)
{
    const ReductionSpec& r = cfg.reduction;
    if (r.kind == "every_other") {
        ReductionResult res = reduce_structured(*g0.graph, r.rate);
        return {make_side(std::move(res.graph)), std::move(res.correspondence)};
    }
    if (r.kind == "kron_polarity") {
        const std::size_t target = r.target_size.value_or(polarity_count(*g0.basis));
        ReductionResult res = kron_reduce(*g0.graph, select_polarity(*g0.basis, target));
        Graph g = r.sparsify_ratio > 0.0 ? sparsify(res.graph, r.sparsify_ratio) : std::move(res.graph);
        return {make_side(std::move(g)), std::move(res.correspondence)};
    }
    if (r.kind == "kron_keep") {
        VertexSet keep(r.keep_first);
        for (std::size_t i = 0; i < keep.size(); ++i) {
            keep[i] = i;
        }
        ReductionResult res = kron_reduce(*g0.graph, keep);
        return {make_side(std::move(res.graph)), std::move(res.correspondence)};
    }
    if (r.kind == "generate" && r.target) {
        return {make_side(build_graph(*r.target, seed)), std::nullopt};
    }
    fail(ErrorKind::invalid_parameter, "unknown reduction kind '" + r.kind + "'");
}

double energy(const Eigen::VectorXd& v)
{
    return v.squaredNorm();
}

GraphSignal apply_down(const std::string& op, const ExperimentConfig& cfg, const SamplingContext& ctx,
                       const std::optional<VertexCorrespondence>& corr, const GraphSignal& f)
{
    const bool folded = op.back() == '\'';
    const bool integer = cfg.operation.kind == "downsample";
    if (op == "GD1") {
        return vertex_downsample(f, *corr);
    }
    if (op.starts_with("GD2")) {
        return integer ? spectral_downsample_index(ctx, f, cfg.operation.rate, folded)
                       : fractional_downsample(ctx, f, SpectralMode::index, folded);
    }
    return integer ? spectral_downsample_spectrum(ctx, f, cfg.operation.rate, folded)
                   : fractional_downsample(ctx, f, SpectralMode::spectrum, folded);
}

GraphSignal apply_up(const std::string& op, const ExperimentConfig& cfg, const SamplingContext& ctx,
                     const std::optional<VertexCorrespondence>& corr, const GraphSignal& f, std::size_t n0)
{
    const bool folded = op.back() == '\'';
    const bool integer = cfg.operation.kind == "upsample";
    if (op == "GU1") {
        return vertex_upsample(f, *corr, n0);
    }
    if (op.starts_with("GU2")) {
        return integer ? spectral_upsample_index(ctx, f, cfg.operation.rate, folded)
                       : fractional_upsample(ctx, f, SpectralMode::index, folded);
    }
    return integer ? spectral_upsample_spectrum(ctx, f, cfg.operation.rate, folded)
                   : fractional_upsample(ctx, f, SpectralMode::spectrum, folded);
}

double community_sign_agreement(const Graph& g0, const GraphSignal& f0, const Graph& g1, const GraphSignal& f1)
{
    const auto& a = g0.meta().groups;
    const auto& b = g1.meta().groups;
    const int k = a.empty() ? 0 : *std::max_element(a.begin(), a.end()) + 1;
    std::vector<double> m0(static_cast<std::size_t>(k)), m1(static_cast<std::size_t>(k));
    for (std::size_t v = 0; v < a.size(); ++v) {
        m0[static_cast<std::size_t>(a[v])] += f0(static_cast<Eigen::Index>(v));
    }
    for (std::size_t v = 0; v < b.size(); ++v) {
        m1[static_cast<std::size_t>(b[v])] += f1(static_cast<Eigen::Index>(v));
    }
    int agree = 0;
    for (int c = 0; c < k; ++c) {
        agree += (m0[static_cast<std::size_t>(c)] >= 0.0) == (m1[static_cast<std::size_t>(c)] >= 0.0) ? 1 : 0;
    }
    return static_cast<double>(agree) / k;
}

void run_resampling(const ExperimentConfig& cfg, std::uint64_t seed, Artifacts& art, json& scalars)
{
    const Side g0 = make_side(build_graph(cfg.graph, seed));
    const Reduced red = reduce(cfg, g0, seed);
    const Side& g1 = red.side;
    const bool down = cfg.operation.kind == "downsample" || cfg.operation.kind == "fractional_downsample";
    const Side& in_side = down ? g0 : g1;
    const Side& out_side = down ? g1 : g0;

    std::optional<std::array<VertexSet, 2>> clusters;
    const GraphSignal f = make_signal(cfg.signal, in_side, seed, clusters);
    const Spectrum f_hat = gft(*in_side.basis, f);
    art.signal("input_signal.csv", f);
    save_spectrum_csv(f_hat, art.next("input_spectrum.csv"));
    scalars["input_size"] = in_side.basis->size();
    scalars["output_size"] = out_side.basis->size();
    scalars["input_energy"] = energy(f);
    scalars["input_lambda_max"] = in_side.basis->lambda_max();
    scalars["output_lambda_max"] = out_side.basis->lambda_max();
    if (clusters) {
        save_clusters_csv(cluster_labels(g0.basis->size(), {(*clusters)[0], (*clusters)[1]}), art.next("clusters.csv"));
        if (red.corr) {
            std::vector<int> labels0 = cluster_labels(g0.basis->size(), {(*clusters)[0], (*clusters)[1]});
            std::vector<int> labels1;
            for (std::size_t v : red.corr->map()) {
                labels1.push_back(labels0[v]);
            }
            save_clusters_csv(labels1, art.next("clusters_reduced.csv"));
        }
    }

    const SamplingContext ctx(in_side.basis, out_side.basis);
    for (const std::string& op : cfg.operation.operators) {
        try {
            const GraphSignal out = down ? apply_down(op, cfg, ctx, red.corr, f)
                                         : apply_up(op, cfg, ctx, red.corr, f, g0.basis->size());
            const Spectrum out_hat = gft(*out_side.basis, out);
            art.signal(tag(op) + "_signal.csv", out);
            save_spectrum_csv(out_hat, art.next(tag(op) + "_spectrum.csv"));
            json s;
            s["energy"] = energy(out);
            if (cfg.operation.low_band > 0) {
                const auto d = static_cast<Eigen::Index>(cfg.operation.low_band);
                const Eigen::Index common = std::min(d, f_hat.coefficients.size());
                Eigen::VectorXd diff = out_hat.coefficients.head(d);
                diff.head(common) -= f_hat.coefficients.head(common);
                s["low_band_injected_energy"] = energy(diff);
            }
            if (down && cfg.signal.kind == "bandlimited_random" && cfg.signal.cutoff < out_hat.size()) {
                const auto c = static_cast<Eigen::Index>(cfg.signal.cutoff);
                s["out_of_band_ratio"] =
                    energy(out_hat.coefficients.tail(out_hat.coefficients.size() - c)) / energy(out_hat.coefficients);
            }
            if (cfg.operation.alias_split && op.starts_with("GD2")) {
                const bool folded = op.back() == '\'';
                const AliasSplit split = split_downsample_index(ctx, f, folded);
                s["main_energy"] = energy(split.main);
                s["alias_energy"] = energy(split.alias);
                s["alias_ratio"] = energy(split.alias) / (energy(split.main) + energy(split.alias));
                art.signal(tag(op) + "_main_signal.csv", split.main);
                art.signal(tag(op) + "_alias_signal.csv", split.alias);
                if (clusters && red.corr) {
                    const ClusterEnergies e = cluster_split_energies(ctx, f, *red.corr, *clusters, folded);
                    s["main_cluster_energy"] = e.main;
                    s["alias_cluster_energy"] = e.alias;
                }
            }
            if (down && !g0.graph->meta().groups.empty() && !g1.graph->meta().groups.empty()) {
                s["community_sign_agreement"] = community_sign_agreement(*g0.graph, f, *g1.graph, out);
            }
            scalars[op] = s;
        } catch (const Error& e) {
            fail(e.kind(), "operator " + op + ": " + e.detail());
        }
    }
}

SamplingScheme scheme_of(const std::string& name)
{
    if (name == "vertex") {
        return SamplingScheme::vertex;
    }
    if (name == "index") {
        return SamplingScheme::index_folded;
    }
    if (name == "spectrum") {
        return SamplingScheme::spectrum_folded;
    }
    fail(ErrorKind::invalid_parameter, "unknown scheme '" + name + "'");
}

void run_pyramid(const ExperimentConfig& cfg, std::uint64_t seed, Artifacts& art, json& scalars)
{
    const Side g0 = make_side(build_graph(cfg.graph, seed));
    std::optional<std::array<VertexSet, 2>> clusters;
    const GraphSignal f = make_signal(cfg.signal, g0, seed, clusters);
    art.signal("input_signal.csv", f);

    PyramidConfig pc;
    const FilterMode mode = cfg.operation.filter == "chebyshev" ? FilterMode::chebyshev : FilterMode::exact;
    pc.analysis = FilterSpec::rational_lowpass(mode, cfg.operation.chebyshev_order);
    pc.synthesis = pc.analysis;
    pc.reduction = cfg.reduction.kind == "every_other" ? ReductionStrategy::structured : ReductionStrategy::kron_polarity;
    pc.sparsify_ratio = cfg.reduction.sparsify_ratio;
    pc.rate = cfg.reduction.rate;
    const auto geometry = build_pyramid_geometry(*g0.graph, cfg.operation.levels, pc);
    json sizes = json::array();
    for (const auto& level : geometry->levels) {
        sizes.push_back(level.graph.size());
    }
    scalars["level_sizes"] = sizes;

    for (const std::string& name : cfg.operation.schemes) {
        pc.scheme = scheme_of(name);
        try {
            const PyramidDecomposition dec = analyze(geometry, f, pc);
            for (std::size_t j = 0; j < dec.details.size(); ++j) {
                save_band_csv(dec.details[j], art.next("pyramid_" + name + "_detail" + std::to_string(j) + ".csv"));
            }
            save_band_csv(dec.coarse, art.next("pyramid_" + name + "_coarse.csv"));
            const auto curve = nla_error_curve(dec, f, cfg.operation.fractions);
            save_nla_csv(curve, art.next("nla_" + name + ".csv"));
            json s;
            s["reconstruction_error"] = (synthesize(dec) - f).norm() / f.norm();
            json errors = json::array();
            for (const auto& p : curve) {
                errors.push_back({{"fraction", p.fraction}, {"error", p.error}});
            }
            s["nla"] = errors;
            scalars[name] = s;
        } catch (const Error& e) {
            fail(e.kind(), "scheme " + name + ": " + e.detail());
        }
    }
}

}  // namespace

Graph build_graph(const GraphSpec& g, std::uint64_t run_seed)
{
    const std::uint64_t seed = g.seed + run_seed;
    const std::string& gen = g.generator;
    if (gen == "path") {
        return build_path(g.n);
    }
    if (gen == "ring") {
        return build_ring(g.n);
    }
    if (gen == "grid") {
        return build_grid(g.rows, g.cols);
    }
    if (gen == "complete") {
        return build_complete(g.n);
    }
    if (gen == "comet") {
        return build_comet(g.n, g.center_degree);
    }
    if (gen == "community") {
        return build_community(g.n, g.communities, g.p_in, g.p_out, seed);
    }
    if (gen == "random_regular") {
        return build_random_regular(g.n, g.degree, seed);
    }
    if (gen == "sensor") {
        return build_random_sensor(g.n, g.k_nearest, seed);
    }
    if (gen == "edge_list") {
        Graph graph = load_edge_list(g.edges);
        if (g.coordinates.empty()) {
            return graph;
        }
        Eigen::MatrixXd xy = load_coordinates(g.coordinates, graph.size());
        return Graph(graph.adjacency(), graph.meta(), std::move(xy));
    }
    fail(ErrorKind::invalid_parameter, "unknown generator '" + gen + "'");
}

ClusterEnergies cluster_split_energies(const SamplingContext& ctx, const GraphSignal& f,
                                       const VertexCorrespondence& corr,
                                       const std::array<VertexSet, 2>& clusters, bool folded)
{
    require(corr.reduced_size() == ctx.target_size() && corr.original_size() == ctx.source_size(),
            "cluster energies: correspondence does not match the sampling context");
    const std::vector<int> labels = cluster_labels(corr.original_size(), {clusters[0], clusters[1]});
    const AliasSplit split = split_downsample_index(ctx, f, folded);
    ClusterEnergies out;
    for (std::size_t n = 0; n < corr.reduced_size(); ++n) {
        const int label = labels[corr[n]];
        if (label < 0) {
            continue;
        }
        const auto i = static_cast<Eigen::Index>(n);
        out.main[static_cast<std::size_t>(label)] += split.main(i) * split.main(i);
        out.alias[static_cast<std::size_t>(label)] += split.alias(i) * split.alias(i);
    }
    return out;
}

RunResult run_experiment(const ExperimentConfig& config, const std::filesystem::path& out_dir)
{
    const std::vector<std::string> problems = validate_config(config);
    if (!problems.empty()) {
        std::string msg = "experiment '" + config.name + "' is invalid:";
        for (const auto& p : problems) {
            msg += "\n  " + p;
        }
        fail(ErrorKind::invalid_parameter, msg);
    }
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
        fail(ErrorKind::io_error, "cannot create " + out_dir.string() + ": " + ec.message());
    }

    Artifacts art(out_dir);
    json scalars = json::object();
    try {
        if (config.operation.kind == "pyramid") {
            run_pyramid(config, config.seed, art, scalars);
        } else {
            run_resampling(config, config.seed, art, scalars);
        }
    } catch (const Error& e) {
        fail(e.kind(), "experiment '" + config.name + "': " + e.detail());
    }

    json files = json::array();
    for (const auto& name : art.files()) {
        const auto path = out_dir / name;
        files.push_back({{"path", name}, {"sha256", sha256_file(path)}, {"bytes", std::filesystem::file_size(path)}});
    }
    const json manifest{{"config", config_to_json(config)}, {"files", files}, {"scalars", scalars}};
    std::ofstream out(out_dir / "manifest.json");
    if (!out) {
        fail(ErrorKind::io_error, "cannot write " + (out_dir / "manifest.json").string());
    }
    out << manifest.dump(2) << '\n';
    if (!out) {
        fail(ErrorKind::io_error, "failed writing " + (out_dir / "manifest.json").string());
    }
    return {art.files(), scalars};
}

}  // namespace gsamp::experiment

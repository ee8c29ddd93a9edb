#include "gsamp/pyramid.hpp"

#include "gsamp/error.hpp"
#include "gsamp/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <string>
#include <tuple>

namespace gsamp {

FilterSpec FilterSpec::identity(FilterMode mode, int order)
{
    return FilterSpec{[](double) { return 1.0; }, mode, order};
}

FilterSpec FilterSpec::rational_lowpass(FilterMode mode, int order)
{
    return FilterSpec{[](double lambda) { return 1.0 / (1.0 + 2.0 * lambda); }, mode, order};
}

GraphSignal filter_exact(const SpectralBasis& basis, const GraphSignal& f, const std::function<double(double)>& response)
{
    require(static_cast<std::size_t>(f.size()) == basis.size(), "filter: signal length does not match the graph");
    Eigen::VectorXd coeffs = basis.eigenvectors.transpose() * f;
    for (Eigen::Index k = 0; k < coeffs.size(); ++k) {
        coeffs(k) *= response(basis.eigenvalues(k));
    }
    return basis.eigenvectors * coeffs;
}

Eigen::VectorXd chebyshev_coefficients(const std::function<double(double)>& response, double lambda_max, int order)
{
    require(order >= 0, "Chebyshev order must be >= 0");
    require(lambda_max > 0.0, "Chebyshev approximation needs lambda_max > 0");
    const int nodes = order + 1;
    const double half = lambda_max / 2.0;
    Eigen::VectorXd samples(nodes);
    Eigen::VectorXd theta(nodes);
    for (int i = 0; i < nodes; ++i) {
        theta(i) = std::numbers::pi * (i + 0.5) / nodes;
        samples(i) = response(half * (std::cos(theta(i)) + 1.0));
    }
    Eigen::VectorXd c(order + 1);
    for (int k = 0; k <= order; ++k) {
        double sum = 0.0;
        for (int i = 0; i < nodes; ++i) {
            sum += samples(i) * std::cos(k * theta(i));
        }
        c(k) = 2.0 * sum / nodes;
    }
    return c;
}

GraphSignal filter_chebyshev(const Laplacian& laplacian, double lambda_max, const GraphSignal& f,
                             const std::function<double(double)>& response, int order)
{
    require(static_cast<std::size_t>(f.size()) == laplacian.size(), "filter: signal length does not match the graph");
    const Eigen::VectorXd c = chebyshev_coefficients(response, lambda_max, order);
    const double half = lambda_max / 2.0;
    const Eigen::MatrixXd& l = laplacian.matrix();
    const auto shifted = [&](const Eigen::VectorXd& v) -> Eigen::VectorXd { return (l * v - half * v) / half; };

    Eigen::VectorXd previous = f;
    GraphSignal out = 0.5 * c(0) * previous;
    if (order == 0) {
        return out;
    }
    Eigen::VectorXd current = shifted(f);
    out += c(1) * current;
    for (int k = 2; k <= order; ++k) {
        Eigen::VectorXd next = 2.0 * shifted(current) - previous;
        out += c(k) * next;
        previous = std::move(current);
        current = std::move(next);
    }
    return out;
}

GraphSignal filter(const SpectralBasis& basis, const Laplacian& laplacian, const GraphSignal& f, const FilterSpec& spec)
{
    require(static_cast<bool>(spec.response), "filter: response function is empty");
    if (spec.mode == FilterMode::exact) {
        return filter_exact(basis, f, spec.response);
    }
    return filter_chebyshev(laplacian, basis.lambda_max(), f, spec.response, spec.order);
}

namespace {

PyramidLevel make_level(Graph graph)
{
    Laplacian l = laplacian(graph);
    auto basis = std::make_shared<const SpectralBasis>(eigendecompose(l));
    return PyramidLevel{std::move(graph), std::move(l), std::move(basis), std::nullopt};
}

std::pair<Graph, VertexSet> structured(const Graph& graph, std::size_t rate)
{
    ReductionResult reduced = reduce_structured(graph, rate);
    return {std::move(reduced.graph), std::move(reduced.kept)};
}

std::pair<Graph, VertexSet> reduce_kron(const PyramidLevel& level, std::size_t rate, double sparsify_ratio)
{
    const std::size_t n = level.graph.size();
    const std::size_t target = (n + rate - 1) / rate;
    ReductionResult reduced = kron_reduce(level.graph, select_polarity(*level.basis, target));
    return {sparsify(reduced.graph, sparsify_ratio), reduced.kept};
}

GraphSignal down(const PyramidLevel& fine, const PyramidLevel& coarse, SamplingScheme scheme, const GraphSignal& f)
{
    switch (scheme) {
    case SamplingScheme::vertex:
        return vertex_downsample(f, *fine.coarser);
    case SamplingScheme::index_folded:
        return fractional_downsample(SamplingContext(fine.basis, coarse.basis), f, SpectralMode::index, true);
    case SamplingScheme::spectrum_folded:
        return fractional_downsample(SamplingContext(fine.basis, coarse.basis), f, SpectralMode::spectrum, true);
    }
    fail(ErrorKind::invalid_parameter, "unknown sampling scheme");
}

GraphSignal up(const PyramidLevel& fine, const PyramidLevel& coarse, SamplingScheme scheme, const GraphSignal& f)
{
    switch (scheme) {
    case SamplingScheme::vertex:
        return vertex_upsample(f, *fine.coarser, fine.graph.size());
    case SamplingScheme::index_folded:
        return fractional_upsample(SamplingContext(coarse.basis, fine.basis), f, SpectralMode::index, true);
    case SamplingScheme::spectrum_folded:
        return fractional_upsample(SamplingContext(coarse.basis, fine.basis), f, SpectralMode::spectrum, true);
    }
    fail(ErrorKind::invalid_parameter, "unknown sampling scheme");
}

GraphSignal predict(const PyramidGeometry& geometry, std::size_t j, const PyramidConfig& config,
                    const GraphSignal& coarse_signal)
{
    const PyramidLevel& fine = geometry.levels[j];
    const PyramidLevel& coarse = geometry.levels[j + 1];
    const GraphSignal upsampled = up(fine, coarse, config.scheme, coarse_signal);
    return filter(*fine.basis, fine.laplacian, upsampled, config.synthesis);
}

}  // namespace

std::shared_ptr<const PyramidGeometry> build_pyramid_geometry(const Graph& graph, std::size_t num_levels,
                                                              const PyramidConfig& config)
{
    require(num_levels >= 1, "pyramid needs at least one level");
    require(config.rate >= 2, "pyramid rate must be >= 2");
    auto geometry = std::make_shared<PyramidGeometry>();
    geometry->levels.push_back(make_level(graph));
    for (std::size_t j = 0; j < num_levels; ++j) {
        PyramidLevel& fine = geometry->levels.back();
        require(fine.graph.size() > config.rate,
                "pyramid level " + std::to_string(j) + " is too small to reduce further");
        try {
            auto [next, kept] = config.reduction == ReductionStrategy::structured
                                    ? structured(fine.graph, config.rate)
                                    : reduce_kron(fine, config.rate, config.sparsify_ratio);
            fine.coarser = VertexCorrespondence(std::move(kept), fine.graph.size());
            geometry->levels.push_back(make_level(std::move(next)));
        } catch (const Error& e) {
            fail(e.kind(), "pyramid level " + std::to_string(j) + ": " + e.what());
        }
    }
    return geometry;
}

std::size_t PyramidDecomposition::detail_coefficient_count() const
{
    std::size_t count = 0;
    for (const auto& y : details) {
        count += static_cast<std::size_t>(y.size());
    }
    return count;
}

PyramidDecomposition analyze(std::shared_ptr<const PyramidGeometry> geometry, const GraphSignal& f,
                             const PyramidConfig& config)
{
    require(geometry && geometry->depth() >= 1, "pyramid geometry needs at least one level");
    require(static_cast<std::size_t>(f.size()) == geometry->levels.front().graph.size(),
            "signal does not live on the finest pyramid graph");
    PyramidDecomposition out{geometry, {}, {}, config};
    GraphSignal current = f;
    for (std::size_t j = 0; j < geometry->depth(); ++j) {
        const PyramidLevel& fine = geometry->levels[j];
        const PyramidLevel& coarse = geometry->levels[j + 1];
        const GraphSignal smoothed = filter(*fine.basis, fine.laplacian, current, config.analysis);
        GraphSignal next = down(fine, coarse, config.scheme, smoothed);
        out.details.push_back(current - predict(*geometry, j, config, next));
        current = std::move(next);
    }
    out.coarse = std::move(current);
    return out;
}

PyramidDecomposition analyze(const Graph& graph, const GraphSignal& f, std::size_t num_levels,
                             const PyramidConfig& config)
{
    return analyze(build_pyramid_geometry(graph, num_levels, config), f, config);
}

GraphSignal synthesize(const PyramidDecomposition& decomposition)
{
    const auto& geometry = decomposition.geometry;
    require(geometry && decomposition.details.size() == geometry->depth(), "decomposition does not match its geometry");
    require(static_cast<std::size_t>(decomposition.coarse.size()) == geometry->levels.back().graph.size(),
            "coarse band has the wrong length");
    GraphSignal current = decomposition.coarse;
    for (std::size_t j = geometry->depth(); j-- > 0;) {
        const GraphSignal& detail = decomposition.details[j];
        require(static_cast<std::size_t>(detail.size()) == geometry->levels[j].graph.size(),
                "detail band " + std::to_string(j) + " has the wrong length");
        current = predict(*geometry, j, decomposition.config, current) + detail;
    }
    return current;
}

PyramidDecomposition nonlinear_approximate(const PyramidDecomposition& decomposition, std::size_t n_kept)
{
    const std::size_t total = decomposition.detail_coefficient_count();
    require(n_kept <= total, "n_kept exceeds the number of detail coefficients");
    std::vector<std::tuple<double, std::size_t, Eigen::Index>> ranked;
    ranked.reserve(total);
    for (std::size_t j = 0; j < decomposition.details.size(); ++j) {
        const GraphSignal& y = decomposition.details[j];
        for (Eigen::Index i = 0; i < y.size(); ++i) {
            ranked.emplace_back(std::abs(y(i)), j, i);
        }
    }
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (std::get<0>(a) != std::get<0>(b)) {
            return std::get<0>(a) > std::get<0>(b);
        }
        return std::tie(std::get<1>(a), std::get<2>(a)) < std::tie(std::get<1>(b), std::get<2>(b));
    });

    PyramidDecomposition out = decomposition;
    for (auto& y : out.details) {
        y.setZero();
    }
    for (std::size_t r = 0; r < n_kept; ++r) {
        const auto& [magnitude, j, i] = ranked[r];
        out.details[j](i) = decomposition.details[j](i);
    }
    return out;
}

std::vector<NlaPoint> nla_error_curve(const PyramidDecomposition& decomposition, const GraphSignal& f,
                                      const std::vector<double>& fractions)
{
    const double norm = f.norm();
    require(norm > 0.0, "NLA curve needs a nonzero signal");
    const std::size_t total = decomposition.detail_coefficient_count();
    const auto n = static_cast<double>(f.size());
    std::vector<NlaPoint> curve;
    for (double fraction : fractions) {
        require(fraction >= 0.0 && fraction <= 1.0, "NLA fractions must lie in [0, 1]");
        const auto n_kept = std::min(total, static_cast<std::size_t>(std::llround(fraction * n)));
        const GraphSignal approx = synthesize(nonlinear_approximate(decomposition, n_kept));
        curve.push_back({fraction, (f - approx).norm() / norm});
    }
    return curve;
}

std::vector<NlaPoint> nla_error_curve(const Graph& graph, const GraphSignal& f, std::size_t num_levels,
                                      const PyramidConfig& config, const std::vector<double>& fractions)
{
    return nla_error_curve(analyze(graph, f, num_levels, config), f, fractions);
}

void save_band_csv(const GraphSignal& band, const std::filesystem::path& path)
{
    std::ofstream out(path);
    if (!out) {
        fail(ErrorKind::io_error, "cannot write " + path.string());
    }
    out.precision(17);
    out << "index,value\n";
    for (Eigen::Index i = 0; i < band.size(); ++i) {
        out << i << ',' << band(i) << '\n';
    }
}

void save_nla_csv(const std::vector<NlaPoint>& curve, const std::filesystem::path& path)
{
    std::ofstream out(path);
    if (!out) {
        fail(ErrorKind::io_error, "cannot write " + path.string());
    }
    out.precision(17);
    out << "fraction,error\n";
    for (const auto& p : curve) {
        out << p.fraction << ',' << p.error << '\n';
    }
}

}  // namespace gsamp

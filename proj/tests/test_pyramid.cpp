#include "gsamp/error.hpp"
#include "gsamp/generators.hpp"
#include "gsamp/pyramid.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace gsamp;

namespace {

const std::array<SamplingScheme, 3> kSchemes = {SamplingScheme::vertex, SamplingScheme::index_folded,
                                                SamplingScheme::spectrum_folded};

PyramidConfig exact_config(SamplingScheme scheme)
{
    PyramidConfig c;
    c.scheme = scheme;
    c.analysis = FilterSpec::rational_lowpass(FilterMode::exact);
    c.synthesis = c.analysis;
    return c;
}

}  // namespace

TEST_CASE("Chebyshev approximation reproduces low-degree polynomials exactly")
{
    const Graph g = build_random_sensor(50, 5, 1);
    const Laplacian l = laplacian(g);
    const SpectralBasis b = eigendecompose(l);
    testing::Rng rng(1);
    const GraphSignal f = rng.vector(50);
    const auto cubic = [](double x) { return 1.0 - 0.5 * x + 0.25 * x * x - 0.01 * x * x * x; };
    const GraphSignal exact = filter_exact(b, f, cubic);
    CHECK(testing::relative_error(filter_chebyshev(l, b.lambda_max(), f, cubic, 3), exact) < 1e-10);
    CHECK(testing::relative_error(filter_chebyshev(l, b.lambda_max(), f, cubic, 10), exact) < 1e-10);
    // matrix polynomial oracle
    const Eigen::MatrixXd m = l.matrix();
    const GraphSignal direct = f - 0.5 * m * f + 0.25 * m * (m * f) - 0.01 * m * (m * (m * f));
    CHECK(testing::relative_error(exact, direct) < 1e-10);
}

TEST_CASE("Chebyshev filter converges to the exact rational low-pass")
{
    const Graph g = build_random_sensor(128, 6, 0);
    const Laplacian l = laplacian(g);
    const SpectralBasis b = eigendecompose(l);
    testing::Rng rng(2);
    const GraphSignal f = rng.vector(128);
    const auto h = FilterSpec::rational_lowpass().response;
    const GraphSignal exact = filter_exact(b, f, h);
    double previous = 1.0;
    for (int order : {5, 10, 20, 30}) {
        const double err = testing::relative_error(filter_chebyshev(l, b.lambda_max(), f, h, order), exact);
        CHECK(err < previous);
        previous = err;
    }
    CHECK(previous < 1e-4);
    const GraphSignal via_spec = filter(b, l, f, FilterSpec::rational_lowpass(FilterMode::chebyshev, 30));
    CHECK(testing::relative_error(via_spec, filter_chebyshev(l, b.lambda_max(), f, h, 30)) == 0.0);
}

TEST_CASE("pyramid geometry halves the vertex count per level")
{
    const auto geo = build_pyramid_geometry(build_random_sensor(128, 6, 0), 3, PyramidConfig{});
    REQUIRE(geo->depth() == 3);
    CHECK(geo->levels[1].graph.size() == 64);
    CHECK(geo->levels[2].graph.size() == 32);
    CHECK(geo->levels[3].graph.size() == 16);
    for (std::size_t j = 0; j < 3; ++j) {
        CHECK(geo->levels[j].coarser->reduced_size() == geo->levels[j + 1].graph.size());
        CHECK(geo->levels[j + 1].graph.is_connected());
    }
    CHECK_FALSE(geo->levels[3].coarser);
    CHECK_THROWS_AS(build_pyramid_geometry(build_path(8), 3, PyramidConfig{}), Error);
}

TEST_CASE("pyramid reconstructs exactly for every sampling scheme")
{
    testing::Rng rng(8);
    PyramidConfig structured;
    structured.reduction = ReductionStrategy::structured;
    structured.rate = 4;
    const auto sensor = build_pyramid_geometry(build_random_sensor(128, 6, 0), 3, PyramidConfig{});
    const auto grid = build_pyramid_geometry(build_grid(16, 16), 3, structured);
    for (const auto& geo : {sensor, grid}) {
        const auto n = static_cast<Eigen::Index>(geo->levels[0].graph.size());
        for (SamplingScheme scheme : kSchemes) {
            for (FilterMode mode : {FilterMode::exact, FilterMode::chebyshev}) {
                PyramidConfig c = exact_config(scheme);
                c.analysis.mode = mode;
                c.synthesis.mode = mode;
                for (int trial = 0; trial < 3; ++trial) {
                    const GraphSignal f = rng.vector(n);
                    const PyramidDecomposition d = analyze(geo, f, c);
                    CHECK(d.num_levels() == 3);
                    CHECK(testing::relative_error(synthesize(d), f) <= 1e-9);
                }
            }
        }
    }
}

TEST_CASE("nonlinear approximation")
{
    const Graph g = build_random_sensor(128, 6, 0);
    testing::Rng rng(3);
    const GraphSignal f = rng.vector(128);
    for (SamplingScheme scheme : kSchemes) {
        const PyramidDecomposition d = analyze(g, f, 3, exact_config(scheme));
        const std::size_t total = d.detail_coefficient_count();
        CHECK(total == 128 + 64 + 32);
        CHECK(testing::relative_error(synthesize(nonlinear_approximate(d, total)), f) <= 1e-9);
        const PyramidDecomposition none = nonlinear_approximate(d, 0);
        for (const auto& y : none.details) {
            CHECK(y.isZero());
        }
        CHECK(none.coarse == d.coarse);

        const PyramidDecomposition ten = nonlinear_approximate(d, 10);
        std::size_t nonzero = 0;
        double smallest_kept = 1e300;
        double largest_dropped = 0.0;
        for (std::size_t j = 0; j < 3; ++j) {
            for (Eigen::Index i = 0; i < d.details[j].size(); ++i) {
                if (ten.details[j](i) != 0.0) {
                    ++nonzero;
                    smallest_kept = std::min(smallest_kept, std::abs(d.details[j](i)));
                } else {
                    largest_dropped = std::max(largest_dropped, std::abs(d.details[j](i)));
                }
            }
        }
        CHECK(nonzero == 10);
        CHECK(smallest_kept >= largest_dropped);
        CHECK_THROWS_AS(nonlinear_approximate(d, total + 1), Error);

        const std::vector<double> fractions = {0.0, 0.1, 0.2, 0.5, 1.0};
        const auto a = nla_error_curve(d, f, fractions);
        const auto b = nla_error_curve(d, f, fractions);
        for (std::size_t i = 0; i < fractions.size(); ++i) {
            CHECK(a[i].error == b[i].error);
            CHECK(a[i].fraction == fractions[i]);
        }
    }
}

TEST_CASE("NLA ties go to the lower level and index")
{
    const Graph g = build_path(8);
    PyramidConfig c = exact_config(SamplingScheme::vertex);
    c.reduction = ReductionStrategy::structured;
    PyramidDecomposition d = analyze(g, Eigen::VectorXd::Ones(8), 1, c);
    d.details[0].setConstant(2.0);
    const PyramidDecomposition k = nonlinear_approximate(d, 3);
    CHECK(k.details[0].head(3).isConstant(2.0));
    CHECK(k.details[0].tail(5).isZero());
}

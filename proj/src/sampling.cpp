#include "gsamp/sampling.hpp"

#include "gsamp/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace gsamp {

VertexCorrespondence::VertexCorrespondence(std::vector<std::size_t> map, std::size_t original_size)
    : map_(std::move(map)), original_size_(original_size)
{
    std::vector<bool> used(original_size, false);
    for (std::size_t target : map_) {
        require(target < original_size, "correspondence target " + std::to_string(target) + " out of range");
        require(!used[target], "correspondence is not injective at vertex " + std::to_string(target));
        used[target] = true;
    }
}

VertexCorrespondence VertexCorrespondence::identity(std::size_t n)
{
    std::vector<std::size_t> map(n);
    for (std::size_t i = 0; i < n; ++i) {
        map[i] = i;
    }
    return VertexCorrespondence(std::move(map), n);
}

SamplingContext::SamplingContext(std::shared_ptr<const SpectralBasis> source, std::shared_ptr<const SpectralBasis> target)
    : source_(std::move(source)), target_(std::move(target)), rho_(0.0)
{
    require(source_ && target_, "sampling context needs both bases");
    require(source_->size() > 0 && target_->size() > 0, "sampling context needs nonempty bases");
    const double target_max = target_->lambda_max();
    require(target_max > 0.0 && source_->lambda_max() > 0.0, "sampling context needs positive maximum eigenvalues");
    rho_ = source_->lambda_max() / target_max;
}

GraphSignal vertex_downsample(const GraphSignal& f, const VertexCorrespondence& corr)
{
    require(static_cast<std::size_t>(f.size()) == corr.original_size(), "signal does not live on the original graph");
    GraphSignal out(static_cast<Eigen::Index>(corr.reduced_size()));
    for (std::size_t n = 0; n < corr.reduced_size(); ++n) {
        out(static_cast<Eigen::Index>(n)) = f(static_cast<Eigen::Index>(corr[n]));
    }
    return out;
}

GraphSignal vertex_upsample(const GraphSignal& f, const VertexCorrespondence& corr, std::size_t n0)
{
    require(n0 == corr.original_size(), "target size does not match the correspondence");
    require(static_cast<std::size_t>(f.size()) == corr.reduced_size(), "signal does not live on the reduced graph");
    GraphSignal out = GraphSignal::Zero(static_cast<Eigen::Index>(n0));
    for (std::size_t n = 0; n < corr.reduced_size(); ++n) {
        out(static_cast<Eigen::Index>(corr[n])) = f(static_cast<Eigen::Index>(n));
    }
    return out;
}

Eigen::VectorXd stretch_fold_spectrum(const Spectrum& source, const Eigen::VectorXd& target_grid, bool folded)
{
    const SpectrumInterpolant interp(source);
    const Eigen::Index n0 = source.coefficients.size();
    const Eigen::Index n1 = target_grid.size();
    require(n1 > 0 && n1 <= n0, "downsampling needs a target no larger than the source");
    const double source_max = source.grid.maxCoeff();
    const double target_max = target_grid.maxCoeff();
    require(target_max > 0.0, "target grid needs a positive maximum eigenvalue");

    const double ratio = static_cast<double>(n0) / static_cast<double>(n1);
    const double scale = (source_max / target_max) / ratio;
    const double tol = eigenvalue_tie_tolerance(source_max);
    const Eigen::Index segments = segment_count(n0, n1);

    Eigen::VectorXd out = Eigen::VectorXd::Zero(n1);
    for (Eigen::Index k = 0; k < n1; ++k) {
        for (Eigen::Index q = 0; q < segments; ++q) {
            const bool reversed = folded && q % 2 == 1;
            const double offset = static_cast<double>(reversed ? q + 1 : q) * target_max;
            const double mu = scale * (reversed ? offset - target_grid(k) : offset + target_grid(k));
            if (mu > source_max + tol) {
                continue;
            }
            out(k) += interp(std::clamp(mu, interp.lower(), interp.upper()));
        }
    }
    return out;
}

Eigen::VectorXd compress_repeat_spectrum(const Spectrum& source, const Eigen::VectorXd& target_grid, bool folded)
{
    const Eigen::Index n0 = source.coefficients.size();
    const Eigen::Index n1 = target_grid.size();
    require(n0 > 0 && n1 >= n0, "upsampling needs a target no smaller than the source");
    const double source_max = source.grid.maxCoeff();
    const double target_max = target_grid.maxCoeff();
    require(target_max > 0.0 && source_max > 0.0, "upsampling needs positive maximum eigenvalues");

    const Eigen::Index copies = segment_count(n1, n0);
    Eigen::VectorXd nodes(copies * n0);
    Eigen::VectorXd values(copies * n0);
    for (Eigen::Index q = 0; q < copies; ++q) {
        const bool reversed = folded && q % 2 == 1;
        for (Eigen::Index k = 0; k < n0; ++k) {
            nodes(q * n0 + k) = source.grid(k) + static_cast<double>(q) * source_max;
            values(q * n0 + k) = reversed ? source.coefficients(n0 - 1 - k) : source.coefficients(k);
        }
    }
    const SpectrumInterpolant interp(nodes, values, eigenvalue_tie_tolerance(source_max));

    const double ratio = static_cast<double>(n1) / static_cast<double>(n0);
    const double scale = (source_max / target_max) * ratio;
    Eigen::VectorXd out(n1);
    for (Eigen::Index i = 0; i < n1; ++i) {
        const double mu = scale * target_grid(i);
        out(i) = interp(mu);
    }
    return out;
}

namespace {

void check_integer_rate(std::size_t long_size, std::size_t short_size, std::size_t rate, const char* what)
{
    require(rate >= 1, std::string(what) + ": rate must be >= 1");
    require(long_size == rate * short_size,
            std::string(what) + ": graph sizes " + std::to_string(long_size) + " and " + std::to_string(short_size) +
                " are inconsistent with rate " + std::to_string(rate));
}

void check_source_signal(const SamplingContext& ctx, const GraphSignal& f)
{
    require(static_cast<std::size_t>(f.size()) == ctx.source_size(), "signal does not live on the source graph");
}

}  // namespace

GraphSignal spectral_downsample_index(const SamplingContext& ctx, const GraphSignal& f, std::size_t m, bool folded)
{
    check_integer_rate(ctx.source_size(), ctx.target_size(), m, "spectral_downsample_index");
    return fractional_downsample(ctx, f, SpectralMode::index, folded);
}

GraphSignal spectral_downsample_spectrum(const SamplingContext& ctx, const GraphSignal& f, std::size_t m, bool folded)
{
    check_integer_rate(ctx.source_size(), ctx.target_size(), m, "spectral_downsample_spectrum");
    return fractional_downsample(ctx, f, SpectralMode::spectrum, folded);
}

GraphSignal spectral_upsample_index(const SamplingContext& ctx, const GraphSignal& f, std::size_t l, bool folded)
{
    check_integer_rate(ctx.target_size(), ctx.source_size(), l, "spectral_upsample_index");
    return fractional_upsample(ctx, f, SpectralMode::index, folded);
}

GraphSignal spectral_upsample_spectrum(const SamplingContext& ctx, const GraphSignal& f, std::size_t l, bool folded)
{
    check_integer_rate(ctx.target_size(), ctx.source_size(), l, "spectral_upsample_spectrum");
    return fractional_upsample(ctx, f, SpectralMode::spectrum, folded);
}

GraphSignal fractional_downsample(const SamplingContext& ctx, const GraphSignal& f, SpectralMode mode, bool folded)
{
    check_source_signal(ctx, f);
    require(ctx.target_size() <= ctx.source_size(), "downsampling target must not be larger than the source");
    const Spectrum spectrum = gft(ctx.source(), f);
    const auto n1 = static_cast<Eigen::Index>(ctx.target_size());
    Eigen::VectorXd reduced = mode == SpectralMode::index
                                  ? fold_coefficients(spectrum.coefficients, n1, folded)
                                  : stretch_fold_spectrum(spectrum, ctx.target().eigenvalues, folded);
    return igft(ctx.target(), reduced);
}

GraphSignal fractional_upsample(const SamplingContext& ctx, const GraphSignal& f, SpectralMode mode, bool folded)
{
    check_source_signal(ctx, f);
    require(ctx.target_size() >= ctx.source_size(), "upsampling target must not be smaller than the source");
    const Spectrum spectrum = gft(ctx.source(), f);
    const auto n1 = static_cast<Eigen::Index>(ctx.target_size());
    Eigen::VectorXd expanded = mode == SpectralMode::index
                                   ? repeat_coefficients(spectrum.coefficients, n1, folded)
                                   : compress_repeat_spectrum(spectrum, ctx.target().eigenvalues, folded);
    return igft(ctx.target(), expanded);
}

AliasSplit split_downsample_index(const SamplingContext& ctx, const GraphSignal& f, bool folded)
{
    check_source_signal(ctx, f);
    require(ctx.target_size() <= ctx.source_size(), "downsampling target must not be larger than the source");
    const Eigen::VectorXd coeffs = gft(ctx.source(), f).coefficients;
    const auto n1 = static_cast<Eigen::Index>(ctx.target_size());
    const Eigen::VectorXd main = fold_segment(coeffs, n1, folded, 0);
    const Eigen::VectorXd alias = fold_coefficients(coeffs, n1, folded) - main;
    return {igft(ctx.target(), main), igft(ctx.target(), alias)};
}

Spectrum ideal_lowpass_index(const Spectrum& spectrum, std::size_t cutoff_index)
{
    Spectrum out = spectrum;
    for (Eigen::Index k = 0; k < out.coefficients.size(); ++k) {
        if (static_cast<std::size_t>(k) > cutoff_index) {
            out.coefficients(k) = 0.0;
        }
    }
    return out;
}

Spectrum ideal_lowpass_lambda(const Spectrum& spectrum, double cutoff_lambda)
{
    require(spectrum.grid.size() == spectrum.coefficients.size(), "spectrum grid does not match its coefficients");
    Spectrum out = spectrum;
    const double tol = eigenvalue_tie_tolerance(spectrum.grid.size() ? spectrum.grid.maxCoeff() : 0.0);
    for (Eigen::Index k = 0; k < out.coefficients.size(); ++k) {
        if (out.grid(k) > cutoff_lambda + tol) {
            out.coefficients(k) = 0.0;
        }
    }
    return out;
}

}  // namespace gsamp

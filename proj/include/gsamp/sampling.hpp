#pragma once

#include "gsamp/graph.hpp"
#include "gsamp/spectral.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <memory>
#include <vector>

namespace gsamp {

/// Injective map from the vertices of a reduced graph G1 into those of G0:
/// vertex n of G1 sits on vertex map()[n] of G0.
class VertexCorrespondence {
public:
    VertexCorrespondence(std::vector<std::size_t> map, std::size_t original_size);
    static VertexCorrespondence identity(std::size_t n);

    const std::vector<std::size_t>& map() const noexcept { return map_; }
    std::size_t reduced_size() const noexcept { return map_.size(); }
    std::size_t original_size() const noexcept { return original_size_; }
    std::size_t operator[](std::size_t n) const { return map_.at(n); }

private:
    std::vector<std::size_t> map_;
    std::size_t original_size_;
};

/// Eigenbases of the graph a signal lives on (source) and of the graph it is
/// resampled onto (target), plus rho = lambda_max(source) / lambda_max(target).
class SamplingContext {
public:
    SamplingContext(std::shared_ptr<const SpectralBasis> source, std::shared_ptr<const SpectralBasis> target);

    const SpectralBasis& source() const noexcept { return *source_; }
    const SpectralBasis& target() const noexcept { return *target_; }
    double rho() const noexcept { return rho_; }
    std::size_t source_size() const noexcept { return source_->size(); }
    std::size_t target_size() const noexcept { return target_->size(); }

private:
    std::shared_ptr<const SpectralBasis> source_;
    std::shared_ptr<const SpectralBasis> target_;
    double rho_;
};

enum class SpectralMode { index, spectrum };

// Vertex domain.

GraphSignal vertex_downsample(const GraphSignal& f, const VertexCorrespondence& corr);
GraphSignal vertex_upsample(const GraphSignal& f, const VertexCorrespondence& corr, std::size_t n0);

// Coefficient-level index maps. These are the S_d / S'_d and repetition
// matrices applied without forming them, written for any scalar type so the
// same code runs on complex DFT spectra. The source length need not be a
// multiple of the target length: the source axis is cut into consecutive
// segments of the target length (the last one possibly partial) and the
// segments are summed, every odd segment reversed when `folded`.

template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> fold_segment(const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& coeffs,
                                                      Eigen::Index target_size, bool folded, Eigen::Index segment)
{
    const Eigen::Index n = coeffs.size();
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> out = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Zero(target_size);
    const bool reversed = folded && segment % 2 == 1;
    for (Eigen::Index k = 0; k < target_size; ++k) {
        const Eigen::Index src =
            reversed ? (segment + 1) * target_size - k - 1 : segment * target_size + k;
        if (src >= 0 && src < n) {
            out(k) = coeffs(src);
        }
    }
    return out;
}

inline Eigen::Index segment_count(Eigen::Index long_size, Eigen::Index short_size)
{
    return (long_size + short_size - 1) / short_size;
}

template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> fold_coefficients(const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& coeffs,
                                                           Eigen::Index target_size, bool folded)
{
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> out = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Zero(target_size);
    const Eigen::Index segments = segment_count(coeffs.size(), target_size);
    for (Eigen::Index q = 0; q < segments; ++q) {
        out += fold_segment(coeffs, target_size, folded, q);
    }
    return out;
}

template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> repeat_coefficients(const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& coeffs,
                                                             Eigen::Index target_size, bool folded)
{
    const Eigen::Index n = coeffs.size();
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> out(target_size);
    for (Eigen::Index i = 0; i < target_size; ++i) {
        const Eigen::Index q = i / n;
        const Eigen::Index k = i % n;
        out(i) = (folded && q % 2 == 1) ? coeffs(n - 1 - k) : coeffs(k);
    }
    return out;
}

// Continuous-spectrum maps on the coefficient level.

/// Target coefficient k sums the source interpolant at the points
/// rho/r * (q lambda_max' + lambda'_k) (odd q with `folded`:
/// rho/r * ((q+1) lambda_max' - lambda'_k)) that fall inside the source range,
/// with r = |source| / |target| and primes denoting the target grid.
Eigen::VectorXd stretch_fold_spectrum(const Spectrum& source, const Eigen::VectorXd& target_grid, bool folded);

/// Target coefficient i samples the interpolant of the repeated (alternately
/// reversed when `folded`) source spectrum, laid out on the abscissae
/// lambda_k + q lambda_max, at rho * r * lambda'_i.
Eigen::VectorXd compress_repeat_spectrum(const Spectrum& source, const Eigen::VectorXd& target_grid, bool folded);

// Graph-signal operators. Downsampling requires |source| = M |target|,
// upsampling |target| = L |source|.

GraphSignal spectral_downsample_index(const SamplingContext& ctx, const GraphSignal& f, std::size_t m, bool folded);
GraphSignal spectral_downsample_spectrum(const SamplingContext& ctx, const GraphSignal& f, std::size_t m, bool folded);
GraphSignal spectral_upsample_index(const SamplingContext& ctx, const GraphSignal& f, std::size_t l, bool folded);
GraphSignal spectral_upsample_spectrum(const SamplingContext& ctx, const GraphSignal& f, std::size_t l, bool folded);

/// Downsampling at the ratio |source| / |target| >= 1, any sizes.
GraphSignal fractional_downsample(const SamplingContext& ctx, const GraphSignal& f, SpectralMode mode, bool folded);
/// Upsampling at the ratio |target| / |source| >= 1, any sizes.
GraphSignal fractional_upsample(const SamplingContext& ctx, const GraphSignal& f, SpectralMode mode, bool folded);

/// Main (first segment) and aliasing (remaining segments) parts of index-domain
/// downsampling; their sum is fractional_downsample(ctx, f, index, folded).
struct AliasSplit {
    GraphSignal main;
    GraphSignal alias;
};
AliasSplit split_downsample_index(const SamplingContext& ctx, const GraphSignal& f, bool folded);

// Ideal filters.

/// Zero every coefficient with index > cutoff_index.
Spectrum ideal_lowpass_index(const Spectrum& spectrum, std::size_t cutoff_index);
/// Zero every coefficient whose eigenvalue exceeds cutoff_lambda.
Spectrum ideal_lowpass_lambda(const Spectrum& spectrum, double cutoff_lambda);

}  // namespace gsamp

#pragma once

#include "gsamp/graph.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

namespace gsamp {

/// Ordered eigenpairs of a Laplacian: ascending eigenvalues, orthonormal
/// eigenvector columns with the first non-negligible entry positive.
struct SpectralBasis {
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXd eigenvectors;

    std::size_t size() const noexcept { return static_cast<std::size_t>(eigenvalues.size()); }
    double lambda_max() const { return eigenvalues(eigenvalues.size() - 1); }
    /// Tolerance under which two eigenvalues count as equal.
    double tie_tolerance() const;
    /// [begin, end) index ranges of eigenvalues equal within tie_tolerance().
    std::vector<std::pair<Eigen::Index, Eigen::Index>> eigenvalue_groups() const;
};

/// GFT coefficients together with the eigenvalue grid they are indexed by.
struct Spectrum {
    Eigen::VectorXd coefficients;
    Eigen::VectorXd grid;

    std::size_t size() const noexcept { return static_cast<std::size_t>(coefficients.size()); }
};

/// Dense symmetric eigendecomposition. Within each repeated-eigenvalue group the
/// columns are re-orthonormalised, sign-canonicalised and sorted
/// lexicographically; `ordering_seed` then shuffles columns inside each group.
SpectralBasis eigendecompose(const Laplacian& laplacian, std::optional<std::uint64_t> ordering_seed = std::nullopt);

Spectrum gft(const SpectralBasis& basis, const GraphSignal& signal);
GraphSignal igft(const SpectralBasis& basis, const Spectrum& spectrum);
GraphSignal igft(const SpectralBasis& basis, const Eigen::VectorXd& coefficients);

/// Piecewise-linear interpolant through (grid[k], coefficient[k]). Abscissae
/// equal within `tie_tolerance` are merged and their values averaged.
class SpectrumInterpolant {
public:
    SpectrumInterpolant(const Eigen::VectorXd& grid, const Eigen::VectorXd& values, double tie_tolerance);
    explicit SpectrumInterpolant(const Spectrum& spectrum);

    /// Throws range-error outside [0, upper()] (beyond the merge tolerance).
    double operator()(double lambda) const;

    double lower() const noexcept { return nodes_.front(); }
    double upper() const noexcept { return nodes_.back(); }
    const std::vector<double>& nodes() const noexcept { return nodes_; }
    const std::vector<double>& values() const noexcept { return values_; }

private:
    std::vector<double> nodes_;
    std::vector<double> values_;
    double tolerance_;
};

double interpolate_spectrum(const Spectrum& spectrum, double lambda_query);

/// Grouping tolerance used for eigenvalue ties on a grid with the given maximum.
double eigenvalue_tie_tolerance(double lambda_max);

/// CSV `index,lambda,coefficient`.
void save_spectrum_csv(const Spectrum& spectrum, const std::filesystem::path& path);

}  // namespace gsamp

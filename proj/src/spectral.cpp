#include "gsamp/spectral.hpp"

#include "gsamp/error.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>

namespace gsamp {

double eigenvalue_tie_tolerance(double lambda_max)
{
    return 1e-8 * std::max(1.0, std::abs(lambda_max));
}

double SpectralBasis::tie_tolerance() const
{
    return eigenvalue_tie_tolerance(lambda_max());
}

std::vector<std::pair<Eigen::Index, Eigen::Index>> SpectralBasis::eigenvalue_groups() const
{
    std::vector<std::pair<Eigen::Index, Eigen::Index>> groups;
    const double tol = tie_tolerance();
    const Eigen::Index n = eigenvalues.size();
    Eigen::Index begin = 0;
    for (Eigen::Index i = 1; i <= n; ++i) {
        if (i == n || eigenvalues(i) - eigenvalues(i - 1) > tol) {
            groups.emplace_back(begin, i);
            begin = i;
        }
    }
    return groups;
}

namespace {

void canonicalize_sign(Eigen::Ref<Eigen::VectorXd> v)
{
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (std::abs(v(i)) > 1e-10) {
            if (v(i) < 0.0) {
                v = -v;
            }
            return;
        }
    }
}

void orthonormalize_block(Eigen::Ref<Eigen::MatrixXd> block)
{
    for (Eigen::Index j = 0; j < block.cols(); ++j) {
        for (Eigen::Index i = 0; i < j; ++i) {
            block.col(j) -= block.col(i).dot(block.col(j)) * block.col(i);
        }
        const double norm = block.col(j).norm();
        if (norm < 1e-12) {
            fail(ErrorKind::numeric_error, "degenerate eigenvector block");
        }
        block.col(j) /= norm;
    }
}

void sort_block_lexicographically(Eigen::Ref<Eigen::MatrixXd> block)
{
    std::vector<Eigen::Index> order(static_cast<std::size_t>(block.cols()));
    std::iota(order.begin(), order.end(), 0);
    const Eigen::MatrixXd copy = block;
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
        for (Eigen::Index r = 0; r < copy.rows(); ++r) {
            if (copy(r, a) != copy(r, b)) {
                return copy(r, a) < copy(r, b);
            }
        }
        return false;
    });
    for (std::size_t j = 0; j < order.size(); ++j) {
        block.col(static_cast<Eigen::Index>(j)) = copy.col(order[j]);
    }
}

}  // namespace

SpectralBasis eigendecompose(const Laplacian& laplacian, std::optional<std::uint64_t> ordering_seed)
{
    const Eigen::MatrixXd& l = laplacian.matrix();
    const double scale = std::max(1.0, l.cwiseAbs().maxCoeff());
    if ((l - l.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
        fail(ErrorKind::invalid_parameter, "eigendecompose requires a symmetric matrix");
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(l);
    if (solver.info() != Eigen::Success) {
        fail(ErrorKind::numeric_error, "symmetric eigensolver did not converge");
    }

    SpectralBasis basis{solver.eigenvalues(), solver.eigenvectors()};
    for (Eigen::Index j = 0; j < basis.eigenvectors.cols(); ++j) {
        canonicalize_sign(basis.eigenvectors.col(j));
    }

    std::optional<std::mt19937_64> rng;
    if (ordering_seed) {
        rng.emplace(*ordering_seed);
    }
    for (const auto& [begin, end] : basis.eigenvalue_groups()) {
        const Eigen::Index width = end - begin;
        if (width < 2) {
            continue;
        }
        auto block = basis.eigenvectors.middleCols(begin, width);
        orthonormalize_block(block);
        for (Eigen::Index j = 0; j < width; ++j) {
            canonicalize_sign(block.col(j));
        }
        sort_block_lexicographically(block);
        if (rng) {
            std::vector<Eigen::Index> perm(static_cast<std::size_t>(width));
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), *rng);
            const Eigen::MatrixXd copy = block;
            for (Eigen::Index j = 0; j < width; ++j) {
                block.col(j) = copy.col(perm[static_cast<std::size_t>(j)]);
            }
        }
    }
    return basis;
}

Spectrum gft(const SpectralBasis& basis, const GraphSignal& signal)
{
    require(static_cast<std::size_t>(signal.size()) == basis.size(), "gft: signal length does not match basis size");
    return Spectrum{basis.eigenvectors.transpose() * signal, basis.eigenvalues};
}

GraphSignal igft(const SpectralBasis& basis, const Eigen::VectorXd& coefficients)
{
    require(static_cast<std::size_t>(coefficients.size()) == basis.size(),
            "igft: spectrum length does not match basis size");
    return basis.eigenvectors * coefficients;
}

GraphSignal igft(const SpectralBasis& basis, const Spectrum& spectrum)
{
    return igft(basis, spectrum.coefficients);
}

SpectrumInterpolant::SpectrumInterpolant(const Eigen::VectorXd& grid, const Eigen::VectorXd& values,
                                         double tie_tolerance)
    : tolerance_(tie_tolerance)
{
    require(grid.size() == values.size() && grid.size() > 0, "interpolant needs matching nonempty grid and values");
    std::vector<Eigen::Index> order(static_cast<std::size_t>(grid.size()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) { return grid(a) < grid(b); });

    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i + 1;
        while (j < order.size() && grid(order[j]) - grid(order[j - 1]) <= tolerance_) {
            ++j;
        }
        double x = 0.0;
        double y = 0.0;
        for (std::size_t t = i; t < j; ++t) {
            x += grid(order[t]);
            y += values(order[t]);
        }
        const auto count = static_cast<double>(j - i);
        nodes_.push_back(x / count);
        values_.push_back(y / count);
        i = j;
    }
}

SpectrumInterpolant::SpectrumInterpolant(const Spectrum& spectrum)
    : SpectrumInterpolant(spectrum.grid, spectrum.coefficients,
                          eigenvalue_tie_tolerance(spectrum.grid.size() ? spectrum.grid.maxCoeff() : 0.0))
{
}

double SpectrumInterpolant::operator()(double lambda) const
{
    if (lambda < -tolerance_ || lambda > upper() + tolerance_ || std::isnan(lambda)) {
        fail(ErrorKind::range_error, "spectrum query " + std::to_string(lambda) + " outside [0, " +
                                         std::to_string(upper()) + "]");
    }
    if (lambda <= nodes_.front()) {
        return values_.front();
    }
    if (lambda >= nodes_.back()) {
        return values_.back();
    }
    const auto hi = static_cast<std::size_t>(std::upper_bound(nodes_.begin(), nodes_.end(), lambda) - nodes_.begin());
    const std::size_t lo = hi - 1;
    const double t = (lambda - nodes_[lo]) / (nodes_[hi] - nodes_[lo]);
    return values_[lo] + t * (values_[hi] - values_[lo]);
}

double interpolate_spectrum(const Spectrum& spectrum, double lambda_query)
{
    return SpectrumInterpolant(spectrum)(lambda_query);
}

void save_spectrum_csv(const Spectrum& spectrum, const std::filesystem::path& path)
{
    std::ofstream out(path);
    if (!out) {
        fail(ErrorKind::io_error, "cannot write " + path.string());
    }
    out.precision(17);
    out << "index,lambda,coefficient\n";
    for (Eigen::Index k = 0; k < spectrum.coefficients.size(); ++k) {
        out << k << ',' << spectrum.grid(k) << ',' << spectrum.coefficients(k) << '\n';
    }
}

}  // namespace gsamp

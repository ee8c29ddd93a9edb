#pragma once

#include "gsamp/graph.hpp"
#include "gsamp/spectral.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

namespace gsamp::testing {

// Seeded helpers for the hand-rolled property tests.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double normal() { return normal_(engine_); }
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
    std::size_t index(std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(engine_); }

    Eigen::VectorXd vector(Eigen::Index n)
    {
        Eigen::VectorXd v(n);
        for (Eigen::Index i = 0; i < n; ++i) {
            v(i) = normal();
        }
        return v;
    }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_;
};

/// Random signal whose GFT coefficients vanish at index >= cutoff.
inline GraphSignal bandlimited(const SpectralBasis& basis, std::size_t cutoff, Rng& rng)
{
    Eigen::VectorXd c = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(basis.size()));
    c.head(static_cast<Eigen::Index>(cutoff)) = rng.vector(static_cast<Eigen::Index>(cutoff));
    return igft(basis, c);
}

/// Closed-form path Laplacian spectrum 2 - 2 cos(pi k / N).
inline Eigen::VectorXd path_eigenvalues(std::size_t n)
{
    Eigen::VectorXd out(static_cast<Eigen::Index>(n));
    for (std::size_t k = 0; k < n; ++k) {
        out(static_cast<Eigen::Index>(k)) = 2.0 - 2.0 * std::cos(std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
    }
    return out;
}

/// Closed-form ring Laplacian spectrum 2 - 2 cos(2 pi k / N), ascending.
inline Eigen::VectorXd ring_eigenvalues(std::size_t n)
{
    std::vector<double> v;
    for (std::size_t k = 0; k < n; ++k) {
        v.push_back(2.0 - 2.0 * std::cos(2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n)));
    }
    std::sort(v.begin(), v.end());
    return Eigen::Map<Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

/// Explicit sampling matrix [I I ...] (or [I J I J ...] when folded), N/M x N.
inline Eigen::MatrixXd sampling_matrix(Eigen::Index n, Eigen::Index m, bool folded)
{
    const Eigen::Index r = n / m;
    Eigen::MatrixXd s = Eigen::MatrixXd::Zero(r, n);
    for (Eigen::Index q = 0; q < m; ++q) {
        for (Eigen::Index k = 0; k < r; ++k) {
            const Eigen::Index col = (folded && q % 2 == 1) ? q * r + (r - 1 - k) : q * r + k;
            s(k, col) = 1.0;
        }
    }
    return s;
}

/// Naive O(N^2) DFT written independently of the library.
inline Eigen::VectorXcd naive_dft(const Eigen::VectorXcd& x, double sign = -1.0)
{
    const Eigen::Index n = x.size();
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        for (Eigen::Index t = 0; t < n; ++t) {
            out(k) += x(t) * std::polar(1.0, sign * 2.0 * std::numbers::pi * static_cast<double>(k * t) / static_cast<double>(n));
        }
    }
    return out;
}

inline double relative_error(const Eigen::VectorXd& a, const Eigen::VectorXd& b)
{
    return (a - b).norm() / std::max(b.norm(), 1e-300);
}

}  // namespace gsamp::testing

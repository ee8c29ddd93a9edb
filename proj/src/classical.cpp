#include "gsamp/classical.hpp"

#include "gsamp/error.hpp"

#include <cmath>
#include <complex>
#include <numbers>

namespace gsamp::classical {

namespace {

using cd = std::complex<double>;

Eigen::MatrixXcd fourier_matrix(Eigen::Index n, double sign)
{
    Eigen::MatrixXcd w(n, n);
    const double step = sign * 2.0 * std::numbers::pi / static_cast<double>(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        for (Eigen::Index t = 0; t < n; ++t) {
            // reduce k*t mod n first so the phase stays accurate for large n
            const auto phase = static_cast<double>((k * t) % n) * step;
            w(k, t) = std::polar(1.0, phase);
        }
    }
    return w;
}

Eigen::VectorXd real_part_checked(const Eigen::VectorXcd& v)
{
    const double scale = std::max(1.0, v.cwiseAbs().maxCoeff());
    if (v.imag().cwiseAbs().maxCoeff() > 1e-8 * scale) {
        fail(ErrorKind::numeric_error, "inverse DFT of a real-signal spectrum produced an imaginary part");
    }
    return v.real();
}

}  // namespace

TimeSignal::TimeSignal(Eigen::VectorXd samples) : samples_(std::move(samples))
{
    require(samples_.size() >= 1, "time signal needs at least one sample");
}

Eigen::VectorXcd dft(const Eigen::VectorXcd& f)
{
    return fourier_matrix(f.size(), -1.0) * f;
}

Eigen::VectorXcd idft(const Eigen::VectorXcd& spectrum)
{
    const auto n = spectrum.size();
    return fourier_matrix(n, 1.0) * spectrum / static_cast<double>(n);
}

Eigen::MatrixXcd dft_basis(std::size_t n)
{
    require(n >= 1, "DFT basis needs n >= 1");
    const auto nn = static_cast<Eigen::Index>(n);
    return fourier_matrix(nn, 1.0) / std::sqrt(static_cast<double>(n));
}

TimeSignal downsample_time(const TimeSignal& f, std::size_t m)
{
    const std::size_t n = f.size();
    require(m >= 1 && n % m == 0, "downsampling factor must divide the signal length");
    Eigen::VectorXd out(static_cast<Eigen::Index>(n / m));
    for (Eigen::Index i = 0; i < out.size(); ++i) {
        out(i) = f.samples()(i * static_cast<Eigen::Index>(m));
    }
    return TimeSignal(std::move(out));
}

TimeSignal downsample_dft(const TimeSignal& f, std::size_t m)
{
    const std::size_t n = f.size();
    require(m >= 1 && n % m == 0, "downsampling factor must divide the signal length");
    const auto reduced = static_cast<Eigen::Index>(n / m);
    const Eigen::VectorXcd spectrum = dft(f.samples().cast<cd>());
    Eigen::VectorXcd folded = Eigen::VectorXcd::Zero(reduced);
    for (Eigen::Index p = 0; p < static_cast<Eigen::Index>(m); ++p) {
        folded += spectrum.segment(p * reduced, reduced);
    }
    folded /= static_cast<double>(m);
    return TimeSignal(real_part_checked(idft(folded)));
}

TimeSignal upsample_time(const TimeSignal& f, std::size_t l)
{
    require(l >= 1, "upsampling factor must be >= 1");
    const auto n = static_cast<Eigen::Index>(f.size());
    Eigen::VectorXd out = Eigen::VectorXd::Zero(n * static_cast<Eigen::Index>(l));
    for (Eigen::Index i = 0; i < n; ++i) {
        out(i * static_cast<Eigen::Index>(l)) = f.samples()(i);
    }
    return TimeSignal(std::move(out));
}

TimeSignal upsample_dft(const TimeSignal& f, std::size_t l)
{
    require(l >= 1, "upsampling factor must be >= 1");
    const auto n = static_cast<Eigen::Index>(f.size());
    const Eigen::VectorXcd spectrum = dft(f.samples().cast<cd>());
    Eigen::VectorXcd repeated(n * static_cast<Eigen::Index>(l));
    for (Eigen::Index p = 0; p < static_cast<Eigen::Index>(l); ++p) {
        repeated.segment(p * n, n) = spectrum;
    }
    return TimeSignal(real_part_checked(idft(repeated)));
}

}  // namespace gsamp::classical

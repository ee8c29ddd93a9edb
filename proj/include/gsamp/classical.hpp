#pragma once

#include <Eigen/Dense>

#include <cstddef>

namespace gsamp::classical {

/// Ordinary discrete-time signal, length >= 1.
class TimeSignal {
public:
    explicit TimeSignal(Eigen::VectorXd samples);

    const Eigen::VectorXd& samples() const noexcept { return samples_; }
    std::size_t size() const noexcept { return static_cast<std::size_t>(samples_.size()); }

private:
    Eigen::VectorXd samples_;
};

/// Unnormalised forward DFT, F[k] = sum_n f[n] exp(-j 2 pi k n / N).
Eigen::VectorXcd dft(const Eigen::VectorXcd& f);
/// Inverse of dft(), carrying the 1/N factor.
Eigen::VectorXcd idft(const Eigen::VectorXcd& spectrum);

/// Unitary DFT eigenbasis of the N-ring Laplacian: column k is
/// exp(j 2 pi k n / N) / sqrt(N), so its conjugate transpose is the analysis map.
Eigen::MatrixXcd dft_basis(std::size_t n);

/// Keep every Mth sample. M must divide N.
TimeSignal downsample_time(const TimeSignal& f, std::size_t m);
/// F_d[k] = (1/M) sum_p F[pN/M + k], followed by a length-N/M inverse DFT.
TimeSignal downsample_dft(const TimeSignal& f, std::size_t m);

/// Insert L-1 zeros after every sample.
TimeSignal upsample_time(const TimeSignal& f, std::size_t l);
/// F_u[pN + k] = F[k], followed by a length-NL inverse DFT.
TimeSignal upsample_dft(const TimeSignal& f, std::size_t l);

}  // namespace gsamp::classical

#include "gsamp/classical.hpp"
#include "gsamp/error.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace gsamp;
using namespace gsamp::classical;

namespace {

std::vector<std::size_t> divisors(std::size_t n)
{
    std::vector<std::size_t> out;
    for (std::size_t d = 1; d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("DFT matches a naive sum and inverts")
{
    testing::Rng rng(1);
    for (Eigen::Index n : {1, 2, 7, 16, 33}) {
        const Eigen::VectorXcd x = rng.vector(n).cast<std::complex<double>>() + std::complex<double>(0, 1) * rng.vector(n);
        CHECK((dft(x) - testing::naive_dft(x)).cwiseAbs().maxCoeff() < 1e-10);
        CHECK((idft(dft(x)) - x).cwiseAbs().maxCoeff() < 1e-12 * n);
        const Eigen::MatrixXcd u = dft_basis(static_cast<std::size_t>(n));
        CHECK((u.adjoint() * u - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("time-domain and DFT-domain downsampling agree")
{
    testing::Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = rng.index(1, 64);
        const auto ds = divisors(n);
        const std::size_t m = ds[rng.index(0, ds.size() - 1)];
        const TimeSignal f(rng.vector(static_cast<Eigen::Index>(n)));
        const Eigen::VectorXd a = downsample_time(f, m).samples();
        const Eigen::VectorXd b = downsample_dft(f, m).samples();
        REQUIRE(a.size() == static_cast<Eigen::Index>(n / m));
        CHECK((a - b).cwiseAbs().maxCoeff() <= 1e-10);
    }
}

TEST_CASE("time-domain and DFT-domain upsampling agree")
{
    testing::Rng rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = rng.index(1, 32);
        const std::size_t l = rng.index(1, 64 / n);
        const TimeSignal f(rng.vector(static_cast<Eigen::Index>(n)));
        const Eigen::VectorXd a = upsample_time(f, l).samples();
        const Eigen::VectorXd b = upsample_dft(f, l).samples();
        REQUIRE(a.size() == static_cast<Eigen::Index>(n * l));
        CHECK((a - b).cwiseAbs().maxCoeff() <= 1e-10);
    }
}

TEST_CASE("sampling factor must divide the length")
{
    const TimeSignal f(Eigen::VectorXd::Ones(10));
    CHECK_THROWS_AS(downsample_time(f, 3), Error);
    CHECK_THROWS_AS(downsample_dft(f, 4), Error);
    CHECK_THROWS_AS(upsample_time(f, 0), Error);
    CHECK_THROWS_AS(TimeSignal(Eigen::VectorXd()), Error);
}

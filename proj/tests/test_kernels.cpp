#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include "dlgmd/error.hpp"
#include "dlgmd/kernels.hpp"
#include "dlgmd/layers.hpp"
#include "support.hpp"

using namespace dlgmd;

TEST_CASE("gaussian weights at sigma 1, radius 1") {
    const SpatialKernel g = gaussian_kernel(1.0, 1);
    CHECK(g.side() == 3);
    CHECK(g.at(0, 0) == doctest::Approx(0.15915).epsilon(1e-4));
    CHECK(g.at(0, 0) == doctest::Approx(1.0 / (2.0 * std::numbers::pi)).epsilon(1e-15));
    CHECK(g.at(1, 0) == doctest::Approx(0.09653).epsilon(1e-4));
    CHECK(g.at(1, 0) == doctest::Approx(std::exp(-0.5) / (2.0 * std::numbers::pi)).epsilon(1e-15));
}

TEST_CASE("gaussian is radially symmetric and never renormalized") {
    for (double sigma : {0.35, 1.0, 2.5, 5.0}) {
        const SpatialKernel g = gaussian_kernel(sigma, 4);
        CHECK(g.at(1, 0) == g.at(0, 1));
        CHECK(g.at(1, 0) == g.at(-1, 0));
        CHECK(g.at(2, -3) == g.at(-3, 2));
    }
    // Wide kernels lose their tails to truncation.
    CHECK(gaussian_kernel(2.5, 4).sum() < 1.0);
    CHECK(gaussian_kernel(5.0, 4).sum() < 0.5);
    // Small sigma: the truncated sum exceeds 1 because the grid undersamples.
    CHECK(gaussian_kernel(0.35, 4).sum() > 1.0);
}

TEST_CASE("gaussian rejects bad arguments") {
    CHECK_THROWS_AS(gaussian_kernel(0.0, 2), Error);
    CHECK_THROWS_AS(gaussian_kernel(1.0, 0), Error);
    try {
        gaussian_kernel(-1.0, 2);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonPositiveSigma);
    }
}

TEST_CASE("latency values") {
    CHECK(latency_at(0, 0, -0.1, 0.5, 0.7) == doctest::Approx(-0.1 + 1.0 / 1.5));
    CHECK(latency_at(0, 0, -0.1, 0.5, 0.7) == doctest::Approx(0.5667).epsilon(1e-4));
    CHECK(latency_at(50, 50, -0.1, 0.5, 0.7) == doctest::Approx(1.9));
    for (int x = -4; x <= 4; ++x) {
        CHECK(latency_at(x, 3, 0.0, 0.0, 0.0) == 1.0);
    }
}

TEST_CASE("degenerate latency is rejected") {
    // beta = 0 with lambda > 0 blows up far from the centre.
    CHECK_THROWS_AS(latency_at(40, 40, 0.0, 0.0, 2.0), Error);
}

TEST_CASE("latency quantization rounds half up with a floor of one") {
    CHECK(quantize_latency(0.5667) == 1);
    CHECK(quantize_latency(1.49) == 1);
    CHECK(quantize_latency(1.5) == 2);
    CHECK(quantize_latency(1.9) == 2);
    CHECK(quantize_latency(-3.0) == 1);
    CHECK(quantize_latency(2.5) == 3);
}

TEST_CASE("constant-latency bank is a single slice holding the whole gaussian") {
    const InhibitionKernelBank bank = inhibition_bank(1.8, 0.0, 0.0, 0.0, 4);
    REQUIRE(bank.slices().size() == 1);
    CHECK(bank.slices()[0].delay == 1);
    CHECK(bank.slices()[0].weights == gaussian_kernel(1.8, 4));
    CHECK(bank.max_delay() == 1);
}

TEST_CASE("radial latency splits near and far offsets") {
    const InhibitionKernelBank bank = inhibition_bank(5.0, -0.1, 0.5, 0.7, 4);
    REQUIRE(bank.slices().size() == 2);
    const SpatialKernel& near = bank.slices()[0].weights;
    const SpatialKernel& far = bank.slices()[1].weights;
    CHECK(bank.slices()[0].delay == 1);
    CHECK(bank.slices()[1].delay == 2);
    for (int dy = -4; dy <= 4; ++dy) {
        for (int dx = -4; dx <= 4; ++dx) {
            const double tau = latency_at(dx, dy, -0.1, 0.5, 0.7);
            CAPTURE(dx);
            CAPTURE(dy);
            if (tau < 1.5) {
                CHECK(near.at(dx, dy) > 0.0);
                CHECK(far.at(dx, dy) == 0.0);
            } else {
                CHECK(near.at(dx, dy) == 0.0);
                CHECK(far.at(dx, dy) > 0.0);
            }
        }
    }
    CHECK(near.at(2, 0) > 0.0);
    CHECK(far.at(2, 1) > 0.0);
}

TEST_CASE("slices partition the gaussian exactly") {
    for (int s = 1; s <= 9; ++s) {
        const ParameterSet p = preset(s);
        const KernelSet k = build_kernels(p);
        const SpatialKernel full = gaussian_kernel(p.sigma_i, p.radius);
        CHECK(k.inhibition.combined() == full);
        CHECK(k.excitation == gaussian_kernel(p.sigma_e, p.radius));

        // Every offset lives in exactly one slice.
        for (int dy = -p.radius; dy <= p.radius; ++dy) {
            for (int dx = -p.radius; dx <= p.radius; ++dx) {
                int owners = 0;
                for (const DelaySlice& slice : k.inhibition.slices()) {
                    owners += slice.weights.at(dx, dy) != 0.0 ? 1 : 0;
                }
                CHECK(owners == 1);
            }
        }
    }
}

TEST_CASE("latency is non-decreasing in squared distance") {
    for (double lambda : {0.3, 0.7, 1.2}) {
        for (double beta : {0.0, 0.5, 2.0}) {
            double previous = -1e300;
            // Distinct squared distances on a radius-6 grid, ascending.
            std::set<int> radii2;
            for (int y = 0; y <= 6; ++y) {
                for (int x = 0; x <= 6; ++x) {
                    radii2.insert(x * x + y * y);
                }
            }
            for (int r2 : radii2) {
                if (beta == 0.0 && lambda * lambda * r2 > 30.0) {
                    continue;  // diverges without beta
                }
                const double tau = latency_at(std::sqrt(static_cast<double>(r2)), 0.0, -0.1, beta, lambda);
                CHECK(tau >= previous);
                previous = tau;
            }
        }
    }
}

TEST_CASE("interpolated latency conserves weight per offset") {
    const InhibitionKernelBank bank = inhibition_bank(2.5, -0.1, 0.5, 0.7, 4, LatencyQuantization::Interpolate);
    const SpatialKernel full = gaussian_kernel(2.5, 4);
    const SpatialKernel sum = bank.combined();
    for (int dy = -4; dy <= 4; ++dy) {
        for (int dx = -4; dx <= 4; ++dx) {
            CHECK(sum.at(dx, dy) == doctest::Approx(full.at(dx, dy)).epsilon(1e-14));
        }
    }
    CHECK(bank.max_delay() >= 2);
}

TEST_CASE("bank validation") {
    const SpatialKernel g = gaussian_kernel(1.0, 2);
    CHECK_THROWS_AS(InhibitionKernelBank(2, {}), Error);
    CHECK_THROWS_AS(InhibitionKernelBank(2, {DelaySlice{0, g}}), Error);
    CHECK_THROWS_AS(InhibitionKernelBank(2, {DelaySlice{1, g}, DelaySlice{1, g}}), Error);
    CHECK_THROWS_AS(InhibitionKernelBank(3, {DelaySlice{1, g}}), Error);
    const InhibitionKernelBank sorted(2, {DelaySlice{3, g}, DelaySlice{1, g}});
    CHECK(sorted.slices().front().delay == 1);
    CHECK(sorted.max_delay() == 3);
}

TEST_CASE("spatial kernel validation and taps") {
    CHECK_THROWS_AS(SpatialKernel(1, std::vector<double>(8, 1.0)), Error);
    CHECK_THROWS_AS(SpatialKernel(1, std::vector<double>{1, 1, 1, 1, -1, 1, 1, 1, 1}), Error);
    const SpatialKernel k(1, {0, 2, 0, 0, 5, 0, 0, 0, 3});
    REQUIRE(k.taps().size() == 3);
    CHECK(k.taps()[0].dx == 0);
    CHECK(k.taps()[0].dy == -1);
    CHECK(k.taps()[0].weight == 2.0);
    CHECK(k.taps()[2].dx == 1);
    CHECK(k.taps()[2].dy == 1);
    CHECK(k.sum() == 10.0);
}

TEST_CASE("bank dump lists every slice") {
    std::ostringstream out;
    write_bank(out, build_kernels(preset(7)).inhibition);
    const std::string text = out.str();
    CHECK(text.find("delay 1") != std::string::npos);
    CHECK(text.find("delay 2") != std::string::npos);
}

TEST_CASE("ablation bank and constant-delay path are bit-identical") {
    std::mt19937 rng(11);
    for (double sigma : {1.0, 1.8, 2.5}) {
        const InhibitionKernelBank bank = inhibition_bank(sigma, 0.0, 0.0, 0.0, 4);
        const SpatialKernel g = gaussian_kernel(sigma, 4);
        for (int trial = 0; trial < 10; ++trial) {
            const FrameHistory h = testing::random_history(rng, 19, 13, 2);
            CHECK(inhibition(h, bank) == constant_delay_inhibition(h, g));
        }
    }
}

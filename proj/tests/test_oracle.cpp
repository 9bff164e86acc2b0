#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "dlgmd/kernels.hpp"
#include "dlgmd/layers.hpp"
#include "dlgmd/oracle.hpp"
#include "support.hpp"

using namespace dlgmd;

namespace {

Frame fast_dpc(const FrameHistory& h, const SpatialKernel& w_e, const InhibitionKernelBank& bank, double a) {
    return presynaptic_sum(excitation(*h.at_lag(0), w_e), inhibition(h, bank), a);
}

double max_abs_diff(const Frame& a, const Frame& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a.pixels()[i] - b.pixels()[i]));
    }
    return worst;
}

}  // namespace

TEST_CASE("oracle matches the fast path on random banks") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> strength(0.0, 3.0);
    for (int trial = 0; trial < 30; ++trial) {
        const int d_max = 1 + trial % 3;
        const int radius = 1 + trial % 4;
        const SpatialKernel w_e = testing::random_kernel(rng, radius);
        const InhibitionKernelBank bank = testing::random_bank(rng, radius, d_max);
        const FrameHistory h = testing::random_history(rng, 16, 16, static_cast<std::size_t>(d_max) + 1);
        const double a = strength(rng);
        CAPTURE(trial);
        CHECK(max_abs_diff(fast_dpc(h, w_e, bank, a), dpc_oracle(h, w_e, bank, a)) <= 1e-9);
    }
}

TEST_CASE("oracle from raw parameters matches every preset") {
    std::mt19937 rng(77);
    for (int s = 1; s <= 9; ++s) {
        const ParameterSet p = preset(s);
        const KernelSet k = build_kernels(p);
        const FrameHistory h =
            testing::random_history(rng, 16, 16, static_cast<std::size_t>(k.inhibition.max_delay()) + 1);
        const Frame expected = dpc_oracle(h, p.sigma_e, p.sigma_i, p.alpha, p.beta, p.lambda, p.a, p.radius);
        CAPTURE(s);
        CHECK(max_abs_diff(fast_dpc(h, k.excitation, k.inhibition, p.a), expected) <= 1e-9);
    }
}

TEST_CASE("oracle on zero history is zero") {
    const KernelSet k = build_kernels(preset(4));
    FrameHistory h(2);
    h.push(Frame(10, 10));
    h.push(Frame(10, 10));
    CHECK(dpc_oracle(h, k.excitation, k.inhibition, 1.5) == Frame(10, 10));
}

TEST_CASE("impulse response of a single-slice bank") {
    const double a = 1.5;
    const SpatialKernel g_e = gaussian_kernel(0.35, 2);
    const SpatialKernel g_i = gaussian_kernel(1.0, 2);
    const InhibitionKernelBank bank = inhibition_bank(1.0, 0.0, 0.0, 0.0, 2);
    Frame impulse(9, 9);
    impulse.at(4, 4) = 1.0;

    // Impulse now, nothing before: excitation alone.
    FrameHistory now(2);
    now.push(Frame(9, 9));
    now.push(impulse);
    // Impulse one frame ago, nothing now: inhibition alone, rectified away.
    FrameHistory after(2);
    after.push(impulse);
    after.push(Frame(9, 9));
    // Impulse held for two frames: the difference of Gaussians, rectified.
    FrameHistory held(2);
    held.push(impulse);
    held.push(impulse);

    for (const FrameHistory* h : {&now, &after, &held}) {
        const Frame s = dpc_oracle(*h, g_e, bank, a);
        CHECK(max_abs_diff(s, fast_dpc(*h, g_e, bank, a)) <= 1e-12);
        for (int y = 0; y < 9; ++y) {
            for (int x = 0; x < 9; ++x) {
                const bool inside = std::abs(x - 4) <= 2 && std::abs(y - 4) <= 2;
                const double e = inside ? g_e.at(x - 4, y - 4) : 0.0;
                const double i = inside ? g_i.at(x - 4, y - 4) : 0.0;
                double expected = 0.0;
                if (h == &now) {
                    expected = e;
                } else if (h == &held) {
                    expected = std::max(0.0, e - a * i);
                }
                CHECK(s.at(x, y) == doctest::Approx(expected).epsilon(1e-12));
            }
        }
    }
}

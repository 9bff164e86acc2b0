#pragma once

#include <random>
#include <vector>

#include "dlgmd/frame.hpp"
#include "dlgmd/kernels.hpp"
#include "dlgmd/state.hpp"

namespace dlgmd::testing {

inline Frame random_frame(std::mt19937& rng, int w, int h, double hi = 255.0) {
    std::uniform_real_distribution<double> dist(0.0, hi);
    std::vector<double> data(static_cast<std::size_t>(w) * static_cast<std::size_t>(h));
    for (double& v : data) {
        v = dist(rng);
    }
    return Frame(w, h, std::move(data));
}

// Sparse frame: roughly `density` of the pixels are non-zero.
inline Frame sparse_frame(std::mt19937& rng, int w, int h, double density) {
    std::bernoulli_distribution on(density);
    std::uniform_real_distribution<double> level(1.0, 50.0);
    Frame f(w, h);
    for (double& v : f.pixels()) {
        v = on(rng) ? level(rng) : 0.0;
    }
    return f;
}

inline FrameHistory random_history(std::mt19937& rng, int w, int h, std::size_t depth) {
    FrameHistory history(depth);
    for (std::size_t i = 0; i < depth; ++i) {
        history.push(random_frame(rng, w, h, 40.0));
    }
    return history;
}

inline SpatialKernel random_kernel(std::mt19937& rng, int radius, double zero_prob = 0.3) {
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    std::bernoulli_distribution zero(zero_prob);
    const auto side = static_cast<std::size_t>(2 * radius + 1);
    std::vector<double> w(side * side);
    for (double& v : w) {
        v = zero(rng) ? 0.0 : dist(rng);
    }
    return SpatialKernel(radius, std::move(w));
}

// Bank with slices at delays 1..d_max, each with random weights.
inline InhibitionKernelBank random_bank(std::mt19937& rng, int radius, int d_max) {
    std::vector<DelaySlice> slices;
    for (int d = 1; d <= d_max; ++d) {
        slices.push_back(DelaySlice{d, random_kernel(rng, radius, 0.5)});
    }
    return InhibitionKernelBank(radius, std::move(slices));
}

}  // namespace dlgmd::testing

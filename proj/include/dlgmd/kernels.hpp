#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "dlgmd/params.hpp"

namespace dlgmd {

/// One non-zero weight of a kernel at offset (dx, dy).
struct Tap {
    int dx;
    int dy;
    double weight;
};

/// Square (2r+1) x (2r+1) grid of non-negative weights indexed by offset.
class SpatialKernel {
public:
    SpatialKernel(int radius, std::vector<double> weights);

    int radius() const noexcept { return radius_; }
    int side() const noexcept { return 2 * radius_ + 1; }
    double at(int dx, int dy) const {
        return weights_[static_cast<std::size_t>((dy + radius_) * side() + (dx + radius_))];
    }
    std::span<const double> weights() const noexcept { return weights_; }
    double sum() const noexcept;

    /// Non-zero weights in row-major offset order (dy outer, dx inner).
    const std::vector<Tap>& taps() const noexcept { return taps_; }

    friend bool operator==(const SpatialKernel& a, const SpatialKernel& b) {
        return a.radius_ == b.radius_ && a.weights_ == b.weights_;
    }

private:
    int radius_;
    std::vector<double> weights_;
    std::vector<Tap> taps_;
};

/// The inhibitory weights that arrive with one particular frame delay.
struct DelaySlice {
    int delay;
    SpatialKernel weights;
};

/// Discretized spatial-temporal inhibition distribution: the spatial Gaussian
/// partitioned into slices by whole-frame latency.
class InhibitionKernelBank {
public:
    /// Slices must share one radius, have distinct delays >= 1 and be non-empty.
    /// They are stored sorted by delay.
    InhibitionKernelBank(int radius, std::vector<DelaySlice> slices);

    int radius() const noexcept { return radius_; }
    int max_delay() const noexcept { return slices_.back().delay; }
    const std::vector<DelaySlice>& slices() const noexcept { return slices_; }

    /// Element-wise sum of every slice.
    SpatialKernel combined() const;

private:
    int radius_;
    std::vector<DelaySlice> slices_;
};

/// exp(-(x^2 + y^2) / (2 sigma^2)) / (2 pi sigma^2) on |x|, |y| <= radius.
/// Truncated, never renormalized.
SpatialKernel gaussian_kernel(double sigma, int radius);

/// Inhibitory latency in frames at offset (x, y):
/// alpha + 1 / (beta + exp(-lambda^2 (x^2 + y^2))).
double latency_at(double x, double y, double alpha, double beta, double lambda);

/// Round-half-up delay floored at one frame.
int quantize_latency(double tau);

InhibitionKernelBank inhibition_bank(double sigma_i, double alpha, double beta, double lambda, int radius,
                                     LatencyQuantization mode = LatencyQuantization::Round);

/// Excitation kernel and inhibition bank for a parameter set.
struct KernelSet {
    SpatialKernel excitation;
    InhibitionKernelBank inhibition;
};

KernelSet build_kernels(const ParameterSet& params);

/// Human-readable dumps, one weight grid per block.
void write_kernel(std::ostream& out, const SpatialKernel& kernel);
void write_bank(std::ostream& out, const InhibitionKernelBank& bank);

}  // namespace dlgmd

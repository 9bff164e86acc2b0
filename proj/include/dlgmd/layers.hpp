#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dlgmd/frame.hpp"
#include "dlgmd/kernels.hpp"
#include "dlgmd/state.hpp"

namespace dlgmd {

// Per-layer operations of the detector. All spatial filters use zero padding
// and the convolution convention out(x, y) = sum_{u,v} in(x - u, y - v) w(u, v).

/// |current - previous| per pixel.
Frame photoreceptor(const Frame& current, const Frame& previous);

/// Spatial excitation of the photoreceptor frame. Throws KernelTooLarge when
/// the kernel radius exceeds min(width, height).
Frame excitation(const Frame& p, const SpatialKernel& w_e);

/// Delayed inhibition. Lag 0 of `history` is the current photoreceptor frame;
/// slice d reads lag d. Slices whose lag is not yet available contribute zero.
Frame inhibition(const FrameHistory& history, const InhibitionKernelBank& bank);

/// Single-kernel inhibition reading only lag 1 (constant one-frame latency).
Frame constant_delay_inhibition(const FrameHistory& history, const SpatialKernel& w_i);

/// max(0, E - a * I) per pixel.
Frame presynaptic_sum(const Frame& e, const Frame& i, double a);

/// Offsets covered by a square grouping window of side `omega`. Even sides
/// lean toward positive offsets: omega = 4 covers {-1, 0, 1, 2}.
struct WindowSpan {
    int lo;
    int hi;
};
WindowSpan grouping_span(int omega);

/// G = S * Ce with Ce = k * (window sum of S around each pixel).
Frame grouping(const Frame& s, double k, int omega);

/// Whole-field luminance change of the previous frame (lag 1); 0 when absent.
double ffi_level(const FrameHistory& history);

/// T_de = FFI / (n_cell * m) * T0.
double decay_threshold(double ffi, double t0, double m, std::size_t n_cell);

/// Keep G where G >= t_de, zero elsewhere.
Frame apply_threshold(const Frame& g, double t_de);

/// K = sum |G~|.
double membrane_potential(const Frame& g_thresholded);

bool spike(double k_norm, double t_mp);

/// True iff the last n_sp flags (oldest first) all spiked.
bool confirm_collision(std::span<const bool> spike_history, int n_sp);
bool confirm_collision(const SpikeHistory& history, int n_sp);

enum class NormalizationMode { Offline, Online };

/// k / max over the sequence; all zeros when the maximum is zero.
std::vector<double> normalize_offline(std::span<const double> k_raw);

/// k / max(running peak, 1). Updates `peak`.
double normalize_online(double k_raw, double& peak);

}  // namespace dlgmd

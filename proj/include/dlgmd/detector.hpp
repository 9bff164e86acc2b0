#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dlgmd/frame.hpp"
#include "dlgmd/kernels.hpp"
#include "dlgmd/layers.hpp"
#include "dlgmd/params.hpp"
#include "dlgmd/state.hpp"

namespace dlgmd {

/// Per-frame outputs of the detector.
struct FrameReport {
    std::uint64_t frame_index = 0;
    double ffi = 0.0;
    double t_de = 0.0;
    double k_raw = 0.0;
    double k_norm = 0.0;
    std::optional<double> attenuation_db;  // absent when P or S sums to zero
    bool spike = false;
    bool alarm = false;

    // Attenuation inputs: whole-field sums of the P and S layers.
    double p_sum = 0.0;
    double s_sum = 0.0;
};

/// Full layer stack of one step, for inspection and dumps.
struct LayerOutputs {
    Frame p, e, i, s, g, g_thresholded;
};

/// Streaming looming detector for a fixed frame size.
///
/// Each step runs P -> E, I -> S -> FFI / T_de -> G -> G~ -> K -> spike ->
/// alarm. The first frame has no predecessor, so its P layer is all zero.
/// Spikes and alarms are suppressed while frame_index <= max delay, i.e.
/// until every inhibition slice has a real past frame to read. k_norm and
/// spike use online (running-peak) normalization; see renormalize() for the
/// two-pass offline variant.
class Detector {
public:
    Detector(int width, int height, const ParameterSet& params);
    Detector(int width, int height, const ParameterSet& params, KernelSet kernels);

    FrameReport step(const Frame& luminance, LayerOutputs* layers = nullptr);
    void reset();

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    int max_delay() const noexcept { return kernels_.inhibition.max_delay(); }
    const ParameterSet& params() const noexcept { return params_; }
    const KernelSet& kernels() const noexcept { return kernels_; }
    const DetectorState& state() const noexcept { return state_; }

private:
    int width_;
    int height_;
    ParameterSet params_;
    KernelSet kernels_;
    DetectorState state_;
};

/// Recompute k_norm, spike and alarm over a finished sequence. Offline mode
/// divides by the sequence maximum; online mode replays the running peak.
/// Warm-up frames (index <= max_delay) never spike.
void renormalize(std::span<FrameReport> reports, NormalizationMode mode, const ParameterSet& params,
                 int max_delay);

/// Run a whole sequence through a fresh detector.
std::vector<FrameReport> detect(std::span<const Frame> frames, const ParameterSet& params,
                                NormalizationMode mode = NormalizationMode::Offline);

}  // namespace dlgmd

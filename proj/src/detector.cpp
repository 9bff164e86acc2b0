#include "dlgmd/detector.hpp"

#include <string>

#include "dlgmd/analysis.hpp"
#include "dlgmd/error.hpp"

namespace dlgmd {

Detector::Detector(int width, int height, const ParameterSet& params)
    : Detector(width, height, params, build_kernels(params)) {}

Detector::Detector(int width, int height, const ParameterSet& params, KernelSet kernels)
    : width_(width),
      height_(height),
      params_(validate(params)),
      kernels_(std::move(kernels)),
      state_(static_cast<std::size_t>(kernels_.inhibition.max_delay()) + 1,
             static_cast<std::size_t>(params.n_sp)) {
    if (width <= 0 || height <= 0) {
        throw Error(ErrorCode::InvalidFrame, "dimensions", "detector dimensions must be positive");
    }
    if (kernels_.excitation.radius() > std::min(width, height)) {
        throw Error(ErrorCode::KernelTooLarge, "radius",
                    "kernel radius " + std::to_string(kernels_.excitation.radius()) +
                        " exceeds frame size " + std::to_string(width) + "x" + std::to_string(height));
    }
}

void Detector::reset() {
    state_ = DetectorState(static_cast<std::size_t>(max_delay()) + 1, static_cast<std::size_t>(params_.n_sp));
}

FrameReport Detector::step(const Frame& luminance, LayerOutputs* layers) {
    if (luminance.width() != width_ || luminance.height() != height_) {
        throw Error(ErrorCode::DimensionMismatch, "frame",
                    "detector expects " + std::to_string(width_) + "x" + std::to_string(height_) +
                        ", got " + std::to_string(luminance.width()) + "x" +
                        std::to_string(luminance.height()));
    }

    Frame p = state_.previous_luminance ? photoreceptor(luminance, *state_.previous_luminance)
                                        : Frame(width_, height_);
    state_.previous_luminance = luminance;
    state_.p_history.push(std::move(p));
    const Frame& current = *state_.p_history.at_lag(0);

    Frame e = excitation(current, kernels_.excitation);
    Frame i = inhibition(state_.p_history, kernels_.inhibition);
    Frame s = presynaptic_sum(e, i, params_.a);

    FrameReport report;
    report.frame_index = state_.frame_index;
    report.ffi = ffi_level(state_.p_history);
    report.t_de = decay_threshold(report.ffi, params_.t0, params_.m, current.size());

    Frame g = grouping(s, params_.k, params_.omega);
    Frame g_thresholded = apply_threshold(g, report.t_de);
    report.k_raw = membrane_potential(g_thresholded);
    report.k_norm = normalize_online(report.k_raw, state_.peak_mp);

    report.p_sum = current.sum();
    report.s_sum = s.sum();
    report.attenuation_db = attenuation(report.p_sum, report.s_sum);

    const bool warm = state_.frame_index > static_cast<std::uint64_t>(max_delay());
    report.spike = warm && spike(report.k_norm, params_.t_mp);
    state_.spike_history.push(report.spike);
    report.alarm = warm && confirm_collision(state_.spike_history, params_.n_sp);

    if (layers != nullptr) {
        *layers = LayerOutputs{current, std::move(e), std::move(i), std::move(s), std::move(g),
                               std::move(g_thresholded)};
    }
    ++state_.frame_index;
    return report;
}

void renormalize(std::span<FrameReport> reports, NormalizationMode mode, const ParameterSet& params,
                 int max_delay) {
    std::vector<double> k_norm(reports.size());
    if (mode == NormalizationMode::Offline) {
        std::vector<double> k_raw;
        k_raw.reserve(reports.size());
        for (const FrameReport& r : reports) {
            k_raw.push_back(r.k_raw);
        }
        k_norm = normalize_offline(k_raw);
    } else {
        double peak = 0.0;
        for (std::size_t n = 0; n < reports.size(); ++n) {
            k_norm[n] = normalize_online(reports[n].k_raw, peak);
        }
    }

    SpikeHistory history(static_cast<std::size_t>(params.n_sp));
    for (std::size_t n = 0; n < reports.size(); ++n) {
        FrameReport& r = reports[n];
        const bool warm = r.frame_index > static_cast<std::uint64_t>(max_delay);
        r.k_norm = k_norm[n];
        r.spike = warm && spike(r.k_norm, params.t_mp);
        history.push(r.spike);
        r.alarm = warm && confirm_collision(history, params.n_sp);
    }
}

std::vector<FrameReport> detect(std::span<const Frame> frames, const ParameterSet& params,
                                NormalizationMode mode) {
    std::vector<FrameReport> reports;
    if (frames.empty()) {
        return reports;
    }
    Detector detector(frames.front().width(), frames.front().height(), params);
    reports.reserve(frames.size());
    for (const Frame& f : frames) {
        reports.push_back(detector.step(f));
    }
    if (mode == NormalizationMode::Offline) {
        renormalize(reports, mode, params, detector.max_delay());
    }
    return reports;
}

}  // namespace dlgmd

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dlgmd/detector.hpp"
#include "dlgmd/stimulus.hpp"

namespace dlgmd {

/// Per-frame detector outputs of one run plus what produced them.
struct RunTrace {
    std::string label;
    ParameterSet params;
    int max_delay = 1;
    std::vector<FrameReport> reports;
    std::vector<double> p_sum;
    std::vector<double> s_sum;

    std::size_t size() const noexcept { return reports.size(); }
    std::vector<double> k_raw() const;
    std::vector<double> k_norm() const;
};

RunTrace run_trace(std::span<const Frame> frames, const ParameterSet& params,
                   NormalizationMode mode = NormalizationMode::Offline, std::string label = {});

/// Streaming variant: `source(i)` yields frame i for i in [0, count).
RunTrace run_trace(int count, const std::function<Frame(int)>& source, const ParameterSet& params,
                   NormalizationMode mode = NormalizationMode::Offline, std::string label = {});

/// 10 log10(s_sum / p_sum) in dB; absent when either sum is zero.
std::optional<double> attenuation(double p_sum, double s_sum);

/// Inclusive frame range.
struct FrameWindow {
    std::size_t first = 0;
    std::size_t last = 0;
};

/// A ratio of mean activities. When the denominator mean is zero and the
/// numerator is not, the ratio is reported as above the cap (mirrors the
/// ">10000" convention) and `value` is +infinity.
struct Ratio {
    double value = 0.0;
    bool above_cap = false;
};

/// DA above this bar means looming is reliably separated from distractors.
inline constexpr double kCompetentDa = 10.0;
bool competent(const Ratio& da);

std::size_t peak_frame(const RunTrace& trace);

/// Frames after warm-up and before boundary exit: drops the first
/// max_delay + 2 frames and the last 2.
FrameWindow steady_state(const RunTrace& trace);

double mean_k_raw(const RunTrace& trace, FrameWindow window);

/// mean k_raw over peak_frame +- half_window divided by the same over
/// fp_frame +- half_window. Throws WindowOutOfRange if a window leaves the run.
Ratio distinguishability(const RunTrace& trace, std::size_t peak_frame, std::size_t fp_frame,
                         std::size_t half_window = 5);

/// Mean k_raw around the looming run's peak (window clipped to the run)
/// divided by the translating run's steady-state mean.
Ratio looming_contrast(const RunTrace& looming, const RunTrace& translating, std::size_t half_window = 5);

/// Peak normalized MP inside `looming_window` over mean normalized MP outside it.
Ratio sharpness(const RunTrace& trace, FrameWindow looming_window);

/// Mean of the defined attenuation values inside `window`.
std::optional<double> mean_attenuation(const RunTrace& trace, FrameWindow window);

struct SweepCell {
    double speed = 0.0;
    double sigma_e = 0.0;
    double sigma_i = 0.0;
    std::optional<double> mean_attenuation;
};

/// For every (speed, sigma_e, sigma_i) render the translating scene and
/// average attenuation over its steady-state frames.
std::vector<SweepCell> attenuation_sweep(const SceneSpec& base, std::span<const double> speeds,
                                         std::span<const double> sigma_e_grid,
                                         std::span<const double> sigma_i_grid, const ParameterSet& base_params);

}  // namespace dlgmd

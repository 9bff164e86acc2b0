#include "dlgmd/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dlgmd/error.hpp"

namespace dlgmd {

namespace {

Ratio ratio_of(double numerator, double denominator) {
    if (denominator > 0.0) {
        return {numerator / denominator, false};
    }
    if (numerator > 0.0) {
        return {std::numeric_limits<double>::infinity(), true};
    }
    return {0.0, false};
}

FrameWindow centred(const RunTrace& trace, std::size_t centre, std::size_t half_window, const char* what) {
    if (centre < half_window || centre + half_window >= trace.size()) {
        throw Error(ErrorCode::WindowOutOfRange, what,
                    "window " + std::to_string(centre) + " +- " + std::to_string(half_window) +
                        " leaves a run of " + std::to_string(trace.size()) + " frames");
    }
    return {centre - half_window, centre + half_window};
}

void check_window(const RunTrace& trace, FrameWindow w) {
    if (w.first > w.last || w.last >= trace.size()) {
        throw Error(ErrorCode::WindowOutOfRange, "window",
                    "[" + std::to_string(w.first) + ", " + std::to_string(w.last) + "] outside a run of " +
                        std::to_string(trace.size()) + " frames");
    }
}

}  // namespace

std::vector<double> RunTrace::k_raw() const {
    std::vector<double> out;
    out.reserve(reports.size());
    for (const FrameReport& r : reports) {
        out.push_back(r.k_raw);
    }
    return out;
}

std::vector<double> RunTrace::k_norm() const {
    std::vector<double> out;
    out.reserve(reports.size());
    for (const FrameReport& r : reports) {
        out.push_back(r.k_norm);
    }
    return out;
}

RunTrace run_trace(int count, const std::function<Frame(int)>& source, const ParameterSet& params,
                   NormalizationMode mode, std::string label) {
    RunTrace trace;
    trace.label = std::move(label);
    trace.params = params;
    if (count <= 0) {
        return trace;
    }
    Frame first = source(0);
    Detector detector(first.width(), first.height(), params);
    trace.max_delay = detector.max_delay();
    trace.reports.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        const FrameReport r = detector.step(i == 0 ? first : source(i));
        trace.p_sum.push_back(r.p_sum);
        trace.s_sum.push_back(r.s_sum);
        trace.reports.push_back(r);
    }
    if (mode == NormalizationMode::Offline) {
        renormalize(trace.reports, mode, params, trace.max_delay);
    }
    return trace;
}

RunTrace run_trace(std::span<const Frame> frames, const ParameterSet& params, NormalizationMode mode,
                   std::string label) {
    return run_trace(
        static_cast<int>(frames.size()), [&](int i) { return frames[static_cast<std::size_t>(i)]; }, params,
        mode, std::move(label));
}

std::optional<double> attenuation(double p_sum, double s_sum) {
    if (!(p_sum > 0.0) || !(s_sum > 0.0)) {
        return std::nullopt;
    }
    return 10.0 * std::log10(s_sum / p_sum);
}

bool competent(const Ratio& da) { return da.above_cap || da.value > kCompetentDa; }

std::size_t peak_frame(const RunTrace& trace) {
    if (trace.reports.empty()) {
        throw Error(ErrorCode::WindowOutOfRange, "trace", "empty run has no peak");
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < trace.size(); ++i) {
        if (trace.reports[i].k_raw > trace.reports[best].k_raw) {
            best = i;
        }
    }
    return best;
}

FrameWindow steady_state(const RunTrace& trace) {
    const std::size_t skip = static_cast<std::size_t>(trace.max_delay) + 2;
    if (trace.size() < skip + 3) {
        throw Error(ErrorCode::WindowOutOfRange, "trace",
                    "run of " + std::to_string(trace.size()) + " frames has no steady-state frames");
    }
    return {skip, trace.size() - 3};
}

double mean_k_raw(const RunTrace& trace, FrameWindow window) {
    check_window(trace, window);
    double sum = 0.0;
    for (std::size_t i = window.first; i <= window.last; ++i) {
        sum += trace.reports[i].k_raw;
    }
    return sum / static_cast<double>(window.last - window.first + 1);
}

Ratio distinguishability(const RunTrace& trace, std::size_t peak, std::size_t fp, std::size_t half_window) {
    const FrameWindow peak_window = centred(trace, peak, half_window, "peak_frame");
    const FrameWindow fp_window = centred(trace, fp, half_window, "fp_frame");
    return ratio_of(mean_k_raw(trace, peak_window), mean_k_raw(trace, fp_window));
}

Ratio looming_contrast(const RunTrace& looming, const RunTrace& translating, std::size_t half_window) {
    const std::size_t peak = peak_frame(looming);
    const FrameWindow window{peak >= half_window ? peak - half_window : 0,
                             std::min(looming.size() - 1, peak + half_window)};
    return ratio_of(mean_k_raw(looming, window), mean_k_raw(translating, steady_state(translating)));
}

Ratio sharpness(const RunTrace& trace, FrameWindow looming_window) {
    check_window(trace, looming_window);
    double peak = 0.0;
    double outside = 0.0;
    std::size_t outside_count = 0;
    for (std::size_t i = 0; i < trace.size(); ++i) {
        const double k = trace.reports[i].k_norm;
        if (i >= looming_window.first && i <= looming_window.last) {
            peak = std::max(peak, k);
        } else {
            outside += k;
            ++outside_count;
        }
    }
    if (outside_count == 0) {
        throw Error(ErrorCode::WindowOutOfRange, "window", "looming window covers the whole run");
    }
    return ratio_of(peak, outside / static_cast<double>(outside_count));
}

std::optional<double> mean_attenuation(const RunTrace& trace, FrameWindow window) {
    check_window(trace, window);
    double sum = 0.0;
    std::size_t n = 0;
    for (std::size_t i = window.first; i <= window.last; ++i) {
        if (const auto& a = trace.reports[i].attenuation_db) {
            sum += *a;
            ++n;
        }
    }
    if (n == 0) {
        return std::nullopt;
    }
    return sum / static_cast<double>(n);
}

std::vector<SweepCell> attenuation_sweep(const SceneSpec& base, std::span<const double> speeds,
                                         std::span<const double> sigma_e_grid,
                                         std::span<const double> sigma_i_grid, const ParameterSet& base_params) {
    if (sigma_e_grid.empty() || sigma_i_grid.empty()) {
        throw Error(ErrorCode::InvalidParameter, sigma_e_grid.empty() ? "sigma_e_grid" : "sigma_i_grid",
                    "sweep grid is empty");
    }
    const std::vector<std::vector<Frame>> scenes = speed_sweep(base, speeds);
    std::vector<SweepCell> cells;
    cells.reserve(speeds.size() * sigma_e_grid.size() * sigma_i_grid.size());
    for (std::size_t s = 0; s < speeds.size(); ++s) {
        for (double sigma_e : sigma_e_grid) {
            for (double sigma_i : sigma_i_grid) {
                ParameterSet params = base_params;
                params.sigma_e = sigma_e;
                params.sigma_i = sigma_i;
                const RunTrace trace = run_trace(scenes[s], params, NormalizationMode::Offline);
                cells.push_back({speeds[s], sigma_e, sigma_i, mean_attenuation(trace, steady_state(trace))});
            }
        }
    }
    return cells;
}

}  // namespace dlgmd

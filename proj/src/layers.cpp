#include "dlgmd/layers.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "convolve.hpp"
#include "dlgmd/error.hpp"

namespace dlgmd {

Frame photoreceptor(const Frame& current, const Frame& previous) {
    require_same_shape(current, previous, "photoreceptor");
    Frame out(current.width(), current.height());
    auto c = current.pixels();
    auto p = previous.pixels();
    auto o = out.pixels();
    for (std::size_t i = 0; i < o.size(); ++i) {
        o[i] = std::abs(c[i] - p[i]);
    }
    return out;
}

Frame excitation(const Frame& p, const SpatialKernel& w_e) {
    if (w_e.radius() > std::min(p.width(), p.height())) {
        throw Error(ErrorCode::KernelTooLarge, "radius",
                    "kernel radius " + std::to_string(w_e.radius()) + " exceeds frame size " +
                        std::to_string(p.width()) + "x" + std::to_string(p.height()));
    }
    Frame out(p.width(), p.height());
    detail::accumulate_taps(p, w_e.taps(), out);
    return out;
}

Frame inhibition(const FrameHistory& history, const InhibitionKernelBank& bank) {
    const Frame* current = history.at_lag(0);
    if (current == nullptr) {
        throw Error(ErrorCode::EmptyHistory, "history", "inhibition needs at least one P frame");
    }
    Frame out(current->width(), current->height());
    for (const DelaySlice& slice : bank.slices()) {
        const Frame* past = history.at_lag(static_cast<std::size_t>(slice.delay));
        if (past == nullptr) {
            continue;
        }
        require_same_shape(*current, *past, "history");
        detail::accumulate_taps(*past, slice.weights.taps(), out);
    }
    return out;
}

Frame constant_delay_inhibition(const FrameHistory& history, const SpatialKernel& w_i) {
    const Frame* current = history.at_lag(0);
    if (current == nullptr) {
        throw Error(ErrorCode::EmptyHistory, "history", "inhibition needs at least one P frame");
    }
    Frame out(current->width(), current->height());
    if (const Frame* past = history.at_lag(1)) {
        require_same_shape(*current, *past, "history");
        detail::accumulate_taps(*past, w_i.taps(), out);
    }
    return out;
}

Frame presynaptic_sum(const Frame& e, const Frame& i, double a) {
    require_same_shape(e, i, "presynaptic_sum");
    Frame out(e.width(), e.height());
    auto ev = e.pixels();
    auto iv = i.pixels();
    auto o = out.pixels();
    for (std::size_t n = 0; n < o.size(); ++n) {
        o[n] = std::max(0.0, ev[n] - a * iv[n]);
    }
    return out;
}

WindowSpan grouping_span(int omega) {
    if (omega < 1) {
        throw Error(ErrorCode::InvalidWindow, "omega", "grouping window side must be >= 1");
    }
    const int lo = -((omega - 1) / 2);
    return {lo, lo + omega - 1};
}

Frame grouping(const Frame& s, double k, int omega) {
    const auto [lo, hi] = grouping_span(omega);
    const int width = s.width();
    const int height = s.height();

    // Horizontal then vertical box sums; Ce is the separable window sum.
    Frame horizontal(width, height);
    for (int y = 0; y < height; ++y) {
        auto in = s.row(y);
        auto out = horizontal.row(y);
        for (int x = 0; x < width; ++x) {
            double acc = 0.0;
            for (int dx = std::max(lo, -x); dx <= std::min(hi, width - 1 - x); ++dx) {
                acc += in[static_cast<std::size_t>(x + dx)];
            }
            out[static_cast<std::size_t>(x)] = acc;
        }
    }
    Frame g(width, height);
    for (int y = 0; y < height; ++y) {
        auto sv = s.row(y);
        auto gv = g.row(y);
        for (int x = 0; x < width; ++x) {
            const double centre = sv[static_cast<std::size_t>(x)];
            if (centre == 0.0) {
                continue;
            }
            double ce = 0.0;
            for (int dy = std::max(lo, -y); dy <= std::min(hi, height - 1 - y); ++dy) {
                ce += horizontal.at(x, y + dy);
            }
            gv[static_cast<std::size_t>(x)] = centre * (k * ce);
        }
    }
    return g;
}

double ffi_level(const FrameHistory& history) {
    if (history.empty()) {
        throw Error(ErrorCode::EmptyHistory, "history", "FFI needs at least one P frame");
    }
    const Frame* previous = history.at_lag(1);
    if (previous == nullptr) {
        return 0.0;
    }
    double sum = 0.0;
    for (double v : previous->pixels()) {
        sum += std::abs(v);
    }
    return sum;
}

double decay_threshold(double ffi, double t0, double m, std::size_t n_cell) {
    if (n_cell == 0 || !(m > 0.0)) {
        throw Error(ErrorCode::NonPositiveDenominator, n_cell == 0 ? "n_cell" : "m",
                    "decay threshold denominator n_cell * m must be > 0");
    }
    return ffi / (static_cast<double>(n_cell) * m) * t0;
}

Frame apply_threshold(const Frame& g, double t_de) {
    Frame out(g.width(), g.height());
    auto in = g.pixels();
    auto o = out.pixels();
    for (std::size_t i = 0; i < o.size(); ++i) {
        o[i] = in[i] >= t_de ? in[i] : 0.0;
    }
    return out;
}

double membrane_potential(const Frame& g_thresholded) {
    double k = 0.0;
    for (double v : g_thresholded.pixels()) {
        k += std::abs(v);
    }
    return k;
}

bool spike(double k_norm, double t_mp) { return k_norm >= t_mp; }

namespace {

template <typename Flags>
bool last_n_all_set(const Flags& flags, int n_sp) {
    if (n_sp < 1) {
        throw Error(ErrorCode::InvalidParameter, "n_sp", "must be >= 1");
    }
    const auto needed = static_cast<std::ptrdiff_t>(n_sp);
    const auto size = static_cast<std::ptrdiff_t>(std::size(flags));
    if (size < needed) {
        return false;
    }
    return std::all_of(std::begin(flags) + (size - needed), std::end(flags), [](bool s) { return s; });
}

}  // namespace

bool confirm_collision(std::span<const bool> spike_history, int n_sp) {
    return last_n_all_set(spike_history, n_sp);
}

bool confirm_collision(const SpikeHistory& history, int n_sp) {
    return last_n_all_set(history.flags(), n_sp);
}

std::vector<double> normalize_offline(std::span<const double> k_raw) {
    std::vector<double> out(k_raw.size(), 0.0);
    double peak = 0.0;
    for (double k : k_raw) {
        peak = std::max(peak, k);
    }
    if (peak <= 0.0) {
        return out;
    }
    for (std::size_t i = 0; i < k_raw.size(); ++i) {
        out[i] = k_raw[i] / peak;
    }
    return out;
}

double normalize_online(double k_raw, double& peak) {
    peak = std::max(peak, k_raw);
    return k_raw / std::max(peak, 1.0);
}

}  // namespace dlgmd

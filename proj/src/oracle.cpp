#include "dlgmd/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dlgmd/error.hpp"

namespace dlgmd {

namespace {

const Frame& require_current(const FrameHistory& history) {
    const Frame* current = history.at_lag(0);
    if (current == nullptr) {
        throw Error(ErrorCode::EmptyHistory, "history", "oracle needs at least one P frame");
    }
    return *current;
}

double sample(const Frame* f, int x, int y) {
    if (f == nullptr || x < 0 || y < 0 || x >= f->width() || y >= f->height()) {
        return 0.0;
    }
    return f->at(x, y);
}

}  // namespace

Frame dpc_oracle(const FrameHistory& history, double sigma_e, double sigma_i, double alpha, double beta,
                 double lambda, double a, int radius) {
    const Frame& current = require_current(history);
    Frame s(current.width(), current.height());
    for (int y = 0; y < current.height(); ++y) {
        for (int x = 0; x < current.width(); ++x) {
            double e = 0.0;
            double i = 0.0;
            for (int v = -radius; v <= radius; ++v) {
                for (int u = -radius; u <= radius; ++u) {
                    const double r2 = static_cast<double>(u * u + v * v);
                    const double ge = std::exp(-r2 / (2.0 * sigma_e * sigma_e)) /
                                      (2.0 * std::numbers::pi * sigma_e * sigma_e);
                    const double gi = std::exp(-r2 / (2.0 * sigma_i * sigma_i)) /
                                      (2.0 * std::numbers::pi * sigma_i * sigma_i);
                    const double tau = alpha + 1.0 / (beta + std::exp(-lambda * lambda * r2));
                    const int delay = std::max(1, static_cast<int>(std::floor(tau + 0.5)));
                    e += sample(&current, x - u, y - v) * ge;
                    i += sample(history.at_lag(static_cast<std::size_t>(delay)), x - u, y - v) * gi;
                }
            }
            s.at(x, y) = std::max(0.0, e - a * i);
        }
    }
    return s;
}

Frame dpc_oracle(const FrameHistory& history, const SpatialKernel& w_e, const InhibitionKernelBank& bank,
                 double a) {
    const Frame& current = require_current(history);
    Frame s(current.width(), current.height());
    for (int y = 0; y < current.height(); ++y) {
        for (int x = 0; x < current.width(); ++x) {
            double e = 0.0;
            for (int v = -w_e.radius(); v <= w_e.radius(); ++v) {
                for (int u = -w_e.radius(); u <= w_e.radius(); ++u) {
                    e += sample(&current, x - u, y - v) * w_e.at(u, v);
                }
            }
            double i = 0.0;
            for (const DelaySlice& slice : bank.slices()) {
                const Frame* past = history.at_lag(static_cast<std::size_t>(slice.delay));
                for (int v = -bank.radius(); v <= bank.radius(); ++v) {
                    for (int u = -bank.radius(); u <= bank.radius(); ++u) {
                        i += sample(past, x - u, y - v) * slice.weights.at(u, v);
                    }
                }
            }
            s.at(x, y) = std::max(0.0, e - a * i);
        }
    }
    return s;
}

}  // namespace dlgmd

#include "dlgmd/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <ostream>
#include <string>

#include "dlgmd/error.hpp"

namespace dlgmd {

namespace {

std::size_t grid_size(int radius) {
    const auto side = static_cast<std::size_t>(2 * radius + 1);
    return side * side;
}

void check_sigma(double sigma, const char* field) {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw Error(ErrorCode::NonPositiveSigma, field, "must be finite and > 0");
    }
}

void check_radius(int radius) {
    if (radius < 1) {
        throw Error(ErrorCode::NonPositiveRadius, "radius", "must be >= 1");
    }
}

}  // namespace

SpatialKernel::SpatialKernel(int radius, std::vector<double> weights)
    : radius_(radius), weights_(std::move(weights)) {
    check_radius(radius);
    if (weights_.size() != grid_size(radius)) {
        throw Error(ErrorCode::InvalidParameter, "weights",
                    "kernel of radius " + std::to_string(radius) + " needs " +
                        std::to_string(grid_size(radius)) + " weights");
    }
    for (int dy = -radius_; dy <= radius_; ++dy) {
        for (int dx = -radius_; dx <= radius_; ++dx) {
            const double w = at(dx, dy);
            if (!(w >= 0.0) || !std::isfinite(w)) {
                throw Error(ErrorCode::InvalidParameter, "weights", "weights must be finite and >= 0");
            }
            if (w != 0.0) {
                taps_.push_back({dx, dy, w});
            }
        }
    }
}

double SpatialKernel::sum() const noexcept {
    double s = 0.0;
    for (double w : weights_) {
        s += w;
    }
    return s;
}

InhibitionKernelBank::InhibitionKernelBank(int radius, std::vector<DelaySlice> slices)
    : radius_(radius), slices_(std::move(slices)) {
    check_radius(radius);
    if (slices_.empty()) {
        throw Error(ErrorCode::InvalidParameter, "slices", "bank needs at least one delay slice");
    }
    std::sort(slices_.begin(), slices_.end(),
              [](const DelaySlice& l, const DelaySlice& r) { return l.delay < r.delay; });
    for (std::size_t i = 0; i < slices_.size(); ++i) {
        if (slices_[i].delay < 1) {
            throw Error(ErrorCode::InvalidParameter, "delay", "slice delays must be >= 1");
        }
        if (i > 0 && slices_[i].delay == slices_[i - 1].delay) {
            throw Error(ErrorCode::InvalidParameter, "delay",
                        "duplicate slice delay " + std::to_string(slices_[i].delay));
        }
        if (slices_[i].weights.radius() != radius_) {
            throw Error(ErrorCode::InvalidParameter, "radius", "all slices must share the bank radius");
        }
    }
}

SpatialKernel InhibitionKernelBank::combined() const {
    std::vector<double> sum(grid_size(radius_), 0.0);
    for (const DelaySlice& slice : slices_) {
        const auto w = slice.weights.weights();
        for (std::size_t i = 0; i < sum.size(); ++i) {
            sum[i] += w[i];
        }
    }
    return SpatialKernel(radius_, std::move(sum));
}

SpatialKernel gaussian_kernel(double sigma, int radius) {
    check_sigma(sigma, "sigma");
    check_radius(radius);
    const double two_var = 2.0 * sigma * sigma;
    const double norm = 1.0 / (std::numbers::pi * two_var);
    std::vector<double> w;
    w.reserve(grid_size(radius));
    for (int dy = -radius; dy <= radius; ++dy) {
        for (int dx = -radius; dx <= radius; ++dx) {
            w.push_back(norm * std::exp(-static_cast<double>(dx * dx + dy * dy) / two_var));
        }
    }
    return SpatialKernel(radius, std::move(w));
}

double latency_at(double x, double y, double alpha, double beta, double lambda) {
    const double denom = beta + std::exp(-lambda * lambda * (x * x + y * y));
    if (!(denom > std::numeric_limits<double>::epsilon())) {
        throw Error(ErrorCode::DegenerateLatency, "beta",
                    "latency denominator beta + exp(-lambda^2 r^2) is not positive");
    }
    return alpha + 1.0 / denom;
}

int quantize_latency(double tau) {
    return std::max(1, static_cast<int>(std::floor(tau + 0.5)));
}

InhibitionKernelBank inhibition_bank(double sigma_i, double alpha, double beta, double lambda, int radius,
                                     LatencyQuantization mode) {
    const SpatialKernel spatial = gaussian_kernel(sigma_i, radius);
    const std::size_t cells = grid_size(radius);
    std::map<int, std::vector<double>> grids;
    auto slot = [&](int delay) -> std::vector<double>& {
        auto [it, inserted] = grids.try_emplace(delay);
        if (inserted) {
            it->second.assign(cells, 0.0);
        }
        return it->second;
    };

    std::size_t i = 0;
    for (int dy = -radius; dy <= radius; ++dy) {
        for (int dx = -radius; dx <= radius; ++dx, ++i) {
            const double w = spatial.at(dx, dy);
            const double tau = latency_at(dx, dy, alpha, beta, lambda);
            if (mode == LatencyQuantization::Round || tau <= 1.0) {
                slot(quantize_latency(tau))[i] = w;
                continue;
            }
            const double lower = std::floor(tau);
            const double frac = tau - lower;
            slot(static_cast<int>(lower))[i] += w * (1.0 - frac);
            if (frac > 0.0) {
                slot(static_cast<int>(lower) + 1)[i] += w * frac;
            }
        }
    }

    std::vector<DelaySlice> slices;
    for (auto& [delay, grid] : grids) {
        slices.push_back({delay, SpatialKernel(radius, std::move(grid))});
    }
    return InhibitionKernelBank(radius, std::move(slices));
}

KernelSet build_kernels(const ParameterSet& params) {
    validate(params);
    return {gaussian_kernel(params.sigma_e, params.radius),
            inhibition_bank(params.sigma_i, params.alpha, params.beta, params.lambda, params.radius,
                            params.latency_quantization)};
}

void write_kernel(std::ostream& out, const SpatialKernel& kernel) {
    const int r = kernel.radius();
    out << "# radius " << r << " sum " << kernel.sum() << '\n';
    for (int dy = -r; dy <= r; ++dy) {
        for (int dx = -r; dx <= r; ++dx) {
            out << (dx == -r ? "" : " ") << kernel.at(dx, dy);
        }
        out << '\n';
    }
}

void write_bank(std::ostream& out, const InhibitionKernelBank& bank) {
    out << "# inhibition bank radius " << bank.radius() << " max_delay " << bank.max_delay() << '\n';
    for (const DelaySlice& slice : bank.slices()) {
        out << "[delay " << slice.delay << "]\n";
        write_kernel(out, slice.weights);
    }
}

}  // namespace dlgmd

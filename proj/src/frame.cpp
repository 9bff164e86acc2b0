#include "dlgmd/frame.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "dlgmd/error.hpp"

namespace dlgmd {

namespace {

void check_dims(int width, int height) {
    if (width <= 0 || height <= 0) {
        throw Error(ErrorCode::InvalidFrame, "dimensions",
                    "frame dimensions must be positive, got " + std::to_string(width) + "x" +
                        std::to_string(height));
    }
}

}  // namespace

Frame::Frame(int width, int height, double fill) : width_(width), height_(height) {
    check_dims(width, height);
    if (!(fill >= 0.0) || !std::isfinite(fill)) {
        throw Error(ErrorCode::InvalidFrame, "fill", "fill value must be finite and >= 0");
    }
    data_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill);
}

Frame::Frame(int width, int height, std::vector<double> data)
    : width_(width), height_(height), data_(std::move(data)) {
    check_dims(width, height);
    if (data_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
        throw Error(ErrorCode::InvalidFrame, "data",
                    "expected " + std::to_string(static_cast<long long>(width) * height) +
                        " samples, got " + std::to_string(data_.size()));
    }
    for (double v : data_) {
        if (!(v >= 0.0) || !std::isfinite(v)) {
            throw Error(ErrorCode::InvalidFrame, "data", "samples must be finite and >= 0");
        }
    }
}

Frame Frame::from_bytes(int width, int height, std::span<const std::uint8_t> bytes) {
    std::vector<double> data(bytes.begin(), bytes.end());
    return Frame(width, height, std::move(data));
}

std::span<const double> Frame::row(int y) const {
    return std::span<const double>(data_).subspan(index(0, y), static_cast<std::size_t>(width_));
}

std::span<double> Frame::row(int y) {
    return std::span<double>(data_).subspan(index(0, y), static_cast<std::size_t>(width_));
}

double Frame::sum() const noexcept { return std::accumulate(data_.begin(), data_.end(), 0.0); }

double Frame::max() const noexcept {
    if (data_.empty()) {
        return 0.0;
    }
    return *std::max_element(data_.begin(), data_.end());
}

Frame Frame::scaled(double factor) const {
    if (!(factor >= 0.0)) {
        throw Error(ErrorCode::InvalidParameter, "factor", "scale factor must be >= 0");
    }
    Frame out = *this;
    for (double& v : out.data_) {
        v *= factor;
    }
    return out;
}

void require_same_shape(const Frame& a, const Frame& b, const char* what) {
    if (!a.same_shape(b)) {
        throw Error(ErrorCode::DimensionMismatch, what,
                    std::to_string(a.width()) + "x" + std::to_string(a.height()) + " vs " +
                        std::to_string(b.width()) + "x" + std::to_string(b.height()));
    }
}

}  // namespace dlgmd

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace dlgmd {

/// Row-major grid of non-negative luminance (or layer activity) values.
///
/// Every layer of the detector is represented as a Frame of the input's
/// dimensions. Constructors reject negative or non-finite samples; the
/// mutable accessors are for layer code that only ever writes values >= 0.
class Frame {
public:
    Frame() = default;
    Frame(int width, int height, double fill = 0.0);
    Frame(int width, int height, std::vector<double> data);

    /// Promote 8-bit samples to reals without rescaling.
    static Frame from_bytes(int width, int height, std::span<const std::uint8_t> bytes);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    std::size_t size() const noexcept { return data_.size(); }
    bool empty() const noexcept { return data_.empty(); }

    double at(int x, int y) const { return data_[index(x, y)]; }
    double& at(int x, int y) { return data_[index(x, y)]; }

    std::span<const double> pixels() const noexcept { return data_; }
    std::span<double> pixels() noexcept { return data_; }
    std::span<const double> row(int y) const;
    std::span<double> row(int y);

    double sum() const noexcept;
    double max() const noexcept;
    bool same_shape(const Frame& other) const noexcept {
        return width_ == other.width_ && height_ == other.height_;
    }

    /// Multiply every sample by a non-negative factor.
    Frame scaled(double factor) const;

    friend bool operator==(const Frame&, const Frame&) = default;

private:
    std::size_t index(int x, int y) const noexcept {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
               static_cast<std::size_t>(x);
    }

    int width_ = 0;
    int height_ = 0;
    std::vector<double> data_;
};

/// Throws DimensionMismatch naming `what` when the shapes differ.
void require_same_shape(const Frame& a, const Frame& b, const char* what);

}  // namespace dlgmd

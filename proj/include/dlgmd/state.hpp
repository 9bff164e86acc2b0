#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <vector>

#include "dlgmd/frame.hpp"

namespace dlgmd {

/// Fixed-depth ring buffer of photoreceptor frames.
///
/// Lag 0 is the most recently pushed frame, lag d the frame pushed d steps
/// earlier. Once full, each push overwrites the oldest slot in place.
class FrameHistory {
public:
    explicit FrameHistory(std::size_t depth);

    void push(Frame frame);
    void clear() noexcept;

    std::size_t depth() const noexcept { return slots_.size(); }
    std::size_t size() const noexcept { return count_; }
    bool empty() const noexcept { return count_ == 0; }

    /// nullptr when fewer than lag + 1 frames have been pushed.
    const Frame* at_lag(std::size_t lag) const noexcept;

private:
    std::vector<Frame> slots_;
    std::size_t newest_ = 0;
    std::size_t count_ = 0;
};

/// The last `capacity` spike flags, oldest first.
class SpikeHistory {
public:
    explicit SpikeHistory(std::size_t capacity);

    void push(bool spiked);
    std::size_t capacity() const noexcept { return capacity_; }
    const std::deque<bool>& flags() const noexcept { return flags_; }

private:
    std::size_t capacity_;
    std::deque<bool> flags_;
};

/// Everything a detector carries between frames. Single owner, movable.
struct DetectorState {
    DetectorState(std::size_t history_depth, std::size_t n_sp);

    FrameHistory p_history;
    SpikeHistory spike_history;
    std::optional<Frame> previous_luminance;
    double peak_mp = 0.0;  // running peak for online normalization
    std::uint64_t frame_index = 0;
};

}  // namespace dlgmd

#include "dlgmd/state.hpp"

#include "dlgmd/error.hpp"

namespace dlgmd {

FrameHistory::FrameHistory(std::size_t depth) : slots_(depth) {
    if (depth == 0) {
        throw Error(ErrorCode::InvalidParameter, "depth", "history depth must be >= 1");
    }
}

void FrameHistory::push(Frame frame) {
    newest_ = (count_ == 0) ? 0 : (newest_ + 1) % slots_.size();
    slots_[newest_] = std::move(frame);
    if (count_ < slots_.size()) {
        ++count_;
    }
}

void FrameHistory::clear() noexcept {
    for (Frame& f : slots_) {
        f = Frame();
    }
    newest_ = 0;
    count_ = 0;
}

const Frame* FrameHistory::at_lag(std::size_t lag) const noexcept {
    if (lag >= count_) {
        return nullptr;
    }
    const std::size_t n = slots_.size();
    return &slots_[(newest_ + n - lag) % n];
}

SpikeHistory::SpikeHistory(std::size_t capacity) : capacity_(capacity) {
    if (capacity == 0) {
        throw Error(ErrorCode::InvalidParameter, "n_sp", "spike history capacity must be >= 1");
    }
}

void SpikeHistory::push(bool spiked) {
    flags_.push_back(spiked);
    if (flags_.size() > capacity_) {
        flags_.pop_front();
    }
}

DetectorState::DetectorState(std::size_t history_depth, std::size_t n_sp)
    : p_history(history_depth), spike_history(n_sp) {}

}  // namespace dlgmd

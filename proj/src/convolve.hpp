#pragma once

#include <span>

#include "dlgmd/frame.hpp"
#include "dlgmd/kernels.hpp"

namespace dlgmd::detail {

// dst(x, y) += sum over taps of w * src(x - dx, y - dy), zero outside src.
// Rows are swept once per tap so the innermost loop is a contiguous axpy.
void accumulate_taps(const Frame& src, std::span<const Tap> taps, Frame& dst);

}  // namespace dlgmd::detail

#include "convolve.hpp"

#include <algorithm>

namespace dlgmd::detail {

void accumulate_taps(const Frame& src, std::span<const Tap> taps, Frame& dst) {
    const int width = src.width();
    const int height = src.height();
    for (int y = 0; y < height; ++y) {
        double* out = dst.row(y).data();
        for (const Tap& tap : taps) {
            const int sy = y - tap.dy;
            if (sy < 0 || sy >= height) {
                continue;
            }
            const int x0 = std::max(0, tap.dx);
            const int x1 = std::min(width, width + tap.dx);
            if (x0 >= x1) {
                continue;
            }
            const double* in = src.row(sy).data();
            const int shift = tap.dx;
            const double w = tap.weight;
            for (int x = x0; x < x1; ++x) {
                out[x] += w * in[x - shift];
            }
        }
    }
}

}  // namespace dlgmd::detail

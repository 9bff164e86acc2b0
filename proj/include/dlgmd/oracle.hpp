#pragma once

#include "dlgmd/frame.hpp"
#include "dlgmd/kernels.hpp"
#include "dlgmd/state.hpp"

namespace dlgmd {

/// Reference presynaptic sum S by literal nested sums over offset and delay.
/// Gaussian weights and latencies are evaluated inline per tap; nothing is
/// shared with the optimized path. Intended for frames up to ~32x32.
Frame dpc_oracle(const FrameHistory& history, double sigma_e, double sigma_i, double alpha, double beta,
                 double lambda, double a, int radius);

/// Same literal sums for an arbitrary excitation kernel and inhibition bank,
/// reading weights through the dense grids only.
Frame dpc_oracle(const FrameHistory& history, const SpatialKernel& w_e, const InhibitionKernelBank& bank,
                 double a);

}  // namespace dlgmd

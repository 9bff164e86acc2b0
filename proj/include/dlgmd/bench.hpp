#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "dlgmd/config.hpp"
#include "dlgmd/frame.hpp"
#include "dlgmd/params.hpp"

namespace dlgmd {

struct BenchRow {
    int radius = 0;
    int width = 0;
    int height = 0;
    double median_ms = 0.0;  // per frame
    double fps = 0.0;
};

/// Median per-frame wall time (ms) of the excitation/inhibition stage (E, I
/// and S) over `repetitions` passes of a precomputed photoreceptor sequence,
/// after one untimed warm-up pass.
double time_dpc(std::span<const Frame> p_frames, const ParameterSet& params, int repetitions);

/// One row per (radius, resize) cell over the configured input. Repetitions
/// cycle through all cells in turn so drift affects each cell equally.
/// Requires at least 3 repetitions.
std::vector<BenchRow> bench(const RunConfig& config);

/// Header: r,width,height,median_ms,fps.
void write_bench_csv(std::ostream& out, std::span<const BenchRow> rows);

}  // namespace dlgmd

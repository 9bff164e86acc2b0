#pragma once

#include <filesystem>
#include <vector>

#include "dlgmd/frame.hpp"

namespace dlgmd {

/// Read a netpbm raster (P2, P5, P3 or P6; 8- or 16-bit). Colour images are
/// reduced to luminance 0.299 R + 0.587 G + 0.114 B. Samples are taken as-is,
/// without rescaling by maxval. Throws UnreadableFrame naming the file.
Frame read_netpbm(const std::filesystem::path& path);

/// Write an 8-bit binary graymap (P5); samples are rounded and clamped to [0, 255].
void write_pgm(const std::filesystem::path& path, const Frame& frame);

/// Load every frame file in `dir` whose stem is a decimal index (0001.pgm,
/// 0002.pgm, ...), ordered by index. Needs at least two frames of one size.
std::vector<Frame> load_sequence(const std::filesystem::path& dir);

/// Write frames as 0000.pgm, 0001.pgm, ... into `dir` (created if needed).
void write_sequence(const std::filesystem::path& dir, const std::vector<Frame>& frames);

/// Area-average downsampling to max(1, round(dim * factor)) per axis.
/// factor == 1 returns the frame unchanged. Throws InvalidFactor outside (0, 1].
Frame resize_area(const Frame& frame, double factor);

}  // namespace dlgmd

#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>

#include "dlgmd/analysis.hpp"
#include "dlgmd/detector.hpp"

namespace dlgmd {

/// Shortest round-trip decimal form of `v`.
std::string format_number(double v);

/// Header: frame_index,ffi,t_de,k_raw,k_norm,attenuation_db,spike,alarm.
/// attenuation_db is left empty when undefined.
void write_report_csv(std::ostream& out, std::span<const FrameReport> reports);

/// Header: speed,sigma_e,sigma_i,mean_attenuation_db.
void write_sweep_csv(std::ostream& out, std::span<const SweepCell> cells);

/// Plain-text grid dump of one layer (one row per line, space separated).
void write_layer_grid(const std::filesystem::path& path, const Frame& layer);

}  // namespace dlgmd

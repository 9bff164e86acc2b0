#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dlgmd/analysis.hpp"
#include "dlgmd/layers.hpp"
#include "dlgmd/params.hpp"
#include "dlgmd/stimulus.hpp"

namespace dlgmd {

struct BenchOptions {
    int repetitions = 5;
    std::vector<int> radii{2, 4};
    std::vector<double> resizes{1.0, 0.5};
};

struct SweepOptions {
    std::vector<double> speeds{1, 2, 3, 4};
    std::vector<double> sigma_e_grid{0.35};
    std::vector<double> sigma_i_grid{1.0, 1.8, 2.5};
};

struct RunConfig {
    std::optional<std::filesystem::path> input_dir;
    std::optional<SceneSpec> scene;
    ParameterSet params;
    double resize = 1.0;
    NormalizationMode normalization = NormalizationMode::Offline;
    std::optional<std::filesystem::path> report_path;  // stdout when absent
    std::optional<std::filesystem::path> dump_dir;     // per-layer grids, opt-in
    BenchOptions bench;
    SweepOptions sweep;
};

/// Ordered `key = value` pairs; later entries win.
using Settings = std::vector<std::pair<std::string, std::string>>;

/// Parse `key = value` lines; '#' starts a comment, blank lines are skipped.
/// `source` names the input in error messages.
Settings parse_settings(std::istream& in, const std::string& source);
Settings read_settings(const std::filesystem::path& path);

/// Parse a single `key=value` override.
std::pair<std::string, std::string> parse_override(const std::string& text);

/// Build a config from settings. `preset` is applied before the individual
/// parameter keys regardless of order. Unknown keys and malformed values throw
/// InvalidConfig naming the key; parameters are validated.
RunConfig build_config(const Settings& settings);

std::vector<std::string> known_keys();

/// Exactly one input source and a resize factor in (0, 1].
void require_single_source(const RunConfig& config);

/// Input frames (loaded or rendered), resized by config.resize.
std::vector<Frame> load_input(const RunConfig& config);

/// Run the detector over the configured input, writing per-layer grids to
/// config.dump_dir when set.
RunTrace execute_run(const RunConfig& config);

}  // namespace dlgmd

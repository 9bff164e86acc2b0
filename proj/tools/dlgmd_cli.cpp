#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "dlgmd/analysis.hpp"
#include "dlgmd/bench.hpp"
#include "dlgmd/config.hpp"
#include "dlgmd/error.hpp"
#include "dlgmd/image_io.hpp"
#include "dlgmd/report.hpp"
#include "dlgmd/stimulus.hpp"

namespace fs = std::filesystem;

namespace {

struct CommonOptions {
    std::string config_file;
    std::vector<std::string> overrides;
    std::string report;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("-c,--config", opts.config_file, "key = value config file");
    cmd->add_option("-s,--set", opts.overrides, "override a config key (key=value), repeatable");
}

dlgmd::RunConfig load_config(const CommonOptions& opts) {
    dlgmd::Settings settings;
    if (!opts.config_file.empty()) {
        settings = dlgmd::read_settings(opts.config_file);
    }
    for (const std::string& o : opts.overrides) {
        settings.push_back(dlgmd::parse_override(o));
    }
    return dlgmd::build_config(settings);
}

// Writes to the configured report path, or stdout when none is set.
template <typename Writer>
void emit(const std::optional<fs::path>& path, Writer write) {
    if (!path) {
        write(std::cout);
        return;
    }
    std::ofstream out(*path);
    if (!out) {
        throw dlgmd::Error(dlgmd::ErrorCode::IoFailure, path->string(), "cannot open for writing");
    }
    write(out);
}

void print_warnings(const dlgmd::ParameterSet& params) {
    for (const std::string& w : dlgmd::validation_warnings(params)) {
        std::cerr << "warning: " << w << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"D-LGMD looming detector"};
    app.require_subcommand(1);

    CommonOptions run_opts;
    std::string dump_dir;
    auto* run = app.add_subcommand("run", "run the detector and write a per-frame CSV report");
    add_common(run, run_opts);
    run->add_option("-o,--report", run_opts.report, "report CSV path (default stdout)");
    run->add_option("--dump-layers", dump_dir, "write P/S/G grids per frame into this directory");

    CommonOptions synth_opts;
    std::string synth_out;
    auto* synth = app.add_subcommand("synth", "render a synthetic scene to a directory of P5 frames");
    add_common(synth, synth_opts);
    synth->add_option("-o,--out", synth_out, "output directory")->required();

    CommonOptions sweep_opts;
    auto* sweep = app.add_subcommand("sweep", "attenuation over speeds and kernel widths");
    add_common(sweep, sweep_opts);
    sweep->add_option("-o,--report", sweep_opts.report, "CSV path (default stdout)");

    CommonOptions bench_opts;
    auto* bench = app.add_subcommand("bench", "time the excitation/inhibition stage");
    add_common(bench, bench_opts);
    bench->add_option("-o,--report", bench_opts.report, "CSV path (default stdout)");

    CommonOptions check_opts;
    auto* check = app.add_subcommand("validate-config", "parse and validate a config");
    add_common(check, check_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (run->parsed()) {
            dlgmd::RunConfig config = load_config(run_opts);
            if (!run_opts.report.empty()) {
                config.report_path = fs::path(run_opts.report);
            }
            if (!dump_dir.empty()) {
                config.dump_dir = fs::path(dump_dir);
            }
            print_warnings(config.params);
            const dlgmd::RunTrace trace = dlgmd::execute_run(config);
            emit(config.report_path, [&](std::ostream& out) { dlgmd::write_report_csv(out, trace.reports); });
        } else if (synth->parsed()) {
            const dlgmd::RunConfig config = load_config(synth_opts);
            if (!config.scene) {
                throw dlgmd::Error(dlgmd::ErrorCode::InvalidConfig, "scene", "synth needs 'scene = <kind>'");
            }
            std::vector<dlgmd::Frame> frames = dlgmd::render_sequence(*config.scene);
            if (config.resize != 1.0) {
                for (dlgmd::Frame& f : frames) {
                    f = dlgmd::resize_area(f, config.resize);
                }
            }
            dlgmd::write_sequence(synth_out, frames);
            std::cerr << "wrote " << frames.size() << " frames to " << synth_out << '\n';
        } else if (sweep->parsed()) {
            dlgmd::RunConfig config = load_config(sweep_opts);
            if (!sweep_opts.report.empty()) {
                config.report_path = fs::path(sweep_opts.report);
            }
            dlgmd::SceneSpec base = config.scene.value_or(dlgmd::SceneSpec{});
            base.kind = dlgmd::ObjectKind::Translating;
            const auto cells = dlgmd::attenuation_sweep(base, config.sweep.speeds, config.sweep.sigma_e_grid,
                                                        config.sweep.sigma_i_grid, config.params);
            emit(config.report_path, [&](std::ostream& out) { dlgmd::write_sweep_csv(out, cells); });
        } else if (bench->parsed()) {
            dlgmd::RunConfig config = load_config(bench_opts);
            if (!bench_opts.report.empty()) {
                config.report_path = fs::path(bench_opts.report);
            }
            const auto rows = dlgmd::bench(config);
            emit(config.report_path, [&](std::ostream& out) { dlgmd::write_bench_csv(out, rows); });
        } else if (check->parsed()) {
            const dlgmd::RunConfig config = load_config(check_opts);
            dlgmd::require_single_source(config);
            if (config.scene) {
                dlgmd::validate_scene(*config.scene);
            }
            print_warnings(config.params);
            std::cout << "ok\n";
        }
    } catch (const dlgmd::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

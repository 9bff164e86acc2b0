#include "dlgmd/bench.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>

#include "dlgmd/error.hpp"
#include "dlgmd/image_io.hpp"
#include "dlgmd/kernels.hpp"
#include "dlgmd/layers.hpp"
#include "dlgmd/report.hpp"
#include "dlgmd/state.hpp"

namespace dlgmd {

namespace {

std::vector<Frame> photoreceptor_sequence(std::span<const Frame> frames) {
    std::vector<Frame> out;
    out.reserve(frames.size() - 1);
    for (std::size_t n = 1; n < frames.size(); ++n) {
        out.push_back(photoreceptor(frames[n], frames[n - 1]));
    }
    return out;
}

// Milliseconds per frame for one pass over the sequence.
double dpc_pass(std::span<const Frame> p_frames, const KernelSet& kernels, double a, double& sink) {
    FrameHistory history(static_cast<std::size_t>(kernels.inhibition.max_delay()) + 1);
    const auto start = std::chrono::steady_clock::now();
    for (const Frame& p : p_frames) {
        history.push(p);
        const Frame e = excitation(p, kernels.excitation);
        const Frame i = inhibition(history, kernels.inhibition);
        sink += presynaptic_sum(e, i, a).at(0, 0);
    }
    const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
    return elapsed.count() / static_cast<double>(p_frames.size());
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t mid = v.size() / 2;
    return v.size() % 2 == 1 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

void require_repetitions(int repetitions) {
    if (repetitions < 3) {
        throw Error(ErrorCode::InvalidConfig, "repetitions", "need at least 3, got " + std::to_string(repetitions));
    }
}

struct Cell {
    BenchRow row;
    std::vector<Frame> p;
    KernelSet kernels;
    double a;
    std::vector<double> samples;
};

// Repetitions run round-robin over the cells after one untimed warm-up
// round, so clock ramp-up and background drift hit every cell alike.
void time_cells(std::vector<Cell>& cells, int repetitions) {
    double sink = 0.0;
    for (int rep = -1; rep < repetitions; ++rep) {
        for (Cell& c : cells) {
            const double ms = dpc_pass(c.p, c.kernels, c.a, sink);
            if (rep >= 0) {
                c.samples.push_back(ms);
            }
        }
    }
    // Keeps the loop body observable.
    if (sink < 0.0) {
        throw Error(ErrorCode::InvalidConfig, "bench", "negative presynaptic output");
    }
    for (Cell& c : cells) {
        c.row.median_ms = median(c.samples);
        c.row.fps = c.row.median_ms > 0.0 ? 1000.0 / c.row.median_ms : 0.0;
    }
}

}  // namespace

double time_dpc(std::span<const Frame> p_frames, const ParameterSet& params, int repetitions) {
    require_repetitions(repetitions);
    if (p_frames.empty()) {
        throw Error(ErrorCode::InvalidConfig, "input", "no frames to time");
    }
    std::vector<Cell> cells;
    cells.push_back({{}, std::vector<Frame>(p_frames.begin(), p_frames.end()), build_kernels(params), params.a, {}});
    time_cells(cells, repetitions);
    return cells.front().row.median_ms;
}

std::vector<BenchRow> bench(const RunConfig& config) {
    require_repetitions(config.bench.repetitions);
    RunConfig source = config;
    source.resize = 1.0;
    const std::vector<Frame> frames = load_input(source);

    std::vector<Cell> cells;
    for (double factor : config.bench.resizes) {
        std::vector<Frame> resized;
        resized.reserve(frames.size());
        for (const Frame& f : frames) {
            resized.push_back(resize_area(f, factor));
        }
        const std::vector<Frame> p = photoreceptor_sequence(resized);
        for (int r : config.bench.radii) {
            ParameterSet params = config.params;
            params.radius = r;
            validate(params);
            Cell c{{}, p, build_kernels(params), params.a, {}};
            c.row.radius = r;
            c.row.width = resized.front().width();
            c.row.height = resized.front().height();
            cells.push_back(std::move(c));
        }
    }
    time_cells(cells, config.bench.repetitions);
    std::vector<BenchRow> rows;
    for (const Cell& c : cells) {
        rows.push_back(c.row);
    }
    return rows;
}

void write_bench_csv(std::ostream& out, std::span<const BenchRow> rows) {
    out << "r,width,height,median_ms,fps\n";
    for (const BenchRow& r : rows) {
        out << r.radius << ',' << r.width << ',' << r.height << ',' << format_number(r.median_ms) << ','
            << format_number(r.fps) << '\n';
    }
}

}  // namespace dlgmd

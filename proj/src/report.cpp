#include "dlgmd/report.hpp"

#include <charconv>
#include <fstream>
#include <ostream>

#include "dlgmd/error.hpp"

namespace dlgmd {

std::string format_number(double v) {
    char buf[32];
    const auto result = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, result.ptr);
}

void write_report_csv(std::ostream& out, std::span<const FrameReport> reports) {
    out << "frame_index,ffi,t_de,k_raw,k_norm,attenuation_db,spike,alarm\n";
    for (const FrameReport& r : reports) {
        out << r.frame_index << ',' << format_number(r.ffi) << ',' << format_number(r.t_de) << ','
            << format_number(r.k_raw) << ',' << format_number(r.k_norm) << ','
            << (r.attenuation_db ? format_number(*r.attenuation_db) : std::string()) << ','
            << (r.spike ? 1 : 0) << ',' << (r.alarm ? 1 : 0) << '\n';
    }
}

void write_sweep_csv(std::ostream& out, std::span<const SweepCell> cells) {
    out << "speed,sigma_e,sigma_i,mean_attenuation_db\n";
    for (const SweepCell& c : cells) {
        out << format_number(c.speed) << ',' << format_number(c.sigma_e) << ',' << format_number(c.sigma_i) << ','
            << (c.mean_attenuation ? format_number(*c.mean_attenuation) : std::string()) << '\n';
    }
}

void write_layer_grid(const std::filesystem::path& path, const Frame& layer) {
    std::ofstream out(path);
    if (!out) {
        throw Error(ErrorCode::IoFailure, path.string(), "cannot open for writing");
    }
    for (int y = 0; y < layer.height(); ++y) {
        auto row = layer.row(y);
        for (std::size_t x = 0; x < row.size(); ++x) {
            out << (x == 0 ? "" : " ") << format_number(row[x]);
        }
        out << '\n';
    }
}

}  // namespace dlgmd

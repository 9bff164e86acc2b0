#include "dlgmd/image_io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iterator>
#include <string>
#include <utility>

#include "dlgmd/error.hpp"

namespace fs = std::filesystem;

namespace dlgmd {

namespace {

[[noreturn]] void unreadable(const fs::path& path, const std::string& why) {
    throw Error(ErrorCode::UnreadableFrame, path.string(), why);
}

class HeaderReader {
public:
    HeaderReader(const std::string& bytes, const fs::path& path) : bytes_(bytes), path_(path) {}

    unsigned long next_number() {
        skip_space_and_comments();
        const std::size_t start = pos_;
        while (pos_ < bytes_.size() && std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
            ++pos_;
        }
        if (start == pos_ || pos_ - start > 9) {
            unreadable(path_, "malformed netpbm header");
        }
        return std::stoul(bytes_.substr(start, pos_ - start));
    }

    // A single whitespace byte separates the header from binary raster data.
    std::size_t raster_start() {
        if (pos_ >= bytes_.size() || !std::isspace(static_cast<unsigned char>(bytes_[pos_]))) {
            unreadable(path_, "missing separator before raster data");
        }
        return pos_ + 1;
    }

private:
    void skip_space_and_comments() {
        while (pos_ < bytes_.size()) {
            const char c = bytes_[pos_];
            if (c == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n') {
                    ++pos_;
                }
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    const std::string& bytes_;
    const fs::path& path_;
    std::size_t pos_ = 2;
};

double luminance(double r, double g, double b) { return 0.299 * r + 0.587 * g + 0.114 * b; }

bool is_frame_file(const fs::path& p) {
    const std::string ext = p.extension().string();
    if (ext != ".pgm" && ext != ".ppm" && ext != ".pnm") {
        return false;
    }
    const std::string stem = p.stem().string();
    return !stem.empty() && std::all_of(stem.begin(), stem.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c)) != 0;
    });
}

// Source intervals and overlap weights for each output index along one axis.
std::vector<std::vector<std::pair<int, double>>> area_weights(int source, int target) {
    std::vector<std::vector<std::pair<int, double>>> out(static_cast<std::size_t>(target));
    const double scale = static_cast<double>(source) / target;
    for (int i = 0; i < target; ++i) {
        const double lo = i * scale;
        const double hi = (i + 1) * scale;
        double total = 0.0;
        for (int j = static_cast<int>(std::floor(lo)); j < std::min(source, static_cast<int>(std::ceil(hi))); ++j) {
            const double overlap = std::min(hi, j + 1.0) - std::max(lo, static_cast<double>(j));
            if (overlap > 0.0) {
                out[static_cast<std::size_t>(i)].emplace_back(j, overlap);
                total += overlap;
            }
        }
        for (auto& [j, w] : out[static_cast<std::size_t>(i)]) {
            w /= total;
        }
    }
    return out;
}

}  // namespace

Frame read_netpbm(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        unreadable(path, "cannot open file");
    }
    const std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (bytes.size() < 2 || bytes[0] != 'P') {
        unreadable(path, "not a netpbm file");
    }
    const char kind = bytes[1];
    if (kind != '2' && kind != '3' && kind != '5' && kind != '6') {
        unreadable(path, std::string("unsupported netpbm variant P") + kind);
    }
    const bool colour = kind == '3' || kind == '6';
    const bool binary = kind == '5' || kind == '6';

    HeaderReader header(bytes, path);
    const unsigned long width = header.next_number();
    const unsigned long height = header.next_number();
    const unsigned long maxval = header.next_number();
    if (width == 0 || height == 0 || width > 1u << 16 || height > 1u << 16) {
        unreadable(path, "invalid dimensions");
    }
    if (maxval == 0 || maxval > 65535) {
        unreadable(path, "invalid maxval");
    }
    const std::size_t channels = colour ? 3 : 1;
    const std::size_t samples = static_cast<std::size_t>(width) * height * channels;

    std::vector<double> raw;
    raw.reserve(samples);
    if (binary) {
        const std::size_t bytes_per = maxval > 255 ? 2 : 1;
        const std::size_t start = header.raster_start();
        if (bytes.size() < start + samples * bytes_per) {
            unreadable(path, "truncated raster data");
        }
        for (std::size_t i = 0; i < samples; ++i) {
            const auto* p = reinterpret_cast<const unsigned char*>(bytes.data() + start + i * bytes_per);
            raw.push_back(bytes_per == 2 ? static_cast<double>((p[0] << 8) | p[1]) : static_cast<double>(p[0]));
        }
    } else {
        for (std::size_t i = 0; i < samples; ++i) {
            raw.push_back(static_cast<double>(header.next_number()));
        }
    }
    for (double v : raw) {
        if (v > static_cast<double>(maxval)) {
            unreadable(path, "sample exceeds maxval");
        }
    }

    if (!colour) {
        return Frame(static_cast<int>(width), static_cast<int>(height), std::move(raw));
    }
    std::vector<double> grey(static_cast<std::size_t>(width) * height);
    for (std::size_t i = 0; i < grey.size(); ++i) {
        grey[i] = luminance(raw[3 * i], raw[3 * i + 1], raw[3 * i + 2]);
    }
    return Frame(static_cast<int>(width), static_cast<int>(height), std::move(grey));
}

void write_pgm(const fs::path& path, const Frame& frame) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(ErrorCode::IoFailure, path.string(), "cannot open for writing");
    }
    out << "P5\n" << frame.width() << ' ' << frame.height() << "\n255\n";
    std::string raster;
    raster.reserve(frame.size());
    for (double v : frame.pixels()) {
        raster.push_back(static_cast<char>(static_cast<unsigned char>(std::clamp(std::lround(v), 0L, 255L))));
    }
    out.write(raster.data(), static_cast<std::streamsize>(raster.size()));
    if (!out) {
        throw Error(ErrorCode::IoFailure, path.string(), "write failed");
    }
}

std::vector<Frame> load_sequence(const fs::path& dir) {
    std::error_code ec;
    if (!fs::is_directory(dir, ec)) {
        throw Error(ErrorCode::EmptyDirectory, dir.string(), "not a readable directory");
    }
    std::vector<std::pair<unsigned long long, fs::path>> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && is_frame_file(entry.path())) {
            files.emplace_back(std::stoull(entry.path().stem().string()), entry.path());
        }
    }
    if (files.size() < 2) {
        throw Error(ErrorCode::EmptyDirectory, dir.string(),
                    "need at least 2 indexed frames, found " + std::to_string(files.size()));
    }
    std::sort(files.begin(), files.end());

    std::vector<Frame> frames;
    frames.reserve(files.size());
    for (const auto& [index, path] : files) {
        Frame f = read_netpbm(path);
        if (!frames.empty() && !f.same_shape(frames.front())) {
            throw Error(ErrorCode::MixedDimensions, path.string(),
                        std::to_string(f.width()) + "x" + std::to_string(f.height()) + " differs from " +
                            std::to_string(frames.front().width()) + "x" +
                            std::to_string(frames.front().height()));
        }
        frames.push_back(std::move(f));
    }
    return frames;
}

void write_sequence(const fs::path& dir, const std::vector<Frame>& frames) {
    fs::create_directories(dir);
    const int digits = std::max<int>(4, static_cast<int>(std::to_string(frames.size()).size()));
    for (std::size_t i = 0; i < frames.size(); ++i) {
        std::string name = std::to_string(i);
        name.insert(0, static_cast<std::size_t>(digits) - std::min<std::size_t>(name.size(), digits), '0');
        write_pgm(dir / (name + ".pgm"), frames[i]);
    }
}

Frame resize_area(const Frame& frame, double factor) {
    if (!(factor > 0.0) || factor > 1.0) {
        throw Error(ErrorCode::InvalidFactor, "resize", "factor must be in (0, 1], got " + std::to_string(factor));
    }
    if (factor == 1.0) {
        return frame;
    }
    const int width = std::max(1, static_cast<int>(std::lround(frame.width() * factor)));
    const int height = std::max(1, static_cast<int>(std::lround(frame.height() * factor)));
    const auto wx = area_weights(frame.width(), width);
    const auto wy = area_weights(frame.height(), height);

    Frame horizontal(width, frame.height());
    for (int y = 0; y < frame.height(); ++y) {
        auto in = frame.row(y);
        auto out = horizontal.row(y);
        for (int x = 0; x < width; ++x) {
            double acc = 0.0;
            for (const auto& [j, w] : wx[static_cast<std::size_t>(x)]) {
                acc += w * in[static_cast<std::size_t>(j)];
            }
            out[static_cast<std::size_t>(x)] = acc;
        }
    }
    Frame out(width, height);
    for (int y = 0; y < height; ++y) {
        auto dst = out.row(y);
        for (const auto& [j, w] : wy[static_cast<std::size_t>(y)]) {
            auto src = horizontal.row(j);
            for (int x = 0; x < width; ++x) {
                dst[static_cast<std::size_t>(x)] += w * src[static_cast<std::size_t>(x)];
            }
        }
    }
    return out;
}

}  // namespace dlgmd

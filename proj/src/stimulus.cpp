#include "dlgmd/stimulus.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dlgmd/error.hpp"

namespace dlgmd {

namespace {

int round_half_up(double v) { return static_cast<int>(std::floor(v + 0.5)); }

// Smallest half extents that still cover at least one pixel centre.
constexpr double kMinSquareHalf = 0.5;
constexpr double kMinDiscRadius = 0.75;

bool looming_like(ObjectKind kind) { return kind == ObjectKind::Looming || kind == ObjectKind::Receding; }

double top_row(const SceneSpec& spec) {
    return spec.vertical_position.value_or((spec.height - spec.object_pixel_size) / 2.0);
}

void paint_square(Frame& f, double cx, double cy, double half, double level) {
    const int x0 = std::max(0, round_half_up(cx - half));
    const int x1 = std::min(f.width(), round_half_up(cx + half));
    const int y0 = std::max(0, round_half_up(cy - half));
    const int y1 = std::min(f.height(), round_half_up(cy + half));
    for (int y = y0; y < y1; ++y) {
        for (int x = x0; x < x1; ++x) {
            f.at(x, y) = level;
        }
    }
}

void paint_disc(Frame& f, double cx, double cy, double radius, double level) {
    const int x0 = std::max(0, static_cast<int>(std::floor(cx - radius)));
    const int x1 = std::min(f.width(), static_cast<int>(std::ceil(cx + radius)) + 1);
    const int y0 = std::max(0, static_cast<int>(std::floor(cy - radius)));
    const int y1 = std::min(f.height(), static_cast<int>(std::ceil(cy + radius)) + 1);
    const double r2 = radius * radius;
    for (int y = y0; y < y1; ++y) {
        for (int x = x0; x < x1; ++x) {
            const double dx = x + 0.5 - cx;
            const double dy = y + 0.5 - cy;
            if (dx * dx + dy * dy <= r2) {
                f.at(x, y) = level;
            }
        }
    }
}

void paint(Frame& f, Shape shape, double cx, double cy, double half, double level) {
    if (shape == Shape::Square) {
        paint_square(f, cx, cy, std::max(half, kMinSquareHalf), level);
    } else {
        paint_disc(f, cx, cy, std::max(half, kMinDiscRadius), level);
    }
}

}  // namespace

void validate_scene(const SceneSpec& spec) {
    if (spec.width < 1 || spec.height < 1) {
        throw Error(ErrorCode::InvalidScene, "width", "scene dimensions must be >= 1");
    }
    if (spec.frames < 2) {
        throw Error(ErrorCode::InvalidScene, "frames", "a sequence needs at least 2 frames");
    }
    if (looming_like(spec.kind)) {
        if (!(spec.start_distance > 0.0)) {
            throw Error(ErrorCode::InvalidScene, "start_distance", "must be > 0");
        }
        if (!(spec.speed > 0.0)) {
            throw Error(ErrorCode::InvalidSpeed, "speed", "approach speed must be > 0");
        }
        if (!(spec.half_size > 0.0) || !(spec.focal > 0.0)) {
            throw Error(ErrorCode::InvalidScene, spec.half_size > 0.0 ? "focal" : "half_size", "must be > 0");
        }
        const double last = spec.start_distance - spec.speed * (spec.frames - 1);
        if (!(last > 0.0)) {
            throw Error(ErrorCode::ContactBeforeEnd, "frames",
                        "object reaches the camera before frame " + std::to_string(spec.frames - 1));
        }
        return;
    }
    if (spec.kind == ObjectKind::Translating && !(spec.pixel_speed > 0.0)) {
        throw Error(ErrorCode::InvalidSpeed, "pixel_speed", "must be > 0");
    }
    if (spec.object_pixel_size < 1) {
        throw Error(ErrorCode::InvalidScene, "object_pixel_size", "must be >= 1");
    }
    const double top = top_row(spec);
    const int left = round_half_up(spec.start_position);
    const int y0 = round_half_up(top);
    if (left + spec.object_pixel_size <= 0 || left >= spec.width || y0 + spec.object_pixel_size <= 0 ||
        y0 >= spec.height) {
        throw Error(ErrorCode::ObjectOutOfView, "start_position", "object is outside the frame at frame 0");
    }
}

double looming_half_extent(const SceneSpec& spec, int t) {
    const double distance = spec.start_distance - spec.speed * t;
    if (!(distance > 0.0)) {
        throw Error(ErrorCode::ContactBeforeEnd, "frames", "object distance is not positive");
    }
    return spec.focal * spec.half_size / distance;
}

Frame render_frame(const SceneSpec& spec, int index) {
    if (index < 0 || index >= spec.frames) {
        throw Error(ErrorCode::InvalidScene, "index",
                    "frame " + std::to_string(index) + " outside 0.." + std::to_string(spec.frames - 1));
    }
    Frame f(spec.width, spec.height, static_cast<double>(spec.background_level));
    const double level = spec.object_level;

    if (looming_like(spec.kind)) {
        const int t = spec.kind == ObjectKind::Looming ? index : spec.frames - 1 - index;
        // Clipping to the frame bounds the drawn extent once it exceeds the image.
        paint(f, spec.shape, spec.width / 2.0, spec.height / 2.0, looming_half_extent(spec, t), level);
        return f;
    }

    const double shift = spec.kind == ObjectKind::Translating ? spec.pixel_speed * index : 0.0;
    const int left = round_half_up(spec.start_position + shift);
    const int top = round_half_up(top_row(spec));
    const double half = spec.object_pixel_size / 2.0;
    paint(f, spec.shape, left + half, top + half, half, level);
    return f;
}

std::vector<Frame> render_sequence(const SceneSpec& spec) {
    validate_scene(spec);
    std::vector<Frame> frames;
    frames.reserve(static_cast<std::size_t>(spec.frames));
    for (int i = 0; i < spec.frames; ++i) {
        frames.push_back(render_frame(spec, i));
    }
    return frames;
}

std::vector<std::vector<Frame>> speed_sweep(const SceneSpec& base, std::span<const double> speeds) {
    if (speeds.empty()) {
        throw Error(ErrorCode::InvalidSpeed, "speeds", "speed list is empty");
    }
    for (double s : speeds) {
        if (!(s >= 1.0)) {
            throw Error(ErrorCode::InvalidSpeed, "speeds", "every sweep speed must be >= 1 pixel/frame");
        }
    }
    std::vector<std::vector<Frame>> out;
    for (double s : speeds) {
        SceneSpec spec = base;
        spec.kind = ObjectKind::Translating;
        spec.pixel_speed = s;
        out.push_back(render_sequence(spec));
    }
    return out;
}

}  // namespace dlgmd

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dlgmd/frame.hpp"

namespace dlgmd {

enum class ObjectKind { Looming, Receding, Translating, Static };
enum class Shape { Square, Disc };

/// A single binary object over a uniform background.
///
/// Looming objects sit at the image centre and approach a pinhole camera:
/// distance D(t) = start_distance - speed * t, half extent on the image
/// focal * half_size / D(t). Receding scenes are looming scenes played
/// backwards. Translating objects keep a fixed pixel size and slide right at
/// pixel_speed; static scenes hold the translating object at its start.
struct SceneSpec {
    int width = 128;
    int height = 128;
    int frames = 60;
    ObjectKind kind = ObjectKind::Looming;
    Shape shape = Shape::Square;
    std::uint8_t object_level = 0;
    std::uint8_t background_level = 255;

    // Looming / receding geometry.
    double half_size = 0.5;       // metres
    double speed = 0.1;           // metres per frame
    double start_distance = 10.0; // metres
    double focal = 100.0;         // pixels

    // Translating / static geometry (pixels).
    double pixel_speed = 1.0;
    std::optional<double> vertical_position;  // top row; centred when absent
    int object_pixel_size = 16;
    double start_position = 0.0;  // left edge at frame 0
};

/// Throws InvalidScene, InvalidSpeed, ContactBeforeEnd or ObjectOutOfView.
void validate_scene(const SceneSpec& spec);

/// On-image half extent (pixels) of a looming object at looming time t,
/// before any minimum-size clamp.
double looming_half_extent(const SceneSpec& spec, int t);

/// Frame `index` of the sequence; lets large scenes be streamed frame by frame.
Frame render_frame(const SceneSpec& spec, int index);

std::vector<Frame> render_sequence(const SceneSpec& spec);

/// One translating sequence per pixel speed (each >= 1), otherwise identical.
std::vector<std::vector<Frame>> speed_sweep(const SceneSpec& base, std::span<const double> speeds);

}  // namespace dlgmd

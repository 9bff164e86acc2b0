#include <doctest.h>

#include <vector>

#include "dlgmd/error.hpp"
#include "dlgmd/stimulus.hpp"

using namespace dlgmd;

namespace {

int left_edge(const Frame& f, std::uint8_t object) {
    const int row = f.height() / 2;
    for (int x = 0; x < f.width(); ++x) {
        if (f.at(x, row) == object) {
            return x;
        }
    }
    return -1;
}

int object_width(const Frame& f, std::uint8_t object) {
    int count = 0;
    for (double v : f.row(f.height() / 2)) {
        count += v == object ? 1 : 0;
    }
    return count;
}

}  // namespace

TEST_CASE("translating square advances one pixel per frame") {
    SceneSpec spec;
    spec.kind = ObjectKind::Translating;
    spec.object_pixel_size = 4;
    spec.width = 40;
    spec.height = 20;
    spec.frames = 12;
    spec.start_position = 3;
    const auto frames = render_sequence(spec);
    for (int i = 0; i < spec.frames; ++i) {
        CHECK(left_edge(frames[static_cast<std::size_t>(i)], spec.object_level) == 3 + i);
        CHECK(object_width(frames[static_cast<std::size_t>(i)], spec.object_level) == 4);
    }
}

TEST_CASE("looming half extents accelerate") {
    SceneSpec spec;
    spec.half_size = 0.5;
    spec.speed = 0.1;
    spec.start_distance = 10.0;
    spec.focal = 100.0;
    CHECK(looming_half_extent(spec, 0) == doctest::Approx(5.0));
    CHECK(looming_half_extent(spec, 1) == doctest::Approx(5.0505).epsilon(1e-4));
    CHECK(looming_half_extent(spec, 2) == doctest::Approx(5.1020).epsilon(1e-4));
    for (int t = 1; t < 90; ++t) {
        const double d1 = looming_half_extent(spec, t) - looming_half_extent(spec, t - 1);
        const double d2 = looming_half_extent(spec, t + 1) - looming_half_extent(spec, t);
        CHECK(d1 > 0.0);
        CHECK(d2 > d1);
    }
}

TEST_CASE("rendered looming extent never shrinks") {
    SceneSpec spec;
    spec.frames = 95;
    const auto frames = render_sequence(spec);
    int previous = 0;
    for (const Frame& f : frames) {
        const int w = object_width(f, spec.object_level);
        CHECK(w >= previous);
        previous = w;
    }
    CHECK(previous > object_width(frames.front(), spec.object_level));
}

TEST_CASE("receding is looming reversed") {
    SceneSpec spec;
    spec.frames = 40;
    spec.speed = 0.2;
    spec.shape = Shape::Disc;
    SceneSpec back = spec;
    back.kind = ObjectKind::Receding;
    const auto forward = render_sequence(spec);
    const auto reversed = render_sequence(back);
    for (int i = 0; i < spec.frames; ++i) {
        CHECK(reversed[static_cast<std::size_t>(i)] == forward[static_cast<std::size_t>(spec.frames - 1 - i)]);
    }
}

TEST_CASE("rendering is deterministic") {
    SceneSpec spec;
    spec.kind = ObjectKind::Translating;
    spec.pixel_speed = 2.5;
    spec.frames = 20;
    CHECK(render_sequence(spec) == render_sequence(spec));
    CHECK(render_frame(spec, 7) == render_sequence(spec)[7]);
}

TEST_CASE("static scene repeats one frame") {
    SceneSpec spec;
    spec.kind = ObjectKind::Static;
    spec.frames = 5;
    const auto frames = render_sequence(spec);
    for (const Frame& f : frames) {
        CHECK(f == frames.front());
    }
    CHECK(frames.front().sum() < 255.0 * spec.width * spec.height);
}

TEST_CASE("speed sweep") {
    SceneSpec base;
    base.frames = 16;
    const std::vector<double> speeds{1, 2, 3, 4};
    const auto scenes = speed_sweep(base, speeds);
    REQUIRE(scenes.size() == 4);
    for (const auto& s : scenes) {
        CHECK(s.size() == 16);
        CHECK(s.front().same_shape(scenes.front().front()));
    }
    CHECK(left_edge(scenes[2][5], base.object_level) == 15);

    const std::vector<double> zero{0.0};
    CHECK_THROWS_AS(speed_sweep(base, zero), Error);
    CHECK_THROWS_AS(speed_sweep(base, std::span<const double>{}), Error);
}

TEST_CASE("scene validation") {
    SceneSpec spec;
    spec.frames = 200;  // reaches 10 m at frame 100
    try {
        validate_scene(spec);
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ContactBeforeEnd);
    }

    spec = SceneSpec{};
    spec.frames = 1;
    CHECK_THROWS_AS(validate_scene(spec), Error);

    spec = SceneSpec{};
    spec.speed = 0.0;
    CHECK_THROWS_AS(validate_scene(spec), Error);

    spec = SceneSpec{};
    spec.kind = ObjectKind::Translating;
    spec.start_position = 500;
    try {
        validate_scene(spec);
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ObjectOutOfView);
    }

    spec = SceneSpec{};
    spec.kind = ObjectKind::Translating;
    spec.pixel_speed = 0.0;
    CHECK_THROWS_AS(validate_scene(spec), Error);

    CHECK_THROWS_AS(render_frame(SceneSpec{}, 60), Error);
}

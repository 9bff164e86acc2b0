#include <doctest.h>

#include <cmath>
#include <vector>

#include "dlgmd/analysis.hpp"
#include "dlgmd/error.hpp"
#include "dlgmd/stimulus.hpp"

using namespace dlgmd;

namespace {

RunTrace synthetic_trace(const std::vector<double>& k) {
    RunTrace t;
    t.max_delay = 1;
    double peak = 0.0;
    for (double v : k) {
        peak = std::max(peak, v);
    }
    for (std::size_t i = 0; i < k.size(); ++i) {
        FrameReport r;
        r.frame_index = i;
        r.k_raw = k[i];
        r.k_norm = peak > 0.0 ? k[i] / peak : 0.0;
        t.reports.push_back(r);
    }
    return t;
}

SceneSpec sweep_scene() {
    SceneSpec s;
    s.kind = ObjectKind::Translating;
    s.width = 128;
    s.height = 128;
    s.object_pixel_size = 16;
    s.frames = 24;
    s.start_position = 8;
    return s;
}

std::vector<double> attenuation_by_speed(const ParameterSet& p) {
    const std::vector<double> speeds{1, 2, 3, 4};
    std::vector<double> out;
    for (const SweepCell& c : attenuation_sweep(sweep_scene(), speeds, std::vector<double>{p.sigma_e},
                                                std::vector<double>{p.sigma_i}, p)) {
        REQUIRE(c.mean_attenuation.has_value());
        out.push_back(*c.mean_attenuation);
    }
    return out;
}

bool strictly_increasing(const std::vector<double>& v) {
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (!(v[i] > v[i - 1])) {
            return false;
        }
    }
    return true;
}

void check_speed_ordering(int set) {
    const std::vector<double> att = attenuation_by_speed(preset(set));
    CAPTURE(set);
    CAPTURE(att[0]);
    CAPTURE(att[1]);
    CAPTURE(att[2]);
    CAPTURE(att[3]);
    CHECK(strictly_increasing(att));
}

void check_fast_over_slow(int set) {
    const std::vector<double> att = attenuation_by_speed(preset(set));
    CAPTURE(set);
    CHECK(att[3] >= att[0]);
}

}  // namespace

TEST_CASE("attenuation") {
    CHECK(*attenuation(50.0, 50.0) == 0.0);
    CHECK(*attenuation(100.0, 10.0) == doctest::Approx(-10.0));
    CHECK_FALSE(attenuation(0.0, 0.0).has_value());
    CHECK_FALSE(attenuation(10.0, 0.0).has_value());
}

TEST_CASE("distinguishability") {
    std::vector<double> k(40, 10.0);
    for (int i = 25; i <= 35; ++i) {
        k[static_cast<std::size_t>(i)] = 100.0;
    }
    const RunTrace t = synthetic_trace(k);
    const Ratio da = distinguishability(t, 30, 10);
    CHECK(da.value == doctest::Approx(10.0));
    CHECK_FALSE(da.above_cap);
    CHECK_FALSE(competent(da));
    CHECK(competent(Ratio{10.5, false}));

    std::vector<double> quiet(40, 0.0);
    quiet[30] = 5.0;
    const Ratio capped = distinguishability(synthetic_trace(quiet), 30, 10);
    CHECK(capped.above_cap);
    CHECK(competent(capped));

    CHECK_THROWS_AS(distinguishability(t, 38, 10), Error);
    CHECK_THROWS_AS(distinguishability(t, 30, 2), Error);
}

TEST_CASE("distinguishability ignores a common scale") {
    std::vector<double> k;
    for (int i = 0; i < 30; ++i) {
        k.push_back(1.0 + i * i);
    }
    std::vector<double> scaled = k;
    for (double& v : scaled) {
        v *= 0.125;
    }
    CHECK(distinguishability(synthetic_trace(k), 22, 8).value ==
          doctest::Approx(distinguishability(synthetic_trace(scaled), 22, 8).value).epsilon(1e-14));
}

TEST_CASE("sharpness") {
    std::vector<double> k(20, 0.0);
    k[15] = 4.0;
    CHECK(sharpness(synthetic_trace(k), {14, 16}).above_cap);
    const Ratio flat = sharpness(synthetic_trace(std::vector<double>(20, 3.0)), {5, 9});
    CHECK(flat.value == doctest::Approx(1.0));
    CHECK_THROWS_AS(sharpness(synthetic_trace(k), {0, 19}), Error);
    CHECK_THROWS_AS(sharpness(synthetic_trace(k), {5, 25}), Error);
}

TEST_CASE("steady state drops warm-up and exit frames") {
    RunTrace t = synthetic_trace(std::vector<double>(24, 1.0));
    t.max_delay = 2;
    const FrameWindow w = steady_state(t);
    CHECK(w.first == 4);
    CHECK(w.last == 21);
    CHECK(peak_frame(synthetic_trace({1, 5, 3})) == 1);
    CHECK(mean_k_raw(synthetic_trace({1, 5, 3}), {0, 2}) == 3.0);
}

TEST_CASE("looming contrast uses the translating steady state") {
    RunTrace looming = synthetic_trace({0, 0, 0, 0, 1, 2, 50, 90, 100});
    RunTrace translating = synthetic_trace(std::vector<double>(20, 2.0));
    const Ratio r = looming_contrast(looming, translating, 2);
    CHECK(r.value == doctest::Approx((50.0 + 90.0 + 100.0) / 3.0 / 2.0));
}

TEST_CASE("faster translation is attenuated less for sets with radial latency") {
    for (int set : {4, 5, 6, 7, 8, 9}) {
        check_speed_ordering(set);
    }
    check_speed_ordering(1);
}

// With constant latency and a wider inhibitory field the ordering breaks at
// the slowest speeds; kept as a record of the measured behaviour.
TEST_CASE("speed ordering for constant-latency set 2" * doctest::should_fail()) { check_speed_ordering(2); }
TEST_CASE("speed ordering for constant-latency set 3" * doctest::should_fail()) { check_speed_ordering(3); }

TEST_CASE("fastest speed is attenuated no more than the slowest") {
    for (int set : {1, 2, 4, 5, 6, 7, 8, 9}) {
        check_fast_over_slow(set);
    }
}

TEST_CASE("fastest over slowest for constant-latency set 3" * doctest::should_fail()) { check_fast_over_slow(3); }

// A wider normalized inhibitory Gaussian spreads the same mass more thinly,
// so attenuation weakens rather than strengthens.
TEST_CASE("wider inhibitory field attenuates more" * doctest::should_fail()) {
    const std::vector<double> speeds{2};
    const std::vector<double> se{0.35};
    const std::vector<double> si{1.0, 1.8, 2.5};
    const auto cells = attenuation_sweep(sweep_scene(), speeds, se, si, preset(4));
    for (std::size_t i = 1; i < cells.size(); ++i) {
        CHECK(*cells[i].mean_attenuation <= *cells[i - 1].mean_attenuation);
    }
}

TEST_CASE("without inhibition attenuation is the excitation kernel mass") {
    ParameterSet p = preset(4);
    p.a = 0.0;
    const double expected = 10.0 * std::log10(gaussian_kernel(p.sigma_e, p.radius).sum());
    for (double speed : {1.0, 2.0, 3.0, 4.0}) {
        SceneSpec s = sweep_scene();
        s.pixel_speed = speed;
        const RunTrace t = run_trace(render_sequence(s), p);
        const FrameWindow w = steady_state(t);
        for (std::size_t i = w.first; i <= w.last; ++i) {
            REQUIRE(t.reports[i].attenuation_db.has_value());
            CHECK(std::abs(*t.reports[i].attenuation_db - expected) < 1e-9);
        }
    }
}

TEST_CASE("sweep shape and errors") {
    const std::vector<double> speeds{1, 3};
    const std::vector<double> se{0.35, 1.0};
    const std::vector<double> si{1.0, 2.5, 5.0};
    const auto cells = attenuation_sweep(sweep_scene(), speeds, se, si, preset(7));
    CHECK(cells.size() == 12);
    CHECK(cells.front().speed == 1.0);
    CHECK(cells.back().sigma_i == 5.0);
    CHECK_THROWS_AS(attenuation_sweep(sweep_scene(), speeds, std::vector<double>{}, si, preset(7)), Error);
}

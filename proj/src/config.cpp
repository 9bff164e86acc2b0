#include "dlgmd/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <sstream>

#include "dlgmd/detector.hpp"
#include "dlgmd/error.hpp"
#include "dlgmd/image_io.hpp"
#include "dlgmd/report.hpp"

namespace fs = std::filesystem;

namespace dlgmd {

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

[[noreturn]] void bad_value(const std::string& key, const std::string& value, const char* expected) {
    throw Error(ErrorCode::InvalidConfig, key, "expected " + std::string(expected) + ", got '" + value + "'");
}

double to_double(const std::string& key, const std::string& value) {
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc() || ptr != value.data() + value.size()) {
        bad_value(key, value, "a number");
    }
    return out;
}

int to_int(const std::string& key, const std::string& value) {
    int out = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc() || ptr != value.data() + value.size()) {
        bad_value(key, value, "an integer");
    }
    return out;
}

std::uint8_t to_level(const std::string& key, const std::string& value) {
    const int v = to_int(key, value);
    if (v < 0 || v > 255) {
        bad_value(key, value, "an 8-bit level");
    }
    return static_cast<std::uint8_t>(v);
}

template <typename T, typename Parse>
std::vector<T> to_list(const std::string& key, const std::string& value, Parse parse) {
    std::vector<T> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(parse(key, trim(item)));
    }
    if (out.empty()) {
        bad_value(key, value, "a comma-separated list");
    }
    return out;
}

using Setter = std::function<void(RunConfig&, const std::string&, const std::string&)>;

SceneSpec& scene_of(RunConfig& c) {
    if (!c.scene) {
        c.scene = SceneSpec{};
    }
    return *c.scene;
}

const std::map<std::string, Setter>& scene_setters() {
    static const std::map<std::string, Setter> table = {
        {"scene",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             static const std::map<std::string, ObjectKind> kinds = {{"looming", ObjectKind::Looming},
                                                                     {"receding", ObjectKind::Receding},
                                                                     {"translating", ObjectKind::Translating},
                                                                     {"static", ObjectKind::Static}};
             const auto it = kinds.find(v);
             if (it == kinds.end()) {
                 bad_value(k, v, "looming|receding|translating|static");
             }
             scene_of(c).kind = it->second;
         }},
        {"shape",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             if (v != "square" && v != "disc") {
                 bad_value(k, v, "square|disc");
             }
             scene_of(c).shape = v == "square" ? Shape::Square : Shape::Disc;
         }},
        {"width", [](RunConfig& c, const std::string& k, const std::string& v) { scene_of(c).width = to_int(k, v); }},
        {"height", [](RunConfig& c, const std::string& k, const std::string& v) { scene_of(c).height = to_int(k, v); }},
        {"frames", [](RunConfig& c, const std::string& k, const std::string& v) { scene_of(c).frames = to_int(k, v); }},
        {"object_level",
         [](RunConfig& c, const std::string& k, const std::string& v) { scene_of(c).object_level = to_level(k, v); }},
        {"background_level",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             scene_of(c).background_level = to_level(k, v);
         }},
        {"half_size",
         [](RunConfig& c, const std::string& k, const std::string& v) { scene_of(c).half_size = to_double(k, v); }},
        {"speed", [](RunConfig& c, const std::string& k, const std::string& v) { scene_of(c).speed = to_double(k, v); }},
        {"start_distance",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             scene_of(c).start_distance = to_double(k, v);
         }},
        {"focal", [](RunConfig& c, const std::string& k, const std::string& v) { scene_of(c).focal = to_double(k, v); }},
        {"pixel_speed",
         [](RunConfig& c, const std::string& k, const std::string& v) { scene_of(c).pixel_speed = to_double(k, v); }},
        {"vertical_position",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             scene_of(c).vertical_position = to_double(k, v);
         }},
        {"object_size",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             scene_of(c).object_pixel_size = to_int(k, v);
         }},
        {"start_position",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             scene_of(c).start_position = to_double(k, v);
         }},
    };
    return table;
}

const std::map<std::string, Setter>& other_setters() {
    static const std::map<std::string, Setter> table = {
        {"input", [](RunConfig& c, const std::string&, const std::string& v) { c.input_dir = fs::path(v); }},
        {"sigma_e", [](RunConfig& c, const std::string& k, const std::string& v) { c.params.sigma_e = to_double(k, v); }},
        {"sigma_i", [](RunConfig& c, const std::string& k, const std::string& v) { c.params.sigma_i = to_double(k, v); }},
        {"a", [](RunConfig& c, const std::string& k, const std::string& v) { c.params.a = to_double(k, v); }},
        {"alpha", [](RunConfig& c, const std::string& k, const std::string& v) { c.params.alpha = to_double(k, v); }},
        {"beta", [](RunConfig& c, const std::string& k, const std::string& v) { c.params.beta = to_double(k, v); }},
        {"lambda", [](RunConfig& c, const std::string& k, const std::string& v) { c.params.lambda = to_double(k, v); }},
        {"radius", [](RunConfig& c, const std::string& k, const std::string& v) { c.params.radius = to_int(k, v); }},
        {"k", [](RunConfig& c, const std::string& k, const std::string& v) { c.params.k = to_double(k, v); }},
        {"t0", [](RunConfig& c, const std::string& k, const std::string& v) { c.params.t0 = to_double(k, v); }},
        {"m", [](RunConfig& c, const std::string& k, const std::string& v) { c.params.m = to_double(k, v); }},
        {"t_mp", [](RunConfig& c, const std::string& k, const std::string& v) { c.params.t_mp = to_double(k, v); }},
        {"n_sp", [](RunConfig& c, const std::string& k, const std::string& v) { c.params.n_sp = to_int(k, v); }},
        {"omega", [](RunConfig& c, const std::string& k, const std::string& v) { c.params.omega = to_int(k, v); }},
        {"latency",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             if (v != "round" && v != "interpolate") {
                 bad_value(k, v, "round|interpolate");
             }
             c.params.latency_quantization =
                 v == "round" ? LatencyQuantization::Round : LatencyQuantization::Interpolate;
         }},
        {"resize", [](RunConfig& c, const std::string& k, const std::string& v) { c.resize = to_double(k, v); }},
        {"normalization",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             if (v != "offline" && v != "online") {
                 bad_value(k, v, "offline|online");
             }
             c.normalization = v == "offline" ? NormalizationMode::Offline : NormalizationMode::Online;
         }},
        {"report", [](RunConfig& c, const std::string&, const std::string& v) { c.report_path = fs::path(v); }},
        {"dump_dir", [](RunConfig& c, const std::string&, const std::string& v) { c.dump_dir = fs::path(v); }},
        {"repetitions",
         [](RunConfig& c, const std::string& k, const std::string& v) { c.bench.repetitions = to_int(k, v); }},
        {"radii", [](RunConfig& c, const std::string& k, const std::string& v) { c.bench.radii = to_list<int>(k, v, to_int); }},
        {"resizes",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             c.bench.resizes = to_list<double>(k, v, to_double);
         }},
        {"speeds",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             c.sweep.speeds = to_list<double>(k, v, to_double);
         }},
        {"sigma_e_grid",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             c.sweep.sigma_e_grid = to_list<double>(k, v, to_double);
         }},
        {"sigma_i_grid",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             c.sweep.sigma_i_grid = to_list<double>(k, v, to_double);
         }},
    };
    return table;
}

}  // namespace

Settings parse_settings(std::istream& in, const std::string& source) {
    Settings out;
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        const std::string body = trim(line);
        if (body.empty()) {
            continue;
        }
        const auto eq = body.find('=');
        if (eq == std::string::npos) {
            throw Error(ErrorCode::InvalidConfig, source + ":" + std::to_string(number), "expected 'key = value'");
        }
        std::string key = trim(std::string_view(body).substr(0, eq));
        std::string value = trim(std::string_view(body).substr(eq + 1));
        if (key.empty()) {
            throw Error(ErrorCode::InvalidConfig, source + ":" + std::to_string(number), "empty key");
        }
        out.emplace_back(std::move(key), std::move(value));
    }
    return out;
}

Settings read_settings(const fs::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::InvalidConfig, path.string(), "cannot open config file");
    }
    return parse_settings(in, path.string());
}

std::pair<std::string, std::string> parse_override(const std::string& text) {
    std::istringstream in(text);
    Settings s = parse_settings(in, "--set " + text);
    if (s.size() != 1) {
        throw Error(ErrorCode::InvalidConfig, text, "expected key=value");
    }
    return s.front();
}

std::vector<std::string> known_keys() {
    std::vector<std::string> keys{"preset"};
    for (const auto& [k, _] : scene_setters()) {
        keys.push_back(k);
    }
    for (const auto& [k, _] : other_setters()) {
        keys.push_back(k);
    }
    std::sort(keys.begin(), keys.end());
    return keys;
}

RunConfig build_config(const Settings& settings) {
    RunConfig config;
    for (const auto& [key, value] : settings) {
        if (key != "preset" && !scene_setters().contains(key) && !other_setters().contains(key)) {
            throw Error(ErrorCode::InvalidConfig, key, "unknown key");
        }
    }
    for (const auto& [key, value] : settings) {
        if (key == "preset") {
            try {
                config.params = preset(value);
            } catch (const Error&) {
                bad_value(key, value, "table1|set1..set9");
            }
        }
    }
    bool scene_selected = false;
    bool geometry_given = false;
    for (const auto& [key, value] : settings) {
        if (key == "preset") {
            continue;
        }
        if (const auto it = scene_setters().find(key); it != scene_setters().end()) {
            (key == "scene" ? scene_selected : geometry_given) = true;
            it->second(config, key, value);
        } else {
            other_setters().at(key)(config, key, value);
        }
    }
    if (geometry_given && !scene_selected) {
        throw Error(ErrorCode::InvalidConfig, "scene", "scene geometry keys given without 'scene = <kind>'");
    }
    validate(config.params);
    return config;
}

void require_single_source(const RunConfig& config) {
    if (config.input_dir.has_value() == config.scene.has_value()) {
        throw Error(ErrorCode::InvalidConfig, "input",
                    config.input_dir ? "both 'input' and 'scene' given; choose one" : "no input: set 'input' or 'scene'");
    }
    if (!(config.resize > 0.0) || config.resize > 1.0) {
        throw Error(ErrorCode::InvalidConfig, "resize", "factor must be in (0, 1]");
    }
}

std::vector<Frame> load_input(const RunConfig& config) {
    require_single_source(config);
    std::vector<Frame> frames = config.input_dir ? load_sequence(*config.input_dir) : render_sequence(*config.scene);
    if (config.resize != 1.0) {
        for (Frame& f : frames) {
            f = resize_area(f, config.resize);
        }
    }
    return frames;
}

RunTrace execute_run(const RunConfig& config) {
    const std::vector<Frame> frames = load_input(config);
    RunTrace trace;
    trace.params = config.params;
    Detector detector(frames.front().width(), frames.front().height(), config.params);
    trace.max_delay = detector.max_delay();
    if (config.dump_dir) {
        fs::create_directories(*config.dump_dir);
    }
    LayerOutputs layers;
    for (std::size_t n = 0; n < frames.size(); ++n) {
        const FrameReport r = detector.step(frames[n], config.dump_dir ? &layers : nullptr);
        if (config.dump_dir) {
            const std::string suffix = "_" + std::to_string(n) + ".txt";
            write_layer_grid(*config.dump_dir / ("p" + suffix), layers.p);
            write_layer_grid(*config.dump_dir / ("s" + suffix), layers.s);
            write_layer_grid(*config.dump_dir / ("g" + suffix), layers.g);
        }
        trace.p_sum.push_back(r.p_sum);
        trace.s_sum.push_back(r.s_sum);
        trace.reports.push_back(r);
    }
    if (config.normalization == NormalizationMode::Offline) {
        renormalize(trace.reports, NormalizationMode::Offline, config.params, trace.max_delay);
    }
    return trace;
}

}  // namespace dlgmd

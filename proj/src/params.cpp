#include "dlgmd/params.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "dlgmd/error.hpp"

namespace dlgmd {

namespace {

struct Comparative {
    double alpha, beta, lambda, sigma_e, sigma_i, a, t0;
    int radius;
};

// Comparative sets of crucial parameters. Sets 1-3 have no radial latency.
constexpr std::array<Comparative, 9> kComparative = {{
    {0.0, 0.0, 0.0, 0.35, 1.0, 1.5, 0.5, 4},
    {0.0, 0.0, 0.0, 0.35, 1.8, 1.5, 0.5, 4},
    {0.0, 0.0, 0.0, 0.35, 2.5, 1.5, 0.5, 4},
    {-0.1, 0.5, 0.7, 0.35, 1.0, 1.5, 0.5, 4},
    {-0.1, 0.5, 0.7, 0.35, 1.8, 1.5, 0.5, 4},
    {-0.1, 0.5, 0.7, 0.35, 2.5, 1.5, 0.5, 4},
    {-0.1, 0.5, 0.7, 1.0, 5.0, 1.5, 0.5, 4},
    {-0.1, 0.5, 0.7, 1.0, 5.0, 1.5, 0.5, 6},
    {-0.1, 0.5, 0.7, 1.5, 5.0, 1.5, 0.5, 6},
}};

[[noreturn]] void fail(ErrorCode code, const char* field, const std::string& message) {
    throw Error(code, field, message);
}

void require_finite(double value, const char* field) {
    if (!std::isfinite(value)) {
        fail(ErrorCode::InvalidParameter, field, "must be finite");
    }
}

}  // namespace

ParameterSet table1_constants() {
    ParameterSet p;
    p.k = 1.0;
    p.t0 = 0.5;
    p.m = 0.4;
    p.t_mp = 0.4;
    p.n_sp = 2;
    return p;
}

ParameterSet preset(int set) {
    if (set < 1 || set > static_cast<int>(kComparative.size())) {
        throw Error(ErrorCode::InvalidParameter, "preset",
                    "comparative set must be in 1..9, got " + std::to_string(set));
    }
    const Comparative& c = kComparative[static_cast<std::size_t>(set - 1)];
    ParameterSet p = table1_constants();
    p.alpha = c.alpha;
    p.beta = c.beta;
    p.lambda = c.lambda;
    p.sigma_e = c.sigma_e;
    p.sigma_i = c.sigma_i;
    p.a = c.a;
    p.t0 = c.t0;
    p.radius = c.radius;
    return p;
}

ParameterSet preset(std::string_view name) {
    if (name == "table1") {
        return table1_constants();
    }
    if (name.size() == 4 && name.substr(0, 3) == "set" && name[3] >= '1' && name[3] <= '9') {
        return preset(name[3] - '0');
    }
    throw Error(ErrorCode::InvalidParameter, "preset", "unknown preset '" + std::string(name) + "'");
}

std::vector<std::string> preset_names() {
    std::vector<std::string> names{"table1"};
    for (int i = 1; i <= static_cast<int>(kComparative.size()); ++i) {
        names.push_back("set" + std::to_string(i));
    }
    return names;
}

const ParameterSet& validate(const ParameterSet& p, std::vector<std::string>* warnings) {
    for (auto [value, field] : {std::pair{p.sigma_e, "sigma_e"}, {p.sigma_i, "sigma_i"},
                                {p.a, "a"}, {p.alpha, "alpha"}, {p.beta, "beta"},
                                {p.lambda, "lambda"}, {p.k, "k"}, {p.t0, "t0"}, {p.m, "m"},
                                {p.t_mp, "t_mp"}}) {
        require_finite(value, field);
    }
    if (!(p.sigma_e > 0.0)) {
        fail(ErrorCode::NonPositiveSigma, "sigma_e", "must be > 0");
    }
    if (!(p.sigma_i > 0.0)) {
        fail(ErrorCode::NonPositiveSigma, "sigma_i", "must be > 0");
    }
    if (p.radius < 1) {
        fail(ErrorCode::NonPositiveRadius, "radius", "must be >= 1");
    }
    if (p.omega < 1) {
        fail(ErrorCode::InvalidWindow, "omega", "grouping window side must be >= 1");
    }
    if (p.a < 0.0) {
        fail(ErrorCode::InvalidParameter, "a", "inhibition strength must be >= 0");
    }
    if (p.n_sp < 1) {
        fail(ErrorCode::InvalidParameter, "n_sp", "must be >= 1");
    }
    if (!(p.m > 0.0)) {
        fail(ErrorCode::InvalidParameter, "m", "must be > 0");
    }
    if (p.t0 < 0.0) {
        fail(ErrorCode::InvalidParameter, "t0", "must be >= 0");
    }
    if (p.k < 0.0) {
        fail(ErrorCode::InvalidParameter, "k", "must be >= 0");
    }
    if (p.t_mp < 0.0 || p.t_mp > 1.0) {
        fail(ErrorCode::InvalidParameter, "t_mp", "normalized spiking threshold must be in [0, 1]");
    }

    const double needed = std::ceil(2.0 * std::max(p.sigma_e, p.sigma_i));
    if (warnings != nullptr && static_cast<double>(p.radius) < needed) {
        warnings->push_back("radius " + std::to_string(p.radius) + " < ceil(2*max(sigma_e, sigma_i)) = " +
                            std::to_string(static_cast<int>(needed)) +
                            "; kernels are truncated inside two standard deviations");
    }
    return p;
}

std::vector<std::string> validation_warnings(const ParameterSet& params) {
    std::vector<std::string> warnings;
    validate(params, &warnings);
    return warnings;
}

}  // namespace dlgmd

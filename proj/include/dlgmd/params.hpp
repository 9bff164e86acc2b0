#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace dlgmd {

/// How a fractional inhibitory latency maps onto whole-frame delays.
enum class LatencyQuantization {
    Round,        ///< round half up, floored at one frame
    Interpolate,  ///< split the weight linearly between the two bracketing delays
};

/// All tunables of the detector. Defaults are the constant parameters merged
/// with comparative set 7.
struct ParameterSet {
    // Spatial distributions (pixels) and inhibition strength.
    double sigma_e = 1.0;
    double sigma_i = 5.0;
    double a = 1.5;

    // Radial latency: tau(x, y) = alpha + 1 / (beta + exp(-lambda^2 (x^2 + y^2))), in frames.
    double alpha = -0.1;
    double beta = 0.5;
    double lambda = 0.7;

    int radius = 4;

    // Grouping and decay.
    double k = 1.0;
    double t0 = 0.5;
    double m = 0.4;
    int omega = 4;

    // Output spiking.
    double t_mp = 0.4;
    int n_sp = 2;

    LatencyQuantization latency_quantization = LatencyQuantization::Round;

    friend bool operator==(const ParameterSet&, const ParameterSet&) = default;
};

/// Constant parameters shared by every experiment (k, T0, m, T_MP, n_sp);
/// the remaining fields keep their defaults.
ParameterSet table1_constants();

/// Comparative parameter set 1..9 merged with the constants.
ParameterSet preset(int set);

/// "set1".."set9" or "table1". Throws InvalidParameter on an unknown name.
ParameterSet preset(std::string_view name);

std::vector<std::string> preset_names();

/// Throws on a hard violation (NonPositiveSigma, NonPositiveRadius,
/// InvalidWindow, InvalidParameter; the error context names the field).
/// Soft problems such as a radius too small for the wider Gaussian are
/// appended to `warnings` when given. Returns the set unchanged.
const ParameterSet& validate(const ParameterSet& params, std::vector<std::string>* warnings = nullptr);

std::vector<std::string> validation_warnings(const ParameterSet& params);

}  // namespace dlgmd

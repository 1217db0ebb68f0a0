// SPDX-License-Identifier: Apache-2.0
//
// fr3-ris: RIS-assisted FR3 downlink resource allocation
// ------------------------------------------------------------------------

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fr3
{

enum class Scheme
{
    Matching,
    Greedy,
    Random,
    Exhaustive,
};

std::string_view scheme_name(Scheme s) noexcept;
Scheme parse_scheme(std::string_view name); // throws ConfigError
std::vector<Scheme> parse_scheme_list(std::string_view comma_list);

// How the surrogate linearizes log2(I_k(P)).
enum class Linearization
{
    ExactDerivative, // g_{k,i} / (I_k ln 2)
    LogRatio,        // g_{k,i} / (ln 2 * log2 I_k), kept for comparison only
};

enum class GreedyMode
{
    OneShot,     // rejected IUs stay on the direct link
    MultiRound,  // rejected IUs retry among unclaimed RISs
};

// All quantities in SI units (Hz, W, m). dBm/dB inputs are converted by
// parse_config.
struct ScenarioConfig
{
    // Radio
    double carrier_freq = 15e9;
    double bandwidth = 400e6;
    double noise_density_dbm_hz = -174.0;
    double noise_figure_db = 10.0;
    double p_max = 0.19952623149688797; // 23 dBm
    double pathloss_exponent = 2.0;

    // Network
    int antennas = 64;
    int ius = 5;
    int riss = 3;
    int ris_elements_y = 100;
    int ris_elements_z = 100;

    // Geometry
    double area_side = 10.0; // 100 m^2
    double ap_height = 10.0;
    double ris_height = 5.0;
    double iu_height = 1.5;
    double min_ap_iu_separation = 1.0; // horizontal

    // Power solver
    double inner_tol = 1e-8;
    int inner_max_iter = 500;
    double outer_tol = 1e-6;
    int outer_max_iter = 50;
    Linearization linearization = Linearization::ExactDerivative;

    // Association / pipeline
    int power_rounds = 2;
    GreedyMode greedy_mode = GreedyMode::OneShot;
    std::uint64_t exhaustive_cap = 100000;

    // Experiment
    std::vector<Scheme> schemes{Scheme::Matching, Scheme::Greedy, Scheme::Random};
    int realizations = 200;
    std::uint64_t seed = 42;
    std::vector<double> power_sweep_dbm{10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23};
    std::vector<double> element_sweep{100, 625, 2500};

    int ris_elements() const noexcept { return ris_elements_y * ris_elements_z; }

    // sigma^2 in watts: density + 10 log10(B) + NF.
    double noise_power() const noexcept;
};

double dbm_to_watt(double dbm) noexcept;
double watt_to_dbm(double watt) noexcept;

// Flat "key = value" text, one entry per line, '#' starts a comment. Missing
// keys keep their defaults. Throws ConfigError naming the offending key for
// unknown keys, malformed values, or values out of bounds.
ScenarioConfig parse_config(std::string_view text);

// Reads a file and parses it. Throws IoError when the file cannot be read.
ScenarioConfig load_config(const std::string &path);

// Throws ConfigError if any field is out of range.
void validate(const ScenarioConfig &cfg);

// Canonical "key = value" rendering; parse_config(to_text(c)) reproduces c.
std::string to_text(const ScenarioConfig &cfg);

} // namespace fr3

// SPDX-License-Identifier: Apache-2.0
//
// fr3-ris: RIS-assisted FR3 downlink resource allocation
// ------------------------------------------------------------------------
//
// Monte Carlo harness: one realization = one uniform IU drop with fixed AP and
// RIS positions. Per-realization random streams are derived from the master
// seed and the realization index, and aggregation runs in index order, so
// results do not depend on the number of worker threads.

#pragma once

#include "fr3/association.hpp"
#include "fr3/config.hpp"
#include "fr3/power_sca.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace fr3
{

struct RealizationOutcome
{
    double sum_rate = 0.0; // bits/s/Hz
    Association association;
    PowerAllocation power;
};

// Full pipeline of one scheme on an already synthesized realization:
//   uniform powers -> greedy initial association -> (power_rounds - 1) x
//   [SCA power, utility matrix, scheme association] -> final SCA power.
// Exhaustive search scores every candidate by its final SCA sum rate.
RealizationOutcome run_scheme(const ScenarioConfig &cfg, const LinkEvaluator &links, Scheme scheme,
                              std::uint64_t index);

RealizationOutcome run_realization_detail(const ScenarioConfig &cfg, Scheme scheme,
                                          std::uint64_t index);

// Final coupled sum rate of `scheme` on realization `index`.
double run_realization(const ScenarioConfig &cfg, Scheme scheme, std::uint64_t index);

enum class SweepVariable
{
    Power,    // values in dBm, override p_max
    Elements, // values are total element counts M = M_y * M_z, M_y = M_z
};

std::string_view sweep_variable_name(SweepVariable v) noexcept;

struct SchemeSeries
{
    Scheme scheme;
    std::vector<double> mean;   // per sweep value
    std::vector<double> std_error; // sample stdev / sqrt(n)
};

struct SweepResult
{
    std::string variable;
    std::vector<double> values;
    std::vector<SchemeSeries> series;
    int realizations = 0;

    const SchemeSeries &of(Scheme s) const;
};

// Thread count from FR3_THREADS; 0 or unset selects hardware concurrency.
unsigned thread_count_from_env();

// Runs cfg.realizations realizations of every scheme in cfg.schemes at each
// sweep value. `threads` = 0 reads FR3_THREADS.
SweepResult sweep(const ScenarioConfig &cfg, SweepVariable variable,
                  const std::vector<double> &values, unsigned threads = 0);

// Single operating point reported as a one-value power sweep at cfg.p_max.
SweepResult run_point(const ScenarioConfig &cfg, unsigned threads = 0);

// Per-realization rates for every scheme at one configuration,
// [scheme][realization], in cfg.schemes order.
std::vector<std::vector<double>> realization_rates(const ScenarioConfig &cfg, unsigned threads = 0);

// sweep_var,sweep_value,scheme,mean_sum_rate_bps_hz,stderr,realizations
// One row per (value, scheme); floats with 17 significant digits, LF endings.
std::string to_csv(const SweepResult &result);
void emit_csv(const SweepResult &result, const std::string &path);
SweepResult parse_csv(std::string_view text);

// Mean and standard error of a sample (stderr 0 for fewer than 2 points).
std::pair<double, double> mean_and_stderr(const std::vector<double> &samples);

inline double to_bits_per_second(double spectral_efficiency, const ScenarioConfig &cfg)
{
    return spectral_efficiency * cfg.bandwidth;
}

} // namespace fr3

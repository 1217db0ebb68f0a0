// SPDX-License-Identifier: Apache-2.0
//
// fr3-ris: RIS-assisted FR3 downlink resource allocation
// ------------------------------------------------------------------------

#pragma once

#include "fr3/channel.hpp"

#include <span>
#include <vector>

namespace fr3
{

// Transmit power per IU in watts.
struct PowerAllocation
{
    std::vector<double> p;

    static PowerAllocation uniform(std::size_t num_ius, double budget);
    double total() const noexcept;
    bool feasible(double budget, double slack = 0.0) const noexcept;
};

// Rates in bits/s/Hz.
struct RateReport
{
    std::vector<double> per_iu_sinr;
    std::vector<double> per_iu_rate;
    double sum_rate = 0.0;
};

// sum_{i != k} p_i g(k, i) + sigma_k^2
double interference(const GainMatrix &g, std::span<const double> p, std::size_t k);

// p_k g(k, k) / interference. Throws NumericError when the denominator is 0.
double sinr(const GainMatrix &g, std::span<const double> p, std::size_t k);

RateReport sum_rate(const GainMatrix &g, std::span<const double> p);

inline RateReport sum_rate(const GainMatrix &g, const PowerAllocation &alloc)
{
    return sum_rate(g, alloc.p);
}

} // namespace fr3

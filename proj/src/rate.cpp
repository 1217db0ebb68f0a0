// SPDX-License-Identifier: Apache-2.0
//
// fr3-ris: RIS-assisted FR3 downlink resource allocation
// ------------------------------------------------------------------------

#include "fr3/rate.hpp"

#include "fr3/errors.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace fr3
{

PowerAllocation PowerAllocation::uniform(std::size_t num_ius, double budget)
{
    return {std::vector<double>(num_ius, budget / static_cast<double>(num_ius))};
}

double PowerAllocation::total() const noexcept
{
    return std::accumulate(p.begin(), p.end(), 0.0);
}

bool PowerAllocation::feasible(double budget, double slack) const noexcept
{
    for (double v : p)
        if (!(v >= 0.0))
            return false;
    return total() <= budget + slack;
}

double interference(const GainMatrix &g, std::span<const double> p, std::size_t k)
{
    if (p.size() != g.size())
        throw DimensionError("interference: power vector length does not match gains");
    if (k >= g.size())
        throw DimensionError("interference: IU index out of range");
    double sum = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (i != k)
            sum += p[i] * g(k, i);
    return sum + g.noise(k);
}

double sinr(const GainMatrix &g, std::span<const double> p, std::size_t k)
{
    const double den = interference(g, p, k);
    if (!(den > 0.0))
        throw NumericError("sinr: zero interference-plus-noise for IU " + std::to_string(k));
    return p[k] * g(k, k) / den;
}

RateReport sum_rate(const GainMatrix &g, std::span<const double> p)
{
    const std::size_t K = g.size();
    RateReport r;
    r.per_iu_sinr.resize(K);
    r.per_iu_rate.resize(K);
    for (std::size_t k = 0; k < K; ++k)
    {
        r.per_iu_sinr[k] = sinr(g, p, k);
        r.per_iu_rate[k] = std::log2(1.0 + r.per_iu_sinr[k]);
        r.sum_rate += r.per_iu_rate[k];
    }
    return r;
}

} // namespace fr3

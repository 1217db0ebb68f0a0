// SPDX-License-Identifier: Apache-2.0
//
// fr3-ris: RIS-assisted FR3 downlink resource allocation
// ------------------------------------------------------------------------
//
// Random instance generators shared by the unit and acceptance tests.

#pragma once

#include "fr3/association.hpp"
#include "fr3/channel.hpp"
#include "fr3/random.hpp"
#include "fr3/topology.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

namespace fr3::testing
{

// Unitless gains: strong diagonal, weaker cross terms, noise of similar order.
inline GainMatrix random_unit_gains(Rng &rng, std::size_t K)
{
    std::uniform_real_distribution<double> diag(0.5, 2.0), off(0.0, 0.6), noise(0.05, 0.5);
    std::vector<std::vector<double>> g(K, std::vector<double>(K));
    std::vector<double> n(K);
    for (std::size_t k = 0; k < K; ++k)
    {
        for (std::size_t i = 0; i < K; ++i)
            g[k][i] = (i == k) ? diag(rng) : off(rng);
        n[k] = noise(rng);
    }
    return GainMatrix(std::move(g), std::move(n));
}

// Gains spread over decades around the link budget of a 10 m FR3 cell.
inline GainMatrix random_physical_gains(Rng &rng, std::size_t K, double noise_power)
{
    std::uniform_real_distribution<double> exponent(-11.0, -7.0);
    std::vector<std::vector<double>> g(K, std::vector<double>(K));
    for (auto &row : g)
        for (double &x : row)
            x = std::pow(10.0, exponent(rng));
    return GainMatrix(std::move(g), std::vector<double>(K, noise_power));
}

// Point of {p >= 0, sum p <= budget}; a third of the draws land on the boundary.
inline std::vector<double> random_feasible_power(Rng &rng, std::size_t K, double budget)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> cuts(K);
    for (double &c : cuts)
        c = u(rng);
    std::sort(cuts.begin(), cuts.end());
    const bool boundary = uniform_index(rng, 3) == 0;
    const double top = boundary ? cuts.back() : 1.0;
    std::vector<double> p(K);
    double prev = 0.0;
    for (std::size_t i = 0; i < K; ++i)
    {
        p[i] = (cuts[i] - prev) / top * budget;
        prev = cuts[i];
    }
    return p;
}

// Gains of a sampled drop under a random association.
inline GainMatrix realization_gains(const ScenarioConfig &cfg, std::uint64_t seed)
{
    Rng rng(seed);
    const ChannelSet ch = synthesize_channels(sample_topology(cfg, rng), cfg);
    const LinkEvaluator links(ch, cfg.noise_power());
    return links.gains(random_association(ch.num_ius(), ch.num_riss(), rng));
}

} // namespace fr3::testing

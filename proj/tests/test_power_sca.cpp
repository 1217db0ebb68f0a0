// SPDX-License-Identifier: Apache-2.0
//
// fr3-ris: RIS-assisted FR3 downlink resource allocation
// ------------------------------------------------------------------------

#include "fr3/errors.hpp"
#include "fr3/power_sca.hpp"
#include "support/instances.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace
{

double log2_interference(const fr3::GainMatrix &g, const std::vector<double> &p, std::size_t k)
{
    double s = g.noise(k);
    for (std::size_t i = 0; i < p.size(); ++i)
        if (i != k)
            s += g(k, i) * p[i];
    return std::log2(s);
}

// Surrogate written out by hand: sum_k log2(total_k(p)) - sum_{k, i != k} rho_ki p_i.
double oracle_surrogate(const fr3::GainMatrix &g, const std::vector<double> &p,
                        const std::vector<double> &p_t)
{
    const std::size_t K = g.size();
    double f = 0.0;
    for (std::size_t k = 0; k < K; ++k)
    {
        double total = g.noise(k), It = g.noise(k);
        for (std::size_t i = 0; i < K; ++i)
        {
            total += g(k, i) * p[i];
            if (i != k)
                It += g(k, i) * p_t[i];
        }
        f += std::log2(total);
        for (std::size_t i = 0; i < K; ++i)
            if (i != k)
                f -= g(k, i) / (It * std::numbers::ln2) * p[i];
    }
    return f;
}

// Best value over the grid {p = budget * n / steps, sum <= budget}, K <= 3.
template <typename F>
double grid_max(std::size_t K, double budget, int steps, F &&f)
{
    double best = -std::numeric_limits<double>::infinity();
    std::vector<double> p(K, 0.0);
    const double h = budget / steps;
    for (int a = 0; a <= steps; ++a)
        for (int b = 0; b <= (K > 1 ? steps - a : 0); ++b)
            for (int c = 0; c <= (K > 2 ? steps - a - b : 0); ++c)
            {
                p[0] = a * h;
                if (K > 1)
                    p[1] = b * h;
                if (K > 2)
                    p[2] = c * h;
                best = std::max(best, f(p));
            }
    return best;
}

// Water-filling optimum of sum_k log2(noise_k + p_k g_kk) by bisection on the level.
std::vector<double> water_filling(const fr3::GainMatrix &g, double budget)
{
    const std::size_t K = g.size();
    auto fill = [&](double level)
    {
        std::vector<double> p(K);
        for (std::size_t k = 0; k < K; ++k)
            p[k] = std::max(0.0, level - g.noise(k) / g(k, k));
        return p;
    };
    double lo = 0.0, hi = budget;
    for (std::size_t k = 0; k < K; ++k)
        hi = std::max(hi, budget + g.noise(k) / g(k, k));
    for (int it = 0; it < 200; ++it)
    {
        const double mid = 0.5 * (lo + hi);
        const auto p = fill(mid);
        double s = 0.0;
        for (double x : p)
            s += x;
        (s > budget ? hi : lo) = mid;
    }
    return fill(lo);
}

} // namespace

TEST_CASE("slope example and diagonal")
{
    // g_01 = 2, I_0 = 1 * 2 + 2 = 4.
    const fr3::GainMatrix g({{1.0, 2.0}, {1.0, 1.0}}, {2.0, 1.0});
    const std::vector<double> p{1.0, 1.0};
    CHECK(fr3::surrogate_gradient(g, p, 0, 1) == doctest::Approx(0.72135).epsilon(1e-5));
    CHECK(fr3::surrogate_gradient(g, p, 0, 0) == 0.0);
    const fr3::GainMatrix z({{1.0, 0.0}, {0.0, 1.0}}, {1.0, 1.0});
    CHECK(fr3::surrogate_gradient(z, p, 0, 1) == 0.0);
}

TEST_CASE("slopes equal central differences of log2 interference")
{
    fr3::Rng rng(41);
    for (int t = 0; t < 50; ++t)
    {
        const std::size_t K = 2 + t % 4;
        const auto g = fr3::testing::random_unit_gains(rng, K);
        const auto p = fr3::testing::random_feasible_power(rng, K, 1.0);
        for (std::size_t k = 0; k < K; ++k)
            for (std::size_t i = 0; i < K; ++i)
            {
                if (i == k)
                    continue;
                auto up = p, dn = p;
                up[i] += 1e-6;
                dn[i] -= 1e-6;
                const double fd = (log2_interference(g, up, k) - log2_interference(g, dn, k)) / 2e-6;
                CHECK(fr3::surrogate_gradient(g, p, k, i) == doctest::Approx(fd).epsilon(1e-5));
            }
    }
}

TEST_CASE("surrogate objective matches the hand-written form")
{
    fr3::Rng rng(43);
    for (int t = 0; t < 30; ++t)
    {
        const std::size_t K = 1 + t % 5;
        const auto g = fr3::testing::random_physical_gains(rng, K, 1.592e-11);
        const auto pt = fr3::testing::random_feasible_power(rng, K, 0.2);
        const auto p = fr3::testing::random_feasible_power(rng, K, 0.2);
        CHECK(fr3::surrogate_objective(g, p, pt) ==
              doctest::Approx(oracle_surrogate(g, p, pt)).epsilon(1e-12));
    }
}

TEST_CASE("reconstructed rate is a tight lower bound")
{
    fr3::Rng rng(47);
    for (int t = 0; t < 40; ++t)
    {
        const std::size_t K = 3;
        const auto g = t % 2 ? fr3::testing::random_unit_gains(rng, K)
                             : fr3::testing::random_physical_gains(rng, K, 1.592e-11);
        const double budget = t % 2 ? 1.0 : 0.2;
        const auto pt = fr3::testing::random_feasible_power(rng, K, budget);
        const auto at_pt = fr3::sum_rate(g, pt);
        for (std::size_t k = 0; k < K; ++k)
            CHECK(std::abs(fr3::surrogate_rate(g, pt, pt, k) - at_pt.per_iu_rate[k]) <= 1e-9);
        for (int s = 0; s < 200; ++s)
        {
            const auto p = fr3::testing::random_feasible_power(rng, K, budget);
            const auto r = fr3::sum_rate(g, p);
            for (std::size_t k = 0; k < K; ++k)
                CHECK(fr3::surrogate_rate(g, p, pt, k) <= r.per_iu_rate[k] + 1e-9);
        }
    }
}

TEST_CASE("log-ratio slopes break the bound at physical scale")
{
    // log2 of a sub-milliwatt interference level is negative, which flips the
    // sign of the log-ratio slope; the tangent then undershoots log2(I).
    fr3::Rng rng(53);
    bool violated = false;
    for (int t = 0; t < 50 && !violated; ++t)
    {
        const auto g = fr3::testing::random_physical_gains(rng, 3, 1.592e-11);
        const auto pt = fr3::testing::random_feasible_power(rng, 3, 0.2);
        for (int s = 0; s < 50 && !violated; ++s)
        {
            const auto p = fr3::testing::random_feasible_power(rng, 3, 0.2);
            for (std::size_t k = 0; k < 3; ++k)
            {
                double line = log2_interference(g, pt, k);
                for (std::size_t i = 0; i < 3; ++i)
                    line += fr3::surrogate_gradient(g, pt, k, i, fr3::Linearization::LogRatio) *
                            (p[i] - pt[i]);
                violated = violated || line < log2_interference(g, p, k) - 1e-9;
            }
        }
    }
    CHECK(violated);
}

TEST_CASE("single IU takes the whole budget")
{
    const fr3::GainMatrix g({{3.0}}, {0.1});
    const auto out = fr3::solve_inner(g, fr3::PowerAllocation::uniform(1, 2.0), 2.0);
    CHECK(out.p[0] == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("symmetric pair gets equal powers")
{
    const fr3::GainMatrix g({{2.0, 0.5}, {0.5, 2.0}}, {0.2, 0.2});
    const auto out = fr3::solve_inner(g, fr3::PowerAllocation::uniform(2, 1.0), 1.0);
    CHECK(std::abs(out.p[0] - out.p[1]) <= 1e-9);
    CHECK(out.feasible(1.0));
}

TEST_CASE("inner solve reaches the grid optimum")
{
    fr3::Rng rng(59);
    for (int t = 0; t < 6; ++t)
    {
        const std::size_t K = 1 + t % 3;
        const auto g = t % 2 ? fr3::testing::random_unit_gains(rng, K)
                             : fr3::testing::random_physical_gains(rng, K, 1.592e-11);
        const double budget = t % 2 ? 1.0 : 0.2;
        const auto pt = fr3::testing::random_feasible_power(rng, K, budget);
        const auto out = fr3::solve_inner(g, {pt}, budget);
        CHECK(out.feasible(budget, 1e-15));
        const double got = oracle_surrogate(g, out.p, pt);
        const double grid = grid_max(K, budget, 200, [&](const std::vector<double> &p)
                                     { return oracle_surrogate(g, p, pt); });
        CHECK(got >= grid - 1e-6);
        CHECK(got >= oracle_surrogate(g, pt, pt) - 1e-12);
    }
}

TEST_CASE("without interference SCA is water-filling")
{
    fr3::Rng rng(61);
    for (int t = 0; t < 20; ++t)
    {
        const std::size_t K = 1 + t % 4;
        auto g = fr3::testing::random_unit_gains(rng, K);
        for (std::size_t k = 0; k < K; ++k)
            for (std::size_t i = 0; i < K; ++i)
                if (i != k)
                    g(k, i) = 0.0;
        const auto res = fr3::sca_power(g, 1.0);
        CHECK(res.trace.iterations <= 2);
        CHECK(res.trace.converged);
        const double best = fr3::sum_rate(g, water_filling(g, 1.0)).sum_rate;
        CHECK(fr3::sum_rate(g, res.allocation).sum_rate == doctest::Approx(best).epsilon(1e-6));
    }
}

TEST_CASE("SCA trace is monotone and beats uniform power")
{
    fr3::ScenarioConfig cfg;
    cfg.ius = 3;
    cfg.riss = 2;
    cfg.antennas = 8;
    cfg.ris_elements_y = cfg.ris_elements_z = 5;
    fr3::Rng rng(67);
    for (std::uint64_t seed = 0; seed < 40; ++seed)
    {
        const auto g = seed % 2 ? fr3::testing::realization_gains(cfg, seed)
                                : fr3::testing::random_unit_gains(rng, 2 + seed % 3);
        const double budget = seed % 2 ? cfg.p_max : 1.0;
        const auto res = fr3::sca_power(g, budget);
        const auto &tr = res.trace.objective_per_iteration;
        REQUIRE(tr.size() == static_cast<std::size_t>(res.trace.iterations) + 1);
        for (std::size_t i = 1; i < tr.size(); ++i)
            CHECK(tr[i] >= tr[i - 1] - 1e-9);
        CHECK(res.allocation.feasible(budget, 1e-12 * budget));
        CHECK(fr3::sum_rate(g, res.allocation).sum_rate >=
              fr3::sum_rate(g, fr3::PowerAllocation::uniform(g.size(), budget)).sum_rate - 1e-12);
    }
}

TEST_CASE("restarting at the fixed point stops after one step")
{
    fr3::Rng rng(71);
    const auto g = fr3::testing::random_unit_gains(rng, 3);
    const auto first = fr3::sca_power(g, 1.0);
    const auto again = fr3::sca_power(g, 1.0, first.allocation);
    CHECK(again.trace.iterations == 1);
    CHECK(again.trace.converged);
}

TEST_CASE("SCA argument checks")
{
    const fr3::GainMatrix g({{1.0, 0.1}, {0.1, 1.0}}, {0.1, 0.1});
    CHECK_THROWS_AS(fr3::sca_power(g, 1.0, fr3::PowerAllocation{{0.8, 0.8}}), fr3::NumericError);
    CHECK_THROWS_AS(fr3::sca_power(g, 1.0, fr3::PowerAllocation{{1.0}}), fr3::DimensionError);
    CHECK_THROWS_AS(fr3::solve_inner(g, fr3::PowerAllocation{{0.5, 0.5}}, 0.0), fr3::DomainError);
    const auto o = fr3::ScaOptions::from_config(fr3::ScenarioConfig{});
    CHECK(o.inner.tol == 1e-8);
    CHECK(o.inner.max_iter == 500);
    CHECK(o.outer_tol == 1e-6);
    CHECK(o.outer_max == 50);
}

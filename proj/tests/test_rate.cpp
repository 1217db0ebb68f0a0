// SPDX-License-Identifier: Apache-2.0
//
// fr3-ris: RIS-assisted FR3 downlink resource allocation
// ------------------------------------------------------------------------

#include "fr3/errors.hpp"
#include "fr3/rate.hpp"
#include "support/instances.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>

namespace
{

fr3::GainMatrix two_by_two(double d, double c, double noise)
{
    return fr3::GainMatrix({{d, c}, {c, d}}, {noise, noise});
}

} // namespace

TEST_CASE("interference examples")
{
    const auto g = two_by_two(2.0, 1.0, 1.0);
    const std::vector<double> p{1.0, 1.0};
    CHECK(fr3::interference(g, p, 0) == 2.0);
    CHECK(fr3::interference(g, p, 1) == 2.0);

    const fr3::GainMatrix single({{5.0}}, {0.25});
    const std::vector<double> q{3.0};
    CHECK(fr3::interference(single, q, 0) == 0.25);
}

TEST_CASE("sinr examples")
{
    const auto g = two_by_two(2.0, 1.0, 1.0);
    const std::vector<double> p{1.0, 1.0};
    CHECK(fr3::sinr(g, p, 0) == 1.0);

    const std::vector<double> off{0.0, 1.0};
    CHECK(fr3::sinr(g, off, 0) == 0.0);

    const fr3::GainMatrix single({{4.0}}, {2.0});
    const std::vector<double> half{0.5};
    CHECK(fr3::sinr(single, half, 0) == 1.0);

    const fr3::GainMatrix silent({{1.0}}, {0.0});
    CHECK_THROWS_AS(fr3::sinr(silent, half, 0), fr3::NumericError);
}

TEST_CASE("sum_rate examples")
{
    const auto g = two_by_two(2.0, 1.0, 1.0);
    const std::vector<double> p{1.0, 1.0};
    const auto r = fr3::sum_rate(g, p);
    CHECK(r.sum_rate == doctest::Approx(2.0).epsilon(1e-15));

    const std::vector<double> zero{0.0, 0.0};
    CHECK(fr3::sum_rate(g, zero).sum_rate == 0.0);
}

TEST_CASE("report fields are consistent")
{
    fr3::Rng rng(17);
    for (int t = 0; t < 50; ++t)
    {
        const std::size_t K = 1 + t % 6;
        const auto g = fr3::testing::random_unit_gains(rng, K);
        const auto p = fr3::testing::random_feasible_power(rng, K, 1.0);
        const auto r = fr3::sum_rate(g, p);
        double total = 0.0;
        for (std::size_t k = 0; k < K; ++k)
        {
            CHECK(r.per_iu_rate[k] == doctest::Approx(std::log2(1.0 + r.per_iu_sinr[k])).epsilon(1e-12));
            CHECK(r.per_iu_rate[k] >= 0.0);
            total += r.per_iu_rate[k];
        }
        CHECK(r.sum_rate == doctest::Approx(total).epsilon(1e-12));
    }
}

TEST_CASE("interference matches a loop oracle")
{
    fr3::Rng rng(5);
    for (int t = 0; t < 20; ++t)
    {
        const auto g = fr3::testing::random_physical_gains(rng, 3, 1.592e-11);
        const auto p = fr3::testing::random_feasible_power(rng, 3, 0.2);
        for (std::size_t k = 0; k < 3; ++k)
        {
            double ref = g.noise(k);
            for (std::size_t i = 0; i < 3; ++i)
                ref += (i == k) ? 0.0 : p[i] * g(k, i);
            CHECK(fr3::interference(g, p, k) == doctest::Approx(ref).epsilon(1e-12));
        }
    }
}

TEST_CASE("own power helps the IU and hurts the others")
{
    fr3::Rng rng(23);
    std::uniform_real_distribution<double> bump(0.01, 0.5);
    for (int t = 0; t < 100; ++t)
    {
        const std::size_t K = 2 + t % 4;
        const auto g = fr3::testing::random_unit_gains(rng, K);
        auto p = fr3::testing::random_feasible_power(rng, K, 1.0);
        const auto before = fr3::sum_rate(g, p);
        const std::size_t k = fr3::uniform_index(rng, K);
        p[k] += bump(rng);
        const auto after = fr3::sum_rate(g, p);
        CHECK(after.per_iu_rate[k] >= before.per_iu_rate[k]);
        for (std::size_t i = 0; i < K; ++i)
            if (i != k)
                CHECK(after.per_iu_rate[i] <= before.per_iu_rate[i]);
    }
}

TEST_CASE("sinr is invariant to a common rescaling of gains and noise")
{
    fr3::Rng rng(29);
    for (int t = 0; t < 50; ++t)
    {
        const std::size_t K = 1 + t % 5;
        const auto g = fr3::testing::random_physical_gains(rng, K, 1.592e-11);
        const auto p = fr3::testing::random_feasible_power(rng, K, 0.2);
        const double s = std::pow(10.0, static_cast<double>(t % 7) - 3.0);
        fr3::GainMatrix h = g;
        for (std::size_t k = 0; k < K; ++k)
        {
            for (std::size_t i = 0; i < K; ++i)
                h(k, i) *= s;
            h.noise()[k] *= s;
        }
        for (std::size_t k = 0; k < K; ++k)
            CHECK(fr3::sinr(h, p, k) == doctest::Approx(fr3::sinr(g, p, k)).epsilon(1e-12));
    }
}

TEST_CASE("sum rate is invariant to IU relabeling")
{
    fr3::Rng rng(31);
    for (int t = 0; t < 50; ++t)
    {
        const std::size_t K = 2 + t % 5;
        const auto g = fr3::testing::random_unit_gains(rng, K);
        const auto p = fr3::testing::random_feasible_power(rng, K, 1.0);
        std::vector<std::size_t> perm(K);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        fr3::GainMatrix h(K, 0.0);
        std::vector<double> q(K);
        for (std::size_t a = 0; a < K; ++a)
        {
            q[a] = p[perm[a]];
            h.noise()[a] = g.noise(perm[a]);
            for (std::size_t b = 0; b < K; ++b)
                h(a, b) = g(perm[a], perm[b]);
        }
        CHECK(fr3::sum_rate(h, q).sum_rate == doctest::Approx(fr3::sum_rate(g, p).sum_rate).epsilon(1e-12));
    }
}

TEST_CASE("allocation helpers")
{
    const auto u = fr3::PowerAllocation::uniform(4, 2.0);
    CHECK(u.p == std::vector<double>{0.5, 0.5, 0.5, 0.5});
    CHECK(u.total() == 2.0);
    CHECK(u.feasible(2.0));
    CHECK_FALSE(u.feasible(1.9));
    const fr3::PowerAllocation neg{{-0.1, 0.2}};
    CHECK_FALSE(neg.feasible(1.0));
    const auto g = two_by_two(1.0, 0.0, 1.0);
    const std::vector<double> wrong{1.0};
    CHECK_THROWS_AS(fr3::interference(g, wrong, 0), fr3::DimensionError);
}

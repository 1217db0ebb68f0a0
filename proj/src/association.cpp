// SPDX-License-Identifier: Apache-2.0
//
// fr3-ris: RIS-assisted FR3 downlink resource allocation
// ------------------------------------------------------------------------

#include "fr3/association.hpp"

#include "fr3/errors.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace fr3
{

namespace
{

void check_utilities(const UtilityMatrix &u)
{
    const std::size_t L = u.num_riss();
    for (const auto &row : u.u)
    {
        if (row.size() != L)
            throw DimensionError("utility matrix rows have different lengths");
        if (!all_finite(row))
            throw NumericError("utility matrix has non-finite entries");
    }
}

// RIS indices ordered by descending utility, lower index first on ties.
std::vector<std::size_t> preference_list(const std::vector<double> &row)
{
    std::vector<std::size_t> order(row.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return row[a] > row[b]; });
    return order;
}

} // namespace

UtilityMatrix utility_matrix(const LinkEvaluator &links, const PowerAllocation &p_star)
{
    const std::size_t K = links.num_ius();
    const std::size_t L = links.num_riss();
    if (p_star.p.size() != K)
        throw DimensionError("utility_matrix: power vector length does not match IUs");

    UtilityMatrix um;
    um.u.assign(K, std::vector<double>(L, 0.0));
    for (std::size_t k = 0; k < K; ++k)
        for (std::size_t l = 0; l < L; ++l)
        {
            Association single(K, L);
            single.assign(k, l);
            um.u[k][l] = sum_rate(links.gains(single), p_star).per_iu_rate[k];
        }
    return um;
}

UtilityMatrix utility_matrix(const ChannelSet &ch, double noise_power,
                             const PowerAllocation &p_star)
{
    const std::size_t K = ch.num_ius();
    const std::size_t L = ch.num_riss();
    if (p_star.p.size() != K)
        throw DimensionError("utility_matrix: power vector length does not match IUs");

    UtilityMatrix um;
    um.u.assign(K, std::vector<double>(L, 0.0));
    for (std::size_t k = 0; k < K; ++k)
        for (std::size_t l = 0; l < L; ++l)
        {
            Association single(K, L);
            single.assign(k, l);
            const RisConfig ris = configure_ris_cophase(ch, single);
            const Precoder pre = mrt_precoder(ch, ris, single);
            const GainMatrix g = compute_gains(ch, ris, single, pre, noise_power);
            um.u[k][l] = sum_rate(g, p_star).per_iu_rate[k];
        }
    return um;
}

Association match_deferred_acceptance(const UtilityMatrix &u)
{
    check_utilities(u);
    const std::size_t K = u.num_ius();
    const std::size_t L = u.num_riss();
    Association a(K, L);
    if (L == 0)
        return a;

    std::vector<std::vector<std::size_t>> prefs(K);
    for (std::size_t k = 0; k < K; ++k)
        prefs[k] = preference_list(u.u[k]);
    std::vector<std::size_t> next(K, 0);

    // Proposal rounds: every free IU with RISs left proposes at once, then
    // each RIS keeps its best candidate among the holder and the proposers.
    while (true)
    {
        std::vector<std::vector<std::size_t>> proposals(L);
        bool any = false;
        for (std::size_t k = 0; k < K; ++k)
        {
            if (a.ris_of(k) || next[k] >= L)
                continue;
            proposals[prefs[k][next[k]++]].push_back(k);
            any = true;
        }
        if (!any)
            break;

        for (std::size_t l = 0; l < L; ++l)
        {
            if (proposals[l].empty())
                continue;
            std::optional<std::size_t> best = a.iu_of(l);
            for (std::size_t k : proposals[l])
            {
                if (!best || u.u[k][l] > u.u[*best][l] ||
                    (u.u[k][l] == u.u[*best][l] && k < *best))
                    best = k;
            }
            if (const auto holder = a.iu_of(l); holder && *holder != *best)
                a.release_iu(*holder);
            if (!a.ris_of(*best))
                a.assign(*best, l);
        }
    }
    return a;
}

std::vector<std::pair<std::size_t, std::size_t>> blocking_pairs(const UtilityMatrix &u,
                                                                 const Association &a)
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t k = 0; k < u.num_ius(); ++k)
    {
        const auto own = a.ris_of(k);
        const double current = own ? u.u[k][*own] : 0.0;
        for (std::size_t l = 0; l < u.num_riss(); ++l)
        {
            if (own && *own == l)
                continue;
            const auto holder = a.iu_of(l);
            const double ris_current = holder ? u.u[*holder][l] : 0.0;
            const double v = u.u[k][l];
            if (v > current && (holder ? v > ris_current : v > 0.0))
                out.emplace_back(k, l);
        }
    }
    return out;
}

double total_utility(const UtilityMatrix &u, const Association &a)
{
    double s = 0.0;
    for (std::size_t k = 0; k < u.num_ius(); ++k)
        if (const auto l = a.ris_of(k))
            s += u.u[k][*l];
    return s;
}

Association greedy_association(const UtilityMatrix &u, Rng &rng, GreedyMode mode)
{
    check_utilities(u);
    const std::size_t K = u.num_ius();
    const std::size_t L = u.num_riss();
    Association a(K, L);
    if (L == 0)
        return a;

    std::vector<bool> active(K, true);
    while (true)
    {
        std::vector<std::vector<std::size_t>> proposals(L);
        bool any = false;
        for (std::size_t k = 0; k < K; ++k)
        {
            if (!active[k])
                continue;
            std::optional<std::size_t> best;
            for (std::size_t l = 0; l < L; ++l)
            {
                if (a.iu_of(l) || !(u.u[k][l] > 0.0))
                    continue;
                if (!best || u.u[k][l] > u.u[k][*best])
                    best = l;
            }
            if (best)
            {
                proposals[*best].push_back(k);
                any = true;
            }
            active[k] = false;
        }
        if (!any)
            break;

        for (std::size_t l = 0; l < L; ++l)
        {
            const auto &cand = proposals[l];
            if (cand.empty())
                continue;
            const std::size_t winner = cand.size() == 1 ? cand[0] : cand[uniform_index(rng, cand.size())];
            a.assign(winner, l);
            if (mode == GreedyMode::MultiRound)
                for (std::size_t k : cand)
                    if (k != winner)
                        active[k] = true;
        }
        if (mode == GreedyMode::OneShot)
            break;
    }
    return a;
}

Association random_association(std::size_t num_ius, std::size_t num_riss, Rng &rng)
{
    Association a(num_ius, num_riss);
    if (num_riss == 0)
        return a;

    std::vector<std::size_t> order(num_ius);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);

    std::vector<std::size_t> free_riss(num_riss);
    std::iota(free_riss.begin(), free_riss.end(), 0);
    for (std::size_t k : order)
    {
        // Index free_riss.size() stands for "no RIS".
        const std::size_t pick = uniform_index(rng, free_riss.size() + 1);
        if (pick == free_riss.size())
            continue;
        a.assign(k, free_riss[pick]);
        free_riss.erase(free_riss.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return a;
}

std::uint64_t count_associations(std::size_t num_ius, std::size_t num_riss) noexcept
{
    // sum_j C(K,j) * L!/(L-j)!, built incrementally:
    // term_j = term_{j-1} * (K-j+1) / j * (L-j+1), each step exact.
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    const std::size_t J = std::min(num_ius, num_riss);
    std::uint64_t term = 1, total = 1;
    for (std::size_t j = 1; j <= J; ++j)
    {
        std::uint64_t t = 0;
        if (__builtin_mul_overflow(term, num_ius - j + 1, &t))
            return kMax;
        t /= j;
        if (__builtin_mul_overflow(t, num_riss - j + 1, &term) ||
            __builtin_add_overflow(total, term, &total))
            return kMax;
    }
    return total;
}

void for_each_association(std::size_t num_ius, std::size_t num_riss,
                          const std::function<void(const Association &)> &visit)
{
    Association a(num_ius, num_riss);
    // Depth-first over IUs: each IU either stays direct or takes a free RIS.
    std::function<void(std::size_t)> recurse = [&](std::size_t k)
    {
        if (k == num_ius)
        {
            visit(a);
            return;
        }
        recurse(k + 1);
        for (std::size_t l = 0; l < num_riss; ++l)
        {
            if (a.iu_of(l))
                continue;
            a.assign(k, l);
            recurse(k + 1);
            a.release_iu(k);
        }
    };
    recurse(0);
}

ExhaustiveResult exhaustive_association(std::size_t num_ius, std::size_t num_riss,
                                        const std::function<double(const Association &)> &score,
                                        std::uint64_t cap)
{
    const std::uint64_t total = count_associations(num_ius, num_riss);
    if (total > cap)
        throw SizeError("exhaustive search over " + std::to_string(total) +
                        " associations exceeds the cap of " + std::to_string(cap));

    ExhaustiveResult best;
    best.sum_rate = -std::numeric_limits<double>::infinity();
    for_each_association(num_ius, num_riss, [&](const Association &a)
                         {
        const double s = score(a);
        ++best.evaluated;
        if (s > best.sum_rate)
        {
            best.sum_rate = s;
            best.association = a;
        } });
    return best;
}

ExhaustiveResult exhaustive_association(const LinkEvaluator &links, const PowerAllocation &p_star,
                                        std::uint64_t cap)
{
    return exhaustive_association(
        links.num_ius(), links.num_riss(),
        [&](const Association &a) { return sum_rate(links.gains(a), p_star).sum_rate; }, cap);
}

} // namespace fr3

// SPDX-License-Identifier: Apache-2.0
//
// fr3-ris: RIS-assisted FR3 downlink resource allocation
// ------------------------------------------------------------------------
//
// IU-RIS association: IU-proposing deferred acceptance on a static utility
// matrix, plus the greedy, random and exhaustive baselines.
//
// Ties are broken by lowest index everywhere (IU first, then RIS).

#pragma once

#include "fr3/assignment.hpp"
#include "fr3/channel.hpp"
#include "fr3/config.hpp"
#include "fr3/random.hpp"
#include "fr3/rate.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace fr3
{

// u[k][l]: achievable rate (bits/s/Hz) of IU k when RIS l serves it alone.
struct UtilityMatrix
{
    std::vector<std::vector<double>> u;

    std::size_t num_ius() const noexcept { return u.size(); }
    std::size_t num_riss() const noexcept { return u.empty() ? 0 : u[0].size(); }
};

// Context-free utilities: u[k][l] = R_k with only (k, l) associated, every
// other IU on its direct link, co-phased RIS l, MRT beams and powers p_star.
UtilityMatrix utility_matrix(const LinkEvaluator &links, const PowerAllocation &p_star);

// Reference version built from the generic channel path. Same values as the
// LinkEvaluator overload up to rounding.
UtilityMatrix utility_matrix(const ChannelSet &ch, double noise_power,
                             const PowerAllocation &p_star);

// IU-proposing deferred acceptance. Each unmatched IU proposes to its most
// preferred RIS that has not rejected it; each RIS keeps the proposer with the
// highest utility. Terminates after at most K*L proposals.
Association match_deferred_acceptance(const UtilityMatrix &u);

// Pairs (k, l) that block `a` under u: u[k][l] beats IU k's current utility
// (0 when unmatched) and RIS l's current partner's utility (0 when free).
std::vector<std::pair<std::size_t, std::size_t>> blocking_pairs(const UtilityMatrix &u,
                                                                 const Association &a);

double total_utility(const UtilityMatrix &u, const Association &a);

// Each IU proposes to its argmax RIS; a contested RIS keeps a uniformly random
// proposer. OneShot leaves the rejected IUs on their direct links; MultiRound
// lets them propose again among the RISs nobody holds yet. An IU whose utility
// is zero for every RIS (e.g. it has no power) gains nothing and stays out.
Association greedy_association(const UtilityMatrix &u, Rng &rng,
                               GreedyMode mode = GreedyMode::OneShot);

// Random IU order; each IU picks uniformly among the still-free RISs plus the
// "no RIS" option.
Association random_association(std::size_t num_ius, std::size_t num_riss, Rng &rng);

// Number of partial injective IU -> RIS maps: sum_j C(K,j) C(L,j) j!.
// Saturates at UINT64_MAX.
std::uint64_t count_associations(std::size_t num_ius, std::size_t num_riss) noexcept;

// Calls `visit` once for every association satisfying the one-to-one
// constraints, starting with the empty one.
void for_each_association(std::size_t num_ius, std::size_t num_riss,
                          const std::function<void(const Association &)> &visit);

struct ExhaustiveResult
{
    Association association;
    double sum_rate = 0.0;
    std::uint64_t evaluated = 0;
};

// Enumerates every feasible association and keeps the best under `score`
// (first one wins on ties). Throws SizeError above `cap` candidates.
ExhaustiveResult exhaustive_association(std::size_t num_ius, std::size_t num_riss,
                                        const std::function<double(const Association &)> &score,
                                        std::uint64_t cap = 100000);

// Exhaustive search at fixed powers: the coupled sum rate of every candidate
// with co-phased RISs and MRT beams.
ExhaustiveResult exhaustive_association(const LinkEvaluator &links, const PowerAllocation &p_star,
                                        std::uint64_t cap = 100000);

} // namespace fr3

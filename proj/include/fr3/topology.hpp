// SPDX-License-Identifier: Apache-2.0
//
// fr3-ris: RIS-assisted FR3 downlink resource allocation
// ------------------------------------------------------------------------

#pragma once

#include "fr3/config.hpp"
#include "fr3/random.hpp"

#include <vector>

namespace fr3
{

struct Position
{
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

double distance(const Position &a, const Position &b) noexcept;

// Node geometry of one realization. AP and RIS positions are fixed by the
// scenario; IU positions are drawn per realization.
struct NetworkTopology
{
    Position ap;
    std::vector<Position> ius;
    std::vector<Position> riss;

    std::size_t num_ius() const noexcept { return ius.size(); }
    std::size_t num_riss() const noexcept { return riss.size(); }

    double ap_to_iu(std::size_t k) const noexcept { return distance(ap, ius[k]); }
    double ap_to_ris(std::size_t l) const noexcept { return distance(ap, riss[l]); }
    double ris_to_iu(std::size_t l, std::size_t k) const noexcept { return distance(riss[l], ius[k]); }
};

// Throws ConfigError when K < 1, coordinates are not finite, z < 0 or any two
// nodes coincide.
void validate(const NetworkTopology &topo);

// AP at the (0, 0) corner; RISs evenly spaced along the wall x = side.
Position default_ap_position(const ScenarioConfig &cfg);
std::vector<Position> default_ris_positions(const ScenarioConfig &cfg);

// IUs uniform over [0, side]^2 at the IU height, rejecting draws closer than
// min_ap_iu_separation (horizontally) to the AP.
NetworkTopology sample_topology(const ScenarioConfig &cfg, Rng &rng);

} // namespace fr3

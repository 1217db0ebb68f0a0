// SPDX-License-Identifier: Apache-2.0
//
// fr3-ris: RIS-assisted FR3 downlink resource allocation
// ------------------------------------------------------------------------

#include "fr3/topology.hpp"

#include "fr3/errors.hpp"

#include <cmath>
#include <string>

namespace fr3
{

double distance(const Position &a, const Position &b) noexcept
{
    const double dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

namespace
{

bool valid_position(const Position &p)
{
    return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z) && p.z >= 0.0;
}

} // namespace

void validate(const NetworkTopology &topo)
{
    if (topo.ius.empty())
        throw ConfigError("topology: at least one IU is required");

    std::vector<Position> all{topo.ap};
    all.insert(all.end(), topo.ius.begin(), topo.ius.end());
    all.insert(all.end(), topo.riss.begin(), topo.riss.end());

    for (std::size_t i = 0; i < all.size(); ++i)
    {
        if (!valid_position(all[i]))
            throw ConfigError("topology: node " + std::to_string(i) +
                              " has non-finite coordinates or negative height");
        for (std::size_t j = 0; j < i; ++j)
            if (!(distance(all[i], all[j]) > 0.0))
                throw ConfigError("topology: nodes " + std::to_string(j) + " and " +
                                  std::to_string(i) + " are co-located");
    }
}

Position default_ap_position(const ScenarioConfig &cfg)
{
    return {0.0, 0.0, cfg.ap_height};
}

std::vector<Position> default_ris_positions(const ScenarioConfig &cfg)
{
    std::vector<Position> out;
    const auto L = static_cast<std::size_t>(cfg.riss);
    out.reserve(L);
    for (std::size_t l = 0; l < L; ++l)
        out.push_back({cfg.area_side,
                       cfg.area_side * static_cast<double>(l + 1) / static_cast<double>(L + 1),
                       cfg.ris_height});
    return out;
}

NetworkTopology sample_topology(const ScenarioConfig &cfg, Rng &rng)
{
    if (cfg.ius < 1)
        throw ConfigError("topology: ius must be >= 1 (got " + std::to_string(cfg.ius) + ")");
    if (cfg.riss < 0)
        throw ConfigError("topology: riss must be >= 0 (got " + std::to_string(cfg.riss) + ")");
    if (!(cfg.area_side > 0.0))
        throw ConfigError("topology: area_side must be > 0");
    if (!(cfg.min_ap_iu_separation < cfg.area_side))
        throw ConfigError("topology: min_ap_iu_separation must be below area_side");

    NetworkTopology topo;
    topo.ap = default_ap_position(cfg);
    topo.riss = default_ris_positions(cfg);

    std::uniform_real_distribution<double> coord(0.0, cfg.area_side);
    const double min_sep2 = cfg.min_ap_iu_separation * cfg.min_ap_iu_separation;

    topo.ius.reserve(static_cast<std::size_t>(cfg.ius));
    while (topo.ius.size() < static_cast<std::size_t>(cfg.ius))
    {
        const double x = coord(rng);
        const double y = coord(rng);
        const double dx = x - topo.ap.x, dy = y - topo.ap.y;
        if (dx * dx + dy * dy < min_sep2)
            continue;
        topo.ius.push_back({x, y, cfg.iu_height});
    }
    return topo;
}

} // namespace fr3

// SPDX-License-Identifier: Apache-2.0
//
// fr3-ris: RIS-assisted FR3 downlink resource allocation
// ------------------------------------------------------------------------
//
// Line-of-sight channel synthesis for the AP -> IU direct links and the
// AP -> RIS -> IU cascaded links, RIS reflection profiles, MRT precoding and
// the K x K effective link gains consumed by the rate and power modules.
//
// All antenna/element pairs of one link share the link's center-to-center
// distance, both in the pathloss and in the phase term. Element spacing
// therefore has no effect on the channels.

#pragma once

#include "fr3/assignment.hpp"
#include "fr3/config.hpp"
#include "fr3/numerics.hpp"
#include "fr3/topology.hpp"

#include <vector>

namespace fr3
{

inline constexpr double kSpeedOfLight = 299792458.0;

struct ChannelSet
{
    std::vector<ComplexVector> direct;              // [k], N entries
    std::vector<ComplexMatrix> ap_ris;              // [l], M x N
    std::vector<std::vector<ComplexVector>> ris_iu; // [l][k], M entries
    double carrier_freq = 0.0;

    std::size_t num_ius() const noexcept { return direct.size(); }
    std::size_t num_riss() const noexcept { return ap_ris.size(); }
    std::size_t antennas() const noexcept { return direct.empty() ? 0 : direct[0].size(); }
    std::size_t elements() const noexcept { return ap_ris.empty() ? 0 : ap_ris[0].rows(); }
};

// Per-RIS amplitude kappa in [0, 1] and phase theta in [0, 2pi), [l][m].
struct RisConfig
{
    std::vector<std::vector<double>> amplitude;
    std::vector<std::vector<double>> phase;
};

// Unit-norm beam directions and per-IU power scaling (w_k = sqrt(p_k) w^_k).
struct Precoder
{
    std::vector<ComplexVector> directions;
    std::vector<double> powers;
};

// g(k, i): gain of IU i's beam at IU k. Noise is stored per IU.
class GainMatrix
{
public:
    GainMatrix() = default;
    GainMatrix(std::size_t num_ius, double noise_power);
    GainMatrix(std::vector<std::vector<double>> g, std::vector<double> noise);

    std::size_t size() const noexcept { return noise_.size(); }
    double &operator()(std::size_t k, std::size_t i) { return g_[k * size() + i]; }
    double operator()(std::size_t k, std::size_t i) const { return g_[k * size() + i]; }
    double noise(std::size_t k) const { return noise_[k]; }
    std::vector<double> &noise() noexcept { return noise_; }
    const std::vector<double> &noise() const noexcept { return noise_; }

private:
    std::vector<double> g_;
    std::vector<double> noise_;
};

// Free-space power gain (c / (4 pi f d))^2. Throws DomainError for d < 1 mm or
// f <= 0.
double pathloss(double d, double f);

// Generalized law (c / (4 pi f))^2 * d^-exponent; exponent 2 is free space.
double pathloss(double d, double f, double exponent);

ChannelSet synthesize_channels(const NetworkTopology &topo, const ScenarioConfig &cfg);

// Co-phases every element of the RIS serving IU k so that each cascaded term
// arrives aligned with the direct channel at antenna 0. Unassigned RISs get
// theta = 0. All amplitudes are 1.
RisConfig configure_ris_cophase(const ChannelSet &ch, const Association &assoc);

// H_l^H Theta_l h_{l,k}.
ComplexVector cascaded_channel(const ChannelSet &ch, const RisConfig &ris, std::size_t l,
                               std::size_t k);

// Channel to IU k with the RIS terms gated by IU `via`'s association:
// h_{a,k} + sum_l gamma_{via,l} H_l^H Theta_l h_{l,k}.
ComplexVector gated_channel(const ChannelSet &ch, const RisConfig &ris, const Association &assoc,
                            std::size_t k, std::size_t via);

// Effective channel of IU k under its own association.
ComplexVector effective_channel(const ChannelSet &ch, const RisConfig &ris,
                                const Association &assoc, std::size_t k);

// w^_k = h_k / ||h_k||. Powers are left at zero. Throws DegenerateChannelError
// for a zero effective channel.
Precoder mrt_precoder(const ChannelSet &ch, const RisConfig &ris, const Association &assoc);

GainMatrix compute_gains(const ChannelSet &ch, const RisConfig &ris, const Association &assoc,
                         const Precoder &precoder, double noise_power);

// Fast path for repeated gain evaluations on one realization under the
// co-phasing heuristic with MRT. Precomputes H_l^H Theta_l(j) h_{l,k} for every
// RIS l, target IU k and served IU j, so each gains() call only adds vectors.
class LinkEvaluator
{
public:
    LinkEvaluator(const ChannelSet &ch, double noise_power);

    std::size_t num_ius() const noexcept { return direct_.size(); }
    std::size_t num_riss() const noexcept { return num_riss_; }
    double noise_power() const noexcept { return noise_power_; }

    GainMatrix gains(const Association &assoc) const;

private:
    const ComplexVector &cascade(std::size_t l, std::size_t k, std::size_t served) const;

    std::vector<ComplexVector> direct_;
    std::vector<ComplexVector> cascade_; // [(l * K + served) * K + k]
    std::size_t num_riss_ = 0;
    double noise_power_ = 0.0;
};

} // namespace fr3

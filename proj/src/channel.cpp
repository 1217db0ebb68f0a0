// SPDX-License-Identifier: Apache-2.0
//
// fr3-ris: RIS-assisted FR3 downlink resource allocation
// ------------------------------------------------------------------------

#include "fr3/channel.hpp"

#include "fr3/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace fr3
{

namespace
{

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_phase(double theta)
{
    theta = std::fmod(theta, kTwoPi);
    if (theta < 0.0)
        theta += kTwoPi;
    if (theta >= kTwoPi)
        theta = 0.0;
    return theta;
}

cplx link_coefficient(double d, const ScenarioConfig &cfg)
{
    const double wavenumber = kTwoPi * cfg.carrier_freq / kSpeedOfLight;
    const double amp = std::sqrt(pathloss(d, cfg.carrier_freq, cfg.pathloss_exponent));
    return std::polar(amp, -wavenumber * d);
}

void add_into(ComplexVector &acc, const ComplexVector &v)
{
    for (std::size_t n = 0; n < acc.size(); ++n)
        acc[n] += v[n];
}

void check_dims(const ChannelSet &ch, const RisConfig &ris)
{
    if (ris.phase.size() != ch.num_riss() || ris.amplitude.size() != ch.num_riss())
        throw DimensionError("RIS configuration does not match the number of RISs");
}

} // namespace

GainMatrix::GainMatrix(std::size_t num_ius, double noise_power)
    : g_(num_ius * num_ius, 0.0), noise_(num_ius, noise_power)
{
}

GainMatrix::GainMatrix(std::vector<std::vector<double>> g, std::vector<double> noise)
    : noise_(std::move(noise))
{
    const std::size_t K = noise_.size();
    if (g.size() != K)
        throw DimensionError("GainMatrix: row count does not match noise vector");
    g_.reserve(K * K);
    for (const auto &row : g)
    {
        if (row.size() != K)
            throw DimensionError("GainMatrix: matrix must be square");
        g_.insert(g_.end(), row.begin(), row.end());
    }
}

double pathloss(double d, double f)
{
    return pathloss(d, f, 2.0);
}

double pathloss(double d, double f, double exponent)
{
    if (!(d >= 1e-3))
        throw DomainError("pathloss: distance " + std::to_string(d) + " m below 1 mm");
    if (!(f > 0.0))
        throw DomainError("pathloss: frequency must be positive");
    const double a = kSpeedOfLight / (4.0 * std::numbers::pi * f);
    if (exponent == 2.0)
    {
        const double r = a / d;
        return r * r;
    }
    return a * a * std::pow(d, -exponent);
}

ChannelSet synthesize_channels(const NetworkTopology &topo, const ScenarioConfig &cfg)
{
    validate(topo);
    const auto N = static_cast<std::size_t>(cfg.antennas);
    const auto M = static_cast<std::size_t>(cfg.ris_elements());
    const std::size_t K = topo.num_ius();
    const std::size_t L = topo.num_riss();

    ChannelSet ch;
    ch.carrier_freq = cfg.carrier_freq;

    ch.direct.reserve(K);
    for (std::size_t k = 0; k < K; ++k)
        ch.direct.emplace_back(N, link_coefficient(topo.ap_to_iu(k), cfg));

    ch.ap_ris.reserve(L);
    ch.ris_iu.resize(L);
    for (std::size_t l = 0; l < L; ++l)
    {
        ch.ap_ris.emplace_back(M, N, link_coefficient(topo.ap_to_ris(l), cfg));
        ch.ris_iu[l].reserve(K);
        for (std::size_t k = 0; k < K; ++k)
            ch.ris_iu[l].emplace_back(M, link_coefficient(topo.ris_to_iu(l, k), cfg));
    }
    return ch;
}

RisConfig configure_ris_cophase(const ChannelSet &ch, const Association &assoc)
{
    const std::size_t L = ch.num_riss();
    if (assoc.num_riss() != L || assoc.num_ius() != ch.num_ius())
        throw DimensionError("configure_ris_cophase: association shape does not match channels");

    RisConfig ris;
    ris.amplitude.resize(L);
    ris.phase.resize(L);
    for (std::size_t l = 0; l < L; ++l)
    {
        const std::size_t M = ch.ap_ris[l].rows();
        ris.amplitude[l].assign(M, 1.0);
        ris.phase[l].assign(M, 0.0);

        const auto served = assoc.iu_of(l);
        if (!served)
            continue;
        const std::size_t k = *served;
        const double target = std::arg(ch.direct[k][0]);
        for (std::size_t m = 0; m < M; ++m)
        {
            const cplx term = std::conj(ch.ap_ris[l](m, 0)) * ch.ris_iu[l][k][m];
            ris.phase[l][m] = wrap_phase(target - std::arg(term));
        }
    }
    return ris;
}

ComplexVector cascaded_channel(const ChannelSet &ch, const RisConfig &ris, std::size_t l,
                               std::size_t k)
{
    check_dims(ch, ris);
    if (l >= ch.num_riss() || k >= ch.num_ius())
        throw DimensionError("cascaded_channel: index out of range");

    const ComplexVector &h = ch.ris_iu[l][k];
    const auto &kappa = ris.amplitude[l];
    const auto &theta = ris.phase[l];
    if (kappa.size() != h.size() || theta.size() != h.size())
        throw DimensionError("cascaded_channel: RIS profile length does not match elements");

    ComplexVector reflected(h.size());
    for (std::size_t m = 0; m < h.size(); ++m)
        reflected[m] = std::polar(kappa[m], theta[m]) * h[m];
    return matvec_hermitian(ch.ap_ris[l], reflected);
}

ComplexVector gated_channel(const ChannelSet &ch, const RisConfig &ris, const Association &assoc,
                            std::size_t k, std::size_t via)
{
    if (k >= ch.num_ius() || via >= ch.num_ius())
        throw DimensionError("gated_channel: IU index out of range");
    ComplexVector h = ch.direct[k];
    for (std::size_t l = 0; l < ch.num_riss(); ++l)
        if (assoc.gamma(via, l))
            add_into(h, cascaded_channel(ch, ris, l, k));
    return h;
}

ComplexVector effective_channel(const ChannelSet &ch, const RisConfig &ris,
                                const Association &assoc, std::size_t k)
{
    return gated_channel(ch, ris, assoc, k, k);
}

Precoder mrt_precoder(const ChannelSet &ch, const RisConfig &ris, const Association &assoc)
{
    Precoder pre;
    const std::size_t K = ch.num_ius();
    pre.directions.reserve(K);
    pre.powers.assign(K, 0.0);
    for (std::size_t k = 0; k < K; ++k)
    {
        ComplexVector h = effective_channel(ch, ris, assoc, k);
        const double norm = std::sqrt(squared_norm(h));
        if (!(norm > 0.0) || !std::isfinite(norm))
            throw DegenerateChannelError("mrt_precoder: zero effective channel for IU " +
                                         std::to_string(k));
        for (cplx &z : h)
            z /= norm;
        pre.directions.push_back(std::move(h));
    }
    return pre;
}

GainMatrix compute_gains(const ChannelSet &ch, const RisConfig &ris, const Association &assoc,
                         const Precoder &precoder, double noise_power)
{
    const std::size_t K = ch.num_ius();
    if (precoder.directions.size() != K)
        throw DimensionError("compute_gains: precoder has the wrong number of beams");

    GainMatrix g(K, noise_power);
    for (std::size_t i = 0; i < K; ++i)
        for (std::size_t k = 0; k < K; ++k)
            g(k, i) = std::norm(hermitian_dot(gated_channel(ch, ris, assoc, k, i),
                                              precoder.directions[i]));
    return g;
}

LinkEvaluator::LinkEvaluator(const ChannelSet &ch, double noise_power)
    : direct_(ch.direct), num_riss_(ch.num_riss()), noise_power_(noise_power)
{
    const std::size_t K = ch.num_ius();
    const std::size_t L = ch.num_riss();
    cascade_.resize(L * K * K);

    for (std::size_t l = 0; l < L; ++l)
    {
        const ComplexMatrix &H = ch.ap_ris[l];
        const std::size_t M = H.rows();
        ComplexVector reflected(M);
        std::vector<double> theta(M);
        for (std::size_t served = 0; served < K; ++served)
        {
            // Same phase rule as configure_ris_cophase with RIS l serving `served`.
            const double target = std::arg(ch.direct[served][0]);
            for (std::size_t m = 0; m < M; ++m)
                theta[m] = wrap_phase(target - std::arg(std::conj(H(m, 0)) * ch.ris_iu[l][served][m]));

            for (std::size_t k = 0; k < K; ++k)
            {
                const ComplexVector &h = ch.ris_iu[l][k];
                for (std::size_t m = 0; m < M; ++m)
                    reflected[m] = std::polar(1.0, theta[m]) * h[m];
                cascade_[(l * K + served) * K + k] = matvec_hermitian(H, reflected);
            }
        }
    }
}

const ComplexVector &LinkEvaluator::cascade(std::size_t l, std::size_t k, std::size_t served) const
{
    const std::size_t K = num_ius();
    return cascade_[(l * K + served) * K + k];
}

GainMatrix LinkEvaluator::gains(const Association &assoc) const
{
    const std::size_t K = num_ius();
    if (assoc.num_ius() != K || assoc.num_riss() != num_riss_)
        throw DimensionError("LinkEvaluator::gains: association shape does not match channels");

    // channel(k, via): IU k's channel gated by IU via's RIS.
    auto channel = [&](std::size_t k, std::size_t via)
    {
        ComplexVector h = direct_[k];
        if (const auto l = assoc.ris_of(via))
            add_into(h, cascade(*l, k, via));
        return h;
    };

    std::vector<ComplexVector> beams(K);
    for (std::size_t i = 0; i < K; ++i)
    {
        beams[i] = channel(i, i);
        const double norm = std::sqrt(squared_norm(beams[i]));
        if (!(norm > 0.0) || !std::isfinite(norm))
            throw DegenerateChannelError("LinkEvaluator: zero effective channel for IU " +
                                         std::to_string(i));
        for (cplx &z : beams[i])
            z /= norm;
    }

    GainMatrix g(K, noise_power_);
    for (std::size_t i = 0; i < K; ++i)
        for (std::size_t k = 0; k < K; ++k)
            g(k, i) = std::norm(hermitian_dot(channel(k, i), beams[i]));
    return g;
}

} // namespace fr3

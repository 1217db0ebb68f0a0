// SPDX-License-Identifier: Apache-2.0
//
// fr3-ris: RIS-assisted FR3 downlink resource allocation
// ------------------------------------------------------------------------

#include "fr3/experiment.hpp"

#include "fr3/errors.hpp"
#include "fr3/topology.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

namespace fr3
{

namespace
{

struct Pipeline
{
    const ScenarioConfig &cfg;
    const LinkEvaluator &links;
    ScaOptions opts;

    ScaResult solve(const Association &a) const
    {
        return sca_power(links.gains(a), cfg.p_max, opts);
    }

    double final_rate(const Association &a) const
    {
        const GainMatrix g = links.gains(a);
        return sum_rate(g, sca_power(g, cfg.p_max, opts).allocation).sum_rate;
    }
};

ScenarioConfig at_sweep_value(ScenarioConfig cfg, SweepVariable var, double value)
{
    switch (var)
    {
    case SweepVariable::Power:
        cfg.p_max = dbm_to_watt(value);
        break;
    case SweepVariable::Elements:
    {
        const double side = std::round(std::sqrt(value));
        if (!(value >= 1.0) || side * side != value)
            throw ConfigError("element sweep value " + std::to_string(value) +
                              " is not a perfect square (grid must be M_y = M_z)");
        cfg.ris_elements_y = static_cast<int>(side);
        cfg.ris_elements_z = static_cast<int>(side);
        break;
    }
    }
    validate(cfg);
    return cfg;
}

// Runs `work(index)` for index in [0, n) on `threads` workers. The first
// exception is rethrown on the calling thread.
template <typename Work>
void parallel_for(std::size_t n, unsigned threads, Work &&work)
{
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n ? n : 1)));
    if (threads == 1)
    {
        for (std::size_t i = 0; i < n; ++i)
            work(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&]
                          {
            while (true)
            {
                const std::size_t i = next.fetch_add(1);
                if (i >= n)
                    return;
                try
                {
                    work(i);
                }
                catch (...)
                {
                    std::lock_guard lock(error_mutex);
                    if (!error)
                        error = std::current_exception();
                    next.store(n);
                    return;
                }
            } });
    for (auto &th : pool)
        th.join();
    if (error)
        std::rethrow_exception(error);
}

unsigned resolve_threads(unsigned threads)
{
    return threads == 0 ? thread_count_from_env() : threads;
}

std::string fmt17(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

} // namespace

RealizationOutcome run_scheme(const ScenarioConfig &cfg, const LinkEvaluator &links, Scheme scheme,
                              std::uint64_t index)
{
    const Pipeline pipe{cfg, links, ScaOptions::from_config(cfg)};
    const std::size_t K = links.num_ius();
    const std::size_t L = links.num_riss();
    Rng rng(derive_seed(cfg.seed, index, Stream::Association));

    Association assoc(K, L);
    switch (scheme)
    {
    case Scheme::Random:
        assoc = random_association(K, L, rng);
        break;
    case Scheme::Exhaustive:
        assoc = exhaustive_association(
                    K, L, [&](const Association &a) { return pipe.final_rate(a); },
                    cfg.exhaustive_cap)
                    .association;
        break;
    case Scheme::Matching:
    case Scheme::Greedy:
    {
        auto associate = [&](const PowerAllocation &p)
        {
            const UtilityMatrix u = utility_matrix(links, p);
            return scheme == Scheme::Matching ? match_deferred_acceptance(u)
                                              : greedy_association(u, rng, cfg.greedy_mode);
        };
        const PowerAllocation uniform = PowerAllocation::uniform(K, cfg.p_max);
        if (cfg.power_rounds == 1)
        {
            assoc = associate(uniform);
            break;
        }
        assoc = greedy_association(utility_matrix(links, uniform), rng, cfg.greedy_mode);
        for (int r = 1; r < cfg.power_rounds; ++r)
            assoc = associate(pipe.solve(assoc).allocation);
        break;
    }
    }

    RealizationOutcome out;
    const GainMatrix g = links.gains(assoc);
    out.power = sca_power(g, cfg.p_max, pipe.opts).allocation;
    out.sum_rate = sum_rate(g, out.power).sum_rate;
    out.association = std::move(assoc);
    return out;
}

RealizationOutcome run_realization_detail(const ScenarioConfig &cfg, Scheme scheme,
                                          std::uint64_t index)
{
    validate(cfg);
    Rng rng(derive_seed(cfg.seed, index, Stream::Topology));
    const NetworkTopology topo = sample_topology(cfg, rng);
    const LinkEvaluator links(synthesize_channels(topo, cfg), cfg.noise_power());
    return run_scheme(cfg, links, scheme, index);
}

double run_realization(const ScenarioConfig &cfg, Scheme scheme, std::uint64_t index)
{
    return run_realization_detail(cfg, scheme, index).sum_rate;
}

std::string_view sweep_variable_name(SweepVariable v) noexcept
{
    return v == SweepVariable::Power ? "p_max_dbm" : "ris_elements";
}

const SchemeSeries &SweepResult::of(Scheme s) const
{
    for (const auto &ser : series)
        if (ser.scheme == s)
            return ser;
    throw ConfigError("sweep result has no series for scheme '" + std::string(scheme_name(s)) + "'");
}

unsigned thread_count_from_env()
{
    if (const char *env = std::getenv("FR3_THREADS"))
    {
        unsigned v = 0;
        const std::string_view s(env);
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size())
            throw ConfigError("FR3_THREADS must be a non-negative integer (got '" + std::string(s) + "')");
        if (v > 0)
            return v;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::pair<double, double> mean_and_stderr(const std::vector<double> &samples)
{
    const std::size_t n = samples.size();
    if (n == 0)
        return {0.0, 0.0};
    double sum = 0.0;
    for (double v : samples)
        sum += v;
    const double mean = sum / static_cast<double>(n);
    if (n < 2)
        return {mean, 0.0};
    double ss = 0.0;
    for (double v : samples)
        ss += (v - mean) * (v - mean);
    const double stdev = std::sqrt(ss / static_cast<double>(n - 1));
    return {mean, stdev / std::sqrt(static_cast<double>(n))};
}

SweepResult sweep(const ScenarioConfig &cfg, SweepVariable variable,
                  const std::vector<double> &values, unsigned threads)
{
    validate(cfg);
    for (std::size_t i = 1; i < values.size(); ++i)
        if (!(values[i] > values[i - 1]))
            throw ConfigError("sweep values must be strictly increasing");

    std::vector<ScenarioConfig> point_cfgs;
    point_cfgs.reserve(values.size());
    for (double v : values)
        point_cfgs.push_back(at_sweep_value(cfg, variable, v));

    const auto n = static_cast<std::size_t>(cfg.realizations);
    const std::size_t P = values.size();
    const std::size_t S = cfg.schemes.size();
    // rates[(point * S + scheme) * n + realization]
    std::vector<double> rates(P * S * n, 0.0);

    parallel_for(n, resolve_threads(threads), [&](std::size_t r)
                 {
        Rng rng(derive_seed(cfg.seed, r, Stream::Topology));
        const NetworkTopology topo = sample_topology(cfg, rng);

        // Power changes leave the channels untouched; reuse them across points.
        std::optional<LinkEvaluator> links;
        for (std::size_t p = 0; p < P; ++p)
        {
            const ScenarioConfig &pc = point_cfgs[p];
            if (!links || variable == SweepVariable::Elements)
                links.emplace(synthesize_channels(topo, pc), pc.noise_power());
            for (std::size_t s = 0; s < S; ++s)
                rates[(p * S + s) * n + r] = run_scheme(pc, *links, cfg.schemes[s], r).sum_rate;
        } });

    SweepResult res;
    res.variable = std::string(sweep_variable_name(variable));
    res.values = values;
    res.realizations = cfg.realizations;
    for (std::size_t s = 0; s < S; ++s)
    {
        SchemeSeries ser{cfg.schemes[s], {}, {}};
        for (std::size_t p = 0; p < P; ++p)
        {
            const auto first = rates.begin() + static_cast<std::ptrdiff_t>((p * S + s) * n);
            const auto [mean, se] = mean_and_stderr(std::vector<double>(first, first + static_cast<std::ptrdiff_t>(n)));
            ser.mean.push_back(mean);
            ser.std_error.push_back(se);
        }
        res.series.push_back(std::move(ser));
    }
    return res;
}

SweepResult run_point(const ScenarioConfig &cfg, unsigned threads)
{
    return sweep(cfg, SweepVariable::Power, {watt_to_dbm(cfg.p_max)}, threads);
}

std::vector<std::vector<double>> realization_rates(const ScenarioConfig &cfg, unsigned threads)
{
    validate(cfg);
    const auto n = static_cast<std::size_t>(cfg.realizations);
    std::vector<std::vector<double>> out(cfg.schemes.size(), std::vector<double>(n, 0.0));
    parallel_for(n, resolve_threads(threads), [&](std::size_t r)
                 {
        Rng rng(derive_seed(cfg.seed, r, Stream::Topology));
        const NetworkTopology topo = sample_topology(cfg, rng);
        const LinkEvaluator links(synthesize_channels(topo, cfg), cfg.noise_power());
        for (std::size_t s = 0; s < cfg.schemes.size(); ++s)
            out[s][r] = run_scheme(cfg, links, cfg.schemes[s], r).sum_rate; });
    return out;
}

std::string to_csv(const SweepResult &result)
{
    std::string out = "sweep_var,sweep_value,scheme,mean_sum_rate_bps_hz,stderr,realizations\n";
    for (std::size_t p = 0; p < result.values.size(); ++p)
        for (const auto &ser : result.series)
        {
            out += result.variable;
            out += ',' + fmt17(result.values[p]);
            out += ',' + std::string(scheme_name(ser.scheme));
            out += ',' + fmt17(ser.mean[p]);
            out += ',' + fmt17(ser.std_error[p]);
            out += ',' + std::to_string(result.realizations);
            out += '\n';
        }
    return out;
}

void emit_csv(const SweepResult &result, const std::string &path)
{
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os)
        throw IoError("cannot open '" + path + "' for writing");
    const std::string text = to_csv(result);
    os.write(text.data(), static_cast<std::streamsize>(text.size()));
    os.close();
    if (!os)
        throw IoError("failed writing '" + path + "'");
}

SweepResult parse_csv(std::string_view text)
{
    auto parse_double = [](std::string_view s)
    {
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size())
            throw ConfigError("csv: bad number '" + std::string(s) + "'");
        return v;
    };

    SweepResult res;
    std::size_t pos = 0;
    bool header = true;
    while (pos < text.size())
    {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        const std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        if (header)
        {
            if (line != "sweep_var,sweep_value,scheme,mean_sum_rate_bps_hz,stderr,realizations")
                throw ConfigError("csv: unexpected header");
            header = false;
            continue;
        }
        if (line.empty())
            continue;

        std::vector<std::string_view> f;
        std::size_t s = 0;
        while (true)
        {
            const std::size_t c = line.find(',', s);
            f.push_back(line.substr(s, c - s));
            if (c == std::string_view::npos)
                break;
            s = c + 1;
        }
        if (f.size() != 6)
            throw ConfigError("csv: expected 6 fields");

        res.variable = std::string(f[0]);
        const double value = parse_double(f[1]);
        const Scheme scheme = parse_scheme(f[2]);
        res.realizations = static_cast<int>(parse_double(f[5]));

        if (res.values.empty() || res.values.back() != value)
            res.values.push_back(value);
        SchemeSeries *ser = nullptr;
        for (auto &x : res.series)
            if (x.scheme == scheme)
                ser = &x;
        if (!ser)
        {
            res.series.push_back({scheme, {}, {}});
            ser = &res.series.back();
        }
        ser->mean.push_back(parse_double(f[3]));
        ser->std_error.push_back(parse_double(f[4]));
    }
    return res;
}

} // namespace fr3

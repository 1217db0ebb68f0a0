// SPDX-License-Identifier: Apache-2.0
//
// fr3-ris: RIS-assisted FR3 downlink resource allocation
// ------------------------------------------------------------------------

#include "fr3/config.hpp"

#include "fr3/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

namespace fr3
{

std::string_view scheme_name(Scheme s) noexcept
{
    switch (s)
    {
    case Scheme::Matching:
        return "matching";
    case Scheme::Greedy:
        return "greedy";
    case Scheme::Random:
        return "random";
    case Scheme::Exhaustive:
        return "exhaustive";
    }
    return "unknown";
}

namespace
{

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true)
    {
        const std::size_t pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos - start)));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return out;
}

std::string fmt_double(double v)
{
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value, std::string_view why)
{
    throw ConfigError("config key '" + std::string(key) + "': " + std::string(why) + " (got '" +
                      std::string(value) + "')");
}

// Splits "12.5 GHz" into the number and the trimmed unit suffix.
std::pair<double, std::string> number_with_unit(std::string_view key, std::string_view text)
{
    text = trim(text);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr == text.data())
        bad_value(key, text, "expected a number");
    if (!std::isfinite(v))
        bad_value(key, text, "value must be finite");
    return {v, std::string(trim(std::string_view(ptr, text.data() + text.size() - ptr)))};
}

double parse_plain(std::string_view key, std::string_view text)
{
    auto [v, unit] = number_with_unit(key, text);
    if (!unit.empty())
        bad_value(key, text, "unexpected unit suffix '" + unit + "'");
    return v;
}

double parse_frequency(std::string_view key, std::string_view text)
{
    auto [v, unit] = number_with_unit(key, text);
    if (unit.empty() || unit == "Hz")
        return v;
    if (unit == "kHz")
        return v * 1e3;
    if (unit == "MHz")
        return v * 1e6;
    if (unit == "GHz")
        return v * 1e9;
    bad_value(key, text, "unknown frequency unit '" + unit + "' (Hz, kHz, MHz, GHz)");
}

double parse_power(std::string_view key, std::string_view text)
{
    auto [v, unit] = number_with_unit(key, text);
    if (unit.empty() || unit == "W")
        return v;
    if (unit == "mW")
        return v * 1e-3;
    if (unit == "dBm")
        return dbm_to_watt(v);
    bad_value(key, text, "unknown power unit '" + unit + "' (W, mW, dBm)");
}

double parse_length(std::string_view key, std::string_view text)
{
    auto [v, unit] = number_with_unit(key, text);
    if (unit.empty() || unit == "m")
        return v;
    bad_value(key, text, "unknown length unit '" + unit + "' (m)");
}

long long parse_integer(std::string_view key, std::string_view text)
{
    text = trim(text);
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size())
        bad_value(key, text, "expected an integer");
    return v;
}

std::vector<double> parse_number_list(std::string_view key, std::string_view text)
{
    std::vector<double> out;
    if (trim(text).empty())
        return out;
    for (auto item : split(text, ','))
        out.push_back(parse_plain(key, item));
    return out;
}

using Setter = std::function<void(ScenarioConfig &, std::string_view key, std::string_view value)>;

int to_int(std::string_view key, std::string_view value)
{
    const long long v = parse_integer(key, value);
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
        bad_value(key, value, "integer out of range");
    return static_cast<int>(v);
}

const std::map<std::string, Setter, std::less<>> &setters()
{
    static const std::map<std::string, Setter, std::less<>> table{
        {"carrier_freq", [](ScenarioConfig &c, auto k, auto v) { c.carrier_freq = parse_frequency(k, v); }},
        {"bandwidth", [](ScenarioConfig &c, auto k, auto v) { c.bandwidth = parse_frequency(k, v); }},
        {"noise_density", [](ScenarioConfig &c, auto k, auto v) { c.noise_density_dbm_hz = parse_plain(k, v); }},
        {"noise_figure", [](ScenarioConfig &c, auto k, auto v) { c.noise_figure_db = parse_plain(k, v); }},
        {"p_max", [](ScenarioConfig &c, auto k, auto v) { c.p_max = parse_power(k, v); }},
        {"pathloss_exponent", [](ScenarioConfig &c, auto k, auto v) { c.pathloss_exponent = parse_plain(k, v); }},
        {"antennas", [](ScenarioConfig &c, auto k, auto v) { c.antennas = to_int(k, v); }},
        {"ius", [](ScenarioConfig &c, auto k, auto v) { c.ius = to_int(k, v); }},
        {"riss", [](ScenarioConfig &c, auto k, auto v) { c.riss = to_int(k, v); }},
        {"ris_elements_y", [](ScenarioConfig &c, auto k, auto v) { c.ris_elements_y = to_int(k, v); }},
        {"ris_elements_z", [](ScenarioConfig &c, auto k, auto v) { c.ris_elements_z = to_int(k, v); }},
        {"area_side", [](ScenarioConfig &c, auto k, auto v) { c.area_side = parse_length(k, v); }},
        {"ap_height", [](ScenarioConfig &c, auto k, auto v) { c.ap_height = parse_length(k, v); }},
        {"ris_height", [](ScenarioConfig &c, auto k, auto v) { c.ris_height = parse_length(k, v); }},
        {"iu_height", [](ScenarioConfig &c, auto k, auto v) { c.iu_height = parse_length(k, v); }},
        {"min_ap_iu_separation", [](ScenarioConfig &c, auto k, auto v) { c.min_ap_iu_separation = parse_length(k, v); }},
        {"inner_tol", [](ScenarioConfig &c, auto k, auto v) { c.inner_tol = parse_plain(k, v); }},
        {"inner_max_iter", [](ScenarioConfig &c, auto k, auto v) { c.inner_max_iter = to_int(k, v); }},
        {"outer_tol", [](ScenarioConfig &c, auto k, auto v) { c.outer_tol = parse_plain(k, v); }},
        {"outer_max_iter", [](ScenarioConfig &c, auto k, auto v) { c.outer_max_iter = to_int(k, v); }},
        {"linearization", [](ScenarioConfig &c, auto k, auto v)
         {
             if (v == "exact")
                 c.linearization = Linearization::ExactDerivative;
             else if (v == "log-ratio")
                 c.linearization = Linearization::LogRatio;
             else
                 bad_value(k, v, "expected 'exact' or 'log-ratio'");
         }},
        {"power_rounds", [](ScenarioConfig &c, auto k, auto v) { c.power_rounds = to_int(k, v); }},
        {"greedy_mode", [](ScenarioConfig &c, auto k, auto v)
         {
             if (v == "one-shot")
                 c.greedy_mode = GreedyMode::OneShot;
             else if (v == "multi-round")
                 c.greedy_mode = GreedyMode::MultiRound;
             else
                 bad_value(k, v, "expected 'one-shot' or 'multi-round'");
         }},
        {"exhaustive_cap", [](ScenarioConfig &c, auto k, auto v)
         {
             const long long n = parse_integer(k, v);
             if (n < 1)
                 bad_value(k, v, "must be >= 1");
             c.exhaustive_cap = static_cast<std::uint64_t>(n);
         }},
        {"schemes", [](ScenarioConfig &c, auto, auto v) { c.schemes = parse_scheme_list(v); }},
        {"realizations", [](ScenarioConfig &c, auto k, auto v) { c.realizations = to_int(k, v); }},
        {"seed", [](ScenarioConfig &c, auto k, auto v)
         {
             std::uint64_t s = 0;
             const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), s);
             if (ec != std::errc() || ptr != v.data() + v.size())
                 bad_value(k, v, "expected an unsigned 64-bit integer");
             c.seed = s;
         }},
        {"power_sweep", [](ScenarioConfig &c, auto k, auto v) { c.power_sweep_dbm = parse_number_list(k, v); }},
        {"element_sweep", [](ScenarioConfig &c, auto k, auto v) { c.element_sweep = parse_number_list(k, v); }},
    };
    return table;
}

void require(bool ok, std::string_view key, const std::string &bounds)
{
    if (!ok)
        throw ConfigError("config key '" + std::string(key) + "' out of range: expected " + bounds);
}

} // namespace

Scheme parse_scheme(std::string_view name)
{
    for (Scheme s : {Scheme::Matching, Scheme::Greedy, Scheme::Random, Scheme::Exhaustive})
        if (scheme_name(s) == name)
            return s;
    throw ConfigError("unknown scheme '" + std::string(name) +
                      "' (matching, greedy, random, exhaustive)");
}

std::vector<Scheme> parse_scheme_list(std::string_view comma_list)
{
    std::vector<Scheme> out;
    for (auto item : split(comma_list, ','))
    {
        const Scheme s = parse_scheme(item);
        if (std::find(out.begin(), out.end(), s) != out.end())
            throw ConfigError("scheme '" + std::string(item) + "' listed twice");
        out.push_back(s);
    }
    return out;
}

double dbm_to_watt(double dbm) noexcept
{
    return std::pow(10.0, (dbm - 30.0) / 10.0);
}

double watt_to_dbm(double watt) noexcept
{
    return 10.0 * std::log10(watt) + 30.0;
}

double ScenarioConfig::noise_power() const noexcept
{
    return dbm_to_watt(noise_density_dbm_hz + 10.0 * std::log10(bandwidth) + noise_figure_db);
}

void validate(const ScenarioConfig &c)
{
    require(c.carrier_freq > 0.0, "carrier_freq", "> 0 Hz");
    require(c.bandwidth > 0.0, "bandwidth", "> 0 Hz");
    require(c.p_max > 0.0, "p_max", "> 0 W");
    require(c.pathloss_exponent > 0.0 && c.pathloss_exponent <= 10.0, "pathloss_exponent", "(0, 10]");
    require(c.antennas >= 1 && c.antennas <= 4096, "antennas", "[1, 4096]");
    require(c.ius >= 1 && c.ius <= 1024, "ius", "[1, 1024]");
    require(c.riss >= 0 && c.riss <= 1024, "riss", "[0, 1024]");
    require(c.ris_elements_y >= 1 && c.ris_elements_y <= 1000, "ris_elements_y", "[1, 1000]");
    require(c.ris_elements_z >= 1 && c.ris_elements_z <= 1000, "ris_elements_z", "[1, 1000]");
    require(c.area_side > 0.0, "area_side", "> 0 m");
    require(c.ap_height >= 0.0, "ap_height", ">= 0 m");
    require(c.ris_height >= 0.0, "ris_height", ">= 0 m");
    require(c.iu_height >= 0.0, "iu_height", ">= 0 m");
    require(c.min_ap_iu_separation >= 0.0 && c.min_ap_iu_separation < c.area_side,
            "min_ap_iu_separation", "[0, area_side)");
    require(c.inner_tol > 0.0, "inner_tol", "> 0");
    require(c.inner_max_iter >= 1, "inner_max_iter", ">= 1");
    require(c.outer_tol > 0.0, "outer_tol", "> 0");
    require(c.outer_max_iter >= 1, "outer_max_iter", ">= 1");
    require(c.power_rounds >= 1, "power_rounds", ">= 1");
    require(!c.schemes.empty(), "schemes", "at least one scheme");
    require(c.realizations >= 1, "realizations", ">= 1");
    require(c.exhaustive_cap >= 1, "exhaustive_cap", ">= 1");
}

ScenarioConfig parse_config(std::string_view text)
{
    ScenarioConfig cfg;
    const auto &table = setters();

    std::size_t line_no = 0;
    for (auto line : split(text, '\n'))
    {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = trim(line.substr(0, hash));
        if (line.empty())
            continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("config line " + std::to_string(line_no) + ": expected 'key = value'");
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));

        const auto it = table.find(key);
        if (it == table.end())
            throw ConfigError("unknown config key '" + std::string(key) + "'");
        it->second(cfg, key, value);
    }

    validate(cfg);
    return cfg;
}

ScenarioConfig load_config(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot read config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string to_text(const ScenarioConfig &c)
{
    auto join = [](const std::vector<double> &v)
    {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i)
            s += (i ? "," : "") + fmt_double(v[i]);
        return s;
    };
    std::string schemes;
    for (std::size_t i = 0; i < c.schemes.size(); ++i)
        schemes += (i ? "," : "") + std::string(scheme_name(c.schemes[i]));

    std::ostringstream os;
    os << "carrier_freq = " << fmt_double(c.carrier_freq) << " Hz\n"
       << "bandwidth = " << fmt_double(c.bandwidth) << " Hz\n"
       << "noise_density = " << fmt_double(c.noise_density_dbm_hz) << "\n"
       << "noise_figure = " << fmt_double(c.noise_figure_db) << "\n"
       << "p_max = " << fmt_double(c.p_max) << " W\n"
       << "pathloss_exponent = " << fmt_double(c.pathloss_exponent) << "\n"
       << "antennas = " << c.antennas << "\n"
       << "ius = " << c.ius << "\n"
       << "riss = " << c.riss << "\n"
       << "ris_elements_y = " << c.ris_elements_y << "\n"
       << "ris_elements_z = " << c.ris_elements_z << "\n"
       << "area_side = " << fmt_double(c.area_side) << " m\n"
       << "ap_height = " << fmt_double(c.ap_height) << " m\n"
       << "ris_height = " << fmt_double(c.ris_height) << " m\n"
       << "iu_height = " << fmt_double(c.iu_height) << " m\n"
       << "min_ap_iu_separation = " << fmt_double(c.min_ap_iu_separation) << " m\n"
       << "inner_tol = " << fmt_double(c.inner_tol) << "\n"
       << "inner_max_iter = " << c.inner_max_iter << "\n"
       << "outer_tol = " << fmt_double(c.outer_tol) << "\n"
       << "outer_max_iter = " << c.outer_max_iter << "\n"
       << "linearization = " << (c.linearization == Linearization::ExactDerivative ? "exact" : "log-ratio") << "\n"
       << "power_rounds = " << c.power_rounds << "\n"
       << "greedy_mode = " << (c.greedy_mode == GreedyMode::OneShot ? "one-shot" : "multi-round") << "\n"
       << "exhaustive_cap = " << c.exhaustive_cap << "\n"
       << "schemes = " << schemes << "\n"
       << "realizations = " << c.realizations << "\n"
       << "seed = " << c.seed << "\n"
       << "power_sweep = " << join(c.power_sweep_dbm) << "\n"
       << "element_sweep = " << join(c.element_sweep) << "\n";
    return os.str();
}

} // namespace fr3

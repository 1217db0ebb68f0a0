// SPDX-License-Identifier: Apache-2.0
//
// fr3-ris: RIS-assisted FR3 downlink resource allocation
// ------------------------------------------------------------------------

#include "fr3/config.hpp"
#include "fr3/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <string>

namespace
{

std::string error_of(std::string_view text)
{
    try
    {
        fr3::parse_config(text);
    }
    catch (const fr3::ConfigError &e)
    {
        return e.what();
    }
    return {};
}

} // namespace

TEST_CASE("empty text yields the defaults")
{
    const auto c = fr3::parse_config("");
    const fr3::ScenarioConfig d;
    CHECK(fr3::to_text(c) == fr3::to_text(d));
    CHECK(c.carrier_freq == 15e9);
    CHECK(c.bandwidth == 400e6);
    CHECK(c.antennas == 64);
    CHECK(c.ius == 5);
    CHECK(c.ris_elements() == 10000);
    CHECK(c.seed == 42);
    CHECK(c.realizations == 200);
    CHECK(c.schemes.size() == 3);
}

TEST_CASE("noise power from the link budget")
{
    const fr3::ScenarioConfig c;
    CHECK(fr3::watt_to_dbm(c.noise_power()) == doctest::Approx(-77.979).epsilon(1e-5));
    CHECK(c.noise_power() == doctest::Approx(1.592e-11).epsilon(1e-3));
}

TEST_CASE("power units")
{
    CHECK(fr3::parse_config("p_max = 23 dBm").p_max == doctest::Approx(0.19953).epsilon(1e-4));
    CHECK(fr3::parse_config("p_max = 100 mW").p_max == doctest::Approx(0.1));
    CHECK(fr3::parse_config("p_max = 0.5").p_max == 0.5);
    CHECK(fr3::parse_config("p_max = 0.5 W").p_max == 0.5);
    CHECK(fr3::dbm_to_watt(30.0) == doctest::Approx(1.0));
    CHECK(fr3::watt_to_dbm(fr3::dbm_to_watt(17.0)) == doctest::Approx(17.0));
}

TEST_CASE("frequency and length units")
{
    CHECK(fr3::parse_config("carrier_freq = 15 GHz").carrier_freq == 15e9);
    CHECK(fr3::parse_config("bandwidth = 400 MHz").bandwidth == 400e6);
    CHECK(fr3::parse_config("bandwidth = 400000 kHz").bandwidth == 400e6);
    CHECK(fr3::parse_config("area_side = 20 m").area_side == 20.0);
    CHECK(fr3::parse_config("area_side = 20").area_side == 20.0);
}

TEST_CASE("comments, blank lines and lists")
{
    const auto c = fr3::parse_config("# scenario\n\n ius = 3   # three users\nriss = 2\n"
                                     "schemes = matching,exhaustive\npower_sweep = 10, 15, 20\n"
                                     "element_sweep = 100,400\nlinearization = log-ratio\n"
                                     "greedy_mode = multi-round\nseed = 18446744073709551615\n");
    CHECK(c.ius == 3);
    CHECK(c.riss == 2);
    REQUIRE(c.schemes.size() == 2);
    CHECK(c.schemes[1] == fr3::Scheme::Exhaustive);
    CHECK(c.power_sweep_dbm == std::vector<double>{10, 15, 20});
    CHECK(c.element_sweep == std::vector<double>{100, 400});
    CHECK(c.linearization == fr3::Linearization::LogRatio);
    CHECK(c.greedy_mode == fr3::GreedyMode::MultiRound);
    CHECK(c.seed == 18446744073709551615ULL);
}

TEST_CASE("errors name the offending key")
{
    CHECK(error_of("antennas = -4").find("antennas") != std::string::npos);
    CHECK(error_of("antenas = 4").find("antenas") != std::string::npos);
    CHECK(error_of("p_max = 3 furlongs").find("p_max") != std::string::npos);
    CHECK(error_of("ius = 2.5").find("ius") != std::string::npos);
    CHECK(error_of("riss = -1").find("riss") != std::string::npos);
    CHECK(error_of("p_max = 0").find("p_max") != std::string::npos);
    CHECK(error_of("schemes = matching,matching").find("matching") != std::string::npos);
    CHECK(error_of("schemes = best").find("best") != std::string::npos);
    CHECK_FALSE(error_of("just some words").empty());
    CHECK_FALSE(error_of("realizations = 0").empty());
    CHECK_FALSE(error_of("min_ap_iu_separation = 50").empty());
}

TEST_CASE("to_text round-trips")
{
    fr3::ScenarioConfig c;
    c.p_max = fr3::dbm_to_watt(17.3);
    c.carrier_freq = 7.125e9;
    c.ius = 4;
    c.riss = 0;
    c.schemes = {fr3::Scheme::Random};
    c.power_sweep_dbm = {0.1, 0.2};
    c.seed = 987654321;
    c.linearization = fr3::Linearization::LogRatio;
    const auto text = fr3::to_text(c);
    const auto back = fr3::parse_config(text);
    CHECK(fr3::to_text(back) == text);
    CHECK(back.p_max == c.p_max);
    CHECK(back.power_sweep_dbm == c.power_sweep_dbm);
}

TEST_CASE("missing file is an I/O error")
{
    CHECK_THROWS_AS(fr3::load_config("/nonexistent/dir/none.cfg"), fr3::IoError);
}

TEST_CASE("error classes map to exit codes")
{
    CHECK(fr3::ConfigError("x").exit_code() == 2);
    CHECK(fr3::NumericError("x").exit_code() == 3);
    CHECK(fr3::DomainError("x").exit_code() == 3);
    CHECK(fr3::IoError("x").exit_code() == 4);
    CHECK(fr3::SizeError("x").exit_code() == 5);
}

TEST_CASE("scheme names")
{
    for (auto s : {fr3::Scheme::Matching, fr3::Scheme::Greedy, fr3::Scheme::Random, fr3::Scheme::Exhaustive})
        CHECK(fr3::parse_scheme(fr3::scheme_name(s)) == s);
    CHECK_THROWS_AS(fr3::parse_scheme("Matching"), fr3::ConfigError);
}

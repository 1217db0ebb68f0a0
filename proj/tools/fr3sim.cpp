// SPDX-License-Identifier: Apache-2.0
//
// fr3-ris: RIS-assisted FR3 downlink resource allocation
// ------------------------------------------------------------------------
//
// fr3sim: command-line front end.
//
//   fr3sim validate-config [--config f]
//   fr3sim run             [--config f] --out results.csv
//   fr3sim sweep-power     [--config f] --out results.csv [--values 10,13,16]
//   fr3sim sweep-elements  [--config f] --out results.csv [--values 100,625]
//
// Exit codes: 0 ok, 2 config, 3 numeric, 4 I/O, 5 size.

#include "fr3/config.hpp"
#include "fr3/errors.hpp"
#include "fr3/experiment.hpp"
#include "fr3/simd/kernels.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#ifndef FR3_VERSION
#define FR3_VERSION "0.1.0-unknown"
#endif

namespace
{

struct Options
{
    std::string config_path;
    std::string out_path;
    std::optional<std::uint64_t> seed;
    bool random_seed = false;
    std::optional<int> realizations;
    std::string schemes;
    std::string values;
};

std::vector<double> parse_values(const std::string &text)
{
    // Reuse the config list syntax so errors read the same.
    return fr3::parse_config("power_sweep = " + text).power_sweep_dbm;
}

fr3::ScenarioConfig resolve_config(const Options &opt)
{
    fr3::ScenarioConfig cfg = opt.config_path.empty() ? fr3::ScenarioConfig{}
                                                       : fr3::load_config(opt.config_path);
    if (opt.random_seed)
        cfg.seed = (static_cast<std::uint64_t>(std::random_device{}()) << 32) ^ std::random_device{}();
    if (opt.seed)
        cfg.seed = *opt.seed;
    if (opt.realizations)
        cfg.realizations = *opt.realizations;
    if (!opt.schemes.empty())
        cfg.schemes = fr3::parse_scheme_list(opt.schemes);
    fr3::validate(cfg);
    return cfg;
}

void log_run(const fr3::ScenarioConfig &cfg, std::string_view verb)
{
    std::cerr << "fr3sim " << FR3_VERSION << " (" << verb << ")\n"
              << "kernels: " << fr3::simd::active_kernels().name << "\n"
              << "threads: " << fr3::thread_count_from_env() << "\n"
              << "seed: " << cfg.seed << "\n"
              << "--- resolved config ---\n"
              << fr3::to_text(cfg) << "-----------------------\n";
}

int dispatch(const std::string &verb, const Options &opt)
{
    const fr3::ScenarioConfig cfg = resolve_config(opt);

    if (verb == "validate-config")
    {
        std::cout << "seed: " << cfg.seed << "\n"
                  << fr3::to_text(cfg);
        return 0;
    }

    if (opt.out_path.empty())
        throw fr3::ConfigError("--out is required for '" + verb + "'");
    log_run(cfg, verb);

    fr3::SweepResult result;
    if (verb == "run")
        result = fr3::run_point(cfg);
    else if (verb == "sweep-power")
        result = fr3::sweep(cfg, fr3::SweepVariable::Power,
                            opt.values.empty() ? cfg.power_sweep_dbm : parse_values(opt.values));
    else if (verb == "sweep-elements")
        result = fr3::sweep(cfg, fr3::SweepVariable::Elements,
                            opt.values.empty() ? cfg.element_sweep : parse_values(opt.values));
    else
        throw fr3::ConfigError("unknown command '" + verb + "'");

    fr3::emit_csv(result, opt.out_path);
    std::cerr << "wrote " << opt.out_path << "\n";
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"RIS-assisted FR3 downlink: SCA power allocation and IU-RIS association"};
    app.set_version_flag("--version", std::string(FR3_VERSION));
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App *cmd, bool writes)
    {
        cmd->add_option("--config", opt.config_path, "Flat key = value scenario file")->check(CLI::ExistingFile);
        cmd->add_option("--seed", opt.seed, "Master seed (default 42)");
        cmd->add_flag("--random-seed", opt.random_seed, "Draw the master seed from the OS entropy source");
        cmd->add_option("--realizations", opt.realizations, "Realizations per point");
        cmd->add_option("--schemes", opt.schemes, "Comma list: matching,greedy,random,exhaustive");
        if (writes)
            cmd->add_option("--out", opt.out_path, "CSV output path")->required();
    };

    auto *validate_cmd = app.add_subcommand("validate-config", "Resolve and echo the configuration");
    add_common(validate_cmd, false);
    auto *run_cmd = app.add_subcommand("run", "Average every scheme at the configured operating point");
    add_common(run_cmd, true);
    auto *power_cmd = app.add_subcommand("sweep-power", "Sum rate versus AP power budget (dBm)");
    add_common(power_cmd, true);
    power_cmd->add_option("--values", opt.values, "Comma list of budgets in dBm");
    auto *elem_cmd = app.add_subcommand("sweep-elements", "Sum rate versus RIS element count");
    add_common(elem_cmd, true);
    elem_cmd->add_option("--values", opt.values, "Comma list of square element counts");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::CallForVersion &e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e)
    {
        app.exit(e);
        return 2;
    }

    const std::string verb = app.get_subcommands().front()->get_name();
    try
    {
        return dispatch(verb, opt);
    }
    catch (const fr3::Error &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

// SPDX-License-Identifier: Apache-2.0
//
// noma-sim: link-level simulation library for power-domain NOMA
// Copyright (C) 2026 the noma-sim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "nomasim/common.hpp"
#include "nomasim/runner.hpp"

namespace
{

// Exit codes: 0 success, 2 config error, 3 infeasible, 4 I/O error.
int execute(nomasim::ExperimentConfig config, const nomasim::RunOptions &options,
            const std::uint64_t *seed, const std::uint64_t *trials, const std::string *out)
{
    if (seed)
        config.seed = *seed;
    if (trials)
    {
        if (*trials < 1)
            throw nomasim::config_error("--trials must be at least 1.");
        config.trials = static_cast<std::size_t>(*trials);
    }
    if (out && !out->empty())
        config.output_path = *out;

    const nomasim::RunResult result = nomasim::run(config, options);
    std::cout << result.summary;
    std::cout << "wrote " << config.output_path << "\n";
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"noma-sim: power-domain NOMA experiments to CSV"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
    std::string out_path;
    unsigned threads = 1;
    bool seed_set = false, trials_set = false;

    auto add_common = [&](CLI::App *cmd) {
        cmd->add_option("--seed", seed, "Root seed for all Monte Carlo substreams")
            ->each([&](const std::string &) { seed_set = true; });
        cmd->add_option("--trials", trials, "Monte Carlo trials per point")
            ->each([&](const std::string &) { trials_set = true; });
        cmd->add_option("--out", out_path, "Output CSV path");
        cmd->add_option("--threads", threads, "Worker threads (speed only, never output bytes)")
            ->check(CLI::Range(1u, 256u));
    };

    std::string config_path;
    CLI::App *run_cmd = app.add_subcommand("run", "Run an experiment from a config file");
    run_cmd->add_option("config", config_path, "Path to the flat key = value config")->required();
    add_common(run_cmd);

    std::string figure_key;
    CLI::App *repro_cmd =
        app.add_subcommand("reproduce", "Emit a bundled figure sweep (fig3, fig4, fig7_trend, coop_outage)");
    repro_cmd->add_option("figure", figure_key, "Figure key")->required();
    add_common(repro_cmd);

    CLI11_PARSE(app, argc, argv);

    nomasim::RunOptions options;
    options.threads = threads;

    try
    {
        nomasim::ExperimentConfig config;
        if (run_cmd->parsed())
            config = nomasim::parse_config_file(config_path);
        else
            config = nomasim::reproduce_config(figure_key);

        return execute(std::move(config), options, seed_set ? &seed : nullptr,
                       trials_set ? &trials : nullptr, &out_path);
    }
    catch (const nomasim::config_error &e)
    {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }
    catch (const nomasim::infeasible_error &e)
    {
        std::cerr << "infeasible: " << e.what() << "\n";
        return 3;
    }
    catch (const nomasim::io_error &e)
    {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 4;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

// SPDX-License-Identifier: Apache-2.0
//
// rcrcs: radar cross section estimation in reverberation chambers
// Copyright (C) 2026 The rcrcs Authors
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


// Command-line driver: simulate-pattern, shift-sweep, extract-files, print-defaults.
//
// Exit codes: 0 success, 1 configuration or usage error, 2 data error.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rcrcs/config.hpp"
#include "rcrcs/errors.hpp"
#include "rcrcs/experiment.hpp"
#include "rcrcs/io.hpp"

namespace
{

struct CommonOptions
{
    std::string config_path;
    std::string out_dir = "out";
    std::optional<std::size_t> seeds;
    bool noise_free = false;
    unsigned jobs = 1;
};

void add_common(CLI::App *cmd, CommonOptions &opts)
{
    cmd->add_option("--config", opts.config_path, "JSON experiment configuration (defaults when omitted)");
    cmd->add_option("--out-dir", opts.out_dir, "Directory receiving every output file");
    cmd->add_option("--seeds", opts.seeds, "Override sweep.n_seeds")->check(CLI::PositiveNumber);
    cmd->add_flag("--noise-free", opts.noise_free, "Set chamber.h_sigma = 0");
    cmd->add_option("--jobs", opts.jobs, "Worker threads")->check(CLI::PositiveNumber);
}

rcrcs::ExperimentConfig resolve_config(const CommonOptions &opts)
{
    std::string text = "{}";
    if (!opts.config_path.empty())
    {
        try
        {
            text = rcrcs::read_text_file(opts.config_path);
        }
        catch (const rcrcs::DataError &e)
        {
            throw rcrcs::ConfigError(std::string("config: ") + e.what());
        }
    }
    auto config = rcrcs::load_config(text);
    if (opts.seeds)
        config.sweep.n_seeds = *opts.seeds;
    if (opts.noise_free)
        config.chamber.h_sigma = 0.0;
    return config;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Radar cross section extraction from reverberation-chamber reflection measurements"};
    app.require_subcommand(1);

    CommonOptions pattern_opts, sweep_opts, files_opts;
    auto *pattern = app.add_subcommand("simulate-pattern", "Same-stirrer RCS pattern versus aspect angle");
    add_common(pattern, pattern_opts);

    auto *sweep = app.add_subcommand("shift-sweep", "Pattern error versus stirrer shift between the two measurements");
    add_common(sweep, sweep_opts);

    std::vector<std::string> empty_files, loaded_files;
    auto *files = app.add_subcommand("extract-files", "Extract an RCS pattern from measured .s1p pairs");
    add_common(files, files_opts);
    files->add_option("--empty", empty_files, "Empty-chamber .s1p files, one per aspect angle")->required();
    files->add_option("--loaded", loaded_files, "Loaded-chamber .s1p files, same order")->required();

    auto *defaults = app.add_subcommand("print-defaults", "Print the default configuration document");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try
    {
        if (defaults->parsed())
        {
            std::cout << rcrcs::dump_config(rcrcs::load_config("{}"));
            return 0;
        }
        if (pattern->parsed())
        {
            const auto config = resolve_config(pattern_opts);
            const auto run = rcrcs::run_pattern_experiment(config, pattern_opts.out_dir, pattern_opts.jobs);
            std::size_t failed = 0;
            for (const auto &s : run.raw.samples)
                failed += s.failed ? 1 : 0;
            std::cout << "simulate-pattern: " << run.raw.samples.size() << " angles, " << failed
                      << " failed; outputs in " << pattern_opts.out_dir << "\n";
            return 0;
        }
        if (sweep->parsed())
        {
            const auto config = resolve_config(sweep_opts);
            const auto run = rcrcs::run_shift_sweep(config, sweep_opts.out_dir, sweep_opts.jobs);
            std::cout << rcrcs::format_shift_summary_csv(run.median_rows());
            return 0;
        }
        if (files->parsed())
        {
            const auto config = resolve_config(files_opts);
            const std::vector<std::filesystem::path> empty(empty_files.begin(), empty_files.end());
            const std::vector<std::filesystem::path> loaded(loaded_files.begin(), loaded_files.end());
            const auto run = rcrcs::run_from_measurements(empty, loaded, config, files_opts.out_dir);
            std::cout << rcrcs::format_pattern_csv(run.pattern);
            return 0;
        }
    }
    catch (const rcrcs::ConfigError &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}

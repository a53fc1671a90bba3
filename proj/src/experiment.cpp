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


#include "rcrcs/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "rcrcs/chamber.hpp"
#include "rcrcs/errors.hpp"
#include "rcrcs/seed.hpp"
#include "rcrcs/target.hpp"

namespace rcrcs
{

using nlohmann::json;

namespace
{

constexpr double infinity = std::numeric_limits<double>::infinity();
constexpr const char *seed_rule = "task seed = derive_seed(base_seed, {angle_index, trial}); "
                                  "derive_seed(s, idx) folds s <- splitmix64(s ^ splitmix64(i + 1)) "
                                  "starting from splitmix64(base_seed)";

RcsPattern assemble(const std::vector<double> &angles, double frequency, const std::vector<ExtractionResult> &fits)
{
    RcsPattern p;
    p.frequency_hz = frequency;
    p.samples.reserve(angles.size());
    for (std::size_t i = 0; i < angles.size(); ++i)
        p.samples.push_back({angles[i], fits[i].sigma_hat, fits[i].snr_db, fits[i].failed});
    return p;
}

std::optional<RcsPattern> try_normalize(const RcsPattern &p, double peak)
{
    const bool usable = std::any_of(p.samples.begin(), p.samples.end(),
                                    [](const PatternSample &s) { return !s.failed && s.sigma_m2 > 0.0; });
    if (!usable)
        return std::nullopt;
    return normalize_pattern(p, peak);
}

// Mean relative error, or +inf when no angle survives in both patterns.
double error_or_sentinel(const RcsPattern &test, const RcsPattern &reference, const AngleRange &range)
{
    for (std::size_t i = 0; i < test.samples.size(); ++i)
    {
        const auto &t = test.samples[i];
        const auto &r = reference.samples[i];
        if (range.contains(r.angle_deg) && !t.failed && !r.failed)
            return mean_relative_error(test, reference, range).mean;
    }
    return infinity;
}

std::size_t count_failed(const RcsPattern &p)
{
    return static_cast<std::size_t>(
        std::count_if(p.samples.begin(), p.samples.end(), [](const PatternSample &s) { return s.failed; }));
}

double median(std::vector<double> v)
{
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    if (n == 0)
        return std::numeric_limits<double>::quiet_NaN();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

std::size_t closest_to_zero(const std::vector<double> &angles)
{
    std::size_t best = 0;
    for (std::size_t i = 1; i < angles.size(); ++i)
        if (std::abs(angles[i]) < std::abs(angles[best]))
            best = i;
    return best;
}

json seed_map(const ExperimentConfig &config, const std::vector<double> &angles, std::size_t trials)
{
    json tasks = json::array();
    for (std::size_t t = 0; t < trials; ++t)
        for (std::size_t i = 0; i < angles.size(); ++i)
            tasks.push_back({{"angle_index", i}, {"angle_deg", angles[i]}, {"trial", t}, {"seed", task_seed(config, i, t)}});
    return tasks;
}

void write_meta(const std::filesystem::path &out_dir, const std::string &command, const ExperimentConfig &config,
                json extra)
{
    json meta = {{"command", command}, {"config", json::parse(dump_config(config))}, {"seed_rule", seed_rule}};
    for (auto &[k, v] : extra.items())
        meta[k] = v;
    write_text_file(out_dir / "run-meta.json", meta.dump(2) + "\n");
}

AngleRange sweep_range(const ExperimentConfig &config)
{
    return {config.sweep.angle_start_deg, config.sweep.angle_stop_deg};
}

} // namespace

std::uint64_t task_seed(const ExperimentConfig &config, std::size_t angle_index, std::size_t trial)
{
    return derive_seed(config.sweep.base_seed, {angle_index, trial});
}

void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)> &fn)
{
    const std::size_t workers = std::min<std::size_t>(std::max(1u, jobs), n);
    if (workers <= 1)
    {
        for (std::size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < n; i = next++)
                {
                    try
                    {
                        fn(i);
                    }
                    catch (...)
                    {
                        std::lock_guard lock(error_mutex);
                        if (!first_error)
                            first_error = std::current_exception();
                        next = n;
                    }
                }
            });
    }
    if (first_error)
        std::rethrow_exception(first_error);
}

PatternRun simulate_pattern(const ExperimentConfig &config, unsigned jobs)
{
    config.validate();
    const auto grid = config.frequency_grid();
    const auto antenna = config.antenna_model();
    const auto plate = config.plate();
    const auto angles = config.aspect_angles_deg();
    const auto options = config.extraction_options();
    const double fc = grid.center();
    const double distance = config.geometry.distance_m;
    const double phi0 = config.geometry.phi0_rad;
    const std::size_t trials = config.sweep.n_seeds;
    const double stirrer = 0.0;

    auto pair_for = [&](std::size_t i, std::size_t t) {
        StirredRealization field(config.chamber, grid, std::span<const double>(&stirrer, 1), task_seed(config, i, t));
        const double sigma = plate_rcs_pattern(plate, fc, angles[i]);
        return std::pair{reflection_loaded(antenna, field.loaded_transfer(0), sigma, distance, phi0),
                         reflection_empty(antenna, field.empty_transfer(0))};
    };

    std::vector<ExtractionResult> fits(trials * angles.size());
    parallel_for(fits.size(), jobs, [&](std::size_t task) {
        const std::size_t t = task / angles.size();
        const std::size_t i = task % angles.size();
        const auto [loaded, empty] = pair_for(i, t);
        fits[task] = extract_rcs(loaded, empty, antenna, MeasurementGeometry(distance, angles[i]), options);
    });

    RcsPattern reference;
    reference.frequency_hz = fc;
    for (double a : angles)
        reference.samples.push_back({a, plate_rcs_pattern(plate, fc, a), infinity, false});

    const double peak = plate_rcs_peak(plate, fc);
    const auto range = sweep_range(config);
    std::vector<double> errors;
    std::vector<std::size_t> failed;
    std::vector<RcsPattern> patterns;
    std::optional<RcsPattern> first_raw;
    for (std::size_t t = 0; t < trials; ++t)
    {
        const std::vector<ExtractionResult> trial_fits(fits.begin() + static_cast<std::ptrdiff_t>(t * angles.size()),
                                                       fits.begin() +
                                                           static_cast<std::ptrdiff_t>((t + 1) * angles.size()));
        auto raw = assemble(angles, fc, trial_fits);
        auto norm = try_normalize(raw, peak);
        errors.push_back(norm ? error_or_sentinel(*norm, reference, range) : infinity);
        failed.push_back(count_failed(raw));
        patterns.push_back(norm ? *norm : raw);
        if (t == 0)
            first_raw = std::move(raw);
    }

    const std::size_t i0 = closest_to_zero(angles);
    const auto [loaded0, empty0] = pair_for(i0, 0);

    return PatternRun{*first_raw,
                      patterns.front(),
                      std::move(reference),
                      difference(loaded0, empty0),
                      std::vector<ExtractionResult>(fits.begin(), fits.begin() + static_cast<std::ptrdiff_t>(angles.size())),
                      std::move(errors),
                      std::move(failed),
                      std::move(patterns)};
}

PatternRun run_pattern_experiment(const ExperimentConfig &config, const std::filesystem::path &out_dir, unsigned jobs)
{
    auto run = simulate_pattern(config, jobs);
    std::filesystem::create_directories(out_dir);
    write_pattern_csv(run.normalized, out_dir / "pattern.csv");
    write_pattern_csv(run.raw, out_dir / "pattern_raw.csv");
    write_pattern_csv(run.reference, out_dir / "reference_po.csv");
    write_text_file(out_dir / "waveform_0deg.csv", format_waveform_csv(run.waveform.spectrum()));

    std::string po = "trial,mean_rel_error,n_failed_angles\n";
    for (std::size_t t = 0; t < run.trial_errors.size(); ++t)
        po += std::to_string(t) + ',' + format_number(run.trial_errors[t]) + ',' + std::to_string(run.trial_failed[t]) +
              '\n';
    write_text_file(out_dir / "po_error.csv", po);

    const auto angles = config.aspect_angles_deg();
    write_meta(out_dir, "simulate-pattern", config,
               {{"stirrer_deg", 0.0},
                {"median_po_error", median(run.trial_errors)},
                {"seeds", seed_map(config, angles, config.sweep.n_seeds)}});
    return run;
}

std::vector<ShiftSummaryRow> ShiftSweepRun::mean_rows() const
{
    std::vector<ShiftSummaryRow> rows;
    for (std::size_t j = 0; j < shifts_deg.size(); ++j)
    {
        double e = 0.0, f = 0.0;
        for (std::size_t t = 0; t < errors.size(); ++t)
        {
            e += errors[t][j];
            f += static_cast<double>(failed[t][j]);
        }
        const double n = static_cast<double>(errors.size());
        rows.push_back({shifts_deg[j], e / n, f / n});
    }
    return rows;
}

std::vector<ShiftSummaryRow> ShiftSweepRun::median_rows() const
{
    std::vector<ShiftSummaryRow> rows;
    for (std::size_t j = 0; j < shifts_deg.size(); ++j)
    {
        std::vector<double> e, f;
        for (std::size_t t = 0; t < errors.size(); ++t)
        {
            e.push_back(errors[t][j]);
            f.push_back(static_cast<double>(failed[t][j]));
        }
        rows.push_back({shifts_deg[j], median(e), median(f)});
    }
    return rows;
}

ShiftSweepRun simulate_shift_sweep(const ExperimentConfig &config, unsigned jobs)
{
    config.validate();
    const auto grid = config.frequency_grid();
    const auto antenna = config.antenna_model();
    const auto plate = config.plate();
    const auto angles = config.aspect_angles_deg();
    const auto options = config.extraction_options();
    const double fc = grid.center();
    const double distance = config.geometry.distance_m;
    const double phi0 = config.geometry.phi0_rad;
    const std::size_t trials = config.sweep.n_seeds;
    const auto &shifts = config.sweep.shift_list_deg;

    // Stirrer positions: index 0 is the loaded (and reference empty) position, then one per shift.
    std::vector<double> stirrer{0.0};
    stirrer.insert(stirrer.end(), shifts.begin(), shifts.end());

    // fits[task][0] is the same-stirrer reference, fits[task][1 + j] the j-th shift.
    std::vector<std::vector<ExtractionResult>> fits(trials * angles.size());
    parallel_for(fits.size(), jobs, [&](std::size_t task) {
        const std::size_t t = task / angles.size();
        const std::size_t i = task % angles.size();
        StirredRealization field(config.chamber, grid, stirrer, task_seed(config, i, t));
        const double sigma = plate_rcs_pattern(plate, fc, angles[i]);
        const auto loaded = reflection_loaded(antenna, field.loaded_transfer(0), sigma, distance, phi0);
        const MeasurementGeometry geometry(distance, angles[i]);
        auto &out = fits[task];
        out.reserve(stirrer.size());
        for (std::size_t s = 0; s < stirrer.size(); ++s)
            out.push_back(extract_rcs(loaded, reflection_empty(antenna, field.empty_transfer(s)), antenna, geometry,
                                      options));
    });

    const double peak = plate_rcs_peak(plate, fc);
    const auto range = sweep_range(config);
    ShiftSweepRun run;
    run.shifts_deg = shifts;
    for (std::size_t t = 0; t < trials; ++t)
    {
        auto pattern_at = [&](std::size_t s) {
            std::vector<ExtractionResult> col(angles.size());
            for (std::size_t i = 0; i < angles.size(); ++i)
                col[i] = fits[t * angles.size() + i][s];
            return assemble(angles, fc, col);
        };
        const auto reference = try_normalize(pattern_at(0), peak);

        std::vector<double> errs;
        std::vector<std::size_t> fails;
        for (std::size_t j = 0; j < shifts.size(); ++j)
        {
            const auto raw = pattern_at(j + 1);
            const auto norm = try_normalize(raw, peak);
            errs.push_back(norm && reference ? error_or_sentinel(*norm, *reference, range) : infinity);
            fails.push_back(count_failed(raw));
            if (t == 0)
                run.trial0_patterns.push_back(norm ? *norm : raw);
        }
        run.errors.push_back(std::move(errs));
        run.failed.push_back(std::move(fails));
    }
    return run;
}

ShiftSweepRun run_shift_sweep(const ExperimentConfig &config, const std::filesystem::path &out_dir, unsigned jobs)
{
    auto run = simulate_shift_sweep(config, jobs);
    std::filesystem::create_directories(out_dir);
    write_text_file(out_dir / "shift_sweep.csv", format_shift_summary_csv(run.mean_rows()));
    write_text_file(out_dir / "shift_sweep_median.csv", format_shift_summary_csv(run.median_rows()));

    std::string trials = "shift_deg,trial,mean_rel_error,n_failed_angles\n";
    for (std::size_t j = 0; j < run.shifts_deg.size(); ++j)
        for (std::size_t t = 0; t < run.errors.size(); ++t)
            trials += format_number(run.shifts_deg[j]) + ',' + std::to_string(t) + ',' +
                      format_number(run.errors[t][j]) + ',' + std::to_string(run.failed[t][j]) + '\n';
    write_text_file(out_dir / "shift_sweep_trials.csv", trials);

    for (std::size_t j = 0; j < run.shifts_deg.size(); ++j)
        write_pattern_csv(run.trial0_patterns[j],
                          out_dir / ("pattern_shift_" + format_number(run.shifts_deg[j]) + ".csv"));

    const auto angles = config.aspect_angles_deg();
    write_meta(out_dir, "shift-sweep", config,
               {{"loaded_stirrer_deg", 0.0}, {"seeds", seed_map(config, angles, config.sweep.n_seeds)}});
    return run;
}

MeasurementRun extract_measurements(const std::vector<std::filesystem::path> &empty_files,
                                    const std::vector<std::filesystem::path> &loaded_files,
                                    const ExperimentConfig &config)
{
    config.validate();
    if (empty_files.empty())
        throw DataError("extract-files: no measurement files given");
    if (empty_files.size() != loaded_files.size())
        throw DataError("extract-files: " + std::to_string(empty_files.size()) + " empty files but " +
                        std::to_string(loaded_files.size()) + " loaded files");
    const auto angles = config.aspect_angles_deg();
    if (empty_files.size() > angles.size())
        throw DataError("extract-files: more file pairs than sweep angles (" + std::to_string(angles.size()) + ")");

    std::vector<ComplexSpectrum> empties, loadeds;
    for (std::size_t k = 0; k < empty_files.size(); ++k)
    {
        empties.push_back(read_touchstone_file(empty_files[k]));
        loadeds.push_back(read_touchstone_file(loaded_files[k]));
        if (!(empties.back().grid() == loadeds.back().grid()))
            throw DataError("extract-files: frequency grids differ between '" + empty_files[k].string() + "' and '" +
                            loaded_files[k].string() + "'");
        if (!(empties.back().grid() == empties.front().grid()))
            throw DataError("extract-files: frequency grids differ between '" + empty_files[0].string() + "' and '" +
                            empty_files[k].string() + "'");
    }
    const auto grid = empties.front().grid();

    ComplexSpectrum s_fs = [&] {
        if (!config.antenna.s_fs_explicit)
            return estimate_sfs(empties);
        if (config.antenna.s_fs_source == ExperimentConfig::Antenna::SfsSource::constant)
            return ComplexSpectrum::constant(grid, config.antenna.s_fs_value);
        auto measured = read_touchstone_file(config.antenna.s_fs_path);
        if (!(measured.grid() == grid))
            throw DataError("extract-files: S_FS file '" + config.antenna.s_fs_path +
                            "' is on a different grid than the measurements");
        return measured;
    }();

    std::optional<AntennaModel> antenna;
    try
    {
        antenna.emplace(s_fs, config.antenna.gain_dbi, config.antenna.efficiency);
    }
    catch (const std::invalid_argument &e)
    {
        throw DataError(std::string("extract-files: ") + e.what());
    }

    MeasurementRun run{{}, {}, s_fs};
    run.pattern.frequency_hz = grid.center();
    for (std::size_t k = 0; k < empties.size(); ++k)
    {
        const MeasurementGeometry geometry(config.geometry.distance_m, angles[k]);
        const auto fit = extract_rcs(loadeds[k], empties[k], *antenna, geometry, config.extraction_options());
        run.fits.push_back(fit);
        run.pattern.samples.push_back({angles[k], fit.sigma_hat, fit.snr_db, fit.failed});
    }
    if (config.extraction.theory_peak_m2)
    {
        if (auto norm = try_normalize(run.pattern, *config.extraction.theory_peak_m2))
            run.pattern = std::move(*norm);
    }
    return run;
}

MeasurementRun run_from_measurements(const std::vector<std::filesystem::path> &empty_files,
                                     const std::vector<std::filesystem::path> &loaded_files,
                                     const ExperimentConfig &config, const std::filesystem::path &out_dir)
{
    auto run = extract_measurements(empty_files, loaded_files, config);
    std::filesystem::create_directories(out_dir);
    write_pattern_csv(run.pattern, out_dir / "pattern.csv");

    json pairs = json::array();
    for (std::size_t k = 0; k < empty_files.size(); ++k)
        pairs.push_back({{"angle_deg", run.pattern.samples[k].angle_deg},
                         {"empty", empty_files[k].string()},
                         {"loaded", loaded_files[k].string()},
                         {"r_hat_m", run.fits[k].r_hat},
                         {"phi0_hat_rad", run.fits[k].phi0_hat}});
    write_meta(out_dir, "extract-files", config,
               {{"s_fs", config.antenna.s_fs_explicit ? "config" : "estimated from empty files"}, {"pairs", pairs}});
    return run;
}

} // namespace rcrcs

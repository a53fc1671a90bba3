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


#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <vector>

#include "rcrcs/config.hpp"
#include "rcrcs/extract.hpp"
#include "rcrcs/io.hpp"
#include "rcrcs/metrics.hpp"

namespace rcrcs
{

/// Task seed for aspect index i and trial t: derive_seed(base_seed, {i, t}).
std::uint64_t task_seed(const ExperimentConfig &config, std::size_t angle_index, std::size_t trial);

/// Runs fn(0..n-1) on up to `jobs` threads. fn must write only to its own slot.
void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)> &fn);

struct PatternTrial
{
    RcsPattern raw;
    std::vector<ExtractionResult> fits;
};

struct PatternRun
{
    RcsPattern raw;        // trial 0, unnormalized
    RcsPattern normalized; // trial 0, peak scaled to the boresight theory value
    RcsPattern reference;  // physical-optics pattern at band center
    DifferenceSpectrum waveform; // S^T - S at the aspect closest to 0 deg, trial 0
    std::vector<ExtractionResult> fits;
    // Per trial: mean relative error of the normalized pattern against the reference (+inf if all failed).
    std::vector<double> trial_errors;
    std::vector<std::size_t> trial_failed;
    // Per trial: normalized pattern (raw when every angle failed).
    std::vector<RcsPattern> trial_patterns;
};

/// Same-stirrer experiment: loaded and empty measured at stirrer angle 0 for every aspect angle.
PatternRun simulate_pattern(const ExperimentConfig &config, unsigned jobs);

/// simulate_pattern plus files: pattern.csv, pattern_raw.csv, reference_po.csv, waveform_0deg.csv,
/// po_error.csv, run-meta.json.
PatternRun run_pattern_experiment(const ExperimentConfig &config, const std::filesystem::path &out_dir, unsigned jobs);

struct ShiftSweepRun
{
    std::vector<double> shifts_deg;
    // [trial][shift] mean relative error against the trial's same-stirrer pattern (+inf when nothing compares).
    std::vector<std::vector<double>> errors;
    // [trial][shift] failed aspect angles.
    std::vector<std::vector<std::size_t>> failed;
    // [shift] normalized patterns of trial 0 (raw when every angle failed).
    std::vector<RcsPattern> trial0_patterns;

    std::vector<ShiftSummaryRow> mean_rows() const;
    std::vector<ShiftSummaryRow> median_rows() const;
};

/**
 * Loaded measurement at stirrer 0 deg, empty measurement at stirrer = shift. For each trial the
 * reference is the shift-0 pattern of the same realization.
 */
ShiftSweepRun simulate_shift_sweep(const ExperimentConfig &config, unsigned jobs);

/// Writes shift_sweep.csv, shift_sweep_median.csv, shift_sweep_trials.csv, pattern_shift_<deg>.csv, run-meta.json.
ShiftSweepRun run_shift_sweep(const ExperimentConfig &config, const std::filesystem::path &out_dir, unsigned jobs);

struct MeasurementRun
{
    RcsPattern pattern; // normalized when extraction.theory_peak_m2 is set
    std::vector<ExtractionResult> fits;
    ComplexSpectrum s_fs;
};

/**
 * Extraction from measured Touchstone pairs. File k is assigned the k-th sweep angle. S_FS is
 * the mean of the empty files unless the config document sets antenna.s_fs.
 */
MeasurementRun extract_measurements(const std::vector<std::filesystem::path> &empty_files,
                                    const std::vector<std::filesystem::path> &loaded_files,
                                    const ExperimentConfig &config);

/// extract_measurements plus pattern.csv and run-meta.json.
MeasurementRun run_from_measurements(const std::vector<std::filesystem::path> &empty_files,
                                     const std::vector<std::filesystem::path> &loaded_files,
                                     const ExperimentConfig &config, const std::filesystem::path &out_dir);

} // namespace rcrcs

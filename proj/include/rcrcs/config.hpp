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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rcrcs/antenna.hpp"
#include "rcrcs/chamber.hpp"
#include "rcrcs/extract.hpp"
#include "rcrcs/spectra.hpp"
#include "rcrcs/target.hpp"

namespace rcrcs
{

/**
 * Everything one experiment needs. Defaults reproduce the reference setup: 9.75-10.25 GHz,
 * R = 2.95 m, aspect sweep -30..30 deg at 1 deg, stirrer shifts 0..36 deg in 3.6 deg steps.
 */
struct ExperimentConfig
{
    struct Grid
    {
        double f_start = 9.75e9;
        double f_stop = 10.25e9;
        std::size_t n_points = 1001;
    };

    struct Antenna
    {
        enum class SfsSource
        {
            constant,
            file
        };

        double gain_dbi = 15.0;
        double efficiency = 0.9;
        SfsSource s_fs_source = SfsSource::constant;
        Complex s_fs_value{0.1, -0.05};
        std::string s_fs_path;
        // Set when the loaded document contains antenna.s_fs.
        bool s_fs_explicit = false;
    };

    struct Target
    {
        double width_m = 0.1;
        double height_m = 0.1;
    };

    struct Geometry
    {
        double distance_m = 2.95;
        double phi0_rad = 0.7;
    };

    struct Sweep
    {
        double angle_start_deg = -30.0;
        double angle_stop_deg = 30.0;
        double angle_step_deg = 1.0;
        std::vector<double> shift_list_deg = {0.0, 3.6, 7.2, 10.8, 14.4, 18.0, 21.6, 25.2, 28.8, 32.4, 36.0};
        std::size_t n_seeds = 50;
        std::uint64_t base_seed = 20190902;
    };

    struct Extraction
    {
        double r_window_m = 0.05;
        double snr_threshold_db = 16.0;
        std::optional<double> theory_peak_m2;
    };

    Grid grid;
    Antenna antenna;
    ChamberModel chamber;
    Target target;
    Geometry geometry;
    Sweep sweep;
    Extraction extraction;

    /// Fully resolved defaults (h_sigma derived by default_h_sigma).
    static ExperimentConfig defaults();

    FrequencyGrid frequency_grid() const;
    PlateTarget plate() const;
    std::vector<double> aspect_angles_deg() const;
    ExtractionOptions extraction_options() const;

    /// Antenna on the experiment grid; reads the Touchstone file for file-sourced S_FS.
    AntennaModel antenna_model() const;

    /// Throws ConfigError naming the offending key.
    void validate() const;
};

/**
 * Diffuse-field level such that the per-quadrature noise of (1 - |S_FS|^2) eta (H^T - H), for
 * uncorrelated H^T and H, equals half the ballistic amplitude |C(f_c)| sqrt(sigma_peak) of the plate
 * at band center. The mismatch factor cancels, so S_FS does not enter.
 */
double default_h_sigma(const ExperimentConfig &config);

/// Parses a JSON document; missing keys take defaults, unknown keys are rejected.
ExperimentConfig load_config(std::string_view json_text);

/// Canonical JSON document (2-space indent).
std::string dump_config(const ExperimentConfig &config);

} // namespace rcrcs

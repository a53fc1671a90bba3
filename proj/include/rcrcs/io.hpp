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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "rcrcs/metrics.hpp"
#include "rcrcs/spectra.hpp"

namespace rcrcs
{

/**
 * Touchstone v1.1 one-port reader.
 *
 * Accepts '!' comments, exactly one option line '# <HZ|KHZ|MHZ|GHZ> S <RI|MA|DB> R <ohms>'
 * (tokens case-insensitive, any omitted token takes the v1.1 default GHZ S MA R 50) and data rows
 * 'freq v1 v2' with strictly increasing, uniformly spaced frequencies. Throws DataError.
 */
ComplexSpectrum read_touchstone_1port(std::string_view text);

/// '# HZ S RI R 50' followed by one 17-significant-digit row per sample.
std::string write_touchstone_1port(const ComplexSpectrum &spectrum);

ComplexSpectrum read_touchstone_file(const std::filesystem::path &path);
void write_touchstone_file(const std::filesystem::path &path, const ComplexSpectrum &spectrum);

/// 'angle_deg,sigma_m2,sigma_dbsm,snr_db,failed'
std::string format_pattern_csv(const RcsPattern &pattern);
void write_pattern_csv(const RcsPattern &pattern, const std::filesystem::path &path);

struct ShiftSummaryRow
{
    double shift_deg;
    double mean_rel_error; // +inf when no angle could be compared
    double n_failed_angles;
};

/// 'shift_deg,mean_rel_error,n_failed_angles'
std::string format_shift_summary_csv(const std::vector<ShiftSummaryRow> &rows);

/// 'frequency_hz,re_diff,im_diff'
std::string format_waveform_csv(const ComplexSpectrum &diff);

/// Shortest round-trip decimal for doubles, "inf"/"-inf" for infinities.
std::string format_number(double value);

std::string read_text_file(const std::filesystem::path &path);

/// Throws std::runtime_error mentioning the path on failure.
void write_text_file(const std::filesystem::path &path, std::string_view text);

} // namespace rcrcs

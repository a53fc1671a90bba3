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

#include <cstddef>
#include <vector>

namespace rcrcs
{

struct PatternSample
{
    double angle_deg;
    double sigma_m2;
    double snr_db;
    bool failed;
};

/// RCS versus aspect angle at one evaluation frequency. Angles strictly increasing.
struct RcsPattern
{
    double frequency_hz = 10.0e9;
    std::vector<PatternSample> samples;

    void validate() const;
};

struct AngleRange
{
    double lo_deg = -30.0;
    double hi_deg = 30.0;

    bool contains(double a) const { return a >= lo_deg && a <= hi_deg; }
};

struct RelativeError
{
    double mean;
    std::size_t n_compared;
    std::size_t n_excluded; // in-range angles failed in either pattern
};

/// Rescales every sample so the largest non-failed sigma equals sigma_theory_peak.
RcsPattern normalize_pattern(const RcsPattern &pattern, double sigma_theory_peak);

/**
 * Mean of |sigma_test - sigma_ref| / sigma_ref over in-range angles that are non-failed in both
 * patterns. Not symmetric: the reference is the denominator. Throws std::invalid_argument when the
 * angle grids differ or nothing is left to compare.
 */
RelativeError mean_relative_error(const RcsPattern &test, const RcsPattern &reference, const AngleRange &range = {});

} // namespace rcrcs

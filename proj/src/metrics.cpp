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


#include "rcrcs/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace rcrcs
{

void RcsPattern::validate() const
{
    for (std::size_t i = 1; i < samples.size(); ++i)
        if (!(samples[i].angle_deg > samples[i - 1].angle_deg))
            throw std::invalid_argument("RCS pattern angles must be strictly increasing");
}

RcsPattern normalize_pattern(const RcsPattern &pattern, double sigma_theory_peak)
{
    if (!(sigma_theory_peak > 0.0))
        throw std::invalid_argument("normalize_pattern: theory peak must be positive");
    double peak = 0.0;
    for (const auto &s : pattern.samples)
        if (!s.failed && s.sigma_m2 > peak)
            peak = s.sigma_m2;
    if (!(peak > 0.0))
        throw std::invalid_argument("normalize_pattern: no non-failed sample with sigma > 0");

    const double scale = sigma_theory_peak / peak;
    RcsPattern out = pattern;
    for (auto &s : out.samples)
        s.sigma_m2 = (s.sigma_m2 == peak && !s.failed) ? sigma_theory_peak : s.sigma_m2 * scale;
    return out;
}

RelativeError mean_relative_error(const RcsPattern &test, const RcsPattern &reference, const AngleRange &range)
{
    if (test.samples.size() != reference.samples.size())
        throw std::invalid_argument("mean_relative_error: patterns have different angle grids");

    double sum = 0.0;
    RelativeError err{0.0, 0, 0};
    for (std::size_t i = 0; i < test.samples.size(); ++i)
    {
        const auto &t = test.samples[i];
        const auto &r = reference.samples[i];
        if (t.angle_deg != r.angle_deg)
            throw std::invalid_argument("mean_relative_error: patterns have different angle grids");
        if (!range.contains(r.angle_deg))
            continue;
        if (t.failed || r.failed)
        {
            ++err.n_excluded;
            continue;
        }
        if (!(r.sigma_m2 > 0.0))
            throw std::invalid_argument("mean_relative_error: reference sigma must be > 0 on the range");
        sum += std::abs(t.sigma_m2 - r.sigma_m2) / r.sigma_m2;
        ++err.n_compared;
    }
    if (err.n_compared == 0)
        throw std::invalid_argument("mean_relative_error: no overlapping valid angles");
    err.mean = sum / static_cast<double>(err.n_compared);
    return err;
}

} // namespace rcrcs

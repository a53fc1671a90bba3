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


#include "rcrcs/spectra.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rcrcs
{

FrequencyGrid::FrequencyGrid(double f_start, double f_stop, std::size_t n_points)
    : f_start_(f_start), f_stop_(f_stop), n_points_(n_points)
{
    if (!std::isfinite(f_start) || !std::isfinite(f_stop))
        throw std::invalid_argument("frequency grid bounds must be finite");
    if (n_points < 2)
        throw std::invalid_argument("frequency grid needs at least 2 points, got " + std::to_string(n_points));
    if (!(f_start < f_stop))
        throw std::invalid_argument("frequency grid requires f_start < f_stop");
}

FrequencyGrid FrequencyGrid::spot(double frequency)
{
    if (!std::isfinite(frequency))
        throw std::invalid_argument("spot frequency must be finite");
    FrequencyGrid g;
    g.f_start_ = frequency;
    g.f_stop_ = frequency;
    g.n_points_ = 1;
    return g;
}

double FrequencyGrid::at(std::size_t k) const
{
    if (n_points_ == 1)
        return f_start_;
    // std::lerp is exact at both end points.
    const double t = static_cast<double>(k) / static_cast<double>(n_points_ - 1);
    return std::lerp(f_start_, f_stop_, t);
}

double FrequencyGrid::step() const
{
    if (n_points_ == 1)
        return 0.0;
    return (f_stop_ - f_start_) / static_cast<double>(n_points_ - 1);
}

std::vector<double> FrequencyGrid::frequencies() const
{
    std::vector<double> f(n_points_);
    for (std::size_t k = 0; k < n_points_; ++k)
        f[k] = at(k);
    return f;
}

FrequencyGrid make_grid(double f_start, double f_stop, std::size_t n_points)
{
    return FrequencyGrid(f_start, f_stop, n_points);
}

double wavelength(double frequency_hz)
{
    if (!(frequency_hz > 0.0) || !std::isfinite(frequency_hz))
        throw std::invalid_argument("wavelength requires a positive finite frequency");
    return speed_of_light / frequency_hz;
}

ComplexSpectrum::ComplexSpectrum(FrequencyGrid grid, std::vector<Complex> values)
    : grid_(grid), values_(std::move(values))
{
    if (values_.size() != grid_.size())
        throw std::invalid_argument("spectrum has " + std::to_string(values_.size()) + " values for a " +
                                    std::to_string(grid_.size()) + "-point grid");
    for (const auto &v : values_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::invalid_argument("spectrum values must be finite");
}

ComplexSpectrum ComplexSpectrum::constant(const FrequencyGrid &grid, Complex value)
{
    return ComplexSpectrum(grid, std::vector<Complex>(grid.size(), value));
}

} // namespace rcrcs

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

#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

namespace rcrcs
{

using Complex = std::complex<double>;

/// Speed of light in vacuum [m/s]. Every wavelength and phase in the library derives from it.
inline constexpr double speed_of_light = 299792458.0;

inline constexpr double pi = std::numbers::pi;

inline constexpr double deg_to_rad(double deg) { return deg * (pi / 180.0); }
inline constexpr double rad_to_deg(double rad) { return rad * (180.0 / pi); }

/**
 * Uniform frequency grid. Sample k sits at the affine position
 * f_start + k (f_stop - f_start) / (n - 1); the end points are reproduced exactly.
 *
 * Regular grids have n >= 2 and f_start < f_stop. A single-sample "spot" grid
 * (f_start == f_stop, n == 1) exists for one-point measurement files.
 */
class FrequencyGrid
{
  public:
    FrequencyGrid(double f_start, double f_stop, std::size_t n_points);

    static FrequencyGrid spot(double frequency);

    double f_start() const { return f_start_; }
    double f_stop() const { return f_stop_; }
    std::size_t size() const { return n_points_; }

    double at(std::size_t k) const;
    double step() const;
    double bandwidth() const { return f_stop_ - f_start_; }
    double center() const { return 0.5 * (f_start_ + f_stop_); }
    std::vector<double> frequencies() const;

    bool operator==(const FrequencyGrid &) const = default;

  private:
    FrequencyGrid() = default;

    double f_start_ = 0.0;
    double f_stop_ = 0.0;
    std::size_t n_points_ = 0;
};

FrequencyGrid make_grid(double f_start, double f_stop, std::size_t n_points);

/// Wavelength c/f [m]. Throws std::invalid_argument for f <= 0.
double wavelength(double frequency_hz);

/// Complex reflection coefficients (or transfer-function samples) on a frequency grid.
class ComplexSpectrum
{
  public:
    ComplexSpectrum(FrequencyGrid grid, std::vector<Complex> values);

    /// All samples set to the same value.
    static ComplexSpectrum constant(const FrequencyGrid &grid, Complex value);

    const FrequencyGrid &grid() const { return grid_; }
    std::span<const Complex> values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    const Complex &operator[](std::size_t k) const { return values_[k]; }

    bool operator==(const ComplexSpectrum &) const = default;

  private:
    FrequencyGrid grid_;
    std::vector<Complex> values_;
};

} // namespace rcrcs

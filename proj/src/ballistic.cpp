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


#include "rcrcs/ballistic.hpp"

#include <cmath>
#include <stdexcept>

namespace rcrcs
{

namespace
{
// (4 pi)^{3/2}
const double friis_denominator = std::pow(4.0 * pi, 1.5);
} // namespace

double wrap_phase(double radians)
{
    double r = std::remainder(radians, 2.0 * pi);
    if (r <= -pi)
        r += 2.0 * pi;
    return r;
}

double round_trip_phase(double frequency_hz, double distance_m)
{
    const double turns = 2.0 * frequency_hz * distance_m / speed_of_light;
    const double frac = turns - std::round(turns);
    return wrap_phase(-2.0 * pi * frac);
}

double coupling_magnitude(double gain_dbi, Complex s_fs, double frequency_hz, double distance_m)
{
    if (!(frequency_hz > 0.0))
        throw std::invalid_argument("coupling needs a positive frequency");
    if (!(distance_m > 0.0))
        throw std::invalid_argument("coupling needs a positive distance");
    const double gain = std::pow(10.0, gain_dbi / 10.0);
    const double mismatch = 1.0 - std::norm(s_fs);
    return gain * wavelength(frequency_hz) / (friis_denominator * distance_m * distance_m) * mismatch;
}

BallisticCoupling ballistic_coupling(double gain_dbi, Complex s_fs, double frequency_hz, double distance_m,
                                     double phi0)
{
    const double mag = coupling_magnitude(gain_dbi, s_fs, frequency_hz, distance_m);
    const double phase = wrap_phase(round_trip_phase(frequency_hz, distance_m) + wrap_phase(phi0));
    return {mag, phase, phi0};
}

Complex coupling(double gain_dbi, Complex s_fs, double frequency_hz, double distance_m, double phi0)
{
    return ballistic_coupling(gain_dbi, s_fs, frequency_hz, distance_m, phi0).value();
}

ComplexSpectrum coupling_spectrum(const AntennaModel &antenna, double distance_m, double phi0)
{
    const auto &grid = antenna.s_fs.grid();
    std::vector<Complex> c(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k)
        c[k] = coupling(antenna.gain_dbi, antenna.s_fs[k], grid.at(k), distance_m, phi0);
    return ComplexSpectrum(grid, std::move(c));
}

} // namespace rcrcs

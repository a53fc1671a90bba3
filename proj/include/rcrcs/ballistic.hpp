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

#include "rcrcs/antenna.hpp"
#include "rcrcs/spectra.hpp"

namespace rcrcs
{

/// Wraps an angle to (-pi, pi].
double wrap_phase(double radians);

/**
 * Round-trip propagation phase -2 pi f (2R) / c reduced to (-pi, pi].
 * Computed from the fractional part of 2 f R / c so large f R products keep full precision.
 */
double round_trip_phase(double frequency_hz, double distance_m);

/// Antenna <-> target coupling coefficient C(f) split into magnitude and phase.
struct BallisticCoupling
{
    double magnitude; // per sqrt(m^2)
    double phase;     // rad, round-trip phase plus phi0, wrapped
    double phi0;

    Complex value() const { return std::polar(magnitude, phase); }
};

/// |C(f)| = G lambda(f) / ((4 pi)^{3/2} R^2) * (1 - |S_FS|^2), G linear.
double coupling_magnitude(double gain_dbi, Complex s_fs, double frequency_hz, double distance_m);

BallisticCoupling ballistic_coupling(double gain_dbi, Complex s_fs, double frequency_hz, double distance_m, double phi0);

Complex coupling(double gain_dbi, Complex s_fs, double frequency_hz, double distance_m, double phi0);

/// C(f) on the antenna's grid.
ComplexSpectrum coupling_spectrum(const AntennaModel &antenna, double distance_m, double phi0);

} // namespace rcrcs

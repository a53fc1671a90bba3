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

#include "rcrcs/spectra.hpp"

namespace rcrcs
{

/// Rectangular perfectly conducting plate; width is the dimension swept by the azimuthal rotation.
class PlateTarget
{
  public:
    PlateTarget(double width_m, double height_m);

    double width() const { return width_; }
    double height() const { return height_; }
    double section() const { return width_ * height_; }
    double largest_dimension() const;

  private:
    double width_;
    double height_;
};

/// Antenna-to-target distance and azimuthal target rotation (0 deg = plate facing the antenna).
struct MeasurementGeometry
{
    double distance_m;
    double aspect_deg = 0.0;

    MeasurementGeometry(double distance, double aspect = 0.0);
};

/// 2 D^2 / lambda_min.
double far_field_min_distance(const PlateTarget &target, double lambda_min);

/// True when the distance exceeds the far-field bound at the highest grid frequency.
bool check_far_field(const MeasurementGeometry &geometry, const PlateTarget &target, const FrequencyGrid &grid);

/// Boresight RCS 4 pi S^2 f^2 / c^2 [m^2].
double plate_rcs_peak(const PlateTarget &target, double frequency_hz);

/**
 * Monostatic physical-optics RCS of the plate rotated by aspect_deg about its height axis:
 *
 *   sigma(theta) = (4 pi S^2 / lambda^2) [sin(u)/u]^2 cos^2(theta),  u = 2 pi a sin(theta) / lambda
 *
 * The round-trip phase 2 k x sin(theta) across the width sets u, so nulls fall at
 * sin(theta) = m lambda / (2 a). Throws for |aspect_deg| >= 90.
 */
double plate_rcs_pattern(const PlateTarget &target, double frequency_hz, double aspect_deg);

} // namespace rcrcs

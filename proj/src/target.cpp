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


#include "rcrcs/target.hpp"

#include <cmath>
#include <stdexcept>

namespace rcrcs
{

PlateTarget::PlateTarget(double width_m, double height_m) : width_(width_m), height_(height_m)
{
    if (!(width_m > 0.0) || !(height_m > 0.0) || !std::isfinite(width_m) || !std::isfinite(height_m))
        throw std::invalid_argument("plate dimensions must be positive and finite");
}

double PlateTarget::largest_dimension() const
{
    return std::hypot(width_, height_);
}

MeasurementGeometry::MeasurementGeometry(double distance, double aspect) : distance_m(distance), aspect_deg(aspect)
{
    if (!(distance > 0.0) || !std::isfinite(distance))
        throw std::invalid_argument("antenna-target distance must be positive");
    if (!std::isfinite(aspect))
        throw std::invalid_argument("aspect angle must be finite");
}

double far_field_min_distance(const PlateTarget &target, double lambda_min)
{
    if (!(lambda_min > 0.0))
        throw std::invalid_argument("far-field bound needs a positive wavelength");
    const double d = target.largest_dimension();
    return 2.0 * d * d / lambda_min;
}

bool check_far_field(const MeasurementGeometry &geometry, const PlateTarget &target, const FrequencyGrid &grid)
{
    const double lambda_min = wavelength(grid.f_stop());
    return geometry.distance_m > far_field_min_distance(target, lambda_min);
}

double plate_rcs_peak(const PlateTarget &target, double frequency_hz)
{
    if (!(frequency_hz > 0.0))
        throw std::invalid_argument("plate RCS needs a positive frequency");
    const double s = target.section();
    const double f_over_c = frequency_hz / speed_of_light;
    return 4.0 * pi * s * s * f_over_c * f_over_c;
}

double plate_rcs_pattern(const PlateTarget &target, double frequency_hz, double aspect_deg)
{
    if (!(std::abs(aspect_deg) < 90.0))
        throw std::invalid_argument("plate pattern is defined for |aspect| < 90 deg");
    const double peak = plate_rcs_peak(target, frequency_hz);
    if (aspect_deg == 0.0)
        return peak;

    const double theta = deg_to_rad(std::abs(aspect_deg));
    const double u = 2.0 * pi * target.width() * std::sin(theta) / wavelength(frequency_hz);
    const double sinc = std::sin(u) / u;
    const double obliquity = std::cos(theta);
    return peak * sinc * sinc * obliquity * obliquity;
}

} // namespace rcrcs

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


#include <cmath>
#include <stdexcept>

#include <gtest/gtest.h>

#include "rcrcs/target.hpp"
#include "support/po_oracle.hpp"

using namespace rcrcs;
using rcrcs_test::po_integral_rcs;

namespace
{

const PlateTarget plate(0.1, 0.1);

} // namespace

TEST(PlateTarget, DerivedDimensions)
{
    const PlateTarget p(0.3, 0.4);
    EXPECT_DOUBLE_EQ(p.section(), 0.12);
    EXPECT_EQ(p.largest_dimension(), std::hypot(0.3, 0.4));
    EXPECT_THROW(PlateTarget(0.0, 0.1), std::invalid_argument);
    EXPECT_THROW(PlateTarget(0.1, -1.0), std::invalid_argument);
}

TEST(Geometry, RejectsNonPositiveDistance)
{
    EXPECT_THROW(MeasurementGeometry(0.0), std::invalid_argument);
    EXPECT_THROW(MeasurementGeometry(-2.95), std::invalid_argument);
}

TEST(FarField, DefaultPlatePassesAtDefaultDistance)
{
    EXPECT_NEAR(far_field_min_distance(plate, 0.029248), 1.3676, 5e-4);
    EXPECT_TRUE(check_far_field(MeasurementGeometry(2.95), plate, make_grid(9.75e9, 10.25e9, 1001)));
}

TEST(FarField, VanishingPlateIsAlwaysFarField)
{
    EXPECT_NEAR(far_field_min_distance(PlateTarget(1e-12, 1e-12), 0.029248), 0.0, 1e-20);
}

TEST(FarField, LargerPlateFails)
{
    const PlateTarget big(0.2, 0.2);
    EXPECT_NEAR(far_field_min_distance(big, 0.029248), 5.470, 2e-3);
    EXPECT_FALSE(check_far_field(MeasurementGeometry(2.95), big, make_grid(9.75e9, 10.25e9, 1001)));
}

TEST(PlatePeak, ReferenceValues)
{
    EXPECT_NEAR(plate_rcs_peak(plate, 10.0e9), 1.3982, 5e-5);
    EXPECT_NEAR(plate_rcs_peak(plate, 9.75e9), 1.3292, 5e-5);
    EXPECT_LT(plate_rcs_peak(PlateTarget(1e-9, 1e-9), 10.0e9), 1e-30);
}

TEST(PlatePeak, ScalesWithFrequencySquared)
{
    for (double f : {1.0e9, 3.3e9, 10.0e9, 12.5e9})
        EXPECT_EQ(plate_rcs_peak(plate, 2.0 * f), 4.0 * plate_rcs_peak(plate, f));
}

TEST(PlatePattern, BoresightEqualsPeakExactly)
{
    for (double f : {9.75e9, 10.0e9, 10.25e9})
        EXPECT_EQ(plate_rcs_pattern(plate, f, 0.0), plate_rcs_peak(plate, f));
}

TEST(PlatePattern, SymmetricInAspect)
{
    for (double a = 0.25; a < 89.0; a += 0.75)
        EXPECT_EQ(plate_rcs_pattern(plate, 10.0e9, a), plate_rcs_pattern(plate, 10.0e9, -a));
}

TEST(PlatePattern, RejectsGrazingAspects)
{
    EXPECT_THROW(plate_rcs_pattern(plate, 10.0e9, 90.0), std::invalid_argument);
    EXPECT_THROW(plate_rcs_pattern(plate, 10.0e9, -90.0), std::invalid_argument);
    EXPECT_THROW(plate_rcs_pattern(plate, 10.0e9, 120.0), std::invalid_argument);
}

TEST(PlatePattern, PeakDominatesWithinThirtyDegrees)
{
    for (double f : {9.75e9, 10.0e9, 10.25e9})
        for (double a = -30.0; a <= 30.0; a += 0.1)
            EXPECT_LE(plate_rcs_pattern(plate, f, a), plate_rcs_pattern(plate, f, 0.0));
}

// Round-trip phase 2 k x sin(theta) across the width puts nulls at sin(theta) = m lambda / (2 a).
// The integral oracle decides the location; the closed form must agree.
TEST(PlatePattern, NullsMatchTheIntegralOracle)
{
    const double lambda = wavelength(10.0e9);
    const double first = rad_to_deg(std::asin(lambda / (2.0 * 0.1)));
    const double second = rad_to_deg(std::asin(lambda / 0.1));
    EXPECT_NEAR(first, 8.62, 0.01);
    EXPECT_NEAR(second, 17.45, 0.01);

    const double peak = plate_rcs_peak(plate, 10.0e9);
    for (double null : {first, second})
    {
        EXPECT_LT(plate_rcs_pattern(plate, 10.0e9, null), 1e-20 * peak);
        EXPECT_LT(po_integral_rcs(0.1, 0.1, 10.0e9, null), 1e-6 * peak);
        // A true null: both neighbours are larger.
        EXPECT_GT(po_integral_rcs(0.1, 0.1, 10.0e9, null - 0.5), 1e-4 * peak);
        EXPECT_GT(po_integral_rcs(0.1, 0.1, 10.0e9, null + 0.5), 1e-4 * peak);
    }
}

TEST(PlatePattern, AgreesWithIntegralOracleOnLattice)
{
    for (double f : {9.75e9, 10.0e9, 10.25e9})
        for (double a = 0.0; a <= 30.0; a += 5.0)
        {
            const double oracle = po_integral_rcs(0.1, 0.1, f, a);
            EXPECT_NEAR(plate_rcs_pattern(plate, f, a), oracle, 0.005 * oracle) << f << " Hz, " << a << " deg";
        }
}

TEST(PlatePattern, ThirtyDegreesAgreesWithOracle)
{
    const double oracle = po_integral_rcs(0.1, 0.1, 10.0e9, 30.0, 2001, 401);
    EXPECT_NEAR(plate_rcs_pattern(plate, 10.0e9, 30.0), oracle, 1e-3 * oracle);
}

TEST(PlatePattern, RectangularPlateUsesWidthForTheLobes)
{
    const PlateTarget rect(0.15, 0.08);
    for (double a : {3.0, 11.0, 24.0})
    {
        const double oracle = po_integral_rcs(0.15, 0.08, 10.0e9, a);
        EXPECT_NEAR(plate_rcs_pattern(rect, 10.0e9, a), oracle, 0.005 * oracle);
    }
}

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
#include <limits>
#include <stdexcept>

#include <gtest/gtest.h>

#include "rcrcs/seed.hpp"
#include "rcrcs/spectra.hpp"

using namespace rcrcs;

TEST(FrequencyGrid, DefaultBandHasHalfMegahertzStep)
{
    const auto g = make_grid(9.75e9, 10.25e9, 1001);
    EXPECT_EQ(g.size(), 1001u);
    EXPECT_NEAR(g.step(), 0.5e6, 1e-6);
    EXPECT_DOUBLE_EQ(g.center(), 10.0e9);
    EXPECT_DOUBLE_EQ(g.bandwidth(), 0.5e9);
}

TEST(FrequencyGrid, TwoPointGridIsTheEndpoints)
{
    const auto g = make_grid(1.0, 2.0, 2);
    const auto f = g.frequencies();
    ASSERT_EQ(f.size(), 2u);
    EXPECT_EQ(f[0], 1.0);
    EXPECT_EQ(f[1], 2.0);
}

TEST(FrequencyGrid, CoarserGridHasOneMegahertzStep)
{
    EXPECT_NEAR(make_grid(9.75e9, 10.25e9, 501).step(), 1.0e6, 1e-6);
}

TEST(FrequencyGrid, EndpointsAreExactForManySizes)
{
    for (std::size_t n : {2u, 3u, 7u, 101u, 1001u, 2001u, 65537u})
    {
        const auto g = make_grid(9.75e9, 10.25e9, n);
        EXPECT_EQ(g.at(0), 9.75e9) << n;
        EXPECT_EQ(g.at(n - 1), 10.25e9) << n;
        const auto f = g.frequencies();
        EXPECT_EQ(f.front(), 9.75e9);
        EXPECT_EQ(f.back(), 10.25e9);
        for (std::size_t k = 1; k < n; ++k)
            ASSERT_LT(f[k - 1], f[k]);
    }
}

TEST(FrequencyGrid, SamplesFollowTheAffineFormula)
{
    const auto g = make_grid(9.75e9, 10.25e9, 1001);
    for (std::size_t k = 0; k < g.size(); k += 37)
        EXPECT_NEAR(g.at(k), 9.75e9 + static_cast<double>(k) * 0.5e6, 1e-3);
}

TEST(FrequencyGrid, RejectsInvalidBounds)
{
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const double inf = std::numeric_limits<double>::infinity();
    EXPECT_THROW(make_grid(2.0, 1.0, 10), std::invalid_argument);
    EXPECT_THROW(make_grid(1.0, 1.0, 10), std::invalid_argument);
    EXPECT_THROW(make_grid(1.0, 2.0, 1), std::invalid_argument);
    EXPECT_THROW(make_grid(1.0, 2.0, 0), std::invalid_argument);
    EXPECT_THROW(make_grid(nan, 2.0, 10), std::invalid_argument);
    EXPECT_THROW(make_grid(1.0, inf, 10), std::invalid_argument);
}

TEST(FrequencyGrid, SpotGridHoldsOneSample)
{
    const auto g = FrequencyGrid::spot(1.0e10);
    EXPECT_EQ(g.size(), 1u);
    EXPECT_EQ(g.at(0), 1.0e10);
    EXPECT_EQ(g.frequencies(), std::vector<double>{1.0e10});
    EXPECT_NE(g, make_grid(1.0e10, 2.0e10, 2));
}

TEST(Wavelength, ReferenceValues)
{
    EXPECT_DOUBLE_EQ(wavelength(10.0e9), 0.0299792458);
    EXPECT_EQ(wavelength(299792458.0), 1.0);
    EXPECT_NEAR(wavelength(10.25e9), 0.029248, 5e-7);
}

TEST(Wavelength, ProductWithFrequencyIsTheSpeedOfLight)
{
    for (double f = 1.0e6; f < 1.0e12; f *= 1.37)
        EXPECT_NEAR(wavelength(f) * f, speed_of_light, speed_of_light * 1e-15);
}

TEST(Wavelength, RejectsNonPositive)
{
    EXPECT_THROW(wavelength(0.0), std::invalid_argument);
    EXPECT_THROW(wavelength(-1.0), std::invalid_argument);
}

TEST(ComplexSpectrum, RequiresOneValuePerSample)
{
    const auto g = make_grid(1.0, 2.0, 3);
    EXPECT_THROW(ComplexSpectrum(g, {}), std::invalid_argument);
    EXPECT_THROW(ComplexSpectrum(g, {{1, 0}, {2, 0}}), std::invalid_argument);
    EXPECT_NO_THROW(ComplexSpectrum(g, {{1, 0}, {2, 0}, {3, 0}}));
}

TEST(ComplexSpectrum, RejectsNonFiniteValues)
{
    const auto g = make_grid(1.0, 2.0, 2);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    EXPECT_THROW(ComplexSpectrum(g, {{1, 0}, {nan, 0}}), std::invalid_argument);
}

TEST(ComplexSpectrum, ConstantFillsEverySample)
{
    const auto s = ComplexSpectrum::constant(make_grid(1.0, 2.0, 5), {0.25, -0.5});
    for (const auto &v : s.values())
        EXPECT_EQ(v, Complex(0.25, -0.5));
}

TEST(Seed, DerivationIsPureAndIndexSensitive)
{
    static_assert(derive_seed(1, {2, 3}) == derive_seed(1, {2, 3}));
    EXPECT_NE(derive_seed(1, {2, 3}), derive_seed(1, {3, 2}));
    EXPECT_NE(derive_seed(1, {0}), derive_seed(1, {1}));
    EXPECT_NE(derive_seed(1, {0}), derive_seed(2, {0}));
    EXPECT_NE(derive_seed(1, {}), derive_seed(1, {0}));
}

TEST(Seed, SplitmixMatchesReferenceSequence)
{
    // First outputs of the reference splitmix64 generator seeded with 0.
    std::uint64_t state = 0;
    auto next = [&] {
        const auto out = splitmix64(state);
        state += 0x9e3779b97f4a7c15ULL;
        return out;
    };
    EXPECT_EQ(next(), 0xe220a8397b1dcdafULL);
    EXPECT_EQ(next(), 0x6e789e6aa1b965f4ULL);
    EXPECT_EQ(next(), 0x06c45d188009454fULL);
}

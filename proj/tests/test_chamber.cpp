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
#include <vector>

#include <gtest/gtest.h>

#include "rcrcs/ballistic.hpp"
#include "rcrcs/chamber.hpp"
#include "rcrcs/seed.hpp"
#include "support/stats.hpp"

using namespace rcrcs;
using rcrcs_test::complex_correlation;

namespace
{

ChamberModel unit_chamber()
{
    ChamberModel c;
    c.h_sigma = 1.0;
    return c;
}

const FrequencyGrid big_grid = make_grid(9.75e9, 10.25e9, 10001);
const FrequencyGrid band = make_grid(9.75e9, 10.25e9, 1001);

std::vector<Complex> as_vector(const ComplexSpectrum &s) { return {s.values().begin(), s.values().end()}; }

} // namespace

TEST(AngularCorrelation, ClosedFormValues)
{
    const ChamberModel c;
    EXPECT_EQ(angular_correlation(c, 0.0), 1.0);
    EXPECT_NEAR(angular_correlation(c, 15.0), std::exp(-0.5), 1e-15);
    EXPECT_NEAR(angular_correlation(c, 15.0), 0.6065, 5e-5);
    EXPECT_EQ(angular_correlation(c, 350.0), angular_correlation(c, 10.0));
    EXPECT_EQ(angular_correlation(c, -10.0), angular_correlation(c, 10.0));
    EXPECT_EQ(angular_correlation(c, 370.0), angular_correlation(c, 10.0));
    EXPECT_NEAR(angular_correlation(c, 20.0), 0.41, 0.005);
    EXPECT_NEAR(angular_correlation(c, 36.0), 0.056, 0.001);
}

TEST(ChamberModel, Validation)
{
    ChamberModel c;
    EXPECT_NO_THROW(c.validate());
    c.theta_c_deg = 0.0;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c = {};
    c.h_sigma = -1.0;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c = {};
    c.rho_target = 1.5;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c = {};
    c.coherence_bw_hz = 0.0;
    EXPECT_THROW(c.validate(), std::invalid_argument);
}

TEST(StirrerState, NormalizesModulo360)
{
    EXPECT_EQ(StirrerState(370.0).angle_deg(), 10.0);
    EXPECT_EQ(StirrerState(-90.0).angle_deg(), 270.0);
    EXPECT_EQ(StirrerState(360.0).angle_deg(), 0.0);
    EXPECT_EQ(StirrerState(0.0).angle_deg(), 0.0);
}

TEST(SynthTransfer, SampleMeanWithinFourSigma)
{
    ChamberModel c;
    c.h_sigma = 1.1359e-3;
    const double angle = 0.0;
    for (std::uint64_t seed : {1u, 2u, 3u, 77u, 20190902u})
    {
        const auto h = synth_transfer(c, band, {&angle, 1}, seed).front();
        Complex sum{};
        for (const auto &v : h.values())
            sum += v;
        EXPECT_LE(std::abs(sum / 1001.0), 4.0 * c.h_sigma / std::sqrt(1001.0)) << seed;
    }
}

TEST(SynthTransfer, RepeatedAnglesAreIdentical)
{
    const std::vector<double> angles{0.0, 0.0};
    const auto h = synth_transfer(unit_chamber(), band, angles, 5);
    EXPECT_EQ(h[0], h[1]);
    const std::vector<double> wrapped{10.0, 370.0};
    const auto w = synth_transfer(unit_chamber(), band, wrapped, 5);
    EXPECT_EQ(w[0], w[1]);
}

TEST(SynthTransfer, DistantAnglesAreUncorrelated)
{
    const std::vector<double> angles{0.0, 90.0};
    const auto h = synth_transfer(unit_chamber(), big_grid, angles, 9);
    EXPECT_NEAR(complex_correlation(as_vector(h[0]), as_vector(h[1])), 0.0, 0.04);
}

TEST(SynthTransfer, CorrelationFollowsTheAngularLaw)
{
    const auto chamber = unit_chamber();
    const double n = 2.0 * static_cast<double>(big_grid.size());
    for (double d : {3.6, 7.2, 15.0, 25.2, 36.0})
    {
        const std::vector<double> angles{0.0, d};
        const auto h = synth_transfer(chamber, big_grid, angles, 31);
        EXPECT_NEAR(complex_correlation(as_vector(h[0]), as_vector(h[1])), angular_correlation(chamber, d),
                    3.0 / std::sqrt(n))
            << d;
    }
}

TEST(SynthTransfer, JointDrawOverManyAnglesMatchesPairwiseLaw)
{
    const auto chamber = unit_chamber();
    std::vector<double> angles;
    for (double a = 0.0; a <= 36.0; a += 3.6)
        angles.push_back(a);
    const auto h = synth_transfer(chamber, big_grid, angles, 4);
    const double tol = 3.0 / std::sqrt(2.0 * static_cast<double>(big_grid.size()));
    for (std::size_t j = 1; j < angles.size(); ++j)
        EXPECT_NEAR(complex_correlation(as_vector(h[0]), as_vector(h[j])), angular_correlation(chamber, angles[j]),
                    tol);
}

TEST(SynthTransfer, GaussianMoments)
{
    const double angle = 0.0;
    const auto h = synth_transfer(unit_chamber(), big_grid, {&angle, 1}, 123).front();
    std::vector<double> re, im;
    for (const auto &v : h.values())
    {
        re.push_back(v.real());
        im.push_back(v.imag());
    }
    for (const auto *q : {&re, &im})
    {
        EXPECT_LT(std::abs(rcrcs_test::skewness(*q)), 0.1);
        EXPECT_LT(std::abs(rcrcs_test::excess_kurtosis(*q)), 0.2);
        EXPECT_NEAR(rcrcs_test::central_moment(*q, 2), 1.0, 0.05);
    }
    EXPECT_LT(std::abs(rcrcs_test::pearson(re, im)), 0.05);
}

TEST(SynthTransfer, VarianceScalesWithHSigma)
{
    ChamberModel c;
    c.h_sigma = 2.5e-3;
    const double angle = 42.0;
    const auto h = synth_transfer(c, big_grid, {&angle, 1}, 8).front();
    double power = 0.0;
    for (const auto &v : h.values())
        power += std::norm(v);
    EXPECT_NEAR(power / static_cast<double>(h.size()), 2.0 * c.h_sigma * c.h_sigma,
                0.05 * 2.0 * c.h_sigma * c.h_sigma);
}

TEST(SynthTransfer, DeterministicGivenSeed)
{
    const std::vector<double> angles{0.0, 7.2, 36.0};
    EXPECT_EQ(synth_transfer(unit_chamber(), band, angles, 77), synth_transfer(unit_chamber(), band, angles, 77));
    EXPECT_NE(synth_transfer(unit_chamber(), band, angles, 77), synth_transfer(unit_chamber(), band, angles, 78));
}

TEST(SynthTransfer, EveryAngleKeepsTheMarginalPower)
{
    const std::vector<double> pair{0.0, 180.0};
    const auto h = synth_transfer(unit_chamber(), big_grid, pair, 3);
    double p0 = 0.0, p1 = 0.0;
    for (std::size_t k = 0; k < big_grid.size(); ++k)
    {
        p0 += std::norm(h[0][k]);
        p1 += std::norm(h[1][k]);
    }
    EXPECT_NEAR(p0 / big_grid.size(), 2.0, 0.1);
    EXPECT_NEAR(p1 / big_grid.size(), 2.0, 0.1);
}

TEST(SynthTransfer, RejectsInvalidAngleSets)
{
    const std::vector<double> none;
    EXPECT_THROW(synth_transfer(unit_chamber(), band, none, 1), std::invalid_argument);

    // A wide squared-exponential wrapped onto the circle is not a valid covariance.
    ChamberModel wide = unit_chamber();
    wide.theta_c_deg = 120.0;
    std::vector<double> ring;
    for (double a = 0.0; a < 360.0; a += 10.0)
        ring.push_back(a);
    EXPECT_THROW(synth_transfer(wide, band, ring, 1), std::invalid_argument);
}

TEST(SynthTransfer, FrequencySmoothingSetsLagOneCorrelation)
{
    ChamberModel c = unit_chamber();
    c.freq_correlated = true;
    c.coherence_bw_hz = 2.0e5;
    const auto grid = make_grid(9.0e9, 11.0e9, 40001);
    const double angle = 0.0;
    const auto h = synth_transfer(c, grid, {&angle, 1}, 17).front();
    const std::vector<Complex> a(h.values().begin(), h.values().end() - 1);
    const std::vector<Complex> b(h.values().begin() + 1, h.values().end());
    const double expected = std::exp(-grid.step() / c.coherence_bw_hz);
    EXPECT_NEAR(complex_correlation(a, b), expected, 0.03);
    double power = 0.0;
    for (const auto &v : h.values())
        power += std::norm(v);
    EXPECT_NEAR(power / grid.size(), 2.0, 0.2);
}

TEST(StirredRealization, LoadedFieldCorrelatesAtRhoTarget)
{
    ChamberModel c = unit_chamber();
    c.rho_target = 0.9;
    const std::vector<double> angles{0.0, 15.0};
    const StirredRealization field(c, big_grid, angles, 55);
    const double tol = 3.0 / std::sqrt(2.0 * static_cast<double>(big_grid.size()));
    EXPECT_NEAR(complex_correlation(as_vector(field.loaded_transfer(0)), as_vector(field.empty_transfer(0))), 0.9, tol);
    EXPECT_NEAR(complex_correlation(as_vector(field.loaded_transfer(0)), as_vector(field.empty_transfer(1))),
                0.9 * std::exp(-0.5), tol);
}

TEST(StirredRealization, UnitRhoTargetMakesFieldsIdentical)
{
    ChamberModel c = unit_chamber();
    c.rho_target = 1.0;
    const double angle = 0.0;
    const StirredRealization field(c, band, {&angle, 1}, 3);
    EXPECT_EQ(field.loaded_transfer(0), field.empty_transfer(0));
}

TEST(MeasureEmpty, NoiseFreeChamberReturnsFreeSpaceReflection)
{
    const auto antenna = AntennaModel::with_constant_sfs(band, {0.1, -0.05}, 15.0, 0.9);
    ChamberModel c;
    c.h_sigma = 0.0;
    EXPECT_EQ(measure_empty(antenna, c, band, StirrerState(0.0), 1), antenna.s_fs);
}

TEST(MeasureEmpty, IdentityWeightingReturnsTransfer)
{
    const auto antenna = AntennaModel::with_constant_sfs(band, 0.0, 15.0, 1.0);
    const auto chamber = unit_chamber();
    const double angle = 12.0;
    const StirredRealization field(chamber, band, {&angle, 1}, 21);
    EXPECT_EQ(measure_empty(antenna, chamber, band, StirrerState(angle), 21), field.empty_transfer(0));
}

TEST(MeasureEmpty, VarianceMatchesWeightedTransfer)
{
    const Complex s_fs(0.1, -0.05);
    const auto antenna = AntennaModel::with_constant_sfs(big_grid, s_fs, 15.0, 0.9);
    ChamberModel c;
    c.h_sigma = 1.1359e-3;
    const auto s = measure_empty(antenna, c, big_grid, StirrerState(0.0), 99);
    double power = 0.0;
    for (std::size_t k = 0; k < s.size(); ++k)
        power += std::norm(s[k] - s_fs);
    const double m = 1.0 - std::norm(s_fs);
    const double expected = m * m * 0.81 * 2.0 * c.h_sigma * c.h_sigma;
    EXPECT_NEAR(power / static_cast<double>(s.size()), expected, 0.1 * expected);
}

TEST(MeasureEmpty, AlgebraRecoversTheTransferDraw)
{
    const Complex s_fs(0.1, -0.05);
    const auto antenna = AntennaModel::with_constant_sfs(band, s_fs, 15.0, 0.9);
    const auto chamber = unit_chamber();
    const double angle = 0.0;
    const StirredRealization field(chamber, band, {&angle, 1}, 1234);
    const auto s = measure_empty(antenna, chamber, band, StirrerState(angle), 1234);
    for (std::size_t k = 0; k < s.size(); ++k)
    {
        const Complex h = (s[k] - s_fs) / ((1.0 - std::norm(s_fs)) * 0.9);
        EXPECT_NEAR(std::abs(h - field.empty_transfer(0)[k]), 0.0, 1e-14 * (1.0 + std::abs(h)));
    }
}

TEST(MeasureWithTarget, NoiseFreeMatchedAntennaGivesCouplingTimesAmplitude)
{
    const auto antenna = AntennaModel::with_constant_sfs(band, 0.0, 15.0, 0.9);
    ChamberModel c;
    c.h_sigma = 0.0;
    const PlateTarget plate(0.1, 0.1);
    const auto s = measure_with_target(antenna, c, band, StirrerState(0.0), 1.3, plate, MeasurementGeometry(2.95),
                                       0.7, 1);
    for (std::size_t k = 0; k < s.size(); ++k)
        EXPECT_EQ(s[k], coupling(15.0, 0.0, band.at(k), 2.95, 0.7) * std::sqrt(1.3));
}

TEST(MeasureWithTarget, ZeroRcsLooksLikeAnEmptyChamber)
{
    const Complex s_fs(0.1, -0.05);
    const auto antenna = AntennaModel::with_constant_sfs(big_grid, s_fs, 15.0, 0.9);
    ChamberModel c;
    c.h_sigma = 1e-3;
    const PlateTarget plate(0.1, 0.1);
    const auto loaded = measure_with_target(antenna, c, big_grid, StirrerState(0.0), 0.0, plate,
                                            MeasurementGeometry(2.95), 0.7, 5);
    const auto empty = measure_empty(antenna, c, big_grid, StirrerState(0.0), 6);
    double pl = 0.0, pe = 0.0;
    Complex ml{}, me{};
    for (std::size_t k = 0; k < big_grid.size(); ++k)
    {
        pl += std::norm(loaded[k] - s_fs);
        pe += std::norm(empty[k] - s_fs);
        ml += loaded[k] - s_fs;
        me += empty[k] - s_fs;
    }
    EXPECT_NEAR(pl / pe, 1.0, 0.06);
    const double n = static_cast<double>(big_grid.size());
    const double sd = std::sqrt(pe / n);
    EXPECT_LT(std::abs(ml / n), 4.0 * sd / std::sqrt(n));
    EXPECT_LT(std::abs(me / n), 4.0 * sd / std::sqrt(n));
}

TEST(MeasureWithTarget, RejectsNearFieldGeometry)
{
    const auto antenna = AntennaModel::with_constant_sfs(band, 0.0, 15.0, 0.9);
    EXPECT_THROW(measure_with_target(antenna, unit_chamber(), band, StirrerState(0.0), 1.0, PlateTarget(0.2, 0.2),
                                     MeasurementGeometry(2.95), 0.0, 1),
                 std::invalid_argument);
}

TEST(MeasureWithTarget, RejectsNegativeRcs)
{
    const auto antenna = AntennaModel::with_constant_sfs(band, 0.0, 15.0, 0.9);
    EXPECT_THROW(measure_with_target(antenna, unit_chamber(), band, StirrerState(0.0), -1.0, PlateTarget(0.1, 0.1),
                                     MeasurementGeometry(2.95), 0.0, 1),
                 std::invalid_argument);
}

TEST(MeasureWithTarget, NoiseFreeDifferenceOscillatesAtSpeedOfLightOverTwoR)
{
    const auto antenna = AntennaModel::with_constant_sfs(big_grid, {0.1, -0.05}, 15.0, 0.9);
    ChamberModel c;
    c.h_sigma = 0.0;
    const auto loaded = measure_with_target(antenna, c, big_grid, StirrerState(0.0), 1.0, PlateTarget(0.1, 0.1),
                                            MeasurementGeometry(2.95), 0.7, 1);
    std::vector<double> crossings;
    for (std::size_t k = 1; k < big_grid.size(); ++k)
    {
        const double a = (loaded[k - 1] - antenna.s_fs[k - 1]).real();
        const double b = (loaded[k] - antenna.s_fs[k]).real();
        if ((a < 0.0) != (b < 0.0))
            crossings.push_back(big_grid.at(k - 1) + big_grid.step() * a / (a - b));
    }
    ASSERT_GE(crossings.size(), 18u);
    const double period = 2.0 * (crossings.back() - crossings.front()) / static_cast<double>(crossings.size() - 1);
    EXPECT_NEAR(period, speed_of_light / (2.0 * 2.95), 0.05e6);
}

TEST(AntennaModel, Validation)
{
    EXPECT_THROW(AntennaModel::with_constant_sfs(band, {1.0, 0.0}, 15.0, 0.9), std::invalid_argument);
    EXPECT_THROW(AntennaModel::with_constant_sfs(band, 0.0, 15.0, 0.0), std::invalid_argument);
    EXPECT_THROW(AntennaModel::with_constant_sfs(band, 0.0, 15.0, 1.1), std::invalid_argument);
    const auto a = AntennaModel::with_constant_sfs(band, {0.6, 0.0}, 10.0, 1.0);
    EXPECT_NEAR(a.gain_linear(), 10.0, 1e-14);
    EXPECT_NEAR(a.mismatch_factor(3), 0.64, 1e-15);
}

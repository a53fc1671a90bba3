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

#include <span>

#include "rcrcs/antenna.hpp"
#include "rcrcs/spectra.hpp"
#include "rcrcs/target.hpp"

namespace rcrcs
{

/// S^T(f, theta_st^T) - S(f, theta_st): ballistic target echo plus diffuse-field noise.
class DifferenceSpectrum
{
  public:
    explicit DifferenceSpectrum(ComplexSpectrum spectrum) : spectrum_(std::move(spectrum)) {}
    const ComplexSpectrum &spectrum() const { return spectrum_; }

  private:
    ComplexSpectrum spectrum_;
};

struct ExtractionResult
{
    double sigma_hat = 0.0;    // m^2
    double phi0_hat = 0.0;     // rad
    double r_hat = 0.0;        // m
    double snr_db = 0.0;       // matched-filter peak power over residual noise power
    double residual_rms = 0.0; // rms of y minus the fitted exponential
    bool failed = true;        // sigma_hat is still reported when set
};

struct ExtractionOptions
{
    double r_window_m = 0.05;
    double snr_threshold_db = 16.0;
};

/// Throws DataError on grid mismatch.
DifferenceSpectrum difference(const ComplexSpectrum &loaded, const ComplexSpectrum &empty);

/// Pointwise mean over a stirred ensemble; recovers S_FS since H is zero mean.
ComplexSpectrum estimate_sfs(std::span<const ComplexSpectrum> ensemble);

/**
 * y(f) = diff(f) (4 pi)^{3/2} R^2 / (G lambda(f) (1 - |S_FS(f)|^2)).
 * Without noise y(f) = sqrt(sigma) exp(-j 4 pi f R / c) exp(j phi0).
 */
ComplexSpectrum normalize_difference(const DifferenceSpectrum &diff, const AntennaModel &antenna, double distance_m);

/**
 * Matched-filter regression of a single complex exponential with unknown round-trip distance.
 *
 * alpha(r) = (1/N) sum_f y(f) exp(+j 4 pi (f - f_c) r / c) is scanned on
 * [r_nominal - r_window, r_nominal + r_window] with step c / (8 B), then refined around the best
 * coarse point by golden-section search and a final bisection on d|alpha|^2/dr. sigma_hat = |alpha|^2 and phi0_hat = arg(alpha) + 4 pi f_c r_hat / c.
 *
 * snr_db = 10 log10(N |alpha|^2 / (2 v)) with v the per-quadrature residual variance; the fit is
 * flagged failed when snr_db < snr_threshold_db.
 */
ExtractionResult matched_fit(const ComplexSpectrum &y, double r_nominal, double r_window, double snr_threshold_db);

/// matched projection alpha(r) on y's grid, referenced to the band center.
Complex matched_projection(const ComplexSpectrum &y, double r);

/// difference -> normalize_difference -> matched_fit at the geometry's distance.
ExtractionResult extract_rcs(const ComplexSpectrum &loaded, const ComplexSpectrum &empty, const AntennaModel &antenna,
                             const MeasurementGeometry &geometry, const ExtractionOptions &options);

} // namespace rcrcs

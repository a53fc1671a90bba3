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

#include <cstdint>
#include <span>
#include <vector>

#include "rcrcs/antenna.hpp"
#include "rcrcs/spectra.hpp"
#include "rcrcs/target.hpp"

namespace rcrcs
{

/**
 * Diffuse-field statistics of the reverberation chamber.
 *
 * H(f, theta_st) is circular complex Gaussian with per-quadrature standard deviation h_sigma.
 * Across stirrer angles the correlation follows a squared exponential in the wrapped angular
 * distance with decorrelation angle theta_c_deg. Inserting the target perturbs the field:
 * H^T and H at the same stirrer angle correlate at rho_target.
 *
 * h_sigma == 0 is accepted and describes a noise-free chamber.
 */
struct ChamberModel
{
    double h_sigma = 0.0;
    double theta_c_deg = 15.0;
    double rho_target = 0.99;
    bool freq_correlated = false;
    double coherence_bw_hz = 1.0e6;

    void validate() const;
};

/// Stirrer angle normalized to [0, 360).
class StirrerState
{
  public:
    explicit StirrerState(double angle_deg);
    double angle_deg() const { return angle_deg_; }

  private:
    double angle_deg_;
};

/// rho(d) = exp(-d^2 / (2 theta_c^2)) on the wrapped distance d = min(|dt| mod 360, 360 - |dt| mod 360).
double angular_correlation(const ChamberModel &chamber, double delta_theta_deg);

/**
 * Draws H(f, theta_i) for every requested stirrer angle.
 *
 * Each frequency sample is an independent realization (or AR(1)-smoothed along frequency when
 * freq_correlated) of a zero-mean circular Gaussian vector whose cross-angle correlation matrix is
 * rho(theta_i - theta_j). Repeated angles produce identical spectra. Throws std::invalid_argument
 * when the correlation matrix has an eigenvalue below -1e-9.
 */
std::vector<ComplexSpectrum> synth_transfer(const ChamberModel &chamber, const FrequencyGrid &grid,
                                            std::span<const double> angles_deg, std::uint64_t seed);

/**
 * Joint draw of the empty-chamber field H and the loaded field H^T over a set of stirrer angles,
 * all from one experiment seed:
 *
 *   H   = synth_transfer(angles, derive_seed(seed, {0}))
 *   H^T = rho_target H + sqrt(1 - rho_target^2) W,   W = synth_transfer(angles, derive_seed(seed, {1}))
 *
 * so corr(H^T(a), H(b)) = rho_target * rho(a - b).
 */
class StirredRealization
{
  public:
    StirredRealization(const ChamberModel &chamber, const FrequencyGrid &grid, std::span<const double> angles_deg,
                       std::uint64_t seed);

    std::size_t size() const { return empty_.size(); }
    const ComplexSpectrum &empty_transfer(std::size_t i) const { return empty_.at(i); }
    const ComplexSpectrum &loaded_transfer(std::size_t i) const { return loaded_.at(i); }

  private:
    std::vector<ComplexSpectrum> empty_;
    std::vector<ComplexSpectrum> loaded_;
};

/// S = S_FS + (1 - |S_FS|^2) H eta
ComplexSpectrum reflection_empty(const AntennaModel &antenna, const ComplexSpectrum &transfer);

/// S^T = S_FS + C(f) sqrt(sigma) + (1 - |S_FS|^2) H^T eta
ComplexSpectrum reflection_loaded(const AntennaModel &antenna, const ComplexSpectrum &transfer, double sigma_true,
                                  double distance_m, double phi0);

ComplexSpectrum measure_empty(const AntennaModel &antenna, const ChamberModel &chamber, const FrequencyGrid &grid,
                              const StirrerState &stirrer, std::uint64_t seed);

/// Throws std::invalid_argument when the geometry violates the far-field condition.
ComplexSpectrum measure_with_target(const AntennaModel &antenna, const ChamberModel &chamber,
                                    const FrequencyGrid &grid, const StirrerState &stirrer, double sigma_true,
                                    const PlateTarget &target, const MeasurementGeometry &geometry, double phi0,
                                    std::uint64_t seed);

} // namespace rcrcs

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


#include "rcrcs/chamber.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

#include "rcrcs/ballistic.hpp"
#include "rcrcs/seed.hpp"

namespace rcrcs
{

namespace
{

constexpr double psd_tolerance = 1e-9;

double normalize_angle(double deg)
{
    double a = std::fmod(deg, 360.0);
    if (a < 0.0)
        a += 360.0;
    if (a >= 360.0)
        a = 0.0;
    return a;
}

// Factor F with F F^T = rho, from the clipped eigen-decomposition.
Eigen::MatrixXd correlation_factor(const ChamberModel &chamber, const std::vector<double> &angles)
{
    const auto n = static_cast<Eigen::Index>(angles.size());
    if (n == 1)
        return Eigen::MatrixXd::Ones(1, 1);

    Eigen::MatrixXd rho(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            rho(i, j) = angular_correlation(chamber, angles[i] - angles[j]);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(rho);
    if (eig.info() != Eigen::Success)
        throw std::invalid_argument("stirrer correlation matrix: eigen-decomposition failed");
    const Eigen::VectorXd &lambda = eig.eigenvalues();
    if (lambda.minCoeff() < -psd_tolerance)
        throw std::invalid_argument("stirrer correlation matrix is not positive semi-definite (min eigenvalue " +
                                    std::to_string(lambda.minCoeff()) + "); check angle set and theta_c");
    const Eigen::VectorXd root = lambda.cwiseMax(0.0).cwiseSqrt();
    return eig.eigenvectors() * root.asDiagonal();
}

// Unit-variance circular Gaussian stream along frequency (per-quadrature variance 1).
std::vector<Complex> white_stream(const ChamberModel &chamber, const FrequencyGrid &grid, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<Complex> z(grid.size());
    for (auto &v : z)
    {
        const double re = normal(rng);
        const double im = normal(rng);
        v = {re, im};
    }
    if (chamber.freq_correlated && z.size() > 1)
    {
        const double a = std::exp(-grid.step() / chamber.coherence_bw_hz);
        const double b = std::sqrt(1.0 - a * a);
        for (std::size_t k = 1; k < z.size(); ++k)
            z[k] = a * z[k - 1] + b * z[k];
    }
    return z;
}

} // namespace

void ChamberModel::validate() const
{
    if (!(h_sigma >= 0.0) || !std::isfinite(h_sigma))
        throw std::invalid_argument("chamber h_sigma must be finite and >= 0");
    if (!(theta_c_deg > 0.0) || !std::isfinite(theta_c_deg))
        throw std::invalid_argument("chamber theta_c_deg must be > 0");
    if (!(rho_target >= 0.0 && rho_target <= 1.0))
        throw std::invalid_argument("chamber rho_target must lie in [0, 1]");
    if (!(coherence_bw_hz > 0.0) || !std::isfinite(coherence_bw_hz))
        throw std::invalid_argument("chamber coherence_bw_hz must be > 0");
}

StirrerState::StirrerState(double angle_deg)
{
    if (!std::isfinite(angle_deg))
        throw std::invalid_argument("stirrer angle must be finite");
    angle_deg_ = normalize_angle(angle_deg);
}

double angular_correlation(const ChamberModel &chamber, double delta_theta_deg)
{
    const double m = std::fmod(std::abs(delta_theta_deg), 360.0);
    const double d = std::min(m, 360.0 - m);
    const double tc = chamber.theta_c_deg;
    return std::exp(-(d * d) / (2.0 * tc * tc));
}

std::vector<ComplexSpectrum> synth_transfer(const ChamberModel &chamber, const FrequencyGrid &grid,
                                            std::span<const double> angles_deg, std::uint64_t seed)
{
    chamber.validate();
    if (angles_deg.empty())
        throw std::invalid_argument("synth_transfer needs at least one stirrer angle");

    // Unique stirrer positions in first-seen order; repeated angles share a row.
    std::vector<double> unique;
    std::vector<std::size_t> slot(angles_deg.size());
    for (std::size_t i = 0; i < angles_deg.size(); ++i)
    {
        if (!std::isfinite(angles_deg[i]))
            throw std::invalid_argument("stirrer angles must be finite");
        const double a = normalize_angle(angles_deg[i]);
        auto it = std::find(unique.begin(), unique.end(), a);
        slot[i] = static_cast<std::size_t>(it - unique.begin());
        if (it == unique.end())
            unique.push_back(a);
    }

    const Eigen::MatrixXd factor = correlation_factor(chamber, unique);
    const std::size_t n = unique.size();
    const std::size_t nf = grid.size();

    std::vector<std::vector<Complex>> white;
    white.reserve(n);
    for (std::size_t j = 0; j < n; ++j)
        white.push_back(white_stream(chamber, grid, derive_seed(seed, {j})));

    std::vector<std::vector<Complex>> mixed(n, std::vector<Complex>(nf));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
        {
            const double w = chamber.h_sigma * factor(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
            if (w == 0.0)
                continue;
            for (std::size_t k = 0; k < nf; ++k)
                mixed[i][k] += w * white[j][k];
        }

    std::vector<ComplexSpectrum> out;
    out.reserve(angles_deg.size());
    for (std::size_t i = 0; i < angles_deg.size(); ++i)
        out.emplace_back(grid, mixed[slot[i]]);
    return out;
}

StirredRealization::StirredRealization(const ChamberModel &chamber, const FrequencyGrid &grid,
                                       std::span<const double> angles_deg, std::uint64_t seed)
    : empty_(synth_transfer(chamber, grid, angles_deg, derive_seed(seed, {0})))
{
    const double rt = chamber.rho_target;
    const double perturb = std::sqrt(std::max(0.0, 1.0 - rt * rt));
    if (perturb == 0.0)
    {
        loaded_ = empty_;
        return;
    }
    const auto w = synth_transfer(chamber, grid, angles_deg, derive_seed(seed, {1}));
    loaded_.reserve(empty_.size());
    for (std::size_t i = 0; i < empty_.size(); ++i)
    {
        std::vector<Complex> v(grid.size());
        for (std::size_t k = 0; k < v.size(); ++k)
            v[k] = rt * empty_[i][k] + perturb * w[i][k];
        loaded_.emplace_back(grid, std::move(v));
    }
}

namespace
{
void require_same_grid(const AntennaModel &antenna, const FrequencyGrid &grid)
{
    if (!(antenna.s_fs.grid() == grid))
        throw std::invalid_argument("antenna S_FS grid differs from the measurement grid");
}
} // namespace

ComplexSpectrum reflection_empty(const AntennaModel &antenna, const ComplexSpectrum &transfer)
{
    require_same_grid(antenna, transfer.grid());
    std::vector<Complex> s(transfer.size());
    for (std::size_t k = 0; k < s.size(); ++k)
        s[k] = antenna.s_fs[k] + antenna.mismatch_factor(k) * transfer[k] * antenna.efficiency;
    return ComplexSpectrum(transfer.grid(), std::move(s));
}

ComplexSpectrum reflection_loaded(const AntennaModel &antenna, const ComplexSpectrum &transfer, double sigma_true,
                                  double distance_m, double phi0)
{
    require_same_grid(antenna, transfer.grid());
    if (!(sigma_true >= 0.0))
        throw std::invalid_argument("target RCS must be >= 0");
    const double amplitude = std::sqrt(sigma_true);
    const auto &grid = transfer.grid();
    std::vector<Complex> s(transfer.size());
    for (std::size_t k = 0; k < s.size(); ++k)
    {
        const Complex c = coupling(antenna.gain_dbi, antenna.s_fs[k], grid.at(k), distance_m, phi0);
        s[k] = antenna.s_fs[k] + c * amplitude + antenna.mismatch_factor(k) * transfer[k] * antenna.efficiency;
    }
    return ComplexSpectrum(grid, std::move(s));
}

ComplexSpectrum measure_empty(const AntennaModel &antenna, const ChamberModel &chamber, const FrequencyGrid &grid,
                              const StirrerState &stirrer, std::uint64_t seed)
{
    const double angle = stirrer.angle_deg();
    StirredRealization field(chamber, grid, std::span<const double>(&angle, 1), seed);
    return reflection_empty(antenna, field.empty_transfer(0));
}

ComplexSpectrum measure_with_target(const AntennaModel &antenna, const ChamberModel &chamber,
                                    const FrequencyGrid &grid, const StirrerState &stirrer, double sigma_true,
                                    const PlateTarget &target, const MeasurementGeometry &geometry, double phi0,
                                    std::uint64_t seed)
{
    if (!check_far_field(geometry, target, grid))
        throw std::invalid_argument("geometry violates the far-field condition R > 2 D^2 / lambda_min");
    const double angle = stirrer.angle_deg();
    StirredRealization field(chamber, grid, std::span<const double>(&angle, 1), seed);
    return reflection_loaded(antenna, field.loaded_transfer(0), sigma_true, geometry.distance_m, phi0);
}

} // namespace rcrcs

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


#include "rcrcs/extract.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "rcrcs/ballistic.hpp"
#include "rcrcs/errors.hpp"

namespace rcrcs
{

namespace
{

const double friis_denominator = std::pow(4.0 * pi, 1.5);

// Phasors exp(+j 4 pi (f_k - f_c) r / c). Built by recurrence, re-anchored every 64 samples.
class CenteredPhasors
{
  public:
    CenteredPhasors(const FrequencyGrid &grid, double r) : grid_(grid), r_(r)
    {
        step_ = exact(grid_.step());
    }

    template <typename Fn> void for_each(Fn &&fn) const
    {
        Complex p{};
        for (std::size_t k = 0; k < grid_.size(); ++k)
        {
            if (k % 64 == 0)
                p = exact(grid_.at(k) - grid_.center());
            else
                p *= step_;
            fn(k, p);
        }
    }

  private:
    Complex exact(double df) const
    {
        const double turns = 2.0 * df * r_ / speed_of_light;
        return std::polar(1.0, 2.0 * pi * (turns - std::round(turns)));
    }

    const FrequencyGrid &grid_;
    double r_;
    Complex step_;
};

double projection_power(const ComplexSpectrum &y, double r)
{
    return std::norm(matched_projection(y, r));
}

// Golden-section maximization of |alpha(r)|^2 on [a, b].
double refine_distance(const ComplexSpectrum &y, double a, double b)
{
    constexpr double inv_phi = 0.6180339887498949;
    constexpr double tolerance = 1e-7;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double pc = projection_power(y, c);
    double pd = projection_power(y, d);
    for (int it = 0; it < 200 && (b - a) > tolerance; ++it)
    {
        if (pc >= pd)
        {
            b = d;
            d = c;
            pd = pc;
            c = b - inv_phi * (b - a);
            pc = projection_power(y, c);
        }
        else
        {
            a = c;
            c = d;
            pc = pd;
            d = a + inv_phi * (b - a);
            pd = projection_power(y, d);
        }
    }
    return pc >= pd ? c : d;
}

// d|alpha|^2/dr = 2 Re(conj(alpha) dalpha/dr), dalpha/dr = (1/N) sum y j 4 pi (f - f_c)/c p.
double projection_slope(const ComplexSpectrum &y, double r)
{
    const auto &grid = y.grid();
    Complex alpha{}, dalpha{};
    CenteredPhasors(grid, r).for_each([&](std::size_t k, Complex p) {
        const Complex term = y[k] * p;
        alpha += term;
        dalpha += term * Complex(0.0, 4.0 * pi * (grid.at(k) - grid.center()) / speed_of_light);
    });
    return 2.0 * std::real(std::conj(alpha) * dalpha);
}

// The power is flat to rounding near its peak; the slope still changes sign cleanly there.
double polish_distance(const ComplexSpectrum &y, double r, double lo, double hi)
{
    double a = std::max(lo, r - 1e-6);
    double b = std::min(hi, r + 1e-6);
    if (!(projection_slope(y, a) > 0.0 && projection_slope(y, b) < 0.0))
        return r;
    for (int it = 0; it < 100 && (b - a) > 1e-14; ++it)
    {
        const double m = 0.5 * (a + b);
        (projection_slope(y, m) > 0.0 ? a : b) = m;
    }
    return 0.5 * (a + b);
}

} // namespace

DifferenceSpectrum difference(const ComplexSpectrum &loaded, const ComplexSpectrum &empty)
{
    if (!(loaded.grid() == empty.grid()))
        throw DataError("difference: loaded and empty spectra are on different frequency grids");
    std::vector<Complex> d(loaded.size());
    for (std::size_t k = 0; k < d.size(); ++k)
        d[k] = loaded[k] - empty[k];
    return DifferenceSpectrum(ComplexSpectrum(loaded.grid(), std::move(d)));
}

ComplexSpectrum estimate_sfs(std::span<const ComplexSpectrum> ensemble)
{
    if (ensemble.empty())
        throw DataError("estimate_sfs: empty ensemble");
    const auto &grid = ensemble.front().grid();
    std::vector<Complex> sum(grid.size());
    for (const auto &s : ensemble)
    {
        if (!(s.grid() == grid))
            throw DataError("estimate_sfs: ensemble members are on different frequency grids");
        for (std::size_t k = 0; k < sum.size(); ++k)
            sum[k] += s[k];
    }
    const double inv_n = 1.0 / static_cast<double>(ensemble.size());
    for (auto &v : sum)
        v *= inv_n;
    return ComplexSpectrum(grid, std::move(sum));
}

ComplexSpectrum normalize_difference(const DifferenceSpectrum &diff, const AntennaModel &antenna, double distance_m)
{
    if (!(distance_m > 0.0))
        throw std::invalid_argument("normalize_difference: distance must be positive");
    const auto &d = diff.spectrum();
    if (!(antenna.s_fs.grid() == d.grid()))
        throw DataError("normalize_difference: antenna S_FS grid differs from the difference grid");

    const double gain = antenna.gain_linear();
    const double scale = friis_denominator * distance_m * distance_m / gain;
    std::vector<Complex> y(d.size());
    for (std::size_t k = 0; k < y.size(); ++k)
    {
        const double mismatch = antenna.mismatch_factor(k);
        if (!(mismatch > 0.0))
            throw DataError("normalize_difference: |S_FS| >= 1 at sample " + std::to_string(k));
        y[k] = d[k] * (scale / (wavelength(d.grid().at(k)) * mismatch));
    }
    return ComplexSpectrum(d.grid(), std::move(y));
}

Complex matched_projection(const ComplexSpectrum &y, double r)
{
    Complex acc{};
    CenteredPhasors(y.grid(), r).for_each([&](std::size_t k, Complex p) { acc += y[k] * p; });
    return acc / static_cast<double>(y.size());
}

ExtractionResult matched_fit(const ComplexSpectrum &y, double r_nominal, double r_window, double snr_threshold_db)
{
    if (!(r_window >= 0.0))
        throw std::invalid_argument("matched_fit: r_window must be >= 0");
    if (!(r_nominal > 0.0))
        throw std::invalid_argument("matched_fit: r_nominal must be positive");
    const auto &grid = y.grid();
    if (grid.size() < 2)
        throw std::invalid_argument("matched_fit: need at least 2 frequency samples");

    double r_hat = r_nominal;
    if (r_window > 0.0)
    {
        const double lo = r_nominal - r_window;
        const double hi = r_nominal + r_window;
        const double step = speed_of_light / (8.0 * grid.bandwidth());

        std::vector<double> candidates{r_nominal};
        for (double k = 1.0; k * step < r_window; k += 1.0)
        {
            candidates.push_back(r_nominal - k * step);
            candidates.push_back(r_nominal + k * step);
        }
        candidates.push_back(lo);
        candidates.push_back(hi);

        double best_power = -1.0;
        for (double r : candidates)
        {
            const double p = projection_power(y, r);
            if (p > best_power)
            {
                best_power = p;
                r_hat = r;
            }
        }
        const double a = std::max(lo, r_hat - step);
        const double b = std::min(hi, r_hat + step);
        const double refined = polish_distance(y, refine_distance(y, a, b), a, b);
        if (projection_power(y, refined) >= best_power)
            r_hat = refined;
    }

    const Complex alpha = matched_projection(y, r_hat);
    double residual_power = 0.0;
    CenteredPhasors(grid, r_hat).for_each(
        [&](std::size_t k, Complex p) { residual_power += std::norm(y[k] - alpha * std::conj(p)); });
    residual_power /= static_cast<double>(y.size());

    ExtractionResult result;
    result.sigma_hat = std::norm(alpha);
    result.r_hat = r_hat;
    result.phi0_hat = wrap_phase(std::arg(alpha) - round_trip_phase(grid.center(), r_hat));
    result.residual_rms = std::sqrt(residual_power);

    const double n = static_cast<double>(y.size());
    if (result.sigma_hat == 0.0)
        result.snr_db = -std::numeric_limits<double>::infinity();
    else if (residual_power == 0.0)
        result.snr_db = std::numeric_limits<double>::infinity();
    else
        result.snr_db = 10.0 * std::log10(n * result.sigma_hat / residual_power);
    result.failed = !(result.snr_db >= snr_threshold_db);
    return result;
}

ExtractionResult extract_rcs(const ComplexSpectrum &loaded, const ComplexSpectrum &empty, const AntennaModel &antenna,
                             const MeasurementGeometry &geometry, const ExtractionOptions &options)
{
    const auto diff = difference(loaded, empty);
    const auto y = normalize_difference(diff, antenna, geometry.distance_m);
    return matched_fit(y, geometry.distance_m, options.r_window_m, options.snr_threshold_db);
}

} // namespace rcrcs

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


#include "rcrcs/antenna.hpp"

#include <cmath>
#include <stdexcept>

namespace rcrcs
{

AntennaModel::AntennaModel(ComplexSpectrum free_space_reflection, double gain, double eta)
    : s_fs(std::move(free_space_reflection)), gain_dbi(gain), efficiency(eta)
{
    if (!std::isfinite(gain))
        throw std::invalid_argument("antenna gain must be finite");
    if (!(eta > 0.0 && eta <= 1.0))
        throw std::invalid_argument("antenna efficiency must lie in (0, 1]");
    for (const auto &v : s_fs.values())
        if (!(std::abs(v) < 1.0))
            throw std::invalid_argument("free-space reflection coefficient must satisfy |S_FS| < 1");
}

AntennaModel AntennaModel::with_constant_sfs(const FrequencyGrid &grid, Complex s_fs, double gain_dbi,
                                             double efficiency)
{
    return AntennaModel(ComplexSpectrum::constant(grid, s_fs), gain_dbi, efficiency);
}

double AntennaModel::gain_linear() const
{
    return std::pow(10.0, gain_dbi / 10.0);
}

double AntennaModel::mismatch_factor(std::size_t k) const
{
    return 1.0 - std::norm(s_fs[k]);
}

} // namespace rcrcs

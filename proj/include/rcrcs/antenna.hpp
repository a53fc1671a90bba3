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

/// Measuring antenna: free-space reflection coefficient, realized gain (flat over the band) and radiation efficiency.
struct AntennaModel
{
    ComplexSpectrum s_fs;
    double gain_dbi;
    double efficiency;

    AntennaModel(ComplexSpectrum free_space_reflection, double gain, double eta);

    static AntennaModel with_constant_sfs(const FrequencyGrid &grid, Complex s_fs, double gain_dbi, double efficiency);

    double gain_linear() const;

    /// 1 - |S_FS(f_k)|^2
    double mismatch_factor(std::size_t k) const;
};

} // namespace rcrcs

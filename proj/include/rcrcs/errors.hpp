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

#include <stdexcept>
#include <string>

namespace rcrcs
{

// Configuration document violates the schema or a model invariant.
class ConfigError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

// Measurement data is malformed or inconsistent (file formats, grid mismatches).
class DataError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

} // namespace rcrcs

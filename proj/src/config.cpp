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


#include "rcrcs/config.hpp"

#include <cmath>
#include <functional>
#include <set>

#include <json.hpp>

#include "rcrcs/ballistic.hpp"
#include "rcrcs/errors.hpp"
#include "rcrcs/io.hpp"

namespace rcrcs
{

using nlohmann::json;

namespace
{

[[noreturn]] void fail(const std::string &key, const std::string &what)
{
    throw ConfigError("config '" + key + "': " + what);
}

void reject_unknown(const json &obj, const std::string &prefix, std::initializer_list<const char *> allowed)
{
    if (!obj.is_object())
        fail(prefix.empty() ? "<root>" : prefix, "expected an object");
    const std::set<std::string> keys(allowed.begin(), allowed.end());
    for (const auto &[k, v] : obj.items())
        if (!keys.contains(k))
            fail(prefix.empty() ? k : prefix + "." + k, "unknown key");
}

double get_number(const json &obj, const char *key, const std::string &path, double fallback)
{
    if (!obj.contains(key))
        return fallback;
    const auto &v = obj.at(key);
    if (!v.is_number())
        fail(path, "expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d))
        fail(path, "must be finite");
    return d;
}

std::uint64_t get_unsigned(const json &obj, const char *key, const std::string &path, std::uint64_t fallback)
{
    if (!obj.contains(key))
        return fallback;
    const auto &v = obj.at(key);
    if (!v.is_number_unsigned())
        fail(path, "expected a non-negative integer");
    return v.get<std::uint64_t>();
}

bool get_bool(const json &obj, const char *key, const std::string &path, bool fallback)
{
    if (!obj.contains(key))
        return fallback;
    const auto &v = obj.at(key);
    if (!v.is_boolean())
        fail(path, "expected true or false");
    return v.get<bool>();
}

const json &section(const json &root, const char *key)
{
    static const json empty = json::object();
    return root.contains(key) ? root.at(key) : empty;
}

} // namespace

double default_h_sigma(const ExperimentConfig &config)
{
    const double fc = 0.5 * (config.grid.f_start + config.grid.f_stop);
    const PlateTarget plate(config.target.width_m, config.target.height_m);
    // |C| / (1 - |S_FS|^2) at band center
    const double c_unit = coupling_magnitude(config.antenna.gain_dbi, Complex{}, fc, config.geometry.distance_m);
    const double ballistic = c_unit * std::sqrt(plate_rcs_peak(plate, fc));
    return 0.5 * ballistic / (std::sqrt(2.0) * config.antenna.efficiency);
}

ExperimentConfig ExperimentConfig::defaults()
{
    ExperimentConfig c;
    c.chamber.h_sigma = default_h_sigma(c);
    return c;
}

FrequencyGrid ExperimentConfig::frequency_grid() const
{
    return make_grid(grid.f_start, grid.f_stop, grid.n_points);
}

PlateTarget ExperimentConfig::plate() const
{
    return PlateTarget(target.width_m, target.height_m);
}

std::vector<double> ExperimentConfig::aspect_angles_deg() const
{
    const double span = sweep.angle_stop_deg - sweep.angle_start_deg;
    const auto n = static_cast<std::size_t>(std::llround(span / sweep.angle_step_deg)) + 1;
    std::vector<double> angles(n);
    for (std::size_t k = 0; k < n; ++k)
        angles[k] = sweep.angle_start_deg + static_cast<double>(k) * sweep.angle_step_deg;
    return angles;
}

ExtractionOptions ExperimentConfig::extraction_options() const
{
    return {extraction.r_window_m, extraction.snr_threshold_db};
}

AntennaModel ExperimentConfig::antenna_model() const
{
    const auto g = frequency_grid();
    if (antenna.s_fs_source == Antenna::SfsSource::constant)
        return AntennaModel::with_constant_sfs(g, antenna.s_fs_value, antenna.gain_dbi, antenna.efficiency);

    auto measured = read_touchstone_file(antenna.s_fs_path);
    if (!(measured.grid() == g))
        throw ConfigError("config 'antenna.s_fs.path': file grid differs from the experiment grid");
    try
    {
        return AntennaModel(std::move(measured), antenna.gain_dbi, antenna.efficiency);
    }
    catch (const std::invalid_argument &e)
    {
        throw ConfigError(std::string("config 'antenna.s_fs.path': ") + e.what());
    }
}

void ExperimentConfig::validate() const
{
    auto guard = [](const char *key, const std::function<void()> &check) {
        try
        {
            check();
        }
        catch (const std::invalid_argument &e)
        {
            fail(key, e.what());
        }
    };

    guard("grid", [&] { (void)frequency_grid(); });
    if (!(antenna.efficiency > 0.0 && antenna.efficiency <= 1.0))
        fail("antenna.efficiency", "must lie in (0, 1]");
    if (antenna.s_fs_source == Antenna::SfsSource::constant && !(std::abs(antenna.s_fs_value) < 1.0))
        fail("antenna.s_fs.value", "|S_FS| must be < 1");
    if (antenna.s_fs_source == Antenna::SfsSource::file && antenna.s_fs_path.empty())
        fail("antenna.s_fs.path", "required when source is 'file'");

    if (!(chamber.h_sigma >= 0.0))
        fail("chamber.h_sigma", "must be >= 0");
    if (!(chamber.theta_c_deg > 0.0))
        fail("chamber.theta_c_deg", "must be > 0");
    if (!(chamber.rho_target >= 0.0 && chamber.rho_target <= 1.0))
        fail("chamber.rho_target", "must lie in [0, 1]");
    if (!(chamber.coherence_bw_hz > 0.0))
        fail("chamber.coherence_bw_hz", "must be > 0");

    if (!(target.width_m > 0.0))
        fail("target.width_m", "must be > 0");
    if (!(target.height_m > 0.0))
        fail("target.height_m", "must be > 0");
    if (!(geometry.distance_m > 0.0))
        fail("geometry.distance_m", "must be > 0");
    if (!check_far_field(MeasurementGeometry(geometry.distance_m), plate(), frequency_grid()))
        fail("geometry.distance_m", "violates the far-field condition R > 2 D^2 / lambda_min");

    if (!(sweep.angle_step_deg > 0.0))
        fail("sweep.angle_step_deg", "must be > 0");
    if (!(sweep.angle_stop_deg >= sweep.angle_start_deg))
        fail("sweep.angle_stop_deg", "must be >= sweep.angle_start_deg");
    const double steps = (sweep.angle_stop_deg - sweep.angle_start_deg) / sweep.angle_step_deg;
    if (std::abs(steps - std::round(steps)) > 1e-9 * std::max(1.0, steps))
        fail("sweep.angle_step_deg", "must divide the angle range into whole steps");
    if (!(std::abs(sweep.angle_start_deg) < 90.0))
        fail("sweep.angle_start_deg", "aspect angles must satisfy |angle| < 90");
    if (!(std::abs(sweep.angle_stop_deg) < 90.0))
        fail("sweep.angle_stop_deg", "aspect angles must satisfy |angle| < 90");
    if (sweep.shift_list_deg.empty())
        fail("sweep.shift_list_deg", "must not be empty");
    if (sweep.n_seeds == 0)
        fail("sweep.n_seeds", "must be >= 1");

    if (!(extraction.r_window_m >= 0.0))
        fail("extraction.r_window_m", "must be >= 0");
    if (extraction.theory_peak_m2 && !(*extraction.theory_peak_m2 > 0.0))
        fail("extraction.theory_peak_m2", "must be > 0");
}

ExperimentConfig load_config(std::string_view json_text)
{
    json root;
    try
    {
        root = json::parse(json_text);
    }
    catch (const json::parse_error &e)
    {
        throw ConfigError(std::string("config: invalid JSON: ") + e.what());
    }
    reject_unknown(root, "", {"grid", "antenna", "chamber", "target", "geometry", "sweep", "extraction"});

    ExperimentConfig c;

    const auto &g = section(root, "grid");
    reject_unknown(g, "grid", {"f_start", "f_stop", "n_points"});
    c.grid.f_start = get_number(g, "f_start", "grid.f_start", c.grid.f_start);
    c.grid.f_stop = get_number(g, "f_stop", "grid.f_stop", c.grid.f_stop);
    c.grid.n_points = get_unsigned(g, "n_points", "grid.n_points", c.grid.n_points);

    const auto &a = section(root, "antenna");
    reject_unknown(a, "antenna", {"gain_dbi", "efficiency", "s_fs"});
    c.antenna.gain_dbi = get_number(a, "gain_dbi", "antenna.gain_dbi", c.antenna.gain_dbi);
    c.antenna.efficiency = get_number(a, "efficiency", "antenna.efficiency", c.antenna.efficiency);
    if (a.contains("s_fs"))
    {
        c.antenna.s_fs_explicit = true;
        const auto &s = a.at("s_fs");
        reject_unknown(s, "antenna.s_fs", {"source", "value", "path"});
        if (s.contains("source") && !s.at("source").is_string())
            fail("antenna.s_fs.source", "expected 'constant' or 'file'");
        const std::string source = s.value("source", std::string("constant"));
        if (source == "constant")
        {
            c.antenna.s_fs_source = ExperimentConfig::Antenna::SfsSource::constant;
            if (s.contains("value"))
            {
                const auto &v = s.at("value");
                if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
                    fail("antenna.s_fs.value", "expected [re, im]");
                c.antenna.s_fs_value = {v[0].get<double>(), v[1].get<double>()};
            }
        }
        else if (source == "file")
        {
            c.antenna.s_fs_source = ExperimentConfig::Antenna::SfsSource::file;
            if (!s.contains("path") || !s.at("path").is_string())
                fail("antenna.s_fs.path", "expected a file path string");
            c.antenna.s_fs_path = s.at("path").get<std::string>();
        }
        else
            fail("antenna.s_fs.source", "expected 'constant' or 'file'");
    }

    const auto &t = section(root, "target");
    reject_unknown(t, "target", {"width_m", "height_m"});
    c.target.width_m = get_number(t, "width_m", "target.width_m", c.target.width_m);
    c.target.height_m = get_number(t, "height_m", "target.height_m", c.target.height_m);

    const auto &geo = section(root, "geometry");
    reject_unknown(geo, "geometry", {"distance_m", "phi0_rad"});
    c.geometry.distance_m = get_number(geo, "distance_m", "geometry.distance_m", c.geometry.distance_m);
    c.geometry.phi0_rad = get_number(geo, "phi0_rad", "geometry.phi0_rad", c.geometry.phi0_rad);

    const auto &ch = section(root, "chamber");
    reject_unknown(ch, "chamber", {"h_sigma", "theta_c_deg", "rho_target", "freq_correlated", "coherence_bw_hz"});
    c.chamber.theta_c_deg = get_number(ch, "theta_c_deg", "chamber.theta_c_deg", c.chamber.theta_c_deg);
    c.chamber.rho_target = get_number(ch, "rho_target", "chamber.rho_target", c.chamber.rho_target);
    c.chamber.freq_correlated = get_bool(ch, "freq_correlated", "chamber.freq_correlated", c.chamber.freq_correlated);
    c.chamber.coherence_bw_hz =
        get_number(ch, "coherence_bw_hz", "chamber.coherence_bw_hz", c.chamber.coherence_bw_hz);

    const auto &sw = section(root, "sweep");
    reject_unknown(sw, "sweep",
                   {"angle_start_deg", "angle_stop_deg", "angle_step_deg", "shift_list_deg", "n_seeds", "base_seed"});
    c.sweep.angle_start_deg = get_number(sw, "angle_start_deg", "sweep.angle_start_deg", c.sweep.angle_start_deg);
    c.sweep.angle_stop_deg = get_number(sw, "angle_stop_deg", "sweep.angle_stop_deg", c.sweep.angle_stop_deg);
    c.sweep.angle_step_deg = get_number(sw, "angle_step_deg", "sweep.angle_step_deg", c.sweep.angle_step_deg);
    if (sw.contains("shift_list_deg"))
    {
        const auto &list = sw.at("shift_list_deg");
        if (!list.is_array())
            fail("sweep.shift_list_deg", "expected an array of degrees");
        c.sweep.shift_list_deg.clear();
        for (std::size_t i = 0; i < list.size(); ++i)
        {
            if (!list[i].is_number() || !std::isfinite(list[i].get<double>()))
                fail("sweep.shift_list_deg[" + std::to_string(i) + "]", "expected a finite number");
            c.sweep.shift_list_deg.push_back(list[i].get<double>());
        }
    }
    c.sweep.n_seeds = get_unsigned(sw, "n_seeds", "sweep.n_seeds", c.sweep.n_seeds);
    c.sweep.base_seed = get_unsigned(sw, "base_seed", "sweep.base_seed", c.sweep.base_seed);

    const auto &ex = section(root, "extraction");
    reject_unknown(ex, "extraction", {"r_window_m", "snr_threshold_db", "theory_peak_m2"});
    c.extraction.r_window_m = get_number(ex, "r_window_m", "extraction.r_window_m", c.extraction.r_window_m);
    c.extraction.snr_threshold_db =
        get_number(ex, "snr_threshold_db", "extraction.snr_threshold_db", c.extraction.snr_threshold_db);
    if (ex.contains("theory_peak_m2") && !ex.at("theory_peak_m2").is_null())
        c.extraction.theory_peak_m2 = get_number(ex, "theory_peak_m2", "extraction.theory_peak_m2", 0.0);

    // Validate before deriving the default noise level from the other keys.
    c.chamber.h_sigma = 0.0;
    c.validate();
    c.chamber.h_sigma = ch.contains("h_sigma") ? get_number(ch, "h_sigma", "chamber.h_sigma", 0.0) : default_h_sigma(c);
    c.validate();
    return c;
}

std::string dump_config(const ExperimentConfig &c)
{
    json s_fs;
    if (c.antenna.s_fs_source == ExperimentConfig::Antenna::SfsSource::constant)
        s_fs = {{"source", "constant"}, {"value", {c.antenna.s_fs_value.real(), c.antenna.s_fs_value.imag()}}};
    else
        s_fs = {{"source", "file"}, {"path", c.antenna.s_fs_path}};

    json doc = {
        {"grid", {{"f_start", c.grid.f_start}, {"f_stop", c.grid.f_stop}, {"n_points", c.grid.n_points}}},
        {"antenna", {{"gain_dbi", c.antenna.gain_dbi}, {"efficiency", c.antenna.efficiency}, {"s_fs", s_fs}}},
        {"chamber",
         {{"h_sigma", c.chamber.h_sigma},
          {"theta_c_deg", c.chamber.theta_c_deg},
          {"rho_target", c.chamber.rho_target},
          {"freq_correlated", c.chamber.freq_correlated},
          {"coherence_bw_hz", c.chamber.coherence_bw_hz}}},
        {"target", {{"width_m", c.target.width_m}, {"height_m", c.target.height_m}}},
        {"geometry", {{"distance_m", c.geometry.distance_m}, {"phi0_rad", c.geometry.phi0_rad}}},
        {"sweep",
         {{"angle_start_deg", c.sweep.angle_start_deg},
          {"angle_stop_deg", c.sweep.angle_stop_deg},
          {"angle_step_deg", c.sweep.angle_step_deg},
          {"shift_list_deg", c.sweep.shift_list_deg},
          {"n_seeds", c.sweep.n_seeds},
          {"base_seed", c.sweep.base_seed}}},
        {"extraction",
         {{"r_window_m", c.extraction.r_window_m},
          {"snr_threshold_db", c.extraction.snr_threshold_db},
          {"theory_peak_m2", c.extraction.theory_peak_m2 ? json(*c.extraction.theory_peak_m2) : json(nullptr)}}},
    };
    return doc.dump(2) + "\n";
}

} // namespace rcrcs

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


#include "rcrcs/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "rcrcs/errors.hpp"

namespace rcrcs
{

namespace
{

std::string upper(std::string_view s)
{
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return out;
}

std::vector<std::string_view> split_ws(std::string_view line)
{
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size())
    {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
            ++j;
        if (j > i)
            tokens.push_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

std::optional<double> parse_double(std::string_view tok)
{
    if (!tok.empty() && tok.front() == '+')
        tok.remove_prefix(1);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || !std::isfinite(v))
        return std::nullopt;
    return v;
}

// exp(j deg), exact on the axes.
Complex unit_phasor_deg(double deg)
{
    double a = std::fmod(deg, 360.0);
    if (a < 0.0)
        a += 360.0;
    if (a == 0.0)
        return {1.0, 0.0};
    if (a == 90.0)
        return {0.0, 1.0};
    if (a == 180.0)
        return {-1.0, 0.0};
    if (a == 270.0)
        return {0.0, -1.0};
    return std::polar(1.0, deg * (pi / 180.0));
}

enum class DataFormat
{
    ri,
    ma,
    db
};

struct OptionLine
{
    double unit_scale = 1e9;
    DataFormat format = DataFormat::ma;
};

OptionLine parse_option_line(std::string_view line, std::size_t line_no)
{
    OptionLine opt;
    const auto tokens = split_ws(line.substr(1));
    for (std::size_t i = 0; i < tokens.size(); ++i)
    {
        const std::string t = upper(tokens[i]);
        if (t == "HZ")
            opt.unit_scale = 1.0;
        else if (t == "KHZ")
            opt.unit_scale = 1e3;
        else if (t == "MHZ")
            opt.unit_scale = 1e6;
        else if (t == "GHZ")
            opt.unit_scale = 1e9;
        else if (t == "RI")
            opt.format = DataFormat::ri;
        else if (t == "MA")
            opt.format = DataFormat::ma;
        else if (t == "DB")
            opt.format = DataFormat::db;
        else if (t == "S")
            continue;
        else if (t == "R")
        {
            // Reference resistance is parsed for validity; reflection data is already normalized.
            if (i + 1 >= tokens.size() || !parse_double(tokens[i + 1]))
                throw DataError("touchstone line " + std::to_string(line_no) + ": option 'R' needs a resistance");
            ++i;
        }
        else
            throw DataError("touchstone line " + std::to_string(line_no) + ": unsupported option '" +
                            std::string(tokens[i]) + "' (one-port S-parameters only)");
    }
    return opt;
}

} // namespace

ComplexSpectrum read_touchstone_1port(std::string_view text)
{
    std::optional<OptionLine> options;
    std::vector<double> freqs;
    std::vector<Complex> values;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size())
    {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;

        if (const auto bang = line.find('!'); bang != std::string_view::npos)
            line = line.substr(0, bang);
        const auto tokens = split_ws(line);
        if (tokens.empty())
            continue;

        if (tokens.front().front() == '#')
        {
            if (options)
                throw DataError("touchstone line " + std::to_string(line_no) + ": duplicate option line");
            const auto first = line.find('#');
            options = parse_option_line(line.substr(first), line_no);
            continue;
        }
        if (!options)
            throw DataError("touchstone line " + std::to_string(line_no) + ": data before the option line");
        if (tokens.size() != 3)
            throw DataError("touchstone line " + std::to_string(line_no) + ": expected 3 columns for a one-port row, got " +
                            std::to_string(tokens.size()));

        std::array<double, 3> v{};
        for (std::size_t i = 0; i < 3; ++i)
        {
            const auto parsed = parse_double(tokens[i]);
            if (!parsed)
                throw DataError("touchstone line " + std::to_string(line_no) + ": malformed number '" +
                                std::string(tokens[i]) + "'");
            v[i] = *parsed;
        }

        const double f = v[0] * options->unit_scale;
        if (!freqs.empty() && !(f > freqs.back()))
            throw DataError("touchstone line " + std::to_string(line_no) + ": frequencies must be strictly increasing");
        freqs.push_back(f);

        switch (options->format)
        {
        case DataFormat::ri:
            values.emplace_back(v[1], v[2]);
            break;
        case DataFormat::ma:
            values.push_back(v[1] * unit_phasor_deg(v[2]));
            break;
        case DataFormat::db:
            values.push_back(std::pow(10.0, v[1] / 20.0) * unit_phasor_deg(v[2]));
            break;
        }
    }

    if (!options)
        throw DataError("touchstone: missing option line");
    if (freqs.empty())
        throw DataError("touchstone: no data rows");

    if (freqs.size() == 1)
        return ComplexSpectrum(FrequencyGrid::spot(freqs.front()), std::move(values));

    FrequencyGrid grid(freqs.front(), freqs.back(), freqs.size());
    const double tolerance = 1e-6 * grid.step();
    for (std::size_t k = 0; k < freqs.size(); ++k)
        if (std::abs(freqs[k] - grid.at(k)) > tolerance)
            throw DataError("touchstone: frequency grid is not uniform near sample " + std::to_string(k));
    return ComplexSpectrum(grid, std::move(values));
}

std::string write_touchstone_1port(const ComplexSpectrum &spectrum)
{
    std::string out = "! one-port reflection coefficient\n# HZ S RI R 50\n";
    char buf[128];
    for (std::size_t k = 0; k < spectrum.size(); ++k)
    {
        const auto &v = spectrum[k];
        std::snprintf(buf, sizeof buf, "%.16e %.16e %.16e\n", spectrum.grid().at(k), v.real(), v.imag());
        out += buf;
    }
    return out;
}

ComplexSpectrum read_touchstone_file(const std::filesystem::path &path)
{
    try
    {
        return read_touchstone_1port(read_text_file(path));
    }
    catch (const DataError &e)
    {
        throw DataError(path.string() + ": " + e.what());
    }
}

void write_touchstone_file(const std::filesystem::path &path, const ComplexSpectrum &spectrum)
{
    write_text_file(path, write_touchstone_1port(spectrum));
}

std::string format_number(double value)
{
    if (std::isinf(value))
        return value > 0 ? "inf" : "-inf";
    if (std::isnan(value))
        return "nan";
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

std::string format_pattern_csv(const RcsPattern &pattern)
{
    std::string out = "angle_deg,sigma_m2,sigma_dbsm,snr_db,failed\n";
    for (const auto &s : pattern.samples)
    {
        const double dbsm = s.sigma_m2 > 0.0 ? 10.0 * std::log10(s.sigma_m2)
                                             : -std::numeric_limits<double>::infinity();
        out += format_number(s.angle_deg) + ',' + format_number(s.sigma_m2) + ',' + format_number(dbsm) + ',' +
               format_number(s.snr_db) + ',' + (s.failed ? "1" : "0") + '\n';
    }
    return out;
}

void write_pattern_csv(const RcsPattern &pattern, const std::filesystem::path &path)
{
    write_text_file(path, format_pattern_csv(pattern));
}

std::string format_shift_summary_csv(const std::vector<ShiftSummaryRow> &rows)
{
    std::string out = "shift_deg,mean_rel_error,n_failed_angles\n";
    for (const auto &r : rows)
        out += format_number(r.shift_deg) + ',' + format_number(r.mean_rel_error) + ',' +
               format_number(r.n_failed_angles) + '\n';
    return out;
}

std::string format_waveform_csv(const ComplexSpectrum &diff)
{
    std::string out = "frequency_hz,re_diff,im_diff\n";
    for (std::size_t k = 0; k < diff.size(); ++k)
        out += format_number(diff.grid().at(k)) + ',' + format_number(diff[k].real()) + ',' +
               format_number(diff[k].imag()) + '\n';
    return out;
}

std::string read_text_file(const std::filesystem::path &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DataError("cannot open '" + path.string() + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path &path, std::string_view text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out)
        throw std::runtime_error("write failed for '" + path.string() + "'");
}

} // namespace rcrcs

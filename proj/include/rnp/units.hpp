// SPDX-License-Identifier: Apache-2.0
//
// rnp — radio network planning toolkit for B5G NTN / RIS-assisted deployments
// Copyright (C) 2026 rnp contributors
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

#ifndef RNP_UNITS_HPP
#define RNP_UNITS_HPP

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rnp {

// CODATA exact value (SI redefinition), J/K.
inline constexpr double k_boltzmann = 1.380649e-23;
// Speed of light in vacuum, m/s (exact).
inline constexpr double k_speed_of_light_m_s = 299792458.0;
// Default receiver reference temperature, K.
inline constexpr double k_reference_temperature_k = 290.0;

enum class Direction { downlink, uplink };

inline const char* to_string(Direction d)
{
    return d == Direction::downlink ? "DL" : "UL";
}

/// Decibel quantity tagged with its reference. All internal link-budget
/// arithmetic runs in dBW; dBm and plain ratios are boundary formats.
enum class PowerRef { dbw, dbm, db_ratio };

struct PowerDb
{
    double value = 0.0;
    PowerRef ref = PowerRef::dbw;

    double as_dbw() const
    {
        switch (ref)
        {
        case PowerRef::dbw:
            return value;
        case PowerRef::dbm:
            return value - 30.0;
        default:
            throw std::domain_error("a dB ratio has no absolute power reference");
        }
    }

    double as_dbm() const { return as_dbw() + 30.0; }
};

/// Inputs of the thermal noise floor N0 = k*T*B shifted by the receiver
/// noise figure.
struct NoiseParams
{
    double bandwidth_hz = 0.0;
    double noise_figure_db = 0.0;
    double temperature_k = k_reference_temperature_k;
};

/// 10^(x/10). Domain error on non-finite input.
inline double db_to_linear(double x_db)
{
    if (!std::isfinite(x_db))
        throw std::domain_error("db_to_linear: input must be finite");
    return std::pow(10.0, x_db / 10.0);
}

/// 10*log10(r), the inverse of db_to_linear. Domain error for r <= 0.
inline double linear_to_db(double ratio)
{
    if (!std::isfinite(ratio) || ratio <= 0.0)
        throw std::domain_error("linear_to_db: ratio must be finite and > 0");
    return 10.0 * std::log10(ratio);
}

inline double dbm_to_dbw(double p_dbm)
{
    if (!std::isfinite(p_dbm))
        throw std::domain_error("dbm_to_dbw: input must be finite");
    return p_dbm - 30.0;
}

inline double dbw_to_dbm(double p_dbw)
{
    if (!std::isfinite(p_dbw))
        throw std::domain_error("dbw_to_dbm: input must be finite");
    return p_dbw + 30.0;
}

/// Thermal noise floor in dBW: 10*log10(k*T*B) + NF.
inline double thermal_noise_dbw(const NoiseParams& n)
{
    if (!std::isfinite(n.bandwidth_hz) || n.bandwidth_hz <= 0.0)
        throw std::domain_error("thermal_noise_dbw: bandwidth must be > 0");
    if (!std::isfinite(n.noise_figure_db) || n.noise_figure_db < 0.0)
        throw std::domain_error("thermal_noise_dbw: noise figure must be >= 0");
    if (!std::isfinite(n.temperature_k) || n.temperature_k <= 0.0)
        throw std::domain_error("thermal_noise_dbw: temperature must be > 0");
    return 10.0 * std::log10(k_boltzmann * n.temperature_k * n.bandwidth_hz) + n.noise_figure_db;
}

/// Power sum of dBW terms carried out in the linear domain.
///
/// The linear terms are accumulated in sorted order so the result is exactly
/// permutation-invariant. "No interferers" is an explicit empty-set state the
/// caller must handle; an empty list is rejected here rather than mapped to a
/// -inf sentinel.
inline double power_sum_dbw(std::span<const double> terms_dbw)
{
    if (terms_dbw.empty())
        throw std::domain_error("power_sum_dbw: empty term list");
    std::vector<double> linear;
    linear.reserve(terms_dbw.size());
    for (double t : terms_dbw)
        linear.push_back(db_to_linear(t));
    std::sort(linear.begin(), linear.end());
    double sum = 0.0;
    for (double v : linear)
        sum += v;
    return linear_to_db(sum);
}

inline double power_sum_dbw(std::initializer_list<double> terms_dbw)
{
    return power_sum_dbw(std::span<const double>(terms_dbw.begin(), terms_dbw.size()));
}

} // namespace rnp

#endif // RNP_UNITS_HPP

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
//
// Satellite-terminal geometry: slant range, propagation delay, worst-case
// Doppler and beam-footprint sanity checks for LEO service links
// (TS 38.811 system assumptions).

#ifndef RNP_GEOMETRY_HPP
#define RNP_GEOMETRY_HPP

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rnp/units.hpp"

namespace rnp {

// Mean Earth radius, m.
inline constexpr double k_earth_radius_m = 6371000.0;
// Standard gravitational parameter of Earth, m^3/s^2.
inline constexpr double k_earth_mu_m3_s2 = 3.986004418e14;

inline double deg_to_rad(double deg)
{
    return deg * std::numbers::pi / 180.0;
}

/// Line-of-sight distance from a ground terminal to a satellite at altitude
/// `altitude_m` seen under elevation `elevation_deg`:
///
///   d = sqrt(R_E^2 sin^2(a) + h0^2 + 2 h0 R_E) - R_E sin(a)
///
/// Valid for 0 < a <= 90 deg; d(90 deg) = h0, and d decreases with elevation.
inline double slant_range_m(double altitude_m, double elevation_deg,
                            double earth_radius_m = k_earth_radius_m)
{
    if (!std::isfinite(altitude_m) || altitude_m <= 0.0)
        throw std::domain_error("slant_range: altitude must be > 0");
    if (!std::isfinite(elevation_deg) || elevation_deg <= 0.0 || elevation_deg > 90.0)
        throw std::domain_error("slant_range: elevation must be in (0, 90] deg");
    if (!std::isfinite(earth_radius_m) || earth_radius_m <= 0.0)
        throw std::domain_error("slant_range: earth radius must be > 0");

    const double s = std::sin(deg_to_rad(elevation_deg));
    const double re = earth_radius_m;
    const double h0 = altitude_m;
    return std::sqrt(re * re * s * s + h0 * h0 + 2.0 * h0 * re) - re * s;
}

/// Satellite-terminal link geometry for one scenario.
struct LinkGeometry
{
    double altitude_m = 0.0;
    double elevation_deg = 0.0;
    double earth_radius_m = k_earth_radius_m;

    double slant_range() const
    {
        return slant_range_m(altitude_m, elevation_deg, earth_radius_m);
    }
};

/// Circular-orbit kinematics for a given altitude.
struct OrbitKinematics
{
    double orbital_velocity_m_s = 0.0;
    double geocentric_radius_m = 0.0;
};

inline OrbitKinematics orbit_kinematics(double altitude_m,
                                        double earth_radius_m = k_earth_radius_m)
{
    if (!std::isfinite(altitude_m) || altitude_m <= 0.0)
        throw std::domain_error("orbit_kinematics: altitude must be > 0");
    const double r = earth_radius_m + altitude_m;
    return {std::sqrt(k_earth_mu_m3_s2 / r), r};
}

inline double one_way_delay_s(double distance_m)
{
    if (!std::isfinite(distance_m) || distance_m < 0.0)
        throw std::domain_error("one_way_delay: distance must be >= 0");
    return distance_m / k_speed_of_light_m_s;
}

/// Worst-case Doppler shift for a ground observer under a circular LEO orbit:
/// fd = (fc/c) * v_orbit * R_E/(R_E + h0). The projection factor bounds the
/// radial velocity component seen from the ground; linear in fc.
inline double max_doppler_shift_hz(double carrier_hz, double altitude_m,
                                   double earth_radius_m = k_earth_radius_m)
{
    if (!std::isfinite(carrier_hz) || carrier_hz < 0.0)
        throw std::domain_error("max_doppler_shift: carrier must be >= 0");
    const OrbitKinematics orbit = orbit_kinematics(altitude_m, earth_radius_m);
    const double radial_bound =
        orbit.orbital_velocity_m_s * earth_radius_m / orbit.geocentric_radius_m;
    return carrier_hz / k_speed_of_light_m_s * radial_bound;
}

/// Flat-Earth nadir approximation of the beam footprint diameter,
/// 2*d*tan(beamwidth/2). A bracket check against published footprint sizes,
/// not a coverage model.
inline double beam_footprint_diameter_m(double slant_range_m, double beamwidth_deg)
{
    if (!std::isfinite(beamwidth_deg) || beamwidth_deg <= 0.0 || beamwidth_deg >= 90.0)
        throw std::domain_error("beam_footprint_diameter: beamwidth must be in (0, 90) deg");
    if (!std::isfinite(slant_range_m) || slant_range_m < 0.0)
        throw std::domain_error("beam_footprint_diameter: range must be >= 0");
    return 2.0 * slant_range_m * std::tan(deg_to_rad(beamwidth_deg / 2.0));
}

} // namespace rnp

#endif // RNP_GEOMETRY_HPP

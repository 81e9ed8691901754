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
// Path-loss models:
//  - free-space loss and the NTN loss chain (basic loss + shadow fading +
//    clutter, atmospheric gases, scintillation, building entry) following
//    the TS 38.811 link-level methodology,
//  - the TR 38.901 urban-macro (UMa) LOS/NLOS model with the constants
//    exposed as data,
//  - the multiplicative RIS cascade, which in dB reduces to segment addition.

#ifndef RNP_PROPAGATION_HPP
#define RNP_PROPAGATION_HPP

#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rnp/units.hpp"

namespace rnp {

enum class Band { s, ka };
enum class LosState { los, nlos };
enum class NtnScenario { dense_urban, urban, suburban_rural };

inline const char* to_string(Band b) { return b == Band::s ? "S" : "Ka"; }
inline const char* to_string(LosState s) { return s == LosState::los ? "LOS" : "NLOS"; }

/// Free-space path loss in dB for a distance in meters and carrier in GHz:
/// 32.45 + 20 log10(fc) + 20 log10(d). Distances below 1 m are outside the
/// model validity floor.
inline double fspl_db(double distance_m, double fc_ghz)
{
    if (!std::isfinite(distance_m) || distance_m < 1.0)
        throw std::domain_error("fspl: distance must be >= 1 m");
    if (!std::isfinite(fc_ghz) || fc_ghz <= 0.0)
        throw std::domain_error("fspl: carrier frequency must be > 0");
    return 32.45 + 20.0 * std::log10(fc_ghz) + 20.0 * std::log10(distance_m);
}

/// Component breakdown of the NTN path loss chain:
/// total = basic + gases + scintillation + building entry.
struct PathLossBreakdown
{
    double basic_db = 0.0;
    double gases_db = 0.0;
    double scintillation_db = 0.0;
    double building_entry_db = 0.0;
    double total_db = 0.0;
};

inline PathLossBreakdown ntn_total_path_loss(double basic_db, double gases_db,
                                             double scintillation_db,
                                             double building_entry_db)
{
    for (double c : {basic_db, gases_db, scintillation_db, building_entry_db})
        if (!std::isfinite(c) || c < 0.0)
            throw std::domain_error("ntn_total_path_loss: components must be >= 0");
    return {basic_db, gases_db, scintillation_db, building_entry_db,
            basic_db + gases_db + scintillation_db + building_entry_db};
}

/// One elevation/band row of the NTN environment table: shadow fading sigmas,
/// clutter loss and LOS probabilities per deployment scenario.
struct NtnEnvRow
{
    double elevation_deg = 90.0;
    Band band = Band::s;
    double sigma_sf_los_db = 0.0;
    double sigma_sf_nlos_db = 0.0;
    double clutter_loss_db = 0.0;
    double p_los_dense_urban = 0.0;
    double p_los_urban = 0.0;
    double p_los_suburban = 0.0;
};

namespace detail {

inline std::string trim(const std::string& s)
{
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return s.substr(b, e - b);
}

inline std::string to_lower(std::string s)
{
    for (char& c : s)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

} // namespace detail

/// Read-only lookup table of NtnEnvRow entries. Missing rows error loudly;
/// there is no interpolation between elevations.
class NtnEnvTable
{
  public:
    NtnEnvTable() = default;
    explicit NtnEnvTable(std::vector<NtnEnvRow> rows) : rows_(std::move(rows))
    {
        validate();
    }

    /// Dense-urban 90-degree rows for the S and Ka bands.
    static NtnEnvTable defaults()
    {
        return NtnEnvTable({
            {90.0, Band::s, 1.2, 9.2, 25.5, 0.981, 0.992, 0.998},
            {90.0, Band::ka, 0.6, 12.3, 32.9, 0.981, 0.992, 0.998},
        });
    }

    /// Loads a comma-separated table with header
    /// elevation_deg, band, sigma_los, sigma_nlos, clutter_db,
    /// p_los_denseurban, p_los_urban, p_los_suburban.
    static NtnEnvTable load_csv(std::istream& in, const std::string& origin = "<stream>")
    {
        std::vector<NtnEnvRow> rows;
        std::string line;
        int line_no = 0;
        bool header_seen = false;
        while (std::getline(in, line))
        {
            ++line_no;
            const std::string trimmed = detail::trim(line);
            if (trimmed.empty())
                continue;
            std::vector<std::string> fields;
            std::stringstream ss(trimmed);
            std::string field;
            while (std::getline(ss, field, ','))
                fields.push_back(detail::trim(field));
            if (fields.size() != 8)
                throw std::runtime_error(origin + ":" + std::to_string(line_no) +
                                         ": expected 8 comma-separated fields, got " +
                                         std::to_string(fields.size()));
            if (!header_seen)
            {
                const char* names[8] = {"elevation_deg",    "band",
                                        "sigma_los",        "sigma_nlos",
                                        "clutter_db",       "p_los_denseurban",
                                        "p_los_urban",      "p_los_suburban"};
                for (int i = 0; i < 8; ++i)
                    if (detail::to_lower(fields[i]) != names[i])
                        throw std::runtime_error(origin + ":" + std::to_string(line_no) +
                                                 ": bad header column '" + fields[i] +
                                                 "', expected '" + names[i] + "'");
                header_seen = true;
                continue;
            }
            NtnEnvRow row;
            const std::string band = detail::to_lower(fields[1]);
            if (band == "s")
                row.band = Band::s;
            else if (band == "ka")
                row.band = Band::ka;
            else
                throw std::runtime_error(origin + ":" + std::to_string(line_no) +
                                         ": unknown band '" + fields[1] + "'");
            try
            {
                row.elevation_deg = std::stod(fields[0]);
                row.sigma_sf_los_db = std::stod(fields[2]);
                row.sigma_sf_nlos_db = std::stod(fields[3]);
                row.clutter_loss_db = std::stod(fields[4]);
                row.p_los_dense_urban = std::stod(fields[5]);
                row.p_los_urban = std::stod(fields[6]);
                row.p_los_suburban = std::stod(fields[7]);
            }
            catch (const std::exception&)
            {
                throw std::runtime_error(origin + ":" + std::to_string(line_no) +
                                         ": non-numeric field");
            }
            rows.push_back(row);
        }
        if (!header_seen)
            throw std::runtime_error(origin + ": empty environment table");
        return NtnEnvTable(std::move(rows));
    }

    static NtnEnvTable load_csv_file(const std::string& path)
    {
        std::ifstream in(path);
        if (!in)
            throw std::runtime_error("cannot open environment table '" + path + "'");
        return load_csv(in, path);
    }

    const NtnEnvRow& lookup(Band band, double elevation_deg) const
    {
        for (const NtnEnvRow& row : rows_)
            if (row.band == band && std::abs(row.elevation_deg - elevation_deg) < 1e-9)
                return row;
        throw std::out_of_range(std::string("no environment row for band ") +
                                to_string(band) + " at " + std::to_string(elevation_deg) +
                                " deg (no interpolation between elevations)");
    }

    double los_probability(double elevation_deg, NtnScenario scenario) const
    {
        for (const NtnEnvRow& row : rows_)
        {
            if (std::abs(row.elevation_deg - elevation_deg) >= 1e-9)
                continue;
            switch (scenario)
            {
            case NtnScenario::dense_urban:
                return row.p_los_dense_urban;
            case NtnScenario::urban:
                return row.p_los_urban;
            case NtnScenario::suburban_rural:
                return row.p_los_suburban;
            }
        }
        throw std::out_of_range("no LOS probability row at " +
                                std::to_string(elevation_deg) + " deg");
    }

    const std::vector<NtnEnvRow>& rows() const { return rows_; }

  private:
    void validate() const
    {
        for (const NtnEnvRow& row : rows_)
        {
            if (row.sigma_sf_los_db < 0.0 || row.sigma_sf_nlos_db < 0.0 ||
                row.clutter_loss_db < 0.0)
                throw std::domain_error("environment table: sigma/clutter must be >= 0");
            for (double p : {row.p_los_dense_urban, row.p_los_urban, row.p_los_suburban})
                if (p < 0.0 || p > 1.0)
                    throw std::domain_error("environment table: LOS probability outside [0,1]");
        }
    }

    std::vector<NtnEnvRow> rows_;
};

inline double los_probability(double elevation_deg, NtnScenario scenario,
                              const NtnEnvTable& table = NtnEnvTable::defaults())
{
    return table.los_probability(elevation_deg, scenario);
}

/// Basic NTN path loss: FSPL plus shadow fading at `shadow_quantile_z` sigma
/// units plus clutter loss. Clutter applies only in NLOS; z = 0 yields the
/// deterministic median. Monte-Carlo callers supply their own z stream.
inline double ntn_basic_path_loss_db(double distance_m, double fc_ghz,
                                     const NtnEnvRow& env, LosState state,
                                     double shadow_quantile_z = 0.0)
{
    if (!std::isfinite(shadow_quantile_z))
        throw std::domain_error("ntn_basic_path_loss: z must be finite");
    const double sigma =
        state == LosState::los ? env.sigma_sf_los_db : env.sigma_sf_nlos_db;
    const double clutter = state == LosState::nlos ? env.clutter_loss_db : 0.0;
    return fspl_db(distance_m, fc_ghz) + shadow_quantile_z * sigma + clutter;
}

/// TR 38.901 Table 7.4.1-1 UMa constants, exposed as data so a scenario can
/// swap the coefficient set without touching the formula.
struct UmaCoefficients
{
    // LOS, before the breakpoint (PL1).
    double los_offset = 28.0;
    double los_dist_slope = 22.0;
    double los_freq_slope = 20.0;
    // LOS, past the breakpoint (PL2).
    double los2_dist_slope = 40.0;
    double los2_breakpoint_slope = 9.0;
    // NLOS (lower-bounded by the LOS value).
    double nlos_offset = 13.54;
    double nlos_dist_slope = 39.08;
    double nlos_freq_slope = 20.0;
    double nlos_height_slope = 0.6;
    // Model validity range for the 2D distance, meters.
    double min_distance_m = 10.0;
    double max_distance_m = 5000.0;
    // Effective environment height entering the breakpoint distance.
    // TR 38.901 note 1 draws h_E stochastically; planning runs keep a fixed
    // value so results stay deterministic.
    double environment_height_m = 0.0;
};

/// Geometry and state of one UMa link.
struct UmaParams
{
    double d2d_m = 0.0;
    double fc_ghz = 3.5;
    double h_bs_m = 15.0;
    double h_ut_m = 1.5;
    LosState state = LosState::los;
};

/// TR 38.901 urban-macro path loss. The NLOS branch is lower-bounded by the
/// LOS value, so NLOS >= LOS holds at equal geometry.
inline double uma_path_loss_db(const UmaParams& p, const UmaCoefficients& c = {})
{
    if (!std::isfinite(p.d2d_m) || p.d2d_m < c.min_distance_m || p.d2d_m > c.max_distance_m)
        throw std::domain_error("uma_path_loss: 2D distance outside [" +
                                std::to_string(c.min_distance_m) + ", " +
                                std::to_string(c.max_distance_m) + "] m");
    if (!std::isfinite(p.fc_ghz) || p.fc_ghz <= 0.0)
        throw std::domain_error("uma_path_loss: carrier frequency must be > 0");
    if (p.h_bs_m <= c.environment_height_m || p.h_ut_m <= c.environment_height_m)
        throw std::domain_error("uma_path_loss: antenna heights must exceed the "
                                "environment height");

    const double dh = p.h_bs_m - p.h_ut_m;
    const double d3d = std::sqrt(p.d2d_m * p.d2d_m + dh * dh);
    const double breakpoint_m = 4.0 * (p.h_bs_m - c.environment_height_m) *
                                (p.h_ut_m - c.environment_height_m) * p.fc_ghz * 1e9 /
                                k_speed_of_light_m_s;

    double los;
    if (p.d2d_m <= breakpoint_m)
    {
        los = c.los_offset + c.los_dist_slope * std::log10(d3d) +
              c.los_freq_slope * std::log10(p.fc_ghz);
    }
    else
    {
        los = c.los_offset + c.los2_dist_slope * std::log10(d3d) +
              c.los_freq_slope * std::log10(p.fc_ghz) -
              c.los2_breakpoint_slope * std::log10(breakpoint_m * breakpoint_m + dh * dh);
    }
    if (p.state == LosState::los)
        return los;

    const double nlos = c.nlos_offset + c.nlos_dist_slope * std::log10(d3d) +
                        c.nlos_freq_slope * std::log10(p.fc_ghz) -
                        c.nlos_height_slope * (p.h_ut_m - 1.5);
    return std::max(los, nlos);
}

/// Segment losses of a BS -> RIS -> UE cascade. In dB the multiplicative
/// cascade reduces to exact addition of the two segments.
struct RisCascade
{
    double pl_bs_ris_db = 0.0;
    double pl_ris_ue_db = 0.0;
    double total_db = 0.0;
};

inline double ris_cascade_path_loss_db(double pl_bs_ris_db, double pl_ris_ue_db)
{
    if (!std::isfinite(pl_bs_ris_db) || pl_bs_ris_db < 0.0 ||
        !std::isfinite(pl_ris_ue_db) || pl_ris_ue_db < 0.0)
        throw std::domain_error("ris_cascade_path_loss: segment losses must be >= 0");
    return pl_bs_ris_db + pl_ris_ue_db;
}

inline RisCascade make_ris_cascade(double pl_bs_ris_db, double pl_ris_ue_db)
{
    return {pl_bs_ris_db, pl_ris_ue_db,
            ris_cascade_path_loss_db(pl_bs_ris_db, pl_ris_ue_db)};
}

} // namespace rnp

#endif // RNP_PROPAGATION_HPP

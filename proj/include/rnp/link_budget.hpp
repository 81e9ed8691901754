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
// Link budgets: satellite carrier-to-noise chain, the SINR combiner over
// aggregated NTN/RIS/TN interference, and the maximum-isotropic-loss /
// available-path-loss / coverage-gap chain that drives the RIS deployment
// decision.

#ifndef RNP_LINK_BUDGET_HPP
#define RNP_LINK_BUDGET_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

#include "rnp/geometry.hpp"
#include "rnp/propagation.hpp"
#include "rnp/units.hpp"

namespace rnp {

/// Loss terms of an NTN link budget, all in dB and all >= 0.
struct NtnLossSet
{
    double atmospheric_db = 0.0;
    double shadow_margin_db = 0.0;
    double scintillation_db = 0.0;
    double polarization_db = 0.0;
    double additional_db = 0.0;

    double total_db() const
    {
        return atmospheric_db + shadow_margin_db + scintillation_db + polarization_db +
               additional_db;
    }

    void validate() const
    {
        for (double v : {atmospheric_db, shadow_margin_db, scintillation_db,
                         polarization_db, additional_db})
            if (!std::isfinite(v) || v < 0.0)
                throw std::domain_error("NtnLossSet: losses must be finite and >= 0");
    }
};

/// Inputs of one satellite link budget. EIRP is carried in dBW; dBm values
/// convert at the boundary.
struct NtnLinkConfig
{
    Direction direction = Direction::downlink;
    double fc_ghz = 0.0;
    double bandwidth_hz = 0.0;
    double eirp_dbw = 0.0;
    double g_over_t_db_k = 0.0;
    NtnLossSet losses;
    LinkGeometry geometry;
};

/// Carrier-to-noise ratio of a satellite link:
///
///   CNR = EIRP + G/T - FSPL(d, fc) - losses - 10 log10(k) - 10 log10(B)
///
/// with d the slant range from the link geometry and k the Boltzmann
/// constant (-10 log10(k) = 228.599 dBW/K/Hz).
inline double cnr_db(const NtnLinkConfig& link)
{
    if (!std::isfinite(link.bandwidth_hz) || link.bandwidth_hz <= 0.0)
        throw std::domain_error("cnr: bandwidth must be > 0");
    link.losses.validate();
    const double distance = link.geometry.slant_range();
    return link.eirp_dbw + link.g_over_t_db_k - fspl_db(distance, link.fc_ghz) -
           link.losses.total_db() - 10.0 * std::log10(k_boltzmann) -
           10.0 * std::log10(link.bandwidth_hz);
}

/// Signal, interference and noise terms feeding the SINR combiner.
/// Interference lists may be empty; "no interference" is the empty set,
/// never a sentinel value.
struct SinrInputs
{
    double p_signal_dbw = 0.0;
    std::vector<double> i_ntn_dbw;
    std::vector<double> i_ris_dbw;
    std::vector<double> i_tn_dbw;
    double n0_dbw = 0.0;
};

/// SINR = P_signal / (sum I_NTN + sum I_RIS + sum I_TN + N0), evaluated in
/// the linear power domain and returned in dB.
inline double sinr_db(const SinrInputs& in)
{
    if (!std::isfinite(in.p_signal_dbw) || !std::isfinite(in.n0_dbw))
        throw std::domain_error("sinr: signal and noise floor must be finite");
    std::vector<double> denominator;
    denominator.reserve(in.i_ntn_dbw.size() + in.i_ris_dbw.size() + in.i_tn_dbw.size() + 1);
    denominator.insert(denominator.end(), in.i_ntn_dbw.begin(), in.i_ntn_dbw.end());
    denominator.insert(denominator.end(), in.i_ris_dbw.begin(), in.i_ris_dbw.end());
    denominator.insert(denominator.end(), in.i_tn_dbw.begin(), in.i_tn_dbw.end());
    denominator.push_back(in.n0_dbw);
    return in.p_signal_dbw - power_sum_dbw(denominator);
}

/// Per-cell SINR decomposition kept alongside grid results.
struct SinrBreakdown
{
    SinrInputs inputs;
    double sinr_db = 0.0;
};

/// Maximum isotropic loss: the largest path loss at which the link still
/// meets the required SNR.
inline double mil_db(double tx_power_dbw, double tx_losses_db, double rx_gain_db,
                     double rx_losses_db, double noise_floor_dbw, double required_snr_db)
{
    return tx_power_dbw - tx_losses_db + rx_gain_db - rx_losses_db - noise_floor_dbw -
           required_snr_db;
}

/// Available path loss: MIL with the planning margins removed.
inline double available_path_loss_db(double mil_db, double shadow_margin_db,
                                     double penetration_margin_db, double body_losses_db)
{
    for (double m : {shadow_margin_db, penetration_margin_db, body_losses_db})
        if (!std::isfinite(m) || m < 0.0)
            throw std::domain_error("available_path_loss: margins must be >= 0");
    return mil_db - shadow_margin_db - penetration_margin_db - body_losses_db;
}

/// Coverage gap of a link: available path loss minus the path loss the
/// deployment geometry imposes. Positive means the link closes with margin,
/// negative means shortfall.
inline double coverage_gap_db(double available_path_loss_db, double deployment_mpl_db)
{
    return available_path_loss_db - deployment_mpl_db;
}

/// Deployment rule: a RIS must be added when the direct link's gap falls
/// below the threshold.
inline bool ris_needed(double gap_direct_db, double threshold_db = 0.0)
{
    return gap_direct_db < threshold_db;
}

/// Full MIL -> APL -> GAP chain for one link.
struct RisLinkBudget
{
    double mil_db = 0.0;
    double shadow_margin_db = 0.0;
    double penetration_margin_db = 0.0;
    double body_losses_db = 0.0;
    double available_path_loss_db = 0.0;
    double deployment_mpl_db = 0.0;
    double gap_db = 0.0;
};

inline RisLinkBudget make_ris_link_budget(double mil, double shadow_margin,
                                          double penetration_margin, double body_losses,
                                          double deployment_mpl)
{
    RisLinkBudget b;
    b.mil_db = mil;
    b.shadow_margin_db = shadow_margin;
    b.penetration_margin_db = penetration_margin;
    b.body_losses_db = body_losses;
    b.available_path_loss_db =
        available_path_loss_db(mil, shadow_margin, penetration_margin, body_losses);
    b.deployment_mpl_db = deployment_mpl;
    b.gap_db = coverage_gap_db(b.available_path_loss_db, deployment_mpl);
    return b;
}

} // namespace rnp

#endif // RNP_LINK_BUDGET_HPP

// SPDX-License-Identifier: Apache-2.0
//
// t2amp - wideband/subband amplitude quantization for Type-2 codebook CSI feedback
// Copyright (C) 2026 t2amp contributors
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

#include "t2amp/amplitude.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace t2amp
{

double to_db(double amplitude, DbConvention conv)
{
    if (!(amplitude > 0.0) || !std::isfinite(amplitude))
        throw std::invalid_argument("to_db: amplitude must be finite and > 0");
    const double factor = (conv == DbConvention::amplitude_20log10) ? 20.0 : 10.0;
    return factor * std::log10(amplitude);
}

double from_db(double level_db, DbConvention conv)
{
    if (!std::isfinite(level_db))
        throw std::invalid_argument("from_db: level must be finite");
    const double factor = (conv == DbConvention::amplitude_20log10) ? 20.0 : 10.0;
    return std::pow(10.0, level_db / factor);
}

SubbandAmplitudeVector::SubbandAmplitudeVector(std::vector<double> values)
    : values_(std::move(values))
{
    if (values_.empty())
        throw std::invalid_argument("SubbandAmplitudeVector: needs at least one subband");
    bool any_positive = false;
    for (double v : values_)
    {
        if (!std::isfinite(v) || v < 0.0)
            throw std::invalid_argument("SubbandAmplitudeVector: entries must be finite and >= 0");
        any_positive = any_positive || v > 0.0;
    }
    if (!any_positive)
        throw std::invalid_argument("SubbandAmplitudeVector: all-zero vector has no defined "
                                    "normalized error");
}

WbLevelGrid build_wb_grid(std::span<const double> wb_amplitudes_db)
{
    if (wb_amplitudes_db.empty())
        throw std::invalid_argument("build_wb_grid: empty input");
    for (double v : wb_amplitudes_db)
        if (!std::isfinite(v))
            throw std::invalid_argument("build_wb_grid: non-finite amplitude");

    WbLevelGrid grid;
    grid.anchor_db = *std::max_element(wb_amplitudes_db.begin(), wb_amplitudes_db.end());
    grid.step_db = wb_step_db;
    for (int i = 0; i < 8; ++i)
        grid.levels_db[static_cast<std::size_t>(i)] = grid.anchor_db - (7 - i) * wb_step_db;
    return grid;
}

int quantize_wb_index(double p_wb_db, const WbLevelGrid &grid)
{
    if (!std::isfinite(p_wb_db))
        throw std::invalid_argument("quantize_wb_index: non-finite input");
    int best = 0;
    double best_dist = std::abs(p_wb_db - grid.levels_db[0]);
    for (int m = 1; m < 8; ++m)
    {
        const double dist = std::abs(p_wb_db - grid.levels_db[static_cast<std::size_t>(m)]);
        if (dist <= best_dist) // ties go to the larger index
        {
            best_dist = dist;
            best = m;
        }
    }
    return best;
}

double wb_level_amplitude(const WbLevelGrid &grid, int k1, bool k0_is_zero, DbConvention conv)
{
    if (k1 < 0 || k1 > 7)
        throw std::invalid_argument("wb_level_amplitude: k1 out of range 0..7");
    if (k1 == 0 && k0_is_zero)
        return 0.0;
    return from_db(grid.levels_db[static_cast<std::size_t>(k1)], conv);
}

SbLevelPair sb_levels_for_beam(const WbLevelGrid &grid, int k1)
{
    if (k1 < 0 || k1 > 7)
        throw std::invalid_argument("sb_levels_for_beam: k1 out of range 0..7");
    const double high = grid.levels_db[static_cast<std::size_t>(k1)];
    return SbLevelPair{high, high - wb_step_db};
}

int quantize_sb_index_db(double p_sb_db, const SbLevelPair &pair)
{
    if (!std::isfinite(p_sb_db))
        throw std::invalid_argument("quantize_sb_index_db: non-finite input");
    // ties go to the high level
    return std::abs(p_sb_db - pair.high_db) <= std::abs(p_sb_db - pair.low_db) ? 1 : 0;
}

std::vector<double> quantize_sb_linear(const SubbandAmplitudeVector &p_sb, double p_wb)
{
    if (!(p_wb > 0.0) || !std::isfinite(p_wb))
        throw std::invalid_argument("quantize_sb_linear: WB amplitude must be finite and > 0");
    std::vector<double> r(p_sb.size());
    const double threshold = 0.75 * p_wb;
    for (std::size_t s = 0; s < p_sb.size(); ++s)
        r[s] = p_sb[s] >= threshold ? 1.0 : 0.5;
    return r;
}

double rnsqe(const SubbandAmplitudeVector &observed, std::span<const double> reconstructed)
{
    if (observed.size() != reconstructed.size())
        throw std::invalid_argument("rnsqe: length mismatch");
    double num = 0.0;
    double den = 0.0;
    for (std::size_t s = 0; s < observed.size(); ++s)
    {
        const double d = observed[s] - reconstructed[s];
        num += d * d;
        den += observed[s] * observed[s];
    }
    if (!(den > 0.0))
        throw std::invalid_argument("rnsqe: observed vector has zero energy");
    return std::sqrt(num / den);
}

void QuantizedFeedback::validate() const
{
    for (int v : k1)
        if (v < 0 || v > 7)
            throw std::invalid_argument("QuantizedFeedback: k1 entry out of range 0..7");
    if (mode == FeedbackMode::wb_only)
    {
        if (!k2.empty())
            throw std::invalid_argument("QuantizedFeedback: k2 must be empty in wb_only mode");
        return;
    }
    if (k2.size() != k1.size())
        throw std::invalid_argument("QuantizedFeedback: k2 must have one row per beam");
    const std::size_t subbands = k2.empty() ? 0 : k2.front().size();
    for (const auto &row : k2)
    {
        if (row.size() != subbands)
            throw std::invalid_argument("QuantizedFeedback: ragged k2 rows");
        for (int v : row)
            if (v != 0 && v != 1)
                throw std::invalid_argument("QuantizedFeedback: k2 entry not in {0,1}");
    }
}

} // namespace t2amp

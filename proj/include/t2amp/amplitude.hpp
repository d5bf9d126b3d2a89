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

#ifndef T2AMP_AMPLITUDE_HPP
#define T2AMP_AMPLITUDE_HPP

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace t2amp
{

// Grid step between adjacent wideband amplitude levels, 10*log10(2) dB.
inline constexpr double wb_step_db = 3.010299956639812;

// dB conversion convention for linear amplitudes. The quantizer grids always
// use the wb_step_db spacing; only the amplitude <-> dB mapping is configurable.
enum class DbConvention
{
    amplitude_20log10, // dB = 20*log10(amplitude), default
    power_10log10      // dB = 10*log10(amplitude)
};

double to_db(double amplitude, DbConvention conv = DbConvention::amplitude_20log10);
double from_db(double level_db, DbConvention conv = DbConvention::amplitude_20log10);

// Observed per-subband linear amplitudes of one logical beam. Entries are
// non-negative with at least one strictly positive entry; enforced at
// construction so normalized error metrics are always well defined.
class SubbandAmplitudeVector
{
  public:
    explicit SubbandAmplitudeVector(std::vector<double> values);

    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t s) const noexcept { return values_[s]; }
    const std::vector<double> &values() const noexcept { return values_; }
    std::span<const double> span() const noexcept { return values_; }

  private:
    std::vector<double> values_;
};

// The eight wideband amplitude levels in dB. Level 7 anchors at the strongest
// beam; lower levels descend in wb_step_db decrements.
struct WbLevelGrid
{
    double anchor_db = 0.0;            // == levels_db[7]
    double step_db = wb_step_db;
    std::array<double, 8> levels_db{};
};

// Builds the level grid from the per-beam WB amplitudes in dB; the anchor is
// the maximum over all beams.
WbLevelGrid build_wb_grid(std::span<const double> wb_amplitudes_db);

// Nearest-level index in dB for a WB amplitude; ties resolve to the larger index.
int quantize_wb_index(double p_wb_db, const WbLevelGrid &grid);

// Linear reconstruction amplitude of WB index k1. With k0_is_zero set (the
// default), index 0 reconstructs to zero amplitude; otherwise its dB level
// from the grid is used.
double wb_level_amplitude(const WbLevelGrid &grid, int k1, bool k0_is_zero = true,
                          DbConvention conv = DbConvention::amplitude_20log10);

// The two subband quantizer levels in dB for one beam; low is one grid step
// below high.
struct SbLevelPair
{
    double high_db = 0.0;
    double low_db = 0.0;
};

SbLevelPair sb_levels_for_beam(const WbLevelGrid &grid, int k1);

// Nearest of the two levels in dB; returns 1 for high, 0 for low. Ties
// resolve to 1.
int quantize_sb_index_db(double p_sb_db, const SbLevelPair &pair);

// Two-level subband quantizer in the linear domain: entry s maps to 1 when
// p_sb[s] >= (3/4)*p_wb and to 1/2 otherwise. This is the quantizer the
// estimator pipeline uses; the dB rule above is exposed for standard-index
// computation only.
std::vector<double> quantize_sb_linear(const SubbandAmplitudeVector &p_sb, double p_wb);

// Root normalized squared quantization error:
// sqrt( sum_s (observed_s - reconstructed_s)^2 / sum_s observed_s^2 ).
double rnsqe(const SubbandAmplitudeVector &observed, std::span<const double> reconstructed);

enum class FeedbackMode
{
    wb_only,
    joint_wb_and_sb
};

// WB indices k1 and per-subband SB indices k2 for all logical beams of a
// layer. k2 is empty in wb_only mode.
struct QuantizedFeedback
{
    FeedbackMode mode = FeedbackMode::wb_only;
    std::vector<int> k1;               // one entry per logical beam, each in 0..7
    std::vector<std::vector<int>> k2;  // [beam][subband], each in {0,1}

    void validate() const; // throws std::invalid_argument on violated invariants
};

// Chosen WB amplitude and the resulting subband reconstruction of one beam.
struct EstimatorResult
{
    double wb_amplitude = 0.0;
    std::vector<double> r_vector;          // entries in {1/2, 1}
    std::vector<double> sb_reconstruction; // wb_amplitude * r_vector
    double total_sq_error = 0.0;
    double rnsqe = 0.0;
};

} // namespace t2amp

#endif

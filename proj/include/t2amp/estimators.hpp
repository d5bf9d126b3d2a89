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

#ifndef T2AMP_ESTIMATORS_HPP
#define T2AMP_ESTIMATORS_HPP

#include "t2amp/amplitude.hpp"

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace t2amp
{

enum class WbMethod
{
    linear,
    optimal,
    suboptimal
};

const char *to_string(WbMethod method) noexcept;
std::optional<WbMethod> wb_method_from_string(std::string_view name) noexcept;

// Arithmetic mean of the subband amplitudes (the conventional WB amplitude).
double linear_average_wb(const SubbandAmplitudeVector &p_sb);

// Linear average scaled by 6/5. Evaluates exactly 1.2 * linear_average_wb.
double suboptimal_wb(const SubbandAmplitudeVector &p_sb);

// One sub-region of the WB-amplitude axis in the optimal search. On region n
// the quantization pattern is fixed: the n smallest subbands (ascending
// sorted order) map to 1/2 and the rest to 1. The region itself is the
// closed interval [ (4/3)*sorted[n-1], (4/3)*sorted[n] ], unbounded at the
// first and last region.
struct RegionCandidate
{
    std::size_t n = 0;
    std::vector<double> r_pattern;   // pattern over ascending-sorted subbands
    double unconstrained_min = 0.0;  // sum(p*r) / sum(r^2)
    double clamped_min = 0.0;        // minimizer restricted to the region
    double objective = 0.0;          // squared error at clamped_min
};

// All S+1 region candidates of the optimal WB search, in region order.
std::vector<RegionCandidate> optimal_region_candidates(const SubbandAmplitudeVector &p_sb);

// WB amplitude minimizing the total squared quantization error over all
// regions. Ties on the objective resolve to the smallest region index. The
// returned r_vector is re-derived from the two-level quantizer at the chosen
// amplitude, so result fields are always mutually consistent.
EstimatorResult optimal_wb(const SubbandAmplitudeVector &p_sb);

struct OracleResult
{
    double wb = 0.0;
    double total_sq_error = 0.0;
};

// Independent check of the optimal search: evaluates the squared error with
// the two-level quantizer re-applied at every candidate amplitude, over a
// uniform grid on [0, (4/3)*max + eps] plus all region boundaries and all
// per-region unconstrained minimizers. Ties resolve to the smaller
// amplitude, so the result does not depend on the number of worker threads.
OracleResult brute_force_oracle(const SubbandAmplitudeVector &p_sb, std::size_t grid_points,
                                unsigned threads = 0);

// Picks the WB amplitude with the requested method, applies the two-level
// subband quantizer and fills in the error metrics.
EstimatorResult evaluate_estimator(const SubbandAmplitudeVector &p_sb, WbMethod method);

} // namespace t2amp

#endif

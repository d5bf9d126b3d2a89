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

#ifndef T2AMP_SWEEP_HPP
#define T2AMP_SWEEP_HPP

#include "t2amp/estimators.hpp"
#include "t2amp/rng.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace t2amp
{

// Monte-Carlo experiment parameters. One amplitude vector is generated per
// (min_amplitude, variance, trial) and every configured method is evaluated
// on it.
struct SweepConfig
{
    std::size_t subbands = 10;
    std::vector<double> variances{0.01, 0.05, 0.1, 0.5, 1.0, 2.0, 4.0, 8.0};
    std::vector<double> min_amplitudes{1.0, 2.0, 4.0};
    std::size_t trials = 10000;
    std::uint64_t seed = 1;
    std::vector<WbMethod> methods{WbMethod::linear, WbMethod::optimal, WbMethod::suboptimal};
    bool oracle_check = false;
    unsigned threads = 0; // 0 = hardware concurrency

    void validate() const;
};

// One aggregate record: RMS and mean of the per-trial RNSQE at a sweep point.
struct SweepRow
{
    double min_amplitude = 0.0;
    double variance = 0.0;
    WbMethod method = WbMethod::linear;
    double rms_nsqe = 0.0;
    double mean_nsqe = 0.0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
};

// Gaussian subband amplitudes shifted so the minimum lands exactly on
// min_amplitude.
SubbandAmplitudeVector generate_sb_amplitudes(std::size_t subbands, double variance,
                                              double min_amplitude, GaussianRng &rng);

std::vector<SweepRow> run_sweep(const SweepConfig &config);

// CSV with header min_amplitude,variance,method,rms_nsqe,mean_nsqe,trials,seed;
// floats carry 9 significant digits, rows are ordered by
// (min_amplitude, variance, method name), lines end in LF.
void write_csv(std::span<const SweepRow> rows, const std::filesystem::path &destination);

} // namespace t2amp

#endif

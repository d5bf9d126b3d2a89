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

#include "t2amp/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <thread>

namespace t2amp
{

namespace
{

// grid used for the optional per-trial oracle cross-check
constexpr std::size_t oracle_check_grid = 4001;
constexpr double oracle_check_slack = 1e-6;

std::string format_g9(double value)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", value);
    return buf;
}

} // namespace

void SweepConfig::validate() const
{
    if (subbands < 2)
        throw std::invalid_argument("SweepConfig: subbands must be >= 2");
    if (variances.empty() || min_amplitudes.empty())
        throw std::invalid_argument("SweepConfig: variance and min-amplitude lists must be non-empty");
    for (double v : variances)
        if (!(v > 0.0) || !std::isfinite(v))
            throw std::invalid_argument("SweepConfig: variances must be finite and > 0");
    for (double m : min_amplitudes)
        if (!(m > 0.0) || !std::isfinite(m))
            throw std::invalid_argument("SweepConfig: min amplitudes must be finite and > 0");
    if (trials < 1)
        throw std::invalid_argument("SweepConfig: trials must be >= 1");
    if (methods.empty())
        throw std::invalid_argument("SweepConfig: method list must be non-empty");
}

SubbandAmplitudeVector generate_sb_amplitudes(std::size_t subbands, double variance,
                                              double min_amplitude, GaussianRng &rng)
{
    if (subbands < 2)
        throw std::invalid_argument("generate_sb_amplitudes: subbands must be >= 2");
    if (!(variance > 0.0) || !std::isfinite(variance))
        throw std::invalid_argument("generate_sb_amplitudes: variance must be finite and > 0");
    if (!(min_amplitude > 0.0) || !std::isfinite(min_amplitude))
        throw std::invalid_argument("generate_sb_amplitudes: min amplitude must be finite and > 0");

    const double stddev = std::sqrt(variance);
    std::vector<double> draws(subbands);
    for (double &d : draws)
        d = stddev * rng.normal();
    const double lowest = *std::min_element(draws.begin(), draws.end());
    // min_amplitude + (draw - lowest) puts the smallest subband exactly on
    // min_amplitude; adding the shift to the draw first would not.
    std::vector<double> values(subbands);
    for (std::size_t s = 0; s < subbands; ++s)
        values[s] = min_amplitude + (draws[s] - lowest);
    return SubbandAmplitudeVector(std::move(values));
}

std::vector<SweepRow> run_sweep(const SweepConfig &config)
{
    config.validate();

    unsigned workers = config.threads != 0 ? config.threads : std::thread::hardware_concurrency();
    workers = std::max(1u, std::min<unsigned>(workers, 64));
    const std::size_t trials = config.trials;
    const std::size_t method_count = config.methods.size();

    std::vector<SweepRow> rows;
    rows.reserve(config.min_amplitudes.size() * config.variances.size() * method_count);

    // one slot per (method, trial); filled by the workers, reduced serially
    std::vector<std::vector<double>> sq(method_count, std::vector<double>(trials));
    std::vector<std::vector<double>> ab(method_count, std::vector<double>(trials));
    std::vector<unsigned char> oracle_violation(trials);

    for (std::size_t mi = 0; mi < config.min_amplitudes.size(); ++mi)
    {
        const double min_amplitude = config.min_amplitudes[mi];
        for (std::size_t vi = 0; vi < config.variances.size(); ++vi)
        {
            const double variance = config.variances[vi];
            std::fill(oracle_violation.begin(), oracle_violation.end(), 0);

            const auto run_trials = [&](std::size_t begin, std::size_t end) {
                for (std::size_t t = begin; t < end; ++t)
                {
                    GaussianRng rng(derive_stream(config.seed, mi, vi, t));
                    const auto amplitudes =
                        generate_sb_amplitudes(config.subbands, variance, min_amplitude, rng);
                    for (std::size_t k = 0; k < method_count; ++k)
                    {
                        const auto result = evaluate_estimator(amplitudes, config.methods[k]);
                        sq[k][t] = result.rnsqe * result.rnsqe;
                        ab[k][t] = result.rnsqe;
                        if (config.oracle_check && config.methods[k] == WbMethod::optimal)
                        {
                            const auto oracle = brute_force_oracle(amplitudes, oracle_check_grid, 1);
                            if (result.total_sq_error > oracle.total_sq_error + oracle_check_slack)
                                oracle_violation[t] = 1;
                        }
                    }
                }
            };

            if (workers == 1 || trials < 2 * workers)
            {
                run_trials(0, trials);
            }
            else
            {
                std::vector<std::thread> pool;
                pool.reserve(workers);
                const std::size_t chunk = (trials + workers - 1) / workers;
                for (unsigned w = 0; w < workers; ++w)
                {
                    const std::size_t begin = std::min<std::size_t>(w * chunk, trials);
                    const std::size_t end = std::min<std::size_t>(begin + chunk, trials);
                    pool.emplace_back([&run_trials, begin, end] { run_trials(begin, end); });
                }
                for (auto &t : pool)
                    t.join();
            }

            const auto violations =
                std::count(oracle_violation.begin(), oracle_violation.end(), 1);
            if (violations > 0)
                throw std::runtime_error("run_sweep: optimal estimator exceeded the oracle error on " +
                                         std::to_string(violations) + " trial(s) at variance " +
                                         format_g9(variance));

            for (std::size_t k = 0; k < method_count; ++k)
            {
                double sum_sq = 0.0;
                double sum_ab = 0.0;
                for (std::size_t t = 0; t < trials; ++t)
                {
                    sum_sq += sq[k][t];
                    sum_ab += ab[k][t];
                }
                SweepRow row;
                row.min_amplitude = min_amplitude;
                row.variance = variance;
                row.method = config.methods[k];
                row.rms_nsqe = std::sqrt(sum_sq / static_cast<double>(trials));
                row.mean_nsqe = sum_ab / static_cast<double>(trials);
                row.trials = trials;
                row.seed = config.seed;
                rows.push_back(row);
            }
        }
    }
    return rows;
}

void write_csv(std::span<const SweepRow> rows, const std::filesystem::path &destination)
{
    std::ofstream out(destination, std::ios::binary);
    if (!out)
        throw std::runtime_error("write_csv: cannot open '" + destination.string() +
                                 "' for writing");

    std::vector<SweepRow> ordered(rows.begin(), rows.end());
    std::stable_sort(ordered.begin(), ordered.end(), [](const SweepRow &a, const SweepRow &b) {
        if (a.min_amplitude != b.min_amplitude)
            return a.min_amplitude < b.min_amplitude;
        if (a.variance != b.variance)
            return a.variance < b.variance;
        return std::string_view(to_string(a.method)) < std::string_view(to_string(b.method));
    });

    out << "min_amplitude,variance,method,rms_nsqe,mean_nsqe,trials,seed\n";
    for (const auto &row : ordered)
    {
        out << format_g9(row.min_amplitude) << ',' << format_g9(row.variance) << ','
            << to_string(row.method) << ',' << format_g9(row.rms_nsqe) << ','
            << format_g9(row.mean_nsqe) << ',' << row.trials << ',' << row.seed << '\n';
    }
    out.flush();
    if (!out)
        throw std::runtime_error("write_csv: failed while writing '" + destination.string() + "'");
}

} // namespace t2amp

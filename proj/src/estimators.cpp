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

#include "t2amp/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

namespace t2amp
{

namespace
{

// Sums run over the ascending-sorted entries; the all-ones region minimizer
// of the optimal search then matches linear_average_wb bit for bit, and a
// frequency-flat input cannot make the two methods disagree by rounding.
double ascending_mean(const std::vector<double> &sorted_values)
{
    double sum = 0.0;
    for (double v : sorted_values)
        sum += v;
    return sum / static_cast<double>(sorted_values.size());
}

double pattern_objective(double wb, const std::vector<double> &r_pattern,
                         const std::vector<double> &sorted_values)
{
    double g = 0.0;
    for (std::size_t s = 0; s < sorted_values.size(); ++s)
    {
        const double d = wb * r_pattern[s] - sorted_values[s];
        g += d * d;
    }
    return g;
}

// Squared error of the two-level quantizer re-applied at wb, in the original
// subband order.
double error_at(const SubbandAmplitudeVector &p_sb, double wb)
{
    const double threshold = 0.75 * wb;
    double e = 0.0;
    for (std::size_t s = 0; s < p_sb.size(); ++s)
    {
        const double r = p_sb[s] >= threshold ? 1.0 : 0.5;
        const double d = wb * r - p_sb[s];
        e += d * d;
    }
    return e;
}

EstimatorResult result_at_wb(const SubbandAmplitudeVector &p_sb, double wb)
{
    EstimatorResult res;
    res.wb_amplitude = wb;
    res.r_vector = quantize_sb_linear(p_sb, wb);
    res.sb_reconstruction.resize(p_sb.size());
    double err = 0.0;
    for (std::size_t s = 0; s < p_sb.size(); ++s)
    {
        res.sb_reconstruction[s] = wb * res.r_vector[s];
        const double d = res.sb_reconstruction[s] - p_sb[s];
        err += d * d;
    }
    res.total_sq_error = err;
    res.rnsqe = rnsqe(p_sb, res.sb_reconstruction);
    return res;
}

} // namespace

const char *to_string(WbMethod method) noexcept
{
    switch (method)
    {
    case WbMethod::linear:
        return "linear";
    case WbMethod::optimal:
        return "optimal";
    case WbMethod::suboptimal:
        return "suboptimal";
    }
    return "unknown";
}

std::optional<WbMethod> wb_method_from_string(std::string_view name) noexcept
{
    if (name == "linear")
        return WbMethod::linear;
    if (name == "optimal")
        return WbMethod::optimal;
    if (name == "suboptimal")
        return WbMethod::suboptimal;
    return std::nullopt;
}

double linear_average_wb(const SubbandAmplitudeVector &p_sb)
{
    std::vector<double> sorted(p_sb.values());
    std::sort(sorted.begin(), sorted.end());
    return ascending_mean(sorted);
}

double suboptimal_wb(const SubbandAmplitudeVector &p_sb)
{
    return 1.2 * linear_average_wb(p_sb);
}

std::vector<RegionCandidate> optimal_region_candidates(const SubbandAmplitudeVector &p_sb)
{
    std::vector<double> sorted(p_sb.values());
    std::sort(sorted.begin(), sorted.end());
    const std::size_t count = sorted.size();
    constexpr double inf = std::numeric_limits<double>::infinity();

    std::vector<RegionCandidate> candidates;
    candidates.reserve(count + 1);

    for (std::size_t n = 0; n <= count; ++n)
    {
        RegionCandidate cand;
        cand.n = n;
        cand.r_pattern.assign(count, 1.0);
        std::fill(cand.r_pattern.begin(),
                  cand.r_pattern.begin() + static_cast<std::ptrdiff_t>(n), 0.5);

        double num = 0.0;
        double den = 0.0;
        for (std::size_t s = 0; s < count; ++s)
        {
            num += sorted[s] * cand.r_pattern[s];
            den += cand.r_pattern[s] * cand.r_pattern[s];
        }
        cand.unconstrained_min = num / den;

        const double lo = n == 0 ? -inf : (4.0 / 3.0) * sorted[n - 1];
        const double hi = n == count ? inf : (4.0 / 3.0) * sorted[n];

        if (cand.unconstrained_min >= lo && cand.unconstrained_min <= hi)
            cand.clamped_min = cand.unconstrained_min;
        else if (n == 0)
            cand.clamped_min = hi;
        else if (n == count)
            cand.clamped_min = lo;
        else
            cand.clamped_min = pattern_objective(lo, cand.r_pattern, sorted) <=
                                       pattern_objective(hi, cand.r_pattern, sorted)
                                   ? lo
                                   : hi;

        cand.objective = pattern_objective(cand.clamped_min, cand.r_pattern, sorted);
        candidates.push_back(std::move(cand));
    }
    return candidates;
}

EstimatorResult optimal_wb(const SubbandAmplitudeVector &p_sb)
{
    const auto candidates = optimal_region_candidates(p_sb);
    const RegionCandidate *best = &candidates.front();
    for (const auto &cand : candidates)
        if (cand.objective < best->objective) // ties keep the smaller region index
            best = &cand;
    return result_at_wb(p_sb, best->clamped_min);
}

OracleResult brute_force_oracle(const SubbandAmplitudeVector &p_sb, std::size_t grid_points,
                                unsigned threads)
{
    if (grid_points < 1000)
        throw std::invalid_argument("brute_force_oracle: needs at least 1000 grid points");

    const double max_amp = *std::max_element(p_sb.values().begin(), p_sb.values().end());
    // Above (4/3)*max every subband maps to 1/2 and the objective is a single
    // parabola whose minimizer is in the explicit candidate set, so the grid
    // stops just past the last boundary.
    const double hi = (4.0 / 3.0) * max_amp + 1e-6 * max_amp;
    const double scale = hi / static_cast<double>(grid_points - 1);

    const auto better = [](const OracleResult &a, const OracleResult &b) {
        return a.total_sq_error < b.total_sq_error ||
               (a.total_sq_error == b.total_sq_error && a.wb < b.wb);
    };

    const auto scan = [&](std::size_t begin, std::size_t end) {
        OracleResult local{0.0, std::numeric_limits<double>::infinity()};
        for (std::size_t i = begin; i < end; ++i)
        {
            const double p = static_cast<double>(i) * scale;
            const OracleResult probe{p, error_at(p_sb, p)};
            if (better(probe, local))
                local = probe;
        }
        return local;
    };

    unsigned workers = threads != 0 ? threads : std::thread::hardware_concurrency();
    workers = std::max(1u, std::min<unsigned>(workers, 64));

    OracleResult best{0.0, std::numeric_limits<double>::infinity()};
    if (workers == 1)
    {
        best = scan(0, grid_points);
    }
    else
    {
        std::vector<OracleResult> partial(workers);
        std::vector<std::thread> pool;
        pool.reserve(workers);
        const std::size_t chunk = (grid_points + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w)
        {
            const std::size_t begin = std::min<std::size_t>(w * chunk, grid_points);
            const std::size_t end = std::min<std::size_t>(begin + chunk, grid_points);
            pool.emplace_back([&, w, begin, end] { partial[w] = scan(begin, end); });
        }
        for (auto &t : pool)
            t.join();
        for (const auto &p : partial)
            if (better(p, best))
                best = p;
    }

    // Region boundaries and per-region unconstrained minimizers, evaluated
    // through the same direct error route as the grid.
    std::vector<double> extras;
    extras.reserve(2 * p_sb.size() + 1);
    for (std::size_t s = 0; s < p_sb.size(); ++s)
        extras.push_back((4.0 / 3.0) * p_sb[s]);
    std::vector<double> sorted(p_sb.values());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t n = 0; n <= sorted.size(); ++n)
    {
        double num = 0.0;
        double den = 0.0;
        for (std::size_t s = 0; s < sorted.size(); ++s)
        {
            const double r = s < n ? 0.5 : 1.0;
            num += sorted[s] * r;
            den += r * r;
        }
        extras.push_back(num / den);
    }
    for (double p : extras)
    {
        if (!(p > 0.0))
            continue;
        const OracleResult probe{p, error_at(p_sb, p)};
        if (better(probe, best))
            best = probe;
    }
    return best;
}

EstimatorResult evaluate_estimator(const SubbandAmplitudeVector &p_sb, WbMethod method)
{
    switch (method)
    {
    case WbMethod::linear:
        return result_at_wb(p_sb, linear_average_wb(p_sb));
    case WbMethod::suboptimal:
        return result_at_wb(p_sb, suboptimal_wb(p_sb));
    case WbMethod::optimal:
        return optimal_wb(p_sb);
    }
    throw std::invalid_argument("evaluate_estimator: unknown method");
}

} // namespace t2amp

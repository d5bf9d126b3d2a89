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

#include <catch2/catch_amalgamated.hpp>

#include "t2amp/amplitude.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

using namespace t2amp;

TEST_CASE("SubbandAmplitudeVector - construction invariants")
{
    CHECK_NOTHROW(SubbandAmplitudeVector{{0.5, 1.0}});
    CHECK_NOTHROW(SubbandAmplitudeVector{{0.0, 2.0}}); // zero entries allowed
    CHECK_NOTHROW(SubbandAmplitudeVector{{3.0}});      // single subband allowed

    CHECK_THROWS_AS(SubbandAmplitudeVector{std::vector<double>{}}, std::invalid_argument);
    CHECK_THROWS_AS((SubbandAmplitudeVector{{0.0, 0.0}}), std::invalid_argument);
    CHECK_THROWS_AS((SubbandAmplitudeVector{{1.0, -0.5}}), std::invalid_argument);
    CHECK_THROWS_AS((SubbandAmplitudeVector{{1.0, std::numeric_limits<double>::quiet_NaN()}}),
                    std::invalid_argument);
    CHECK_THROWS_AS((SubbandAmplitudeVector{{std::numeric_limits<double>::infinity()}}),
                    std::invalid_argument);
}

TEST_CASE("build_wb_grid - anchored at the strongest beam")
{
    // single beam anchors the grid at itself
    const auto grid = build_wb_grid(std::vector<double>{0.0});
    CHECK(grid.anchor_db == 0.0);
    CHECK(grid.levels_db[7] == 0.0);
    const std::array<double, 8> expected{-21.072099696478684, -18.06179973983887,
                                         -15.051499783199061, -12.041199826559248,
                                         -9.030899869919436,  -6.020599913279624,
                                         -3.010299956639812,  0.0};
    for (int i = 0; i < 8; ++i)
        CHECK(grid.levels_db[i] == Catch::Approx(expected[i]).margin(1e-12));

    // max selects the anchor
    const auto grid2 = build_wb_grid(std::vector<double>{0.0, -3.01});
    CHECK(grid2.anchor_db == 0.0);
    for (int i = 0; i < 8; ++i)
        CHECK(grid2.levels_db[i] == grid.levels_db[i]);

    const auto grid3 = build_wb_grid(std::vector<double>{-6.02, -12.04});
    CHECK(grid3.anchor_db == -6.02);
    const std::array<double, 8> expected3{-27.092099696478684, -24.08179973983887,
                                          -21.07149978319906,  -18.061199826559246,
                                          -15.050899869919435, -12.040599913279625,
                                          -9.030299956639812,  -6.02};
    for (int i = 0; i < 8; ++i)
        CHECK(grid3.levels_db[i] == Catch::Approx(expected3[i]).margin(1e-12));

    CHECK_THROWS_AS(build_wb_grid(std::vector<double>{}), std::invalid_argument);
    CHECK_THROWS_AS(build_wb_grid(std::vector<double>{std::nan("")}), std::invalid_argument);
}

TEST_CASE("build_wb_grid - adjacent level gaps all equal one step")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> anchor(-40.0, 40.0);
    for (int rep = 0; rep < 200; ++rep)
    {
        const auto grid = build_wb_grid(std::vector<double>{anchor(rng), anchor(rng)});
        CHECK(grid.levels_db[7] == grid.anchor_db);
        for (int i = 0; i < 7; ++i)
        {
            CHECK(grid.levels_db[i + 1] > grid.levels_db[i]);
            CHECK(std::abs(grid.levels_db[i + 1] - grid.levels_db[i] - wb_step_db) < 1e-12);
        }
    }
}

TEST_CASE("quantize_wb_index - nearest level, ties upward")
{
    const auto grid = build_wb_grid(std::vector<double>{0.0});
    CHECK(quantize_wb_index(0.0, grid) == 7);                 // exactly on the top level
    CHECK(quantize_wb_index(-wb_step_db, grid) == 6);         // exactly on a grid level
    CHECK(quantize_wb_index(-4.0, grid) == 6);                // |-4+3.01| < |-4+6.02|
    CHECK(quantize_wb_index(-wb_step_db / 2.0, grid) == 7);   // exact midpoint goes up
    CHECK(quantize_wb_index(-1000.0, grid) == 0);
    CHECK(quantize_wb_index(50.0, grid) == 7);
    CHECK_THROWS_AS(quantize_wb_index(std::nan(""), grid), std::invalid_argument);
}

TEST_CASE("quantize_wb_index - idempotent on the grid levels")
{
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> anchor(-30.0, 30.0);
    for (int rep = 0; rep < 200; ++rep)
    {
        const auto grid = build_wb_grid(std::vector<double>{anchor(rng)});
        for (int m = 0; m < 8; ++m)
            CHECK(quantize_wb_index(grid.levels_db[m], grid) == m);
    }
}

TEST_CASE("sb_levels_for_beam - one step below the WB level")
{
    const auto grid = build_wb_grid(std::vector<double>{0.0});
    const auto top = sb_levels_for_beam(grid, 7);
    CHECK(top.high_db == 0.0);
    CHECK(top.low_db == Catch::Approx(-3.010299956639812).margin(1e-12));

    const auto next = sb_levels_for_beam(grid, 6);
    CHECK(next.high_db == Catch::Approx(-3.010299956639812).margin(1e-12));
    CHECK(next.low_db == Catch::Approx(-6.020599913279624).margin(1e-12));

    const auto grid3 = build_wb_grid(std::vector<double>{-6.02});
    const auto pair5 = sb_levels_for_beam(grid3, 5);
    CHECK(pair5.high_db == Catch::Approx(-12.040599913279625).margin(1e-12));
    CHECK(pair5.low_db == Catch::Approx(-15.050899869919435).margin(1e-12));

    CHECK_THROWS_AS(sb_levels_for_beam(grid, -1), std::invalid_argument);
    CHECK_THROWS_AS(sb_levels_for_beam(grid, 8), std::invalid_argument);
}

TEST_CASE("quantize_sb_index_db - endpoints and midpoint tie")
{
    const auto grid = build_wb_grid(std::vector<double>{0.0});
    const auto pair = sb_levels_for_beam(grid, 7); // high 0, low -step
    CHECK(quantize_sb_index_db(pair.high_db, pair) == 1);
    CHECK(quantize_sb_index_db(pair.low_db, pair) == 0);
    CHECK(quantize_sb_index_db(-wb_step_db / 2.0, pair) == 1); // tie broken upward
    CHECK(quantize_sb_index_db(-0.1, pair) == 1);
    CHECK(quantize_sb_index_db(-2.8, pair) == 0);
    CHECK_THROWS_AS(quantize_sb_index_db(std::nan(""), pair), std::invalid_argument);
}

TEST_CASE("quantize_sb_linear - 3/4 threshold against the WB amplitude")
{
    const SubbandAmplitudeVector two_subbands{{0.5, 1.0}};
    const auto r = quantize_sb_linear(two_subbands, 0.75);
    REQUIRE(r.size() == 2);
    CHECK(r[0] == 0.5);
    CHECK(r[1] == 1.0);
    CHECK(0.75 * r[0] == 0.375);
    CHECK(0.75 * r[1] == 0.75);

    const auto r_unit = quantize_sb_linear(two_subbands, 1.0);
    CHECK(1.0 * r_unit[0] == 0.5);
    CHECK(1.0 * r_unit[1] == 1.0);

    const SubbandAmplitudeVector flat{{0.42, 0.42, 0.42}};
    for (double value : quantize_sb_linear(flat, 0.42))
        CHECK(value == 1.0);

    // input exactly on the threshold maps to 1
    const SubbandAmplitudeVector boundary{{0.75, 0.1}};
    CHECK(quantize_sb_linear(boundary, 1.0)[0] == 1.0);

    CHECK_THROWS_AS(quantize_sb_linear(two_subbands, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(quantize_sb_linear(two_subbands, -1.0), std::invalid_argument);
}

TEST_CASE("rnsqe - worked values and error paths")
{
    const SubbandAmplitudeVector observed{{0.5, 1.0}};
    CHECK(rnsqe(observed, std::vector<double>{0.375, 0.75}) == 0.25);
    CHECK(rnsqe(observed, observed.values()) == 0.0);
    CHECK(rnsqe(observed, std::vector<double>{0.45, 0.9}) == Catch::Approx(0.1).margin(1e-12));

    CHECK_THROWS_AS(rnsqe(observed, std::vector<double>{1.0}), std::invalid_argument);
}

TEST_CASE("rnsqe - scale invariance")
{
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> amp(0.01, 10.0);
    for (double alpha : {0.5, 3.0, 0.037, 41.5})
    {
        for (int rep = 0; rep < 100; ++rep)
        {
            std::vector<double> x(6), y(6), sx(6), sy(6);
            for (int s = 0; s < 6; ++s)
            {
                x[s] = amp(rng);
                y[s] = amp(rng);
                sx[s] = alpha * x[s];
                sy[s] = alpha * y[s];
            }
            const double base = rnsqe(SubbandAmplitudeVector{x}, y);
            const double scaled = rnsqe(SubbandAmplitudeVector{sx}, sy);
            CHECK(std::abs(base - scaled) < 1e-12);
        }
    }
}

TEST_CASE("linear and dB subband quantizers agree away from their thresholds")
{
    // The dB pair is the exact dB image of {p_wb/2, p_wb}. The dB rule cuts at
    // the geometric mean p_wb/sqrt(2), the linear rule at 0.75*p_wb; only the
    // band between the two can disagree.
    std::mt19937_64 rng(14);
    std::uniform_real_distribution<double> wb_dist(0.1, 10.0);
    std::uniform_real_distribution<double> frac(0.01, 1.8);
    int checked = 0;
    for (int rep = 0; rep < 2000; ++rep)
    {
        const double wb = wb_dist(rng);
        const SbLevelPair pair{to_db(wb), to_db(wb / 2.0)};
        const double p = frac(rng) * wb;
        const double lo = wb / std::sqrt(2.0);
        const double hi = 0.75 * wb;
        if (p >= 0.999 * lo && p <= 1.001 * hi)
            continue; // ambiguous band between the two thresholds
        const SubbandAmplitudeVector one{{p}};
        const int k2 = quantize_sb_index_db(to_db(p), pair);
        const double r = quantize_sb_linear(one, wb)[0];
        CHECK((k2 == 1) == (r == 1.0));
        ++checked;
    }
    CHECK(checked > 1000);
}

TEST_CASE("wb_level_amplitude - index 0 semantics")
{
    const auto grid = build_wb_grid(std::vector<double>{0.0});
    CHECK(wb_level_amplitude(grid, 0) == 0.0);
    CHECK(wb_level_amplitude(grid, 0, false) ==
          Catch::Approx(from_db(grid.levels_db[0])).margin(1e-15));
    CHECK(wb_level_amplitude(grid, 7) == Catch::Approx(1.0).margin(1e-12));
    CHECK_THROWS_AS(wb_level_amplitude(grid, 8), std::invalid_argument);
}

TEST_CASE("db conversions - round trip under both conventions")
{
    for (DbConvention conv : {DbConvention::amplitude_20log10, DbConvention::power_10log10})
    {
        for (double a : {0.01, 0.5, 1.0, 7.3})
            CHECK(from_db(to_db(a, conv), conv) == Catch::Approx(a).epsilon(1e-12));
    }
    // one halving of amplitude is one grid step under the 20log10 convention
    // only for a sqrt(2) ratio; a factor 2 in amplitude is two steps
    CHECK(to_db(1.0) - to_db(1.0 / std::sqrt(2.0)) == Catch::Approx(wb_step_db).margin(1e-12));
    CHECK(to_db(1.0) - to_db(0.5) == Catch::Approx(2.0 * wb_step_db).margin(1e-12));
    CHECK_THROWS_AS(to_db(0.0), std::invalid_argument);
    CHECK_THROWS_AS(to_db(-1.0), std::invalid_argument);
}

TEST_CASE("QuantizedFeedback - invariant validation")
{
    QuantizedFeedback fb;
    fb.mode = FeedbackMode::wb_only;
    fb.k1 = {7, 3};
    CHECK_NOTHROW(fb.validate());

    fb.k1 = {8};
    CHECK_THROWS_AS(fb.validate(), std::invalid_argument);

    fb.k1 = {7};
    fb.k2 = {{1, 0}};
    CHECK_THROWS_AS(fb.validate(), std::invalid_argument); // k2 must be empty in wb_only

    fb.mode = FeedbackMode::joint_wb_and_sb;
    CHECK_NOTHROW(fb.validate());

    fb.k2 = {{1, 2}};
    CHECK_THROWS_AS(fb.validate(), std::invalid_argument);

    fb.k2 = {{1, 0}, {1, 1}};
    CHECK_THROWS_AS(fb.validate(), std::invalid_argument); // more rows than beams
}

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

#include "t2amp/codebook.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace t2amp
{

namespace
{

constexpr double two_pi = 2.0 * 3.14159265358979323846;

double norm2(const std::vector<cdouble> &v)
{
    double acc = 0.0;
    for (const auto &x : v)
        acc += std::norm(x);
    return std::sqrt(acc);
}

unsigned constellation_size(PskConstellation c)
{
    return c == PskConstellation::qpsk ? 4u : 8u;
}

} // namespace

std::vector<cdouble> generate_dft_beam(AntennaDims dims, Oversampling oversampling,
                                       std::size_t theta1, std::size_t theta2)
{
    if (dims.n1 == 0 || dims.n2 == 0 || oversampling.o1 == 0 || oversampling.o2 == 0)
        throw std::invalid_argument("generate_dft_beam: antenna dims and oversampling must be >= 1");
    if (theta1 >= dims.n1 * oversampling.o1)
        throw std::invalid_argument("generate_dft_beam: theta1 out of range");
    if (theta2 >= dims.n2 * oversampling.o2)
        throw std::invalid_argument("generate_dft_beam: theta2 out of range");

    const double d1 = static_cast<double>(dims.n1 * oversampling.o1);
    const double d2 = static_cast<double>(dims.n2 * oversampling.o2);
    const double scale = 1.0 / std::sqrt(static_cast<double>(dims.n1 * dims.n2));

    std::vector<cdouble> beam(dims.n1 * dims.n2);
    for (std::size_t m1 = 0; m1 < dims.n1; ++m1)
    {
        for (std::size_t m2 = 0; m2 < dims.n2; ++m2)
        {
            const double phase = two_pi * (static_cast<double>(m1 * theta1) / d1 +
                                           static_cast<double>(m2 * theta2) / d2);
            beam[m1 * dims.n2 + m2] = scale * cdouble{std::cos(phase), std::sin(phase)};
        }
    }
    return beam;
}

void BeamSet::validate() const
{
    const std::size_t L = beams.size();
    if (L < 2 || L > 4)
        throw std::invalid_argument("BeamSet: number of beams must be in {2, 3, 4}");
    if (beam_indices.size() != L)
        throw std::invalid_argument("BeamSet: beam_indices size mismatch");
    std::set<std::pair<std::size_t, std::size_t>> unique(beam_indices.begin(), beam_indices.end());
    if (unique.size() != L)
        throw std::invalid_argument("BeamSet: beam index pairs must be distinct");
    for (const auto &beam : beams)
    {
        if (beam.size() != antenna_dims.n1 * antenna_dims.n2)
            throw std::invalid_argument("BeamSet: beam length mismatch");
        if (std::abs(norm2(beam) - 1.0) > 1e-12)
            throw std::invalid_argument("BeamSet: beams must have unit norm");
    }
}

BeamSet make_beam_set(AntennaDims dims, Oversampling oversampling,
                      std::span<const std::pair<std::size_t, std::size_t>> beam_indices)
{
    BeamSet set;
    set.antenna_dims = dims;
    set.oversampling = oversampling;
    set.beam_indices.assign(beam_indices.begin(), beam_indices.end());
    set.beams.reserve(beam_indices.size());
    for (const auto &[t1, t2] : beam_indices)
        set.beams.push_back(generate_dft_beam(dims, oversampling, t1, t2));
    set.validate();
    return set;
}

cdouble psk_phase(PskConstellation constellation, unsigned index)
{
    const unsigned m = constellation_size(constellation);
    const double angle = two_pi * static_cast<double>(index % m) / static_cast<double>(m);
    return cdouble{std::cos(angle), std::sin(angle)};
}

void LayerCoefficients::validate() const
{
    const std::size_t width = 2 * num_beams;
    if (num_beams == 0)
        throw std::invalid_argument("LayerCoefficients: needs at least one beam");
    if (wb_amp.size() != width)
        throw std::invalid_argument("LayerCoefficients: wb_amp must have 2L entries");
    if (sb_amp.empty() || phases.size() != sb_amp.size())
        throw std::invalid_argument("LayerCoefficients: needs matching per-subband sb_amp/phases");
    for (double a : wb_amp)
        if (!std::isfinite(a) || a < 0.0)
            throw std::invalid_argument("LayerCoefficients: wb_amp entries must be finite and >= 0");

    const unsigned m = constellation_size(constellation);
    for (std::size_t s = 0; s < sb_amp.size(); ++s)
    {
        if (sb_amp[s].size() != width || phases[s].size() != width)
            throw std::invalid_argument("LayerCoefficients: per-subband rows must have 2L entries");
        for (double a : sb_amp[s])
            if (!std::isfinite(a) || a < 0.0)
                throw std::invalid_argument("LayerCoefficients: sb_amp entries must be finite and >= 0");
        for (const cdouble &c : phases[s])
        {
            if (std::abs(std::abs(c) - 1.0) > 1e-12)
                throw std::invalid_argument("LayerCoefficients: phases must have unit modulus");
            // the argument has to sit on the configured constellation
            const double steps = std::arg(c) / (two_pi / static_cast<double>(m));
            if (std::abs(steps - std::round(steps)) > 1e-9)
                throw std::invalid_argument("LayerCoefficients: phase not on the constellation");
        }
    }
}

LayerCoefficients make_layer_coefficients(std::size_t num_beams, PskConstellation constellation,
                                          std::vector<double> wb_amp,
                                          std::vector<std::vector<double>> sb_amp,
                                          std::vector<std::vector<cdouble>> phases)
{
    LayerCoefficients coeffs;
    coeffs.num_beams = num_beams;
    coeffs.constellation = constellation;
    coeffs.wb_amp = std::move(wb_amp);
    coeffs.sb_amp = std::move(sb_amp);
    coeffs.phases = std::move(phases);
    coeffs.validate();
    return coeffs;
}

LayerCoefficients
make_layer_coefficients_from_indices(std::size_t num_beams, PskConstellation constellation,
                                     std::vector<double> wb_amp,
                                     std::vector<std::vector<double>> sb_amp,
                                     const std::vector<std::vector<unsigned>> &phase_indices)
{
    std::vector<std::vector<cdouble>> phases;
    phases.reserve(phase_indices.size());
    for (const auto &row : phase_indices)
    {
        std::vector<cdouble> prow;
        prow.reserve(row.size());
        for (unsigned idx : row)
            prow.push_back(psk_phase(constellation, idx));
        phases.push_back(std::move(prow));
    }
    return make_layer_coefficients(num_beams, constellation, std::move(wb_amp), std::move(sb_amp),
                                   std::move(phases));
}

std::vector<cdouble> assemble_layer(const BeamSet &beams, const LayerCoefficients &coeffs,
                                    std::size_t subband)
{
    const std::size_t L = coeffs.num_beams;
    if (beams.num_beams() != L)
        throw std::invalid_argument("assemble_layer: beam count does not match coefficients");
    if (subband >= coeffs.num_subbands())
        throw std::invalid_argument("assemble_layer: subband out of range");

    const std::size_t block = beams.antenna_dims.n1 * beams.antenna_dims.n2;
    std::vector<cdouble> combined(2 * block, cdouble{0.0, 0.0});
    for (std::size_t pol = 0; pol < 2; ++pol)
    {
        for (std::size_t i = 0; i < L; ++i)
        {
            const std::size_t idx = pol * L + i;
            const cdouble weight =
                coeffs.wb_amp[idx] * coeffs.sb_amp[subband][idx] * coeffs.phases[subband][idx];
            for (std::size_t k = 0; k < block; ++k)
                combined[pol * block + k] += beams.beams[i][k] * weight;
        }
    }
    return combined;
}

PrecoderMatrix assemble_precoder(std::span<const std::vector<cdouble>> layers, std::size_t rank)
{
    if (rank < 1 || rank > 2)
        throw std::invalid_argument("assemble_precoder: rank must be 1 or 2");
    if (layers.size() != rank)
        throw std::invalid_argument("assemble_precoder: need one layer vector per rank");

    const double target = rank == 1 ? 1.0 : 1.0 / std::sqrt(2.0);
    PrecoderMatrix precoder;
    precoder.rank = rank;
    precoder.columns.reserve(rank);
    for (const auto &layer : layers)
    {
        if (layer.size() != layers.front().size())
            throw std::invalid_argument("assemble_precoder: layer length mismatch");
        const double norm = norm2(layer);
        if (!(norm > 0.0))
            throw std::invalid_argument("assemble_precoder: zero layer cannot be normalized");
        std::vector<cdouble> column(layer.size());
        const double scale = target / norm;
        for (std::size_t k = 0; k < layer.size(); ++k)
            column[k] = layer[k] * scale;
        precoder.columns.push_back(std::move(column));
    }
    return precoder;
}

QuantizedFeedback compute_feedback(std::span<const SubbandAmplitudeVector> per_beam_sb_amplitudes,
                                   FeedbackMode mode, WbMethod wb_method, DbConvention conv)
{
    if (per_beam_sb_amplitudes.empty())
        throw std::invalid_argument("compute_feedback: needs at least one logical beam");
    const std::size_t subbands = per_beam_sb_amplitudes.front().size();
    for (const auto &beam : per_beam_sb_amplitudes)
        if (beam.size() != subbands)
            throw std::invalid_argument("compute_feedback: all beams must share the subband count");

    const std::size_t beams = per_beam_sb_amplitudes.size();
    std::vector<double> wb_linear(beams);
    std::vector<double> wb_db(beams);
    for (std::size_t b = 0; b < beams; ++b)
    {
        wb_linear[b] = evaluate_estimator(per_beam_sb_amplitudes[b], wb_method).wb_amplitude;
        wb_db[b] = to_db(wb_linear[b], conv);
    }

    const WbLevelGrid grid = build_wb_grid(wb_db);

    QuantizedFeedback feedback;
    feedback.mode = mode;
    feedback.k1.resize(beams);
    for (std::size_t b = 0; b < beams; ++b)
        feedback.k1[b] = quantize_wb_index(wb_db[b], grid);

    if (mode == FeedbackMode::joint_wb_and_sb)
    {
        feedback.k2.resize(beams);
        for (std::size_t b = 0; b < beams; ++b)
        {
            feedback.k2[b].resize(subbands);
            const double threshold = 0.75 * wb_linear[b];
            for (std::size_t s = 0; s < subbands; ++s)
                feedback.k2[b][s] = per_beam_sb_amplitudes[b][s] >= threshold ? 1 : 0;
        }
    }
    feedback.validate();
    return feedback;
}

} // namespace t2amp

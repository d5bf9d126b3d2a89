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

#ifndef T2AMP_CODEBOOK_HPP
#define T2AMP_CODEBOOK_HPP

#include "t2amp/amplitude.hpp"
#include "t2amp/estimators.hpp"

#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace t2amp
{

using cdouble = std::complex<double>;

struct AntennaDims
{
    std::size_t n1 = 1; // horizontal elements
    std::size_t n2 = 1; // vertical elements
};

struct Oversampling
{
    std::size_t o1 = 4;
    std::size_t o2 = 4;
};

// Oversampled 2D DFT beam for beam indices (theta1, theta2). Element
// (m1, m2) sits at position m1*n2 + m2 and is proportional to
// exp(j*2*pi*(m1*theta1/(n1*o1) + m2*theta2/(n2*o2))), normalized to unit norm.
std::vector<cdouble> generate_dft_beam(AntennaDims dims, Oversampling oversampling,
                                       std::size_t theta1, std::size_t theta2);

// L selected beams of one layer. L is configurable in {2, 3, 4}; beam index
// pairs must be distinct.
struct BeamSet
{
    AntennaDims antenna_dims;
    Oversampling oversampling;
    std::vector<std::pair<std::size_t, std::size_t>> beam_indices;
    std::vector<std::vector<cdouble>> beams; // unit-norm vectors of length n1*n2

    std::size_t num_beams() const noexcept { return beams.size(); }
    void validate() const;
};

BeamSet make_beam_set(AntennaDims dims, Oversampling oversampling,
                      std::span<const std::pair<std::size_t, std::size_t>> beam_indices);

enum class PskConstellation
{
    qpsk, // 2 bits
    psk8  // 3 bits
};

// Unit-modulus co-phasing coefficient exp(j*2*pi*index/M) for the given
// constellation; the index is taken modulo M.
cdouble psk_phase(PskConstellation constellation, unsigned index);

// Per-layer combining coefficients for 2L logical beams. Index i maps to
// polarization i/L and physical beam i%L; subband-dependent quantities are
// stored per subband.
struct LayerCoefficients
{
    std::size_t num_beams = 0; // L
    PskConstellation constellation = PskConstellation::qpsk;
    std::vector<double> wb_amp;                 // 2L entries, >= 0
    std::vector<std::vector<double>> sb_amp;    // [subband][2L], >= 0
    std::vector<std::vector<cdouble>> phases;   // [subband][2L], unit modulus

    std::size_t num_subbands() const noexcept { return sb_amp.size(); }
    void validate() const;
};

LayerCoefficients make_layer_coefficients(std::size_t num_beams, PskConstellation constellation,
                                          std::vector<double> wb_amp,
                                          std::vector<std::vector<double>> sb_amp,
                                          std::vector<std::vector<cdouble>> phases);

// Same, with phases given as constellation indices.
LayerCoefficients
make_layer_coefficients_from_indices(std::size_t num_beams, PskConstellation constellation,
                                     std::vector<double> wb_amp,
                                     std::vector<std::vector<double>> sb_amp,
                                     const std::vector<std::vector<unsigned>> &phase_indices);

// Weighted combination of the L beams on one subband. Per polarization r the
// combined vector is sum_i beam_i * wb_amp[r*L+i] * sb_amp[r*L+i] * phase[r*L+i];
// the two polarization blocks are stacked into a vector of length 2*n1*n2.
// The result is not normalized.
std::vector<cdouble> assemble_layer(const BeamSet &beams, const LayerCoefficients &coeffs,
                                    std::size_t subband);

// Precoding matrix with rank-dependent column normalization: a rank-1 column
// has unit norm, rank-2 columns have norm 1/sqrt(2).
struct PrecoderMatrix
{
    std::size_t rank = 1;
    std::vector<std::vector<cdouble>> columns;
};

PrecoderMatrix assemble_precoder(std::span<const std::vector<cdouble>> layers, std::size_t rank);

// Full amplitude feedback pipeline for one layer: chooses each logical beam's
// WB amplitude with the requested method, builds the 3-bit dB grid anchored
// at the strongest beam, quantizes the WB indices, and in joint mode derives
// the per-subband 1-bit indices from the two-level linear quantizer at the
// chosen WB amplitude.
QuantizedFeedback compute_feedback(std::span<const SubbandAmplitudeVector> per_beam_sb_amplitudes,
                                   FeedbackMode mode, WbMethod wb_method,
                                   DbConvention conv = DbConvention::amplitude_20log10);

} // namespace t2amp

#endif

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

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "t2amp/codebook.hpp"
#include "t2amp/estimators.hpp"
#include "t2amp/rng.hpp"
#include "t2amp/sweep.hpp"

#include <utility>
#include <vector>

namespace py = pybind11;
using namespace t2amp;

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Wideband/subband amplitude quantization for Type-2 codebook CSI feedback";
#ifdef T2AMP_VERSION
    m.attr("__version__") = T2AMP_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
    m.attr("wb_step_db") = wb_step_db;

    py::enum_<DbConvention>(m, "DbConvention")
        .value("amplitude_20log10", DbConvention::amplitude_20log10)
        .value("power_10log10", DbConvention::power_10log10);

    py::enum_<FeedbackMode>(m, "FeedbackMode")
        .value("wb_only", FeedbackMode::wb_only)
        .value("joint_wb_and_sb", FeedbackMode::joint_wb_and_sb);

    py::enum_<WbMethod>(m, "WbMethod")
        .value("linear", WbMethod::linear)
        .value("optimal", WbMethod::optimal)
        .value("suboptimal", WbMethod::suboptimal);

    py::enum_<PskConstellation>(m, "PskConstellation")
        .value("qpsk", PskConstellation::qpsk)
        .value("psk8", PskConstellation::psk8);

    py::class_<SubbandAmplitudeVector>(m, "SubbandAmplitudeVector",
                                       "Observed per-subband linear amplitudes of one beam")
        .def(py::init<std::vector<double>>(), py::arg("values"))
        .def_property_readonly("values", &SubbandAmplitudeVector::values)
        .def("__len__", &SubbandAmplitudeVector::size)
        .def("__getitem__",
             [](const SubbandAmplitudeVector &v, std::size_t s) {
                 if (s >= v.size())
                     throw py::index_error();
                 return v[s];
             })
        .def("__repr__", [](const SubbandAmplitudeVector &v) {
            std::string text = "SubbandAmplitudeVector([";
            for (std::size_t s = 0; s < v.size(); ++s)
                text += (s ? ", " : "") + std::to_string(v[s]);
            return text + "])";
        });

    py::class_<WbLevelGrid>(m, "WbLevelGrid")
        .def_readonly("anchor_db", &WbLevelGrid::anchor_db)
        .def_readonly("step_db", &WbLevelGrid::step_db)
        .def_property_readonly("levels_db", [](const WbLevelGrid &g) {
            return std::vector<double>(g.levels_db.begin(), g.levels_db.end());
        });

    py::class_<SbLevelPair>(m, "SbLevelPair")
        .def(py::init<double, double>(), py::arg("high_db"), py::arg("low_db"))
        .def_readonly("high_db", &SbLevelPair::high_db)
        .def_readonly("low_db", &SbLevelPair::low_db);

    py::class_<QuantizedFeedback>(m, "QuantizedFeedback")
        .def_readonly("mode", &QuantizedFeedback::mode)
        .def_readonly("k1", &QuantizedFeedback::k1)
        .def_readonly("k2", &QuantizedFeedback::k2)
        .def("validate", &QuantizedFeedback::validate);

    py::class_<EstimatorResult>(m, "EstimatorResult")
        .def_readonly("wb_amplitude", &EstimatorResult::wb_amplitude)
        .def_readonly("r_vector", &EstimatorResult::r_vector)
        .def_readonly("sb_reconstruction", &EstimatorResult::sb_reconstruction)
        .def_readonly("total_sq_error", &EstimatorResult::total_sq_error)
        .def_readonly("rnsqe", &EstimatorResult::rnsqe);

    py::class_<RegionCandidate>(m, "RegionCandidate")
        .def_readonly("n", &RegionCandidate::n)
        .def_readonly("r_pattern", &RegionCandidate::r_pattern)
        .def_readonly("unconstrained_min", &RegionCandidate::unconstrained_min)
        .def_readonly("clamped_min", &RegionCandidate::clamped_min)
        .def_readonly("objective", &RegionCandidate::objective);

    py::class_<OracleResult>(m, "OracleResult")
        .def_readonly("wb", &OracleResult::wb)
        .def_readonly("total_sq_error", &OracleResult::total_sq_error);

    m.def("to_db", &to_db, py::arg("amplitude"),
          py::arg("conv") = DbConvention::amplitude_20log10);
    m.def("from_db", &from_db, py::arg("level_db"),
          py::arg("conv") = DbConvention::amplitude_20log10);
    m.def(
        "build_wb_grid",
        [](const std::vector<double> &amplitudes_db) { return build_wb_grid(amplitudes_db); },
        py::arg("wb_amplitudes_db"), "Eight-level WB grid anchored at the strongest beam");
    m.def("quantize_wb_index", &quantize_wb_index, py::arg("p_wb_db"), py::arg("grid"));
    m.def("wb_level_amplitude", &wb_level_amplitude, py::arg("grid"), py::arg("k1"),
          py::arg("k0_is_zero") = true, py::arg("conv") = DbConvention::amplitude_20log10);
    m.def("sb_levels_for_beam", &sb_levels_for_beam, py::arg("grid"), py::arg("k1"));
    m.def("quantize_sb_index_db", &quantize_sb_index_db, py::arg("p_sb_db"), py::arg("pair"));
    m.def("quantize_sb_linear", &quantize_sb_linear, py::arg("p_sb"), py::arg("p_wb"));
    m.def(
        "rnsqe",
        [](const SubbandAmplitudeVector &observed, const std::vector<double> &reconstructed) {
            return rnsqe(observed, reconstructed);
        },
        py::arg("observed"), py::arg("reconstructed"));

    m.def("linear_average_wb", &linear_average_wb, py::arg("p_sb"));
    m.def("suboptimal_wb", &suboptimal_wb, py::arg("p_sb"));
    m.def("optimal_region_candidates", &optimal_region_candidates, py::arg("p_sb"));
    m.def("optimal_wb", &optimal_wb, py::arg("p_sb"));
    m.def("brute_force_oracle", &brute_force_oracle, py::arg("p_sb"), py::arg("grid_points"),
          py::arg("threads") = 0, py::call_guard<py::gil_scoped_release>());
    m.def("evaluate_estimator", &evaluate_estimator, py::arg("p_sb"), py::arg("method"));

    py::class_<AntennaDims>(m, "AntennaDims")
        .def(py::init<std::size_t, std::size_t>(), py::arg("n1"), py::arg("n2"))
        .def_readonly("n1", &AntennaDims::n1)
        .def_readonly("n2", &AntennaDims::n2);

    py::class_<Oversampling>(m, "Oversampling")
        .def(py::init<std::size_t, std::size_t>(), py::arg("o1"), py::arg("o2"))
        .def_readonly("o1", &Oversampling::o1)
        .def_readonly("o2", &Oversampling::o2);

    py::class_<BeamSet>(m, "BeamSet")
        .def_readonly("antenna_dims", &BeamSet::antenna_dims)
        .def_readonly("oversampling", &BeamSet::oversampling)
        .def_readonly("beam_indices", &BeamSet::beam_indices)
        .def_readonly("beams", &BeamSet::beams)
        .def_property_readonly("num_beams", &BeamSet::num_beams)
        .def("validate", &BeamSet::validate);

    py::class_<LayerCoefficients>(m, "LayerCoefficients")
        .def_readonly("num_beams", &LayerCoefficients::num_beams)
        .def_readonly("constellation", &LayerCoefficients::constellation)
        .def_readonly("wb_amp", &LayerCoefficients::wb_amp)
        .def_readonly("sb_amp", &LayerCoefficients::sb_amp)
        .def_readonly("phases", &LayerCoefficients::phases)
        .def("validate", &LayerCoefficients::validate);

    py::class_<PrecoderMatrix>(m, "PrecoderMatrix")
        .def_readonly("rank", &PrecoderMatrix::rank)
        .def_readonly("columns", &PrecoderMatrix::columns);

    m.def("generate_dft_beam", &generate_dft_beam, py::arg("dims"), py::arg("oversampling"),
          py::arg("theta1"), py::arg("theta2"));
    m.def(
        "make_beam_set",
        [](AntennaDims dims, Oversampling os,
           const std::vector<std::pair<std::size_t, std::size_t>> &indices) {
            return make_beam_set(dims, os, indices);
        },
        py::arg("dims"), py::arg("oversampling"), py::arg("beam_indices"));
    m.def("psk_phase", &psk_phase, py::arg("constellation"), py::arg("index"));
    m.def("make_layer_coefficients", &make_layer_coefficients, py::arg("num_beams"),
          py::arg("constellation"), py::arg("wb_amp"), py::arg("sb_amp"), py::arg("phases"));
    m.def("make_layer_coefficients_from_indices", &make_layer_coefficients_from_indices,
          py::arg("num_beams"), py::arg("constellation"), py::arg("wb_amp"), py::arg("sb_amp"),
          py::arg("phase_indices"));
    m.def("assemble_layer", &assemble_layer, py::arg("beams"), py::arg("coeffs"),
          py::arg("subband"));
    m.def(
        "assemble_precoder",
        [](const std::vector<std::vector<cdouble>> &layers, std::size_t rank) {
            return assemble_precoder(layers, rank);
        },
        py::arg("layers"), py::arg("rank"));
    m.def(
        "compute_feedback",
        [](const std::vector<SubbandAmplitudeVector> &beams, FeedbackMode mode, WbMethod method,
           DbConvention conv) { return compute_feedback(beams, mode, method, conv); },
        py::arg("per_beam_sb_amplitudes"), py::arg("mode"), py::arg("wb_method"),
        py::arg("conv") = DbConvention::amplitude_20log10);

    py::class_<GaussianRng>(m, "GaussianRng", "Deterministic Box-Muller normal generator")
        .def(py::init<std::uint64_t>(), py::arg("seed"))
        .def("normal", &GaussianRng::normal)
        .def("uniform", &GaussianRng::uniform);
    m.def("derive_stream", &derive_stream, py::arg("seed"), py::arg("a"), py::arg("b"),
          py::arg("c"));

    py::class_<SweepConfig>(m, "SweepConfig")
        .def(py::init<>())
        .def_readwrite("subbands", &SweepConfig::subbands)
        .def_readwrite("variances", &SweepConfig::variances)
        .def_readwrite("min_amplitudes", &SweepConfig::min_amplitudes)
        .def_readwrite("trials", &SweepConfig::trials)
        .def_readwrite("seed", &SweepConfig::seed)
        .def_readwrite("methods", &SweepConfig::methods)
        .def_readwrite("oracle_check", &SweepConfig::oracle_check)
        .def_readwrite("threads", &SweepConfig::threads)
        .def("validate", &SweepConfig::validate);

    py::class_<SweepRow>(m, "SweepRow")
        .def_readonly("min_amplitude", &SweepRow::min_amplitude)
        .def_readonly("variance", &SweepRow::variance)
        .def_readonly("method", &SweepRow::method)
        .def_readonly("rms_nsqe", &SweepRow::rms_nsqe)
        .def_readonly("mean_nsqe", &SweepRow::mean_nsqe)
        .def_readonly("trials", &SweepRow::trials)
        .def_readonly("seed", &SweepRow::seed);

    m.def("generate_sb_amplitudes", &generate_sb_amplitudes, py::arg("subbands"),
          py::arg("variance"), py::arg("min_amplitude"), py::arg("rng"));
    m.def("run_sweep", &run_sweep, py::arg("config"), py::call_guard<py::gil_scoped_release>());
    m.def(
        "write_csv",
        [](const std::vector<SweepRow> &rows, const std::filesystem::path &destination) {
            write_csv(rows, destination);
        },
        py::arg("rows"), py::arg("destination"));
}

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

#include "t2amp/cli.hpp"

#include "t2amp/estimators.hpp"
#include "t2amp/sweep.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace t2amp
{

namespace
{

std::string g9(double value)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", value);
    return buf;
}

std::string join_g9(const std::vector<double> &values)
{
    std::string text;
    for (std::size_t i = 0; i < values.size(); ++i)
    {
        if (i)
            text += ' ';
        text += g9(values[i]);
    }
    return text;
}

std::uint64_t parse_seed(const std::string &text)
{
    if (text.empty() || text.front() == '-')
        throw std::invalid_argument("seed must be a non-negative decimal or 0x-prefixed value");
    std::size_t pos = 0;
    const unsigned long long value = std::stoull(text, &pos, 0);
    if (pos != text.size())
        throw std::invalid_argument("seed has trailing characters: '" + text + "'");
    return value;
}

WbMethod parse_method(const std::string &name)
{
    const auto method = wb_method_from_string(name);
    if (!method)
        throw CLI::ValidationError("--method", "expected linear, optimal or suboptimal");
    return *method;
}

void print_result(std::ostream &out, WbMethod method, const EstimatorResult &result)
{
    out << "method: " << to_string(method) << '\n'
        << "wb_amplitude: " << g9(result.wb_amplitude) << '\n'
        << "r_vector: " << join_g9(result.r_vector) << '\n'
        << "reconstruction: " << join_g9(result.sb_reconstruction) << '\n'
        << "total_sq_error: " << g9(result.total_sq_error) << '\n'
        << "rnsqe: " << g9(result.rnsqe) << '\n';
}

void run_quantize(std::ostream &out, const std::vector<double> &amplitudes,
                  const std::string &method_name, bool oracle, std::size_t oracle_points,
                  unsigned threads)
{
    const WbMethod method = parse_method(method_name);
    const SubbandAmplitudeVector input{amplitudes};
    const EstimatorResult result = evaluate_estimator(input, method);
    print_result(out, method, result);
    if (oracle)
    {
        const OracleResult reference = brute_force_oracle(input, oracle_points, threads);
        out << "oracle_wb: " << g9(reference.wb) << '\n'
            << "oracle_total_sq_error: " << g9(reference.total_sq_error) << '\n'
            << "oracle_gap: " << g9(result.total_sq_error - reference.total_sq_error) << '\n';
    }
}

void run_example(std::ostream &out)
{
    const SubbandAmplitudeVector input{{0.5, 1.0}};
    out << "subband amplitudes: " << join_g9(input.values()) << "\n\n";

    out << "region search (optimal method):\n";
    char line[160];
    std::snprintf(line, sizeof(line), "  %-3s %-14s %-12s %-12s %s\n", "n", "r_pattern",
                  "p_star", "clamped", "objective");
    out << line;
    for (const auto &cand : optimal_region_candidates(input))
    {
        std::snprintf(line, sizeof(line), "  %-3zu %-14s %-12s %-12s %s\n", cand.n,
                      join_g9(cand.r_pattern).c_str(), g9(cand.unconstrained_min).c_str(),
                      g9(cand.clamped_min).c_str(), g9(cand.objective).c_str());
        out << line;
    }
    out << '\n';

    std::snprintf(line, sizeof(line), "%-12s %-12s %-12s %s\n", "method", "wb", "rnsqe",
                  "reconstruction");
    out << line;
    for (const WbMethod method : {WbMethod::linear, WbMethod::optimal, WbMethod::suboptimal})
    {
        const EstimatorResult result = evaluate_estimator(input, method);
        std::snprintf(line, sizeof(line), "%-12s %-12s %-12s %s\n", to_string(method),
                      g9(result.wb_amplitude).c_str(), g9(result.rnsqe).c_str(),
                      join_g9(result.sb_reconstruction).c_str());
        out << line;
    }
}

} // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Wideband/subband amplitude quantization for Type-2 codebook CSI feedback"};
    app.require_subcommand(1);

    // quantize
    auto *quantize = app.add_subcommand("quantize", "Quantize one beam's subband amplitudes");
    std::vector<double> amplitudes;
    std::string method_name;
    bool oracle = false;
    std::size_t oracle_points = 1000001;
    unsigned threads = 0;
    quantize->add_option("--amplitudes", amplitudes, "Comma-separated subband amplitudes")
        ->required()
        ->delimiter(',');
    quantize->add_option("--method", method_name, "linear, optimal or suboptimal")->required();
    quantize->add_flag("--oracle", oracle, "Also run the brute-force oracle");
    quantize->add_option("--oracle-points", oracle_points, "Oracle grid points (>= 1000)");
    quantize->add_option("--threads", threads, "Worker threads, 0 = hardware");

    // sweep
    auto *sweep = app.add_subcommand("sweep", "Monte-Carlo RMS-NSQE sweep, written as CSV");
    SweepConfig config;
    std::string seed_text = "1";
    std::string out_path;
    std::vector<std::string> method_names{"linear", "optimal", "suboptimal"};
    sweep->add_option("--subbands", config.subbands, "Subbands per generated vector");
    sweep->add_option("--variances", config.variances, "Comma-separated variance axis")
        ->delimiter(',');
    sweep->add_option("--min-amplitudes", config.min_amplitudes,
                      "Comma-separated minimum amplitudes")
        ->delimiter(',');
    sweep->add_option("--trials", config.trials, "Trials per sweep point");
    sweep->add_option("--seed", seed_text, "Master seed, decimal or 0x-prefixed hex")
        ->check([](const std::string &s) -> std::string {
            try
            {
                parse_seed(s);
                return {};
            }
            catch (const std::exception &e)
            {
                return e.what();
            }
        });
    sweep->add_option("--out", out_path, "CSV destination path")->required();
    sweep->add_flag("--oracle-check", config.oracle_check,
                    "Cross-check every optimal trial against the oracle");
    sweep->add_option("--methods", method_names, "Subset of linear,optimal,suboptimal")
        ->delimiter(',');
    sweep->add_option("--threads", config.threads, "Worker threads, 0 = hardware");

    // example
    auto *example = app.add_subcommand("example", "Print the two-subband worked example");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &)
    {
        out << app.help();
        return 0;
    }
    catch (const CLI::ParseError &e)
    {
        err << "usage error: " << e.what() << '\n';
        return 1;
    }

    try
    {
        if (quantize->parsed())
        {
            run_quantize(out, amplitudes, method_name, oracle, oracle_points, threads);
        }
        else if (sweep->parsed())
        {
            config.seed = parse_seed(seed_text);
            config.methods.clear();
            for (const auto &name : method_names)
            {
                const auto method = wb_method_from_string(name);
                if (!method)
                    throw std::invalid_argument("unknown method '" + name + "'");
                config.methods.push_back(*method);
            }
            const auto rows = run_sweep(config);
            write_csv(rows, out_path);
        }
        else if (example->parsed())
        {
            run_example(out);
        }
    }
    catch (const CLI::ValidationError &e)
    {
        err << "usage error: " << e.what() << '\n';
        return 1;
    }
    catch (const std::exception &e)
    {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

} // namespace t2amp

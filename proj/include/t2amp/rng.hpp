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

#ifndef T2AMP_RNG_HPP
#define T2AMP_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace t2amp
{

// splitmix64 finalizer
inline std::uint64_t mix64(std::uint64_t x) noexcept
{
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Seed of the substream identified by (a, b, c) under a master seed. Trials
// seeded this way are independent of evaluation order and worker count.
inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                                   std::uint64_t c) noexcept
{
    constexpr std::uint64_t golden = 0x9e3779b97f4a7c15ULL;
    std::uint64_t h = mix64(seed + golden);
    h = mix64(h ^ (a + golden));
    h = mix64(h ^ (b + golden));
    h = mix64(h ^ (c + golden));
    return h;
}

// Deterministic standard-normal generator. Box-Muller over raw engine bits;
// std::normal_distribution output is implementation-defined, which would make
// sweep results differ across standard libraries.
class GaussianRng
{
  public:
    explicit GaussianRng(std::uint64_t seed) : engine_(seed) {}

    // uniform in (0, 1], 53-bit resolution
    double uniform()
    {
        return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
    }

    double normal()
    {
        if (have_spare_)
        {
            have_spare_ = false;
            return spare_;
        }
        const double mag = std::sqrt(-2.0 * std::log(uniform()));
        const double ang = 2.0 * 3.14159265358979323846 * uniform();
        spare_ = mag * std::sin(ang);
        have_spare_ = true;
        return mag * std::cos(ang);
    }

  private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace t2amp

#endif

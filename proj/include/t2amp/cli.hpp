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

#ifndef T2AMP_CLI_HPP
#define T2AMP_CLI_HPP

#include <iosfwd>

namespace t2amp
{

// Entry point behind the t2amp binary. Returns 0 on success, 1 on usage
// errors, 2 on runtime failures; diagnostics go to err.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace t2amp

#endif

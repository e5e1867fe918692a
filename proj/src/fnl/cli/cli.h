// Copyright 2026 The fnl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FNL_CLI_CLI_H
#define FNL_CLI_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

namespace fnl {

enum ExitCode : int {
    kExitVerdict = 0,
    kExitValidation = 2,
    kExitResource = 3,
    kExitUndecided = 4,
};

/// Runs one subcommand, writing a single JSON document to `out` and diagnostics to `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// Parses "0.51,0.07*7" style lists; "v*k" repeats v k times.
std::vector<double> parse_spectrum(const std::string &text);

}  // namespace fnl

#endif

/*
 * Copyright 2026 The fourd Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef FOURD_CLI_H_
#define FOURD_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace fourd {

inline constexpr char kVersion[] = "1.0.0";

enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 1,
  kExitIo = 2,
};

// Runs one command-line invocation. `args` excludes the program name.
// Data goes to files (or `out` for "--out -"), diagnostics to `err`.
//
//   integrate --input <csv> [--config <cfg>] --out <csv>
//   simulate  --profile <cfg> --out <csv> [--truth <csv>]
//   map       --trajectory <csv> [--config <cfg>] --out <ppm> [--cells <csv>]
//   export    --trajectory <csv> --format ply|csv [--config <cfg>] --out <file>
//   version
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace fourd

#endif  // FOURD_CLI_H_

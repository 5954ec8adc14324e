// Copyright 2026 The naijasent Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NAIJASENT_CLI_H_
#define NAIJASENT_CLI_H_

#include <iosfwd>

namespace naijasent {

// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitIo = 1,          // output could not be written
  kExitUsage = 2,       // bad or missing flags
  kExitParse = 3,       // unreadable lexicon, corpus, mapping or config
  kExitUnresolved = 4,  // mapping names a token missing from the lexicon
  kExitPolicy = 5,      // merge conflict or sign violation under strict mode
};

// Entry point behind the `naijasent` binary. Output that the tool prints
// goes to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace naijasent

#endif  // NAIJASENT_CLI_H_

// Copyright 2023 The Authors.
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

#ifndef DELTAMAT_CLI_H_
#define DELTAMAT_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace deltamat {

// Runs one command. `args` includes the program name. Returns 0 on
// success or an affirmative verdict, 1 on a negative verdict or semantic
// error, 2 on malformed input or bad flags.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace deltamat

#endif  // DELTAMAT_CLI_H_

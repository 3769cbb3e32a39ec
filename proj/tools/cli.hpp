// Copyright 2026 The Authors.
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

// The fanlab command line. run() holds all of the logic so tests can drive it
// without spawning a process.

#ifndef FANLAB_TOOLS_CLI_HPP_
#define FANLAB_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace fanlab::cli {

// Exit codes: 0 success, 1 precondition or predicate failure, 2 I/O, schema
// or usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fanlab::cli

#endif  // FANLAB_TOOLS_CLI_HPP_

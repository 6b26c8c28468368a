// Copyright 2026 The qcompare Authors
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

#ifndef QCOMPARE_CLI_CLI_HPP_
#define QCOMPARE_CLI_CLI_HPP_

#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace qcompare::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCheckFailed = 3;

/// Parses "a:b" (inclusive), "a,b,c" or a single integer. Mixed forms such as
/// "1,3:5" are accepted. Throws PreconditionError on malformed input.
std::vector<std::size_t> parse_size_list(std::string_view text);

/// Parses "start:step:end" (inclusive), a comma list, or a single value.
std::vector<double> parse_real_list(std::string_view text);

/// Runs one command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcompare::cli

#endif  // QCOMPARE_CLI_CLI_HPP_

// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>

namespace ncg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitMalformed = 2;

/// Parses argv, dispatches one subcommand and writes its JSON (or CSV) result
/// to `out`, or to --output when given. Error objects always go to `out`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ncg::cli

// Copyright 2026 The edgewire Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <iosfwd>
#include <string>

namespace edgewire {

/// Exit codes: 0 success, 2 usage or validation error, 1 unexpected failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Parses "RE,IM". Throws std::invalid_argument on malformed input.
std::complex<double> parse_complex(const std::string& text);

}  // namespace edgewire

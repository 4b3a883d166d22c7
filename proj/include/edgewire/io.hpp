// Copyright 2026 The edgewire Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file io.hpp
 * @brief CSV and JSON encodings of spectra, states and reports.
 *
 * CSV numbers use 15 significant digits with LF line endings. JSON objects
 * keep a fixed key order so identical inputs give identical bytes.
 */

#pragma once

#include "edgewire/fock.hpp"
#include "edgewire/hubbard.hpp"
#include "edgewire/protocol.hpp"
#include "edgewire/ssh_lattice.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace edgewire {

using ordered_json = nlohmann::ordered_json;

/// "%.15g", with negative zero printed as 0.
std::string format_number(double x);

/// Header `index,energy_analytic,energy_numeric,abs_diff`, 0-based index over the sorted spectrum.
std::string spectrum_csv(const WireParams& params);

/// Header `index,energy`.
std::string energies_csv(const std::vector<double>& energies);

/// Header `site,density`, 1-based sites.
std::string zero_mode_csv(const WireParams& params);

/// {"modes": ["c_up", ...], "amplitudes": [[re, im], ...]}
ordered_json state_to_json(const StateVector& state, const ModeSet& modes);
StateVector state_from_json(const ordered_json& j, ModeSet* modes_out = nullptr);

ordered_json to_json(const HubbardReport& report);
ordered_json to_json(const TeleportReport& report);

}  // namespace edgewire

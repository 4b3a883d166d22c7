// Copyright 2026 The edgewire Authors
// SPDX-License-Identifier: Apache-2.0

#include "edgewire/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace edgewire {

std::string format_number(double x) {
  if (x == 0) x = 0;  // drops the sign of -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

std::string spectrum_csv(const WireParams& params) {
  const auto analytic = analytic_spectrum(params);
  const auto numeric = numerical_spectrum(params);
  std::ostringstream out;
  out << "index,energy_analytic,energy_numeric,abs_diff\n";
  for (std::size_t i = 0; i < analytic.size(); ++i)
    out << i << ',' << format_number(analytic[i]) << ',' << format_number(numeric[i]) << ','
        << format_number(std::abs(analytic[i] - numeric[i])) << '\n';
  return out.str();
}

std::string energies_csv(const std::vector<double>& energies) {
  std::ostringstream out;
  out << "index,energy\n";
  for (std::size_t i = 0; i < energies.size(); ++i) out << i << ',' << format_number(energies[i]) << '\n';
  return out.str();
}

std::string zero_mode_csv(const WireParams& params) {
  const auto density = zero_mode_density(params);
  std::ostringstream out;
  out << "site,density\n";
  for (std::size_t i = 0; i < density.size(); ++i) out << i + 1 << ',' << format_number(density[i]) << '\n';
  return out.str();
}

ordered_json state_to_json(const StateVector& state, const ModeSet& modes) {
  if (static_cast<std::size_t>(state.size()) != modes.dimension())
    throw std::invalid_argument("state dimension does not match the mode set");
  ordered_json j;
  j["modes"] = ordered_json::array();
  for (const auto& m : modes.modes()) j["modes"].push_back(m.name());
  j["amplitudes"] = ordered_json::array();
  for (Eigen::Index i = 0; i < state.size(); ++i)
    j["amplitudes"].push_back({state(i).real(), state(i).imag()});
  return j;
}

namespace {

Mode parse_mode(const std::string& name) {
  if (name.size() < 4 || name[1] != '_') throw std::invalid_argument("bad mode name '" + name + "'");
  const std::string spin = name.substr(2);
  if (spin == "up") return up(name[0]);
  if (spin == "down") return down(name[0]);
  throw std::invalid_argument("bad mode name '" + name + "'");
}

}  // namespace

StateVector state_from_json(const ordered_json& j, ModeSet* modes_out) {
  std::vector<Mode> modes;
  for (const auto& name : j.at("modes")) modes.push_back(parse_mode(name.get<std::string>()));
  ModeSet set(std::move(modes));
  const auto& amps = j.at("amplitudes");
  if (amps.size() != set.dimension()) throw std::invalid_argument("amplitude count does not match 2^modes");
  StateVector state(static_cast<Eigen::Index>(amps.size()));
  for (std::size_t i = 0; i < amps.size(); ++i)
    state(static_cast<Eigen::Index>(i)) = Complex(amps[i].at(0).get<double>(), amps[i].at(1).get<double>());
  if (modes_out) *modes_out = set;
  return state;
}

ordered_json to_json(const HubbardReport& report) {
  ordered_json j;
  j["e2"] = report.e2;
  j["lambda"] = report.lambda;
  j["E0_exact"] = report.e0_exact;
  j["E0_perturbative"] = report.e0_perturbative ? ordered_json(*report.e0_perturbative) : ordered_json(nullptr);
  j["singlet_overlap"] = report.singlet_overlap;
  j["triplet_gap"] = report.triplet_gap;
  return j;
}

ordered_json to_json(const TeleportReport& report) {
  ordered_json j;
  j["variant"] = to_string(report.variant);
  j["seed"] = report.seed;
  j["trials"] = report.trials;
  j["g1"] = {report.g.g1.real(), report.g.g1.imag()};
  j["g2"] = {report.g.g2.real(), report.g.g2.imag()};
  ordered_json branches = ordered_json::object();
  for (const auto& [label, count] : report.branch_counts) branches[label.to_string()] = count;
  j["branch_counts"] = branches;
  ordered_json rounds = ordered_json::object();
  for (const auto& [r, count] : report.rounds_histogram) rounds[std::to_string(r)] = count;
  j["rounds_histogram"] = rounds;
  j["mean_rounds"] = report.mean_rounds;
  j["min_fidelity"] = report.min_fidelity;
  j["mean_fidelity"] = report.mean_fidelity;
  return j;
}

}  // namespace edgewire

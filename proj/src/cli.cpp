// Copyright 2026 The edgewire Authors
// SPDX-License-Identifier: Apache-2.0

#include "edgewire/cli.hpp"

#include "edgewire/hubbard.hpp"
#include "edgewire/io.hpp"
#include "edgewire/protocol.hpp"
#include "edgewire/ssh_lattice.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

namespace edgewire {

namespace {

constexpr int kUsageError = 2;

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path + " for writing");
  file << text;
}

SpinAmplitudes checked_amplitudes(const std::string& g1_text, const std::string& g2_text) {
  SpinAmplitudes g{parse_complex(g1_text), parse_complex(g2_text)};
  const double norm2 = std::norm(g.g1) + std::norm(g.g2);
  if (std::abs(norm2 - 1.0) > 1e-6)
    throw std::invalid_argument("|g1|^2 + |g2|^2 = " + format_number(norm2) + " is not within 1e-6 of 1");
  const double n = std::sqrt(norm2);
  g.g1 /= n;
  g.g2 /= n;
  return g;
}

}  // namespace

std::complex<double> parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("expected RE,IM but got '" + text + "'");
  try {
    std::size_t used_re = 0;
    std::size_t used_im = 0;
    const std::string re_text = text.substr(0, comma);
    const std::string im_text = text.substr(comma + 1);
    const double re = std::stod(re_text, &used_re);
    const double im = std::stod(im_text, &used_im);
    if (used_re != re_text.size() || used_im != im_text.size()) throw std::invalid_argument("trailing characters");
    return {re, im};
  } catch (const std::exception&) {
    throw std::invalid_argument("expected RE,IM but got '" + text + "'");
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Edge-mode teleportation between odd-site quantum wires"};
  app.require_subcommand(1);

  WireParams wire;
  wire.t_prime = 0.5;
  std::string out_path;

  auto* spectrum = app.add_subcommand("spectrum", "Analytic and numerical single-particle spectrum as CSV");
  spectrum->add_option("--sites", wire.num_sites, "Number of sites 2L+1 (odd)")->required();
  spectrum->add_option("--t", wire.t, "Hopping on bonds (2m, 2m+1)")->required();
  spectrum->add_option("--tprime", wire.t_prime, "Hopping on bonds (2m-1, 2m)")->required();
  spectrum->add_option("--out", out_path, "Output CSV (default: stdout)");

  auto* zeromode = app.add_subcommand("zeromode", "Zero-mode probability density per site as CSV");
  zeromode->add_option("--sites", wire.num_sites, "Number of sites 2L+1 (odd)")->required();
  zeromode->add_option("--t", wire.t, "Hopping on bonds (2m, 2m+1)")->required();
  zeromode->add_option("--tprime", wire.t_prime, "Hopping on bonds (2m-1, 2m)")->required();
  zeromode->add_option("--out", out_path, "Output CSV (default: stdout)");

  CouplingParams coupling;
  auto* hubbard = app.add_subcommand("hubbard", "Exact ground state of the a-b edge coupling as JSON");
  hubbard->add_option("--e2", coupling.e2, "Coulomb scale e^2")->required();
  hubbard->add_option("--lambda", coupling.lambda, "Hopping scale lambda")->required();

  std::string variant_name = "electronic";
  std::string g1_text = "1,0";
  std::string g2_text = "0,0";
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  auto* teleport = app.add_subcommand("teleport", "Seeded teleportation trials; writes a JSON report");
  teleport->add_option("--variant", variant_name, "electronic | coldatom | mixed")
      ->check(CLI::IsMember({"electronic", "coldatom", "mixed"}));
  teleport->add_option("--g1", g1_text, "Spin-up amplitude RE,IM");
  teleport->add_option("--g2", g2_text, "Spin-down amplitude RE,IM");
  teleport->add_option("--trials", trials, "Number of trials")->check(CLI::PositiveNumber);
  teleport->add_option("--seed", seed, "Base seed; trial i uses seed + i");
  teleport->add_option("--out", out_path, "Output JSON report (default: stdout)");

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (spectrum->parsed()) {
      emit(spectrum_csv(wire), out_path, out);
    } else if (zeromode->parsed()) {
      wire.validate();
      if (wire.t == wire.t_prime) err << "warning: t == t': gap closed, zero mode is delocalized\n";
      emit(zero_mode_csv(wire), out_path, out);
    } else if (hubbard->parsed()) {
      const auto report = hubbard_report(coupling);
      for (const auto& w : report.warnings) err << "warning: " << w << '\n';
      out << to_json(report).dump(2) << '\n';
    } else if (teleport->parsed()) {
      const SpinAmplitudes g = checked_amplitudes(g1_text, g2_text);
      const auto report = run_trials(g, parse_variant(variant_name), trials, seed);
      const std::string text = to_json(report).dump(2) + "\n";
      emit(text, out_path, out);
      if (!out_path.empty())
        out << "trials=" << report.trials << " min_fidelity=" << format_number(report.min_fidelity)
            << " mean_rounds=" << format_number(report.mean_rounds) << '\n';
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace edgewire

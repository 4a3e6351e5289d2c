// Copyright 2026 The opal Authors.
// Licensed under the Apache License, Version 2.0.

#include <CLI11.hpp>
#include <iostream>

#include "commands.hpp"
#include "config.hpp"
#include "opal/error.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNumeric = 1;
constexpr int kExitConfig = 2;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"opal: orthogonal polynomials for the Z_s-symmetric normal matrix model"};
  app.require_subcommand(1);
  std::string config, out, ks;
  int bits = 0;
  long long seed = -1;
  using Command = int (*)(const opal::cli::RunConfig&);
  const std::pair<const char*, Command> commands[] = {
      {"poly", opal::cli::cmd_poly},     {"zeros", opal::cli::cmd_zeros}, {"curves", opal::cli::cmd_curves},
      {"asym", opal::cli::cmd_asym},     {"check", opal::cli::cmd_check}, {"gas", opal::cli::cmd_gas},
  };
  std::vector<std::pair<CLI::App*, Command>> subs;
  for (const auto& [name, fn] : commands) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", config, "configuration file")->required();
    sub->add_option("--out", out, "output directory");
    sub->add_option("--k", ks, "comma separated list of k");
    sub->add_option("--bits", bits, "working precision in bits");
    sub->add_option("--seed", seed, "gas random seed");
    subs.emplace_back(sub, fn);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }
  try {
    opal::cli::RunConfig cfg = opal::cli::load_config(config);
    if (!out.empty()) cfg.out_dir = out;
    if (!ks.empty()) cfg.ks = opal::cli::parse_int_list(ks);
    if (bits > 0) {
      if (bits < 64) throw opal::Error(opal::ErrorKind::Config, "--bits must be >= 64");
      cfg.prec.mantissa_bits = bits;
    }
    if (seed >= 0) cfg.gas.seed = static_cast<std::uint64_t>(seed);
    for (const auto& [sub, fn] : subs)
      if (sub->parsed()) return fn(cfg);
  } catch (const opal::Error& e) {
    std::cerr << "opal: " << e.what() << "\n";
    return e.kind() == opal::ErrorKind::Config ? kExitConfig : kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "opal: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitNumeric;
}

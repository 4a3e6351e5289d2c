// Copyright 2026 The opal Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "opal/gas.hpp"
#include "opal/params.hpp"
#include "opal/real.hpp"

namespace opal::cli {

// Flat key=value text with [section] headers. '#' starts a comment.
// Keys are stored as "section.key"; keys before any header go to section "run".
std::map<std::string, std::string> parse_kv(const std::string& text);

struct RunConfig {
  ModelParams model;
  Precision prec{256, 1e-30};
  std::vector<int> ks{32};
  std::string out_dir = "out";
  // curves
  int curve_M = 512;
  double exclusion = 0.15;
  // asym
  std::vector<int> asym_ks{16, 32, 64};
  std::vector<std::complex<double>> asym_points;
  bool asym_correction = false;  // correction magnitude instead of prediction error
  // check
  double check_N = 2.0;
  // gas
  GasConfig gas;
  int gas_chains = 1;
  double gas_delta = 0.05;
};

// Validates and converts. Throws opal::Error(Config) on unknown or missing keys and bad values.
RunConfig make_config(const std::map<std::string, std::string>& kv);
RunConfig load_config(const std::string& path);

std::vector<int> parse_int_list(const std::string& s);
std::complex<double> parse_complex(const std::string& s);

}  // namespace opal::cli

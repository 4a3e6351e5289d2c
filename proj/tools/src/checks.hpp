// Copyright 2026 The opal Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <string>
#include <vector>

#include "config.hpp"

namespace opal::cli {

struct CheckLine {
  std::string name;
  double value = 0;
  double threshold = 0;
  bool pass = false;
};

// Planar/contour, balayage, quadrature-domain, nu masses and model-problem jumps for cfg.model.
std::vector<CheckLine> run_identity_suite(const RunConfig& cfg);

}  // namespace opal::cli

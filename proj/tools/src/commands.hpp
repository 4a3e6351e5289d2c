// Copyright 2026 The opal Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <string>

#include "config.hpp"

namespace opal::cli {

// Each command writes its artifacts under cfg.out_dir and returns the process exit code.
int cmd_poly(const RunConfig& cfg);
int cmd_zeros(const RunConfig& cfg);
int cmd_curves(const RunConfig& cfg);
int cmd_asym(const RunConfig& cfg);
int cmd_check(const RunConfig& cfg);
int cmd_gas(const RunConfig& cfg);

// 17 significant digits, round to nearest.
std::string fmt_num(double x);

inline constexpr const char* kSchemaLine = "# opal-schema v1";

}  // namespace opal::cli

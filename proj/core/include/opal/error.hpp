// Copyright 2026 The opal Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <stdexcept>
#include <string>

namespace opal {

enum class ErrorKind {
  Domain,          // precondition violated (bad parameters, pole, branch cut)
  Numerical,       // non-convergence, precision exhausted
  Config,          // configuration file / CLI problems
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail_domain(const std::string& msg) { throw Error(ErrorKind::Domain, msg); }
[[noreturn]] inline void fail_numeric(const std::string& msg) { throw Error(ErrorKind::Numerical, msg); }
[[noreturn]] inline void fail_config(const std::string& msg) { throw Error(ErrorKind::Config, msg); }

}  // namespace opal

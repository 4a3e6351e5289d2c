// Copyright 2026 The opal Authors.
// Licensed under the Apache License, Version 2.0.

#include "config.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "opal/error.hpp"

namespace opal::cli {
namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      "model.s",       "model.l",        "model.t",         "model.T",       "precision.bits",
      "precision.tol", "run.k",          "run.out",         "curves.M",      "curves.exclusion",
      "asym.ks",       "asym.points",    "asym.quantity",   "check.N",       "gas.n",
      "gas.N",         "gas.sweeps",     "gas.burn_in",     "gas.thin",      "gas.sigma",
      "gas.seed",      "gas.chains",     "gas.delta",
  };
  return keys;
}

double to_double(const std::string& key, const std::string& v) {
  try {
    size_t pos = 0;
    double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    fail_config("config: " + key + " is not a number: '" + v + "'");
  }
}

long to_long(const std::string& key, const std::string& v) {
  try {
    size_t pos = 0;
    long x = std::stol(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    fail_config("config: " + key + " is not an integer: '" + v + "'");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

std::map<std::string, std::string> parse_kv(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::string section = "run";
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail_config("config line " + std::to_string(lineno) + ": bad section header");
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) fail_config("config line " + std::to_string(lineno) + ": expected key = value");
    std::string key = section + "." + trim(line.substr(0, eq));
    if (kv.count(key)) fail_config("config: duplicate key " + key);
    kv[key] = trim(line.substr(eq + 1));
  }
  return kv;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  for (const auto& item : split(s, ',')) out.push_back(static_cast<int>(to_long("k list", item)));
  if (out.empty()) fail_config("config: empty k list");
  for (int k : out)
    if (k < 1) fail_config("config: k must be >= 1");
  return out;
}

std::complex<double> parse_complex(const std::string& in) {
  std::string s;
  for (char c : in)
    if (c != ' ') s += c;
  if (s.empty()) fail_config("config: empty complex number");
  if (s.back() != 'i') return {to_double("point", s), 0.0};
  std::string body = s.substr(0, s.size() - 1);
  // Split at the last sign that is not an exponent sign or the leading sign.
  size_t cut = std::string::npos;
  for (size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      cut = i;
      break;
    }
  }
  auto imag = [&](const std::string& t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return to_double("point", t);
  };
  if (cut == std::string::npos) return {0.0, imag(body)};
  return {to_double("point", body.substr(0, cut)), imag(body.substr(cut))};
}

RunConfig make_config(const std::map<std::string, std::string>& kv) {
  for (const auto& [key, value] : kv)
    if (!known_keys().count(key)) fail_config("config: unknown key " + key);
  for (const char* req : {"model.s", "model.t", "model.T"})
    if (!kv.count(req)) fail_config(std::string("config: missing required key ") + req);
  auto get = [&](const std::string& key) -> std::optional<std::string> {
    auto it = kv.find(key);
    if (it == kv.end()) return std::nullopt;
    return it->second;
  };
  RunConfig c;
  c.model.s = static_cast<int>(to_long("model.s", *get("model.s")));
  c.model.l = static_cast<int>(to_long("model.l", get("model.l").value_or("0")));
  c.model.t = to_double("model.t", *get("model.t"));
  c.model.T = to_double("model.T", *get("model.T"));
  try {
    c.model.validate();
  } catch (const Error& e) {
    fail_config(std::string("config: ") + e.what());
  }
  if (auto v = get("precision.bits")) c.prec.mantissa_bits = static_cast<int>(to_long("precision.bits", *v));
  if (auto v = get("precision.tol")) c.prec.target_rel_err = to_double("precision.tol", *v);
  if (c.prec.mantissa_bits < 64) fail_config("config: precision.bits must be >= 64");
  if (!(c.prec.target_rel_err > 0)) fail_config("config: precision.tol must be > 0");
  if (auto v = get("run.k")) c.ks = parse_int_list(*v);
  if (auto v = get("run.out")) c.out_dir = *v;
  if (auto v = get("curves.M")) c.curve_M = static_cast<int>(to_long("curves.M", *v));
  if (auto v = get("curves.exclusion")) c.exclusion = to_double("curves.exclusion", *v);
  if (c.curve_M < 64) fail_config("config: curves.M must be >= 64");
  if (!(c.exclusion > 0)) fail_config("config: curves.exclusion must be > 0");
  if (auto v = get("asym.ks")) c.asym_ks = parse_int_list(*v);
  if (c.asym_ks.size() < 3) fail_config("config: asym.ks needs at least 3 values");
  if (auto v = get("asym.points"))
    for (const auto& item : split(*v, ',')) c.asym_points.push_back(parse_complex(item));
  if (auto v = get("asym.quantity")) {
    if (*v == "error") {
      c.asym_correction = false;
    } else if (*v == "correction") {
      c.asym_correction = true;
    } else {
      fail_config("config: asym.quantity must be 'error' or 'correction'");
    }
  }
  if (auto v = get("check.N")) c.check_N = to_double("check.N", *v);
  if (auto v = get("gas.n")) c.gas.n = static_cast<int>(to_long("gas.n", *v));
  if (auto v = get("gas.N")) c.gas.N = to_double("gas.N", *v);
  if (auto v = get("gas.sweeps")) c.gas.sweeps = to_long("gas.sweeps", *v);
  if (auto v = get("gas.burn_in")) {
    c.gas.burn_in = to_long("gas.burn_in", *v);
  } else {
    c.gas.burn_in = c.gas.sweeps / 10;
  }
  if (auto v = get("gas.thin")) c.gas.thin = to_long("gas.thin", *v);
  if (auto v = get("gas.sigma")) c.gas.proposal_sigma = to_double("gas.sigma", *v);
  if (auto v = get("gas.seed")) c.gas.seed = static_cast<std::uint64_t>(to_long("gas.seed", *v));
  if (auto v = get("gas.chains")) c.gas_chains = static_cast<int>(to_long("gas.chains", *v));
  if (auto v = get("gas.delta")) c.gas_delta = to_double("gas.delta", *v);
  c.gas.validate();
  if (c.gas_chains < 1) fail_config("config: gas.chains must be >= 1");
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail_config("config: cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return make_config(parse_kv(ss.str()));
}

}  // namespace opal::cli

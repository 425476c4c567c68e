// cogent: self-programming codelet engine driven by information-theoretic reward
// Copyright 2026 The cogent Authors.
// Licensed under the Apache License, Version 2.0.
#include "cogent/metrics.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cogent::sim {

namespace {

std::string fixed9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", v);
  return buf;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace

std::string metrics_to_csv(const MetricsLog& log) {
  std::string out = "t,R\n";
  for (const auto& [t, r] : log.samples)
    out += std::to_string(t) + "," + fixed9(r) + "\n";
  return out;
}

MetricsLog metrics_from_csv(const std::string& csv) {
  MetricsLog log;
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line) || line != "t,R")
    throw std::invalid_argument("metrics csv: bad header");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::size_t comma = line.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("metrics csv: bad row: " + line);
    log.samples.emplace_back(std::stoll(line.substr(0, comma)),
                             std::stod(line.substr(comma + 1)));
  }
  return log;
}

void emit_metrics(const MetricsLog& log, const std::string& path) {
  write_file(path, metrics_to_csv(log));
}

std::string actuations_to_csv(
    const std::vector<hierarchy::ActuationRecord>& rows) {
  std::string out = "t,template,copy,inputs,cost,s,activated,A\n";
  for (const hierarchy::ActuationRecord& r : rows) {
    std::string inputs;
    for (std::size_t i = 0; i < r.inputs.size(); ++i) {
      if (i) inputs += '|';
      for (std::size_t j = 0; j < r.inputs[i].size(); ++j) {
        if (j) inputs += ' ';
        inputs += std::to_string(r.inputs[i][j]);
      }
    }
    out += std::to_string(r.time) + "," + r.template_id + "," +
           std::to_string(r.copy_id) + "," + inputs + "," + fixed9(r.cost) +
           "," + std::to_string(r.resources) + "," +
           (r.activated ? "1" : "0") + "," + fixed9(r.value) + "\n";
  }
  return out;
}

void emit_actuations(const std::vector<hierarchy::ActuationRecord>& rows,
                     const std::string& path) {
  write_file(path, actuations_to_csv(rows));
}

TimeMs ResponseCurve::peak_delay() const {
  std::size_t best = 0;
  for (std::size_t i = 1; i < sums.size(); ++i)
    if (sums[i] > sums[best]) best = i;
  return static_cast<TimeMs>(best) * bin_ms;
}

std::string curve_to_csv(const ResponseCurve& curve) {
  std::string out = "bin_ms,sum_R\n";
  for (std::size_t i = 0; i < curve.sums.size(); ++i)
    out += std::to_string(static_cast<TimeMs>(i) * curve.bin_ms) + "," +
           fixed9(curve.sums[i]) + "\n";
  return out;
}

void emit_curve(const ResponseCurve& curve, const std::string& path) {
  write_file(path, curve_to_csv(curve));
}

}  // namespace cogent::sim

// cogent: self-programming codelet engine driven by information-theoretic reward
// Copyright 2026 The cogent Authors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <string>
#include <vector>

#include "cogent/hierarchy.hpp"
#include "cogent/types.hpp"

namespace cogent::sim {

// (t, R) samples of the global average reward at fixed resolution.
struct MetricsLog {
  std::vector<std::pair<TimeMs, double>> samples;
};

// CSV with header "t,R"; values printed with fixed precision so reruns of
// the same seed diff clean.
std::string metrics_to_csv(const MetricsLog& log);
MetricsLog metrics_from_csv(const std::string& csv);
void emit_metrics(const MetricsLog& log, const std::string& path);

std::string actuations_to_csv(
    const std::vector<hierarchy::ActuationRecord>& rows);
void emit_actuations(const std::vector<hierarchy::ActuationRecord>& rows,
                     const std::string& path);

// Summed average-reward level per bin relative to stimulus onset.
struct ResponseCurve {
  TimeMs bin_ms = 10;
  std::vector<double> sums;

  // Offset of the strongest response, i.e. argmax bin * bin width.
  TimeMs peak_delay() const;
};

std::string curve_to_csv(const ResponseCurve& curve);
void emit_curve(const ResponseCurve& curve, const std::string& path);

}  // namespace cogent::sim

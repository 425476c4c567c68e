// cogent: self-programming codelet engine driven by information-theoretic reward
// Copyright 2026 The cogent Authors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <cstdint>
#include <vector>

namespace cogent {

// Unified data interchange format: variable-size vectors of integers.
using Word = std::int32_t;
using IntVec = std::vector<Word>;

// Simulated time in milliseconds. The whole engine runs on a discrete
// simulated clock so sessions are fast and reproducible.
using TimeMs = std::int64_t;

inline double to_seconds(TimeMs t) { return static_cast<double>(t) / 1000.0; }

}  // namespace cogent

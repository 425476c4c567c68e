// cogent: self-programming codelet engine driven by information-theoretic reward
// Copyright 2026 The cogent Authors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <memory>
#include <string>

#include "cogent/hierarchy.hpp"

namespace cogent::snapshot {

// Line-oriented text snapshot of a learning session's hierarchy: concepts
// (with codelet assembly), links with their action values, partition
// statistics, actuator copies with pending activations, and the global
// reward accumulator. Round trips losslessly: saving a loaded snapshot
// reproduces the text byte for byte. The scheduler queue and rng state are
// transient and not part of the snapshot.
std::string save(const hierarchy::Engine& engine, TimeMs now);

std::unique_ptr<hierarchy::Engine> load(const std::string& text,
                                        hierarchy::EngineParams params,
                                        std::uint64_t seed);

void save_file(const hierarchy::Engine& engine, TimeMs now,
               const std::string& path);
std::unique_ptr<hierarchy::Engine> load_file(const std::string& path,
                                             hierarchy::EngineParams params,
                                             std::uint64_t seed);

// Time recorded in a snapshot without loading the whole hierarchy.
TimeMs saved_time(const std::string& text);

}  // namespace cogent::snapshot

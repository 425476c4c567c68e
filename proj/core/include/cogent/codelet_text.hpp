// cogent: self-programming codelet engine driven by information-theoretic reward
// Copyright 2026 The cogent Authors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <string>
#include <string_view>

#include "cogent/vm.hpp"

namespace cogent::vm {

// Text assembly for codelets, used in configs, golden tests and hierarchy
// snapshots. One instruction per line ("OPCODE [operand [operand]]"), with a
// leading "ARITY n" directive. parse_codelet(print_codelet(c)) == c,
// bit-exact. The separator defaults to newline; snapshots embed codelets on
// a single line with ';'.
std::string print_codelet(const Codelet& c, char separator = '\n');

// Throws std::invalid_argument with the offending line on malformed input.
// Accepts ';' and newline interchangeably, skips blank fields.
Codelet parse_codelet(std::string_view text);

}  // namespace cogent::vm

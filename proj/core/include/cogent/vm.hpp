// cogent: self-programming codelet engine driven by information-theoretic reward
// Copyright 2026 The cogent Authors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cogent/rng.hpp"
#include "cogent/types.hpp"

namespace cogent::vm {

// A codelet is a tiny stack-machine program acting as a binary classifier
// over its inputs: it either matches (and emits an output vector forwarded
// downstream) or it does not. The instruction set is deliberately minimal,
// in the spirit of early-80s microprocessors.
enum class Opcode : std::uint8_t {
  kPush,   // PUSH imm      push immediate
  kLoad,   // LOAD i j      push element j of input vector i
  kLen,    // LEN i         push length of input vector i
  kDup,    // DUP           duplicate top of stack
  kSwap,   // SWAP          swap top two stack values
  kPop,    // POP           discard top of stack
  kAdd,    // ADD           pop b, pop a, push a+b (wrapping)
  kSub,    // SUB           pop b, pop a, push a-b (wrapping)
  kMul,    // MUL           pop b, pop a, push a*b (wrapping)
  kDiv,    // DIV           pop b, pop a, push a/b; b==0 is a runtime error
  kNeg,    // NEG           pop a, push -a (wrapping)
  kCmp,    // CMP           pop b, pop a, push sign(a-b) in {-1,0,1}
  kJlt,    // JLT off       pop a, jump relative if a < 0
  kJge,    // JGE off       pop a, jump relative if a >= 0
  kJmp,    // JMP off       unconditional relative jump
  kEmit,   // EMIT          pop top of stack, append to output vector
  kMatch,  // MATCH         halt positive (requires non-empty output)
  kFail,   // FAIL          halt negative
};

inline constexpr int kOpcodeCount = 18;

// Number of operands an opcode carries (0, 1 or 2).
int operand_count(Opcode op);
const char* opcode_name(Opcode op);

struct Instruction {
  Opcode op;
  Word a = 0;
  Word b = 0;

  bool operator==(const Instruction&) const = default;
};

struct Codelet {
  std::vector<Instruction> code;
  int arity = 1;  // number of input vectors expected

  bool operator==(const Codelet&) const = default;
};

// Default length bounds for randomly generated codelets.
inline constexpr int kDefaultMinLength = 4;
inline constexpr int kDefaultMaxLength = 10;

enum class RunStatus : std::uint8_t {
  kMatch,
  kNoMatch,
  kRuntimeError,
  kBudgetExhausted,
};

enum class Fault : std::uint8_t {
  kNone,
  kOutOfScope,       // read/write of input, stack or code out of range
  kDivisionByZero,
  kStackUnderflow,
};

struct ExecOutcome {
  RunStatus status = RunStatus::kNoMatch;
  Fault fault = Fault::kNone;
  IntVec output;       // non-empty iff status == kMatch
  int steps_used = 0;  // always <= budget

  bool matched() const { return status == RunStatus::kMatch; }
};

// Executes a codelet against its inputs with a hard step budget. Pure:
// the outcome is a function of (codelet, inputs, budget) only, and nothing
// outside the interpreter's private stack/output is ever touched. Every
// out-of-range access surfaces as Fault::kOutOfScope; an unconditional
// loop runs the budget out. A MATCH reached with an empty output vector
// counts as NoMatch, since a match forwards data by definition.
ExecOutcome execute(const Codelet& codelet, std::span<const IntVec> inputs,
                    int budget);

// Reasons the static pre-filter rejects a codelet before it ever reaches
// the hierarchy. Rejection is a value, not an error.
enum class RejectReason : std::uint8_t {
  kBadArity,         // arity < 1
  kBadOperand,       // input index out of declared arity, negative element index
  kBadJumpTarget,    // jump leaves [0, length]
  kNoMatchPath,      // no MATCH instruction reachable
  kInputUnused,      // no LOAD/LEN reachable: constant classifier
  kNoOutputPath,     // no EMIT reachable: could never produce a match
  kUnreachableCode,  // dead instructions present
};

const char* reject_reason_name(RejectReason r);

// Static heuristic filter. Returns nullopt when the codelet is accepted.
// Rejections are conservative: a rejected kNoMatchPath codelet can never
// return Match on any input.
std::optional<RejectReason> validate(const Codelet& codelet);

struct GenParams {
  std::uint64_t seed = 0;  // 0 derives the generator stream from the session seed
  int min_length = kDefaultMinLength;
  int max_length = kDefaultMaxLength;
  int min_arity = 1;
  int max_arity = 2;
  // One weight per opcode, in enum order. Zero removes an opcode from the
  // draw entirely.
  std::vector<double> opcode_weights = default_opcode_weights();

  static std::vector<double> default_opcode_weights();
};

// Draws one random codelet. Deterministic for a given rng state; length and
// arity respect the params bounds, jump targets always land inside
// [0, length]. Most outputs are still junk -- that is what validate() and
// runtime fitness pruning are for.
Codelet generate_random(const GenParams& params, Rng& rng);

}  // namespace cogent::vm

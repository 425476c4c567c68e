// cogent: self-programming codelet engine driven by information-theoretic reward
// Copyright 2026 The cogent Authors.
// Licensed under the Apache License, Version 2.0.
#include "cogent/vm.hpp"

#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace cogent::vm {

namespace {

constexpr int kMaxStack = 64;

Word wrap_add(Word a, Word b) {
  return static_cast<Word>(static_cast<std::uint32_t>(a) +
                           static_cast<std::uint32_t>(b));
}
Word wrap_sub(Word a, Word b) {
  return static_cast<Word>(static_cast<std::uint32_t>(a) -
                           static_cast<std::uint32_t>(b));
}
Word wrap_mul(Word a, Word b) {
  return static_cast<Word>(static_cast<std::uint32_t>(a) *
                           static_cast<std::uint32_t>(b));
}
Word wrap_neg(Word a) {
  return static_cast<Word>(0u - static_cast<std::uint32_t>(a));
}
Word wrap_div(Word a, Word b) {
  // b == 0 is handled by the caller. INT_MIN / -1 wraps to INT_MIN.
  if (a == std::numeric_limits<Word>::min() && b == -1) return a;
  return a / b;
}

}  // namespace

int operand_count(Opcode op) {
  switch (op) {
    case Opcode::kLoad:
      return 2;
    case Opcode::kPush:
    case Opcode::kLen:
    case Opcode::kJlt:
    case Opcode::kJge:
    case Opcode::kJmp:
      return 1;
    default:
      return 0;
  }
}

const char* opcode_name(Opcode op) {
  switch (op) {
    case Opcode::kPush: return "PUSH";
    case Opcode::kLoad: return "LOAD";
    case Opcode::kLen: return "LEN";
    case Opcode::kDup: return "DUP";
    case Opcode::kSwap: return "SWAP";
    case Opcode::kPop: return "POP";
    case Opcode::kAdd: return "ADD";
    case Opcode::kSub: return "SUB";
    case Opcode::kMul: return "MUL";
    case Opcode::kDiv: return "DIV";
    case Opcode::kNeg: return "NEG";
    case Opcode::kCmp: return "CMP";
    case Opcode::kJlt: return "JLT";
    case Opcode::kJge: return "JGE";
    case Opcode::kJmp: return "JMP";
    case Opcode::kEmit: return "EMIT";
    case Opcode::kMatch: return "MATCH";
    case Opcode::kFail: return "FAIL";
  }
  return "?";
}

const char* reject_reason_name(RejectReason r) {
  switch (r) {
    case RejectReason::kBadArity: return "BadArity";
    case RejectReason::kBadOperand: return "BadOperand";
    case RejectReason::kBadJumpTarget: return "BadJumpTarget";
    case RejectReason::kNoMatchPath: return "NoMatchPath";
    case RejectReason::kInputUnused: return "InputUnused";
    case RejectReason::kNoOutputPath: return "NoOutputPath";
    case RejectReason::kUnreachableCode: return "UnreachableCode";
  }
  return "?";
}

ExecOutcome execute(const Codelet& codelet, std::span<const IntVec> inputs,
                    int budget) {
  ExecOutcome out;
  Word stack[kMaxStack];
  int sp = 0;  // next free slot
  std::int64_t ip = 0;
  const auto len = static_cast<std::int64_t>(codelet.code.size());

  const auto fault = [&](Fault f) {
    out.status = RunStatus::kRuntimeError;
    out.fault = f;
    out.output.clear();
    return out;
  };

  while (true) {
    if (ip == len) {
      // Fell off the end without an explicit MATCH: negative example.
      out.status = RunStatus::kNoMatch;
      out.output.clear();
      return out;
    }
    if (ip < 0 || ip > len) return fault(Fault::kOutOfScope);
    if (out.steps_used == budget) {
      out.status = RunStatus::kBudgetExhausted;
      out.output.clear();
      return out;
    }

    const Instruction& ins = codelet.code[static_cast<std::size_t>(ip)];
    ++out.steps_used;
    std::int64_t next = ip + 1;

    switch (ins.op) {
      case Opcode::kPush:
        if (sp == kMaxStack) return fault(Fault::kOutOfScope);
        stack[sp++] = ins.a;
        break;
      case Opcode::kLoad: {
        if (ins.a < 0 || static_cast<std::size_t>(ins.a) >= inputs.size())
          return fault(Fault::kOutOfScope);
        const IntVec& v = inputs[static_cast<std::size_t>(ins.a)];
        if (ins.b < 0 || static_cast<std::size_t>(ins.b) >= v.size())
          return fault(Fault::kOutOfScope);
        if (sp == kMaxStack) return fault(Fault::kOutOfScope);
        stack[sp++] = v[static_cast<std::size_t>(ins.b)];
        break;
      }
      case Opcode::kLen:
        if (ins.a < 0 || static_cast<std::size_t>(ins.a) >= inputs.size())
          return fault(Fault::kOutOfScope);
        if (sp == kMaxStack) return fault(Fault::kOutOfScope);
        stack[sp++] = static_cast<Word>(
            inputs[static_cast<std::size_t>(ins.a)].size());
        break;
      case Opcode::kDup:
        if (sp == 0) return fault(Fault::kStackUnderflow);
        if (sp == kMaxStack) return fault(Fault::kOutOfScope);
        stack[sp] = stack[sp - 1];
        ++sp;
        break;
      case Opcode::kSwap:
        if (sp < 2) return fault(Fault::kStackUnderflow);
        std::swap(stack[sp - 1], stack[sp - 2]);
        break;
      case Opcode::kPop:
        if (sp == 0) return fault(Fault::kStackUnderflow);
        --sp;
        break;
      case Opcode::kAdd:
      case Opcode::kSub:
      case Opcode::kMul:
      case Opcode::kDiv:
      case Opcode::kCmp: {
        if (sp < 2) return fault(Fault::kStackUnderflow);
        const Word b = stack[--sp];
        const Word a = stack[--sp];
        Word r = 0;
        switch (ins.op) {
          case Opcode::kAdd: r = wrap_add(a, b); break;
          case Opcode::kSub: r = wrap_sub(a, b); break;
          case Opcode::kMul: r = wrap_mul(a, b); break;
          case Opcode::kDiv:
            if (b == 0) return fault(Fault::kDivisionByZero);
            r = wrap_div(a, b);
            break;
          case Opcode::kCmp: r = a < b ? -1 : (a > b ? 1 : 0); break;
          default: break;
        }
        stack[sp++] = r;
        break;
      }
      case Opcode::kNeg:
        if (sp == 0) return fault(Fault::kStackUnderflow);
        stack[sp - 1] = wrap_neg(stack[sp - 1]);
        break;
      case Opcode::kJlt:
      case Opcode::kJge: {
        if (sp == 0) return fault(Fault::kStackUnderflow);
        const Word a = stack[--sp];
        const bool taken = ins.op == Opcode::kJlt ? (a < 0) : (a >= 0);
        if (taken) next = ip + 1 + ins.a;
        break;
      }
      case Opcode::kJmp:
        next = ip + 1 + ins.a;
        break;
      case Opcode::kEmit:
        if (sp == 0) return fault(Fault::kStackUnderflow);
        out.output.push_back(stack[--sp]);
        break;
      case Opcode::kMatch:
        if (out.output.empty()) {
          // A match forwards data; matching with nothing to forward is
          // just a failed partition.
          out.status = RunStatus::kNoMatch;
          return out;
        }
        out.status = RunStatus::kMatch;
        return out;
      case Opcode::kFail:
        out.status = RunStatus::kNoMatch;
        out.output.clear();
        return out;
    }
    ip = next;
  }
}

namespace {

// Reachability over the control-flow graph: fall-through plus jump edges,
// both branches for conditionals. Index codelet.code.size() is the virtual
// "fell off the end" slot and is a legal jump target.
std::vector<bool> reachable_set(const Codelet& c) {
  const auto len = static_cast<std::int64_t>(c.code.size());
  std::vector<bool> seen(static_cast<std::size_t>(len) + 1, false);
  std::vector<std::int64_t> work{0};
  while (!work.empty()) {
    const std::int64_t at = work.back();
    work.pop_back();
    if (at < 0 || at > len || seen[static_cast<std::size_t>(at)]) continue;
    seen[static_cast<std::size_t>(at)] = true;
    if (at == len) continue;
    const Instruction& ins = c.code[static_cast<std::size_t>(at)];
    switch (ins.op) {
      case Opcode::kMatch:
      case Opcode::kFail:
        break;
      case Opcode::kJmp:
        work.push_back(at + 1 + ins.a);
        break;
      case Opcode::kJlt:
      case Opcode::kJge:
        work.push_back(at + 1 + ins.a);
        work.push_back(at + 1);
        break;
      default:
        work.push_back(at + 1);
        break;
    }
  }
  return seen;
}

}  // namespace

std::optional<RejectReason> validate(const Codelet& codelet) {
  if (codelet.arity < 1) return RejectReason::kBadArity;
  const auto len = static_cast<std::int64_t>(codelet.code.size());

  for (std::int64_t i = 0; i < len; ++i) {
    const Instruction& ins = codelet.code[static_cast<std::size_t>(i)];
    switch (ins.op) {
      case Opcode::kLoad:
        if (ins.a < 0 || ins.a >= codelet.arity || ins.b < 0)
          return RejectReason::kBadOperand;
        break;
      case Opcode::kLen:
        if (ins.a < 0 || ins.a >= codelet.arity)
          return RejectReason::kBadOperand;
        break;
      case Opcode::kJlt:
      case Opcode::kJge:
      case Opcode::kJmp: {
        const std::int64_t target = i + 1 + ins.a;
        if (target < 0 || target > len) return RejectReason::kBadJumpTarget;
        break;
      }
      default:
        break;
    }
  }

  const std::vector<bool> seen = reachable_set(codelet);
  bool match_seen = false, input_seen = false, emit_seen = false;
  for (std::int64_t i = 0; i < len; ++i) {
    if (!seen[static_cast<std::size_t>(i)]) return RejectReason::kUnreachableCode;
    const Opcode op = codelet.code[static_cast<std::size_t>(i)].op;
    match_seen |= op == Opcode::kMatch;
    input_seen |= op == Opcode::kLoad || op == Opcode::kLen;
    emit_seen |= op == Opcode::kEmit;
  }
  if (!match_seen) return RejectReason::kNoMatchPath;
  if (!input_seen) return RejectReason::kInputUnused;
  // MATCH with an empty output is NoMatch, so a codelet that never emits
  // can never classify positively either.
  if (!emit_seen) return RejectReason::kNoOutputPath;
  return std::nullopt;
}

std::vector<double> GenParams::default_opcode_weights() {
  std::vector<double> w(kOpcodeCount, 1.0);
  // Bias toward instructions that read inputs and produce matches; pure
  // stack shuffling and FAIL are kept rarer.
  w[static_cast<int>(Opcode::kPush)] = 2.0;
  w[static_cast<int>(Opcode::kLoad)] = 4.0;
  w[static_cast<int>(Opcode::kLen)] = 1.0;
  w[static_cast<int>(Opcode::kEmit)] = 3.0;
  w[static_cast<int>(Opcode::kMatch)] = 2.5;
  w[static_cast<int>(Opcode::kFail)] = 0.5;
  w[static_cast<int>(Opcode::kSwap)] = 0.5;
  w[static_cast<int>(Opcode::kPop)] = 0.5;
  return w;
}

Codelet generate_random(const GenParams& params, Rng& rng) {
  if (params.min_length < 1 || params.max_length < params.min_length ||
      params.min_arity < 1 || params.max_arity < params.min_arity)
    throw std::invalid_argument("generate_random: bad length/arity bounds");
  if (params.opcode_weights.size() != static_cast<std::size_t>(kOpcodeCount))
    throw std::invalid_argument("generate_random: need one weight per opcode");

  Codelet c;
  const int span_len = params.max_length - params.min_length + 1;
  const int span_ar = params.max_arity - params.min_arity + 1;
  const auto length =
      params.min_length + static_cast<int>(rng.below(static_cast<std::uint64_t>(span_len)));
  c.arity =
      params.min_arity + static_cast<int>(rng.below(static_cast<std::uint64_t>(span_ar)));
  c.code.reserve(static_cast<std::size_t>(length));

  double total = 0;
  for (double w : params.opcode_weights) total += w;

  for (int i = 0; i < length; ++i) {
    double pick = rng.unit() * total;
    int opi = 0;
    for (; opi < kOpcodeCount - 1; ++opi) {
      pick -= params.opcode_weights[static_cast<std::size_t>(opi)];
      if (pick < 0) break;
    }
    Instruction ins{static_cast<Opcode>(opi)};
    switch (ins.op) {
      case Opcode::kPush:
        ins.a = static_cast<Word>(rng.below(17)) - 8;  // small immediates
        break;
      case Opcode::kLoad:
        ins.a = static_cast<Word>(rng.below(static_cast<std::uint64_t>(c.arity)));
        ins.b = static_cast<Word>(rng.below(4));
        break;
      case Opcode::kLen:
        ins.a = static_cast<Word>(rng.below(static_cast<std::uint64_t>(c.arity)));
        break;
      case Opcode::kJlt:
      case Opcode::kJge:
      case Opcode::kJmp: {
        // Pick an absolute target in [0, length], encode as relative.
        const auto target = static_cast<std::int64_t>(
            rng.below(static_cast<std::uint64_t>(length) + 1));
        ins.a = static_cast<Word>(target - (i + 1));
        break;
      }
      default:
        break;
    }
    c.code.push_back(ins);
  }
  return c;
}

}  // namespace cogent::vm

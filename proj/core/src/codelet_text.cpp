// cogent: self-programming codelet engine driven by information-theoretic reward
// Copyright 2026 The cogent Authors.
// Licensed under the Apache License, Version 2.0.
#include "cogent/codelet_text.hpp"

#include <charconv>
#include <stdexcept>
#include <vector>

namespace cogent::vm {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

Word parse_word(std::string_view tok, std::string_view line) {
  Word value = 0;
  const auto [ptr, ec] =
      std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw std::invalid_argument("bad operand in codelet line: " +
                                std::string(line));
  return value;
}

}  // namespace

std::string print_codelet(const Codelet& c, char separator) {
  std::string out = "ARITY " + std::to_string(c.arity);
  for (const Instruction& ins : c.code) {
    out += separator;
    out += opcode_name(ins.op);
    const int n = operand_count(ins.op);
    if (n >= 1) out += " " + std::to_string(ins.a);
    if (n >= 2) out += " " + std::to_string(ins.b);
  }
  return out;
}

Codelet parse_codelet(std::string_view text) {
  Codelet c;
  bool arity_seen = false;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find_first_of(";\n", pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;

    const auto fields = split_fields(line);
    if (fields.empty()) continue;

    if (fields[0] == "ARITY") {
      if (arity_seen || fields.size() != 2)
        throw std::invalid_argument("bad ARITY directive: " + std::string(line));
      c.arity = parse_word(fields[1], line);
      arity_seen = true;
      continue;
    }

    Instruction ins{};
    bool known = false;
    for (int op = 0; op < kOpcodeCount; ++op) {
      if (fields[0] == opcode_name(static_cast<Opcode>(op))) {
        ins.op = static_cast<Opcode>(op);
        known = true;
        break;
      }
    }
    if (!known)
      throw std::invalid_argument("unknown opcode: " + std::string(line));
    const int n = operand_count(ins.op);
    if (static_cast<int>(fields.size()) != n + 1)
      throw std::invalid_argument("wrong operand count: " + std::string(line));
    if (n >= 1) ins.a = parse_word(fields[1], line);
    if (n >= 2) ins.b = parse_word(fields[2], line);
    c.code.push_back(ins);
  }
  if (!arity_seen)
    throw std::invalid_argument("codelet text missing ARITY directive");
  return c;
}

}  // namespace cogent::vm

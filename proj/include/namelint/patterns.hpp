#pragma once

#include "namelint/ast.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace namelint {

enum class Pattern : std::uint8_t { SwappedArgs, WrongOperator, WrongOperand };

inline constexpr Pattern all_patterns[] = {
    Pattern::SwappedArgs, Pattern::WrongOperator, Pattern::WrongOperand};

const char *to_string(Pattern pattern);
std::optional<Pattern> pattern_from_string(std::string_view name);

enum class Label : std::uint8_t { Positive, Negative };

/// Placeholder for an absent tuple slot.
inline constexpr std::string_view none_name = "NONE";

struct Origin {
  std::string file;
  int line = 1;
  int column = 0;

  friend auto operator<=>(const Origin &, const Origin &) = default;
};

/// (base, callee, arg1, arg2, type1, type2, param1, param2) of a call with at
/// least two arguments.
struct CallSiteExample {
  std::string base{none_name};
  std::string callee;
  std::string arg1;
  std::string arg2;
  LiteralType type1 = LiteralType::None;
  LiteralType type2 = LiteralType::None;
  std::string param1{none_name};
  std::string param2{none_name};
  Label label = Label::Positive;
  Origin origin;

  friend bool operator==(const CallSiteExample &,
                         const CallSiteExample &) = default;
};

/// (left, right, op, type_left, type_right, parent, grandparent) of a binary
/// or logical expression.
struct BinOpExample {
  std::string left;
  std::string right;
  std::string op;
  LiteralType type_left = LiteralType::None;
  LiteralType type_right = LiteralType::None;
  NodeKind parent = NodeKind::Program;
  NodeKind grandparent = NodeKind::Program;
  Label label = Label::Positive;
  Origin origin;

  friend bool operator==(const BinOpExample &, const BinOpExample &) = default;
};

using CallPair = std::pair<CallSiteExample, CallSiteExample>;
using BinOpPair = std::pair<BinOpExample, BinOpExample>;

/// Unmodified call sites, in traversal order. These are both the positives
/// of the swapped-arguments generator and what a scan predicts on.
std::vector<CallSiteExample> extract_calls(const Node &program,
                                           std::string_view file_id);
/// Unmodified binary/logical sites with both operand names extractable.
std::vector<BinOpExample> extract_binops(const Node &program,
                                         std::string_view file_id);

/// Sites whose swap would not change the tuple (f(a, a)) are skipped.
std::vector<CallPair> gen_swapped_args(const Node &program,
                                       std::string_view file_id,
                                       std::uint64_t seed);
/// Replaces the operator by one of the other alphabet members, uniformly.
std::vector<BinOpPair> gen_wrong_operator(const Node &program,
                                          std::string_view file_id,
                                          std::uint64_t seed);
/// Replaces one operand, side chosen with probability 1/2, by a different
/// (name, type) drawn uniformly from the operands of the same file.
std::vector<BinOpPair> gen_wrong_operand(const Node &program,
                                         std::string_view file_id,
                                         std::uint64_t seed);

/// Pairs of one pattern; only the vector matching the pattern is used.
struct ExampleSet {
  Pattern pattern = Pattern::SwappedArgs;
  std::vector<CallPair> calls;
  std::vector<BinOpPair> binops;

  std::size_t pair_count() const noexcept {
    return pattern == Pattern::SwappedArgs ? calls.size() : binops.size();
  }
  void append(ExampleSet &&other);

  friend bool operator==(const ExampleSet &, const ExampleSet &) = default;
};

ExampleSet generate_examples(Pattern pattern, const Node &program,
                             std::string_view file_id, std::uint64_t seed);

/// Header `#examples pattern=<p> vocab=<hex> config=<hex>`, then one record
/// per line, pairs on consecutive lines: pattern, label, file, line, column,
/// then the tuple fields, tab-separated.
struct ExamplesHeader {
  std::uint64_t vocab_checksum = 0;
  std::uint64_t config_checksum = 0;
};
std::string format_examples(const ExampleSet &set,
                            const ExamplesHeader &header);
ExampleSet parse_examples(std::string_view text,
                          ExamplesHeader *header = nullptr);

/// One-line renderings used in warnings.
std::string summarize(const CallSiteExample &example);
std::string summarize(const BinOpExample &example);

} // namespace namelint

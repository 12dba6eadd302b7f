#include "namelint/patterns.hpp"

#include "namelint/error.hpp"
#include "namelint/naming.hpp"
#include "namelint/operators.hpp"
#include "namelint/support.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>

namespace namelint {

namespace {

constexpr std::array<const char *, 3> pattern_names = {
    "swapped-args", "wrong-operator", "wrong-operand"};

LiteralType type_of(const Node &node) {
  return node.kind == NodeKind::Literal ? node.literal_type : LiteralType::None;
}

/// Parameter lists of the file's function declarations, first one wins.
std::unordered_map<std::string, const std::vector<std::string> *>
function_params(const Node &program) {
  std::unordered_map<std::string, const std::vector<std::string> *> out;
  walk(program, [&](const Node &n, const auto &) {
    if (n.kind == NodeKind::FunctionDecl)
      out.emplace(n.name, &n.params);
  });
  return out;
}

std::string strip_prefix(const std::string &name) {
  if (name.starts_with(id_prefix))
    return name.substr(id_prefix.size());
  if (name.starts_with(lit_prefix))
    return name.substr(lit_prefix.size());
  return name;
}

} // namespace

const char *to_string(Pattern pattern) {
  return pattern_names[static_cast<std::size_t>(pattern)];
}

std::optional<Pattern> pattern_from_string(std::string_view name) {
  for (std::size_t i = 0; i < pattern_names.size(); ++i)
    if (name == pattern_names[i])
      return static_cast<Pattern>(i);
  return std::nullopt;
}

std::vector<CallSiteExample> extract_calls(const Node &program,
                                           std::string_view file_id) {
  const auto params = function_params(program);
  std::vector<CallSiteExample> out;
  walk(program, [&](const Node &n, const auto &) {
    if (n.kind != NodeKind::Call || n.children.size() < 3)
      return;
    const Node &callee = n.child(0);
    auto callee_name = extract_name(callee);
    auto arg1 = extract_name(n.child(1));
    auto arg2 = extract_name(n.child(2));
    if (!callee_name || !arg1 || !arg2)
      return;
    CallSiteExample ex;
    if (callee.kind == NodeKind::Member && !callee.computed)
      ex.base = extract_name(callee.child(0)).value_or(std::string(none_name));
    ex.callee = *callee_name;
    ex.arg1 = *arg1;
    ex.arg2 = *arg2;
    ex.type1 = type_of(n.child(1));
    ex.type2 = type_of(n.child(2));
    if (callee_name->starts_with(id_prefix)) {
      const auto it = params.find(callee_name->substr(id_prefix.size()));
      if (it != params.end()) {
        const auto &p = *it->second;
        if (p.size() > 0)
          ex.param1 = std::string(id_prefix) + p[0];
        if (p.size() > 1)
          ex.param2 = std::string(id_prefix) + p[1];
      }
    }
    ex.origin = {std::string(file_id), n.span.start.line, n.span.start.column};
    out.push_back(std::move(ex));
  });
  return out;
}

std::vector<BinOpExample> extract_binops(const Node &program,
                                         std::string_view file_id) {
  std::vector<BinOpExample> out;
  walk(program, [&](const Node &n, const std::vector<const Node *> &path) {
    if (n.kind != NodeKind::Binary && n.kind != NodeKind::Logical)
      return;
    if (!OperatorAlphabet::contains(n.op))
      return;
    auto left = extract_name(n.child(0));
    auto right = extract_name(n.child(1));
    if (!left || !right)
      return;
    BinOpExample ex;
    ex.left = *left;
    ex.right = *right;
    ex.op = n.op;
    ex.type_left = type_of(n.child(0));
    ex.type_right = type_of(n.child(1));
    if (!path.empty())
      ex.parent = path.back()->kind;
    if (path.size() >= 2)
      ex.grandparent = path[path.size() - 2]->kind;
    ex.origin = {std::string(file_id), n.span.start.line, n.span.start.column};
    out.push_back(std::move(ex));
  });
  return out;
}

std::vector<CallPair> gen_swapped_args(const Node &program,
                                       std::string_view file_id,
                                       std::uint64_t /*seed*/) {
  std::vector<CallPair> out;
  for (auto &pos : extract_calls(program, file_id)) {
    CallSiteExample neg = pos;
    neg.label = Label::Negative;
    std::swap(neg.arg1, neg.arg2);
    std::swap(neg.type1, neg.type2);
    if (neg.arg1 == pos.arg1 && neg.type1 == pos.type1)
      continue;
    out.emplace_back(std::move(pos), std::move(neg));
  }
  return out;
}

std::vector<BinOpPair> gen_wrong_operator(const Node &program,
                                          std::string_view file_id,
                                          std::uint64_t seed) {
  Rng rng(seed);
  std::vector<BinOpPair> out;
  for (auto &pos : extract_binops(program, file_id)) {
    std::vector<std::string_view> alternatives;
    for (auto op : OperatorAlphabet::symbols)
      if (op != pos.op)
        alternatives.push_back(op);
    BinOpExample neg = pos;
    neg.label = Label::Negative;
    neg.op = std::string(alternatives[rng.below(alternatives.size())]);
    out.emplace_back(std::move(pos), std::move(neg));
  }
  return out;
}

std::vector<BinOpPair> gen_wrong_operand(const Node &program,
                                         std::string_view file_id,
                                         std::uint64_t seed) {
  Rng rng(seed);
  auto sites = extract_binops(program, file_id);

  using Operand = std::pair<std::string, LiteralType>;
  std::vector<Operand> pool;
  auto remember = [&](const std::string &name, LiteralType type) {
    Operand o{name, type};
    if (std::find(pool.begin(), pool.end(), o) == pool.end())
      pool.push_back(std::move(o));
  };
  for (const auto &s : sites) {
    remember(s.left, s.type_left);
    remember(s.right, s.type_right);
  }

  std::vector<BinOpPair> out;
  std::vector<const Operand *> candidates;
  for (auto &pos : sites) {
    const bool left = rng.bernoulli(0.5);
    std::string &name_slot = left ? pos.left : pos.right;
    LiteralType &type_slot = left ? pos.type_left : pos.type_right;
    candidates.clear();
    for (const auto &o : pool)
      if (o.first != name_slot || o.second != type_slot)
        candidates.push_back(&o);
    if (candidates.empty())
      continue;
    const Operand &pick = *candidates[rng.below(candidates.size())];
    BinOpExample neg = pos;
    neg.label = Label::Negative;
    (left ? neg.left : neg.right) = pick.first;
    (left ? neg.type_left : neg.type_right) = pick.second;
    out.emplace_back(std::move(pos), std::move(neg));
  }
  return out;
}

void ExampleSet::append(ExampleSet &&other) {
  std::move(other.calls.begin(), other.calls.end(), std::back_inserter(calls));
  std::move(other.binops.begin(), other.binops.end(),
            std::back_inserter(binops));
}

ExampleSet generate_examples(Pattern pattern, const Node &program,
                             std::string_view file_id, std::uint64_t seed) {
  ExampleSet set;
  set.pattern = pattern;
  switch (pattern) {
  case Pattern::SwappedArgs:
    set.calls = gen_swapped_args(program, file_id, seed);
    break;
  case Pattern::WrongOperator:
    set.binops = gen_wrong_operator(program, file_id, seed);
    break;
  case Pattern::WrongOperand:
    set.binops = gen_wrong_operand(program, file_id, seed);
    break;
  }
  return set;
}

// --- text form --------------------------------------------------------------

namespace {

void put(std::string &out, std::string_view field) {
  out += '\t';
  out += escape_token(field);
}

std::string record_prefix(Pattern pattern, Label label, const Origin &o) {
  std::string out = to_string(pattern);
  out += label == Label::Positive ? "\tpos" : "\tneg";
  put(out, o.file);
  out += '\t' + std::to_string(o.line) + '\t' + std::to_string(o.column);
  return out;
}

std::string record(Pattern pattern, const CallSiteExample &e) {
  std::string out = record_prefix(pattern, e.label, e.origin);
  for (std::string_view f : {std::string_view(e.base), std::string_view(e.callee),
                             std::string_view(e.arg1), std::string_view(e.arg2)})
    put(out, f);
  put(out, to_string(e.type1));
  put(out, to_string(e.type2));
  put(out, e.param1);
  put(out, e.param2);
  return out + '\n';
}

std::string record(Pattern pattern, const BinOpExample &e) {
  std::string out = record_prefix(pattern, e.label, e.origin);
  put(out, e.left);
  put(out, e.right);
  put(out, e.op);
  put(out, to_string(e.type_left));
  put(out, to_string(e.type_right));
  put(out, to_string(e.parent));
  put(out, to_string(e.grandparent));
  return out + '\n';
}

[[noreturn]] void bad_record(std::size_t line, const std::string &why) {
  throw Error(ErrorCode::Format,
              "examples line " + std::to_string(line) + ": " + why);
}

LiteralType literal_field(std::string_view text, std::size_t line) {
  auto t = literal_type_from_string(text);
  if (!t)
    bad_record(line, "bad literal type '" + std::string(text) + "'");
  return *t;
}

NodeKind kind_field(std::string_view text, std::size_t line) {
  auto k = node_kind_from_string(text);
  if (!k)
    bad_record(line, "bad node kind '" + std::string(text) + "'");
  return *k;
}

} // namespace

std::string format_examples(const ExampleSet &set,
                            const ExamplesHeader &header) {
  std::string out = std::string("#examples pattern=") + to_string(set.pattern) +
                    " vocab=" + hex64(header.vocab_checksum) +
                    " config=" + hex64(header.config_checksum) + '\n';
  for (const auto &[pos, neg] : set.calls)
    out += record(set.pattern, pos) + record(set.pattern, neg);
  for (const auto &[pos, neg] : set.binops)
    out += record(set.pattern, pos) + record(set.pattern, neg);
  return out;
}

ExampleSet parse_examples(std::string_view text, ExamplesHeader *header) {
  const auto lines = split(text, '\n');
  if (lines.empty() || !lines[0].starts_with("#examples "))
    throw Error(ErrorCode::Format, "missing #examples header");
  ExampleSet set;
  bool have_pattern = false;
  ExamplesHeader h;
  for (std::string_view field : split(lines[0].substr(10), ' ')) {
    if (field.starts_with("pattern=")) {
      auto p = pattern_from_string(field.substr(8));
      if (!p)
        throw Error(ErrorCode::Format, "unknown pattern in examples header");
      set.pattern = *p;
      have_pattern = true;
    } else if (field.starts_with("vocab=")) {
      h.vocab_checksum = parse_hex64(field.substr(6));
    } else if (field.starts_with("config=")) {
      h.config_checksum = parse_hex64(field.substr(7));
    }
  }
  if (!have_pattern)
    throw Error(ErrorCode::Format, "examples header lacks pattern=");
  if (header)
    *header = h;

  const std::size_t expected = set.pattern == Pattern::SwappedArgs ? 13 : 12;
  std::vector<CallSiteExample> calls;
  std::vector<BinOpExample> binops;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty())
      continue;
    const auto f = split(lines[i], '\t');
    if (f.size() != expected)
      bad_record(i + 1, "expected " + std::to_string(expected) + " fields");
    if (f[0] != to_string(set.pattern))
      bad_record(i + 1, "pattern differs from header");
    if (f[1] != "pos" && f[1] != "neg")
      bad_record(i + 1, "label must be pos or neg");
    const Label label = f[1] == "pos" ? Label::Positive : Label::Negative;
    const Origin origin{unescape_token(f[2]), static_cast<int>(parse_int(f[3])),
                        static_cast<int>(parse_int(f[4]))};
    if (set.pattern == Pattern::SwappedArgs) {
      CallSiteExample e;
      e.base = unescape_token(f[5]);
      e.callee = unescape_token(f[6]);
      e.arg1 = unescape_token(f[7]);
      e.arg2 = unescape_token(f[8]);
      e.type1 = literal_field(f[9], i + 1);
      e.type2 = literal_field(f[10], i + 1);
      e.param1 = unescape_token(f[11]);
      e.param2 = unescape_token(f[12]);
      e.label = label;
      e.origin = origin;
      calls.push_back(std::move(e));
    } else {
      BinOpExample e;
      e.left = unescape_token(f[5]);
      e.right = unescape_token(f[6]);
      e.op = unescape_token(f[7]);
      if (!OperatorAlphabet::contains(e.op))
        bad_record(i + 1, "operator outside the alphabet");
      e.type_left = literal_field(f[8], i + 1);
      e.type_right = literal_field(f[9], i + 1);
      e.parent = kind_field(f[10], i + 1);
      e.grandparent = kind_field(f[11], i + 1);
      e.label = label;
      e.origin = origin;
      binops.push_back(std::move(e));
    }
  }

  auto pair_up = [&](auto &records, auto &target) {
    if (records.size() % 2 != 0)
      throw Error(ErrorCode::Format, "examples file has an unpaired record");
    for (std::size_t i = 0; i < records.size(); i += 2) {
      if (records[i].label != Label::Positive ||
          records[i + 1].label != Label::Negative)
        throw Error(ErrorCode::Format,
                    "examples must alternate positive and negative records");
      target.emplace_back(std::move(records[i]), std::move(records[i + 1]));
    }
  };
  pair_up(calls, set.calls);
  pair_up(binops, set.binops);
  return set;
}

std::string summarize(const CallSiteExample &e) {
  std::string out;
  if (e.base != none_name)
    out += strip_prefix(e.base) + ".";
  return out + strip_prefix(e.callee) + "(" + strip_prefix(e.arg1) + ", " +
         strip_prefix(e.arg2) + ")";
}

std::string summarize(const BinOpExample &e) {
  return strip_prefix(e.left) + " " + e.op + " " + strip_prefix(e.right);
}

} // namespace namelint

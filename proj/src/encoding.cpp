#include "namelint/encoding.hpp"

#include "namelint/error.hpp"
#include "namelint/support.hpp"

#include <algorithm>
#include <set>

namespace namelint {

namespace {

/// Fills rows with distinct non-zero codes of width N.
template <std::size_t N, std::size_t R>
void draw_codes(Rng &rng, std::array<std::array<double, N>, R> &rows,
                std::size_t first) {
  std::set<std::uint64_t> used{0};
  for (std::size_t r = first; r < R; ++r) {
    std::uint64_t code = 0;
    do
      code = rng.below(std::uint64_t{1} << N);
    while (!used.insert(code).second);
    for (std::size_t b = 0; b < N; ++b)
      rows[r][b] = ((code >> (N - 1 - b)) & 1U) ? 1.0 : 0.0;
  }
}

template <std::size_t N> std::string bits(const std::array<double, N> &row) {
  std::string out;
  for (double v : row)
    out += v != 0 ? '1' : '0';
  return out;
}

void copy_into(std::span<const double> src, std::span<double> dst,
               std::size_t &at) {
  std::copy(src.begin(), src.end(), dst.begin() + static_cast<long>(at));
  at += src.size();
}

void put_name(const std::string &name, const EmbeddingMatrix &E,
              std::span<double> out, std::size_t &at) {
  if (name == none_name) {
    std::fill_n(out.begin() + static_cast<long>(at), E.dim(), 0.0);
    at += E.dim();
  } else {
    copy_into(E.lookup(name), out, at);
  }
}

void check_length(Pattern pattern, const EmbeddingMatrix &E,
                  std::span<double> out) {
  if (out.size() != representation_length(pattern, E.dim()))
    throw Error(ErrorCode::DimensionMismatch,
                "representation buffer has " + std::to_string(out.size()) +
                    " entries, expected " +
                    std::to_string(representation_length(pattern, E.dim())));
}

} // namespace

EncodingTables::EncodingTables(std::uint64_t seed) : seed_(seed) {
  Rng rng(seed);
  // Row 0 of the type table is LiteralType::None and stays zero.
  draw_codes(rng, types_, 1);
  draw_codes(rng, kinds_, 0);
  checksum_ = fnv1a(describe());
}

std::string EncodingTables::describe() const {
  std::string out;
  for (std::size_t i = 0; i < types_.size(); ++i)
    out += std::string("T ") + to_string(static_cast<LiteralType>(i)) + ' ' +
           bits(types_[i]) + '\n';
  for (std::size_t i = 0; i < kinds_.size(); ++i)
    out += std::string("K ") + to_string(static_cast<NodeKind>(i)) + ' ' +
           bits(kinds_[i]) + '\n';
  return out;
}

std::size_t representation_length(Pattern pattern, std::size_t dim) {
  if (pattern == Pattern::SwappedArgs)
    return 6 * dim + 2 * EncodingTables::type_bits;
  return 2 * dim + OperatorAlphabet::size() + 2 * EncodingTables::type_bits +
         2 * EncodingTables::kind_bits;
}

void represent_call(const CallSiteExample &ex, const EmbeddingMatrix &E,
                    const EncodingTables &tables, std::span<double> out) {
  check_length(Pattern::SwappedArgs, E, out);
  std::size_t at = 0;
  put_name(ex.base, E, out, at);
  put_name(ex.callee, E, out, at);
  put_name(ex.arg1, E, out, at);
  put_name(ex.arg2, E, out, at);
  copy_into(tables.type(ex.type1), out, at);
  copy_into(tables.type(ex.type2), out, at);
  put_name(ex.param1, E, out, at);
  put_name(ex.param2, E, out, at);
}

std::vector<double> represent_call(const CallSiteExample &ex,
                                   const EmbeddingMatrix &E,
                                   const EncodingTables &tables) {
  std::vector<double> out(representation_length(Pattern::SwappedArgs, E.dim()));
  represent_call(ex, E, tables, out);
  return out;
}

void represent_binop(const BinOpExample &ex, const EmbeddingMatrix &E,
                     const EncodingTables &tables, std::span<double> out) {
  check_length(Pattern::WrongOperator, E, out);
  const auto op = OperatorAlphabet::index_of(ex.op);
  if (!op)
    throw Error(ErrorCode::Format, "operator outside the alphabet: " + ex.op);
  std::size_t at = 0;
  put_name(ex.left, E, out, at);
  put_name(ex.right, E, out, at);
  std::fill_n(out.begin() + static_cast<long>(at), OperatorAlphabet::size(),
              0.0);
  out[at + *op] = 1.0;
  at += OperatorAlphabet::size();
  copy_into(tables.type(ex.type_left), out, at);
  copy_into(tables.type(ex.type_right), out, at);
  copy_into(tables.kind(ex.parent), out, at);
  copy_into(tables.kind(ex.grandparent), out, at);
}

std::vector<double> represent_binop(const BinOpExample &ex,
                                    const EmbeddingMatrix &E,
                                    const EncodingTables &tables) {
  std::vector<double> out(
      representation_length(Pattern::WrongOperator, E.dim()));
  represent_binop(ex, E, tables, out);
  return out;
}

} // namespace namelint

#pragma once

#include "namelint/ast.hpp"
#include "namelint/embeddings.hpp"
#include "namelint/operators.hpp"
#include "namelint/patterns.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace namelint {

/// Random binary codes for literal types (T, 5 bits) and node kinds (K,
/// 8 bits). Codes are distinct and non-zero; LiteralType::None maps to zero.
class EncodingTables {
public:
  static constexpr std::size_t type_bits = 5;
  static constexpr std::size_t kind_bits = 8;

  explicit EncodingTables(std::uint64_t seed = 1);

  std::uint64_t seed() const noexcept { return seed_; }
  std::span<const double> type(LiteralType t) const {
    return types_[static_cast<std::size_t>(t)];
  }
  std::span<const double> kind(NodeKind k) const {
    return kinds_[static_cast<std::size_t>(k)];
  }
  std::uint64_t checksum() const noexcept { return checksum_; }

  /// Multi-line rendering stored in checkpoints, `T <type> <bits>` and
  /// `K <kind> <bits>`.
  std::string describe() const;

private:
  std::uint64_t seed_;
  std::array<std::array<double, type_bits>, 5> types_{};
  std::array<std::array<double, kind_bits>, node_kind_count> kinds_{};
  std::uint64_t checksum_ = 0;
};

std::size_t representation_length(Pattern pattern, std::size_t dim);

/// [E base, E callee, E arg1, E arg2, T type1, T type2, E param1, E param2].
/// NONE slots are zero, unknown names use the UNK row. `out` must have
/// representation_length() entries.
void represent_call(const CallSiteExample &example, const EmbeddingMatrix &E,
                    const EncodingTables &tables, std::span<double> out);
std::vector<double> represent_call(const CallSiteExample &example,
                                   const EmbeddingMatrix &E,
                                   const EncodingTables &tables);

/// [E left, E right, one-hot op, T left, T right, K parent, K grandparent].
void represent_binop(const BinOpExample &example, const EmbeddingMatrix &E,
                     const EncodingTables &tables, std::span<double> out);
std::vector<double> represent_binop(const BinOpExample &example,
                                    const EmbeddingMatrix &E,
                                    const EncodingTables &tables);

} // namespace namelint

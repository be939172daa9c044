#pragma once

#include "insdel/code.hpp"

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace insdel {

/// One channel operation. Positions are 1-based and interpreted against the
/// word as it stands when the operation is applied: Delete removes the
/// pos-th symbol (pos in [1, len]), Insert places a new symbol so that it
/// becomes the pos-th one (pos in [1, len + 1]).
struct EditOp {
  enum class Kind { Delete, Insert };
  Kind kind;
  std::uint32_t pos = 0;
  TowerElem symbol{};  // Insert only
  friend bool operator==(const EditOp&, const EditOp&) = default;
};

using EditScript = std::vector<EditOp>;

/// Apply the script in order; throws std::out_of_range on an invalid
/// position. A script of d deletions and i insertions maps length n to
/// n - d + i.
Word apply_edits(const Word& word, const EditScript& script);

/// Uniform draw from [0, bound) by rejection, so the output stream depends
/// only on the mt19937_64 sequence (std::uniform_int_distribution is
/// implementation-defined and would not reproduce across libraries).
std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound);

/// Uniform tower element: three bounded_draw(q) coordinate draws, c0 first.
TowerElem random_tower_elem(std::mt19937_64& rng, const TowerField& tower);

/// Seeded random script: t_del distinct deletion positions chosen by a
/// partial Fisher-Yates shuffle of [1, n] and emitted in descending order
/// (so each original position is still valid when applied), then t_ins
/// insertions each at a uniform position of the current word with a uniform
/// random symbol. Identical seed, identical script.
EditScript random_edit_script(std::uint32_t n, std::uint32_t t_del, std::uint32_t t_ins,
                              std::uint64_t seed, const TowerField& tower);
EditScript random_edit_script(std::uint32_t n, std::uint32_t t_del, std::uint32_t t_ins,
                              std::mt19937_64& rng, const TowerField& tower);

/// Longest common subsequence, O(|a|*|b|) single-row dynamic program.
template <class T>
std::size_t lcs(std::span<const T> a, std::span<const T> b) {
  if (a.empty() || b.empty()) return 0;
  thread_local std::vector<std::uint32_t> row;
  row.assign(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::uint32_t diag = 0;
    const T& ai = a[i - 1];
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::uint32_t up = row[j];
      row[j] = ai == b[j - 1] ? diag + 1 : std::max(row[j], row[j - 1]);
      diag = up;
    }
  }
  return row[b.size()];
}

inline std::size_t lcs(const Word& a, const Word& b) {
  return lcs(std::span<const TowerElem>(a), std::span<const TowerElem>(b));
}

/// |a| + |b| - 2 lcs(a, b); the insdel metric (symmetric, triangle
/// inequality, zero exactly on equal words).
template <class T>
std::size_t insdel_distance(std::span<const T> a, std::span<const T> b) {
  return a.size() + b.size() - 2 * lcs(a, b);
}

inline std::size_t insdel_distance(const Word& a, const Word& b) {
  return insdel_distance(std::span<const TowerElem>(a), std::span<const TowerElem>(b));
}

}  // namespace insdel

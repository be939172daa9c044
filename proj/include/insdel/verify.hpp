#pragma once

#include "insdel/code.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace insdel {

/// Two strictly increasing index vectors of equal length with entries in
/// [1, n] (1-based throughout, matching the reported witnesses).
struct IndexPair {
  std::vector<std::uint32_t> left;
  std::vector<std::uint32_t> right;
};

/// Number of positions t with left[t] == right[t]. Positional, not
/// set-intersection: ((1,2,3),(2,3,4)) agree on 0 coordinates.
std::uint64_t agreement_count(std::span<const std::uint32_t> left,
                              std::span<const std::uint32_t> right);

/// Dense square matrix over the tower field.
class SquareMatrix {
public:
  explicit SquareMatrix(std::size_t order) : order_(order), cells_(order * order) {}
  std::size_t order() const noexcept { return order_; }
  TowerElem& at(std::size_t r, std::size_t c) { return cells_[r * order_ + c]; }
  const TowerElem& at(std::size_t r, std::size_t c) const { return cells_[r * order_ + c]; }

private:
  std::size_t order_;
  std::vector<TowerElem> cells_;
};

/// The order-(2k-1) matrix whose row t is
///   (1, a_{I_t}, ..., a_{I_t}^{k-1}, a_{J_t}, ..., a_{J_t}^{k-1})
/// evaluated at the code's points. Nonsingularity of every such matrix over
/// qualifying index pairs certifies correction of n-2k+1 insdel errors.
SquareMatrix condition_matrix(const RsCode& code, const IndexPair& pair);

/// Field determinant by Gaussian elimination with nonzero pivot search
/// (division is exact in a field). Singular matrices yield zero.
TowerElem determinant(const TowerField& tower, SquareMatrix m);

struct Violation {
  std::vector<std::uint32_t> left;   // I, 1-based
  std::vector<std::uint32_t> right;  // J, 1-based
  TowerElem det;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerificationReport {
  bool passed = false;
  std::uint64_t pairs_checked = 0;
  std::uint64_t violations_found = 0;
  std::optional<Violation> first_violation;  // lexicographically first (I, J)
  std::chrono::milliseconds elapsed{0};
};

struct VerifyOptions {
  /// Worker count for the exhaustive scan. The index-pair space is split by
  /// striding over I-combinations; counts and the first witness merge
  /// deterministically, so the report does not depend on this value.
  unsigned threads = 1;
  /// Stop scanning at the first violation (sequential; pairs_checked then
  /// counts the qualifying pairs up to and including the witness).
  bool stop_on_first = false;
};

/// Enumerate every ordered pair (I, J) of increasing (2k-1)-subsequences of
/// [n] with positional agreement at most k-1, in lexicographic order over I
/// then J, and test det != 0 for each.
VerificationReport verify_code(const RsCode& code, const VerifyOptions& options = {});

/// Up to `limit` violating pairs in lexicographic (I, J) order; empty
/// exactly when verify_code passes. limit must be at least 1.
std::vector<Violation> enumerate_violations(const RsCode& code, std::uint64_t limit);

/// Base-field coordinates of det(V_{I,J}) in the {1, gamma, gamma^2} basis,
/// computed directly from the construction's delta values rather than from
/// the matrix. Requires k = 2 and provenance.
struct ProofCoefficients {
  BaseElem p0, p1, p2;
  friend bool operator==(const ProofCoefficients&, const ProofCoefficients&) = default;
};
ProofCoefficients coefficient_decomposition(const RsCode& code, const IndexPair& pair);

}  // namespace insdel

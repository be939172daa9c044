#pragma once

#include "insdel/code.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace insdel {

struct DecodeResult {
  enum class Outcome { Decoded, TooManyErrors, AmbiguityDetected };
  Outcome outcome = Outcome::TooManyErrors;
  /// Accepted message polynomials: exactly one for Decoded, two or more
  /// (sorted by canonical coordinates) for AmbiguityDetected, none otherwise.
  std::vector<MessagePoly> candidates;
  friend bool operator==(const DecodeResult&, const DecodeResult&) = default;
};

/// Unique decoder for k = 2 at radius n - 3.
///
/// Every position pair s < t of the received word is matched against every
/// point pair i < j; the unique line through (alpha_i, y_s), (alpha_j, y_t)
/// is accepted iff its codeword lies within insdel distance n - 3 of y.
/// Any codeword within the radius shares an ordered 2-symbol agreement with
/// y (distance <= n - 3 forces lcs >= 2 whenever y is nonempty), so the
/// enumeration is complete. Candidates are deduplicated and memoized.
///
/// On a code that passes verification the radius balls are disjoint, so
/// AmbiguityDetected cannot occur for any received word within radius; it is
/// reported (rather than masked) if an unverified code produces it.
DecodeResult decode_k2(const RsCode& code, const Word& received);

/// Brute-force reference decoder: scores every message polynomial by insdel
/// distance and applies the same radius n - 2k + 1 and outcome taxonomy.
/// Construction enumerates and encodes all |F|^k messages; the guard
/// |F|^k <= 10^6 throws std::domain_error beyond.
class ExhaustiveOracle {
public:
  explicit ExhaustiveOracle(RsCode code);
  DecodeResult decode(const Word& received) const;
  const RsCode& code() const noexcept { return code_; }
  std::uint64_t message_count() const noexcept { return message_count_; }
  MessagePoly message_at(std::uint64_t index) const;

private:
  RsCode code_;
  std::uint64_t message_count_;
  std::vector<std::uint64_t> codewords_;  // canonical integers, stride n
};

/// One-shot convenience wrapper around ExhaustiveOracle.
DecodeResult oracle_decode(const RsCode& code, const Word& received);

struct ConfusabilityResult {
  bool correctable = false;
  std::optional<std::pair<MessagePoly, MessagePoly>> witness;
};

/// Radius-t correctability via the metric characterization: balls of radius
/// t around codewords are pairwise disjoint iff every pair of distinct
/// codewords has insdel distance > 2t, i.e. lcs < n - t. Exhaustive pairwise
/// scan over all |F|^k codewords (same guard as the oracle); on failure the
/// first violating pair in enumeration order is returned. `threads` splits
/// the scan deterministically.
ConfusabilityResult confusability_check(const RsCode& code, std::uint64_t t,
                                        unsigned threads = 1);

}  // namespace insdel

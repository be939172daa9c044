#pragma once

#include "insdel/field.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace insdel {

/// The two evaluation-point families. InverseGamma places delta + delta^-1 *
/// gamma and works in any characteristic; SquareGamma places delta + delta^2
/// * gamma and needs odd characteristic, where it reaches length q-1.
enum class ConstructionKind { InverseGamma, SquareGamma };

/// Ordered set of distinct nonzero base-field elements generating the
/// evaluation points. For InverseGamma in odd characteristic no two members
/// may be negatives of each other.
struct DeltaSet {
  std::vector<BaseElem> elements;
  ConstructionKind kind;
};

/// Message polynomial f_0 + f_1 x + ... of degree < k, low coefficient first.
struct MessagePoly {
  std::vector<TowerElem> coeffs;
  friend bool operator==(const MessagePoly&, const MessagePoly&) = default;
};

/// Codewords and received words are plain symbol sequences over the tower.
using Word = std::vector<TowerElem>;

/// Longest admissible code for the construction over this base field:
/// (q-1)/2 for InverseGamma in odd characteristic, q-1 for InverseGamma in
/// characteristic 2 and for SquareGamma in odd characteristic, 0 for
/// SquareGamma in characteristic 2 (unsupported).
std::uint64_t max_length(const BaseField& base, ConstructionKind kind);

/// First n admissible elements in canonical-integer order. For InverseGamma
/// in odd characteristic only the smaller member of each pair {d, -d} is
/// admissible. Requires 3 <= n <= max_length.
DeltaSet select_delta_set(const BaseField& base, std::uint64_t n, ConstructionKind kind);

/// A k-dimensional Reed-Solomon code over the tower field, given by n
/// distinct evaluation points. Immutable value object; when provenance is
/// present alpha[i] is the construction formula applied to delta[i] and that
/// is validated here.
class RsCode {
public:
  RsCode(TowerField tower, unsigned k, std::vector<TowerElem> alpha,
         std::optional<DeltaSet> provenance = std::nullopt);

  const TowerField& tower() const noexcept { return tower_; }
  unsigned dimension() const noexcept { return k_; }
  std::size_t length() const noexcept { return alpha_.size(); }
  std::span<const TowerElem> alpha() const noexcept { return alpha_; }
  const std::optional<DeltaSet>& provenance() const noexcept { return provenance_; }

  /// Evaluate the message polynomial at every point (Horner).
  Word encode(const MessagePoly& msg) const;

private:
  TowerField tower_;
  unsigned k_;
  std::vector<TowerElem> alpha_;
  std::optional<DeltaSet> provenance_;
};

/// Build the k = 2 code over TowerField(base): alpha_i = delta_i +
/// delta_i^-1 gamma (InverseGamma) or delta_i + delta_i^2 gamma
/// (SquareGamma), delta running over select_delta_set. `ordering`, when
/// nonempty, is a permutation of {0, ..., n-1} applied to the delta
/// sequence; `gamma_min_poly`, when given, replaces the canonical cubic.
RsCode construct_code(const BaseField& base, std::uint64_t n, ConstructionKind kind,
                      std::span<const std::uint32_t> ordering = {},
                      const std::optional<std::vector<BaseElem>>& gamma_min_poly = std::nullopt);

/// Deterministic Fisher-Yates permutation of {0, ..., n-1} from a seed.
std::vector<std::uint32_t> seeded_permutation(std::size_t n, std::uint64_t seed);

struct FieldSizeBounds {
  std::uint64_t upper;  // (n+1)^3, achievable when n+1 is a prime power
  std::uint64_t lower;  // C(n,3) - 1
};

/// Field-size bounds for a length-n code correcting n-3 errors; n >= 3.
FieldSizeBounds field_size_bounds(std::uint64_t n);

/// n - 2k + 1, the maximal number of correctable insdel errors; requires
/// n >= 2k - 1.
std::uint64_t decoding_radius(std::uint64_t n, unsigned k);

/// Smallest prime power >= m (so GF of that size admits a length m-1 code).
std::uint64_t smallest_prime_power_at_least(std::uint64_t m);

}  // namespace insdel

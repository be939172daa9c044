#include "insdel/code.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <stdexcept>

namespace insdel {

std::uint64_t max_length(const BaseField& base, ConstructionKind kind) {
  const std::uint64_t q = base.size();
  if (kind == ConstructionKind::InverseGamma) {
    return base.characteristic() == 2 ? q - 1 : (q - 1) / 2;
  }
  return base.characteristic() == 2 ? 0 : q - 1;
}

DeltaSet select_delta_set(const BaseField& base, std::uint64_t n, ConstructionKind kind) {
  if (kind == ConstructionKind::SquareGamma && base.characteristic() == 2) {
    throw std::invalid_argument("the square construction requires odd characteristic");
  }
  if (n < 3) throw std::invalid_argument("code length must be at least 3");
  if (n > max_length(base, kind)) {
    throw std::invalid_argument("code length exceeds the maximum for this construction");
  }
  const bool pair_rule = kind == ConstructionKind::InverseGamma && base.characteristic() != 2;
  DeltaSet out{{}, kind};
  out.elements.reserve(n);
  for (std::uint64_t v = 1; v < base.size() && out.elements.size() < n; ++v) {
    BaseElem d{v};
    if (pair_rule && base.neg(d).n < v) continue;  // keep the smaller pair member
    out.elements.push_back(d);
  }
  return out;
}

namespace {

TowerElem evaluation_point(const TowerField& tower, BaseElem delta, ConstructionKind kind) {
  const BaseField& b = tower.base();
  BaseElem slope = kind == ConstructionKind::InverseGamma ? b.inv(delta) : b.mul(delta, delta);
  return tower.elem(delta, slope, b.zero());
}

std::array<std::uint64_t, 3> key_of(TowerElem t) {
  return {t.c0.n, t.c1.n, t.c2.n};
}

}  // namespace

RsCode::RsCode(TowerField tower, unsigned k, std::vector<TowerElem> alpha,
               std::optional<DeltaSet> provenance)
    : tower_(std::move(tower)), k_(k), alpha_(std::move(alpha)), provenance_(std::move(provenance)) {
  if (k_ < 1) throw std::invalid_argument("code dimension must be at least 1");
  if (alpha_.size() < k_) throw std::invalid_argument("code length must be at least the dimension");
  std::vector<std::array<std::uint64_t, 3>> keys;
  keys.reserve(alpha_.size());
  for (TowerElem a : alpha_) {
    if (!tower_.contains(a)) throw std::invalid_argument("evaluation point outside the tower field");
    keys.push_back(key_of(a));
  }
  std::sort(keys.begin(), keys.end());
  if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) {
    throw std::invalid_argument("evaluation points must be pairwise distinct");
  }
  if (provenance_) {
    const BaseField& b = tower_.base();
    if (k_ != 2) throw std::invalid_argument("construction provenance implies dimension 2");
    if (provenance_->elements.size() != alpha_.size()) {
      throw std::invalid_argument("delta set size must match the code length");
    }
    if (provenance_->kind == ConstructionKind::SquareGamma && b.characteristic() == 2) {
      throw std::invalid_argument("the square construction requires odd characteristic");
    }
    std::vector<std::uint64_t> delta_ints;
    for (std::size_t i = 0; i < alpha_.size(); ++i) {
      BaseElem d = provenance_->elements[i];
      if (!b.contains(d) || d.n == 0) throw std::invalid_argument("delta elements must be nonzero base-field elements");
      delta_ints.push_back(d.n);
      if (alpha_[i] != evaluation_point(tower_, d, provenance_->kind)) {
        throw std::invalid_argument("evaluation point does not match the construction formula");
      }
    }
    std::sort(delta_ints.begin(), delta_ints.end());
    if (std::adjacent_find(delta_ints.begin(), delta_ints.end()) != delta_ints.end()) {
      throw std::invalid_argument("delta elements must be pairwise distinct");
    }
    if (provenance_->kind == ConstructionKind::InverseGamma && b.characteristic() != 2) {
      for (std::uint64_t v : delta_ints) {
        if (std::binary_search(delta_ints.begin(), delta_ints.end(), b.neg(BaseElem{v}).n) && b.neg(BaseElem{v}).n != v) {
          throw std::invalid_argument("delta set contains a {d, -d} pair");
        }
      }
    }
  }
}

Word RsCode::encode(const MessagePoly& msg) const {
  if (msg.coeffs.size() != k_) throw std::invalid_argument("message length must equal the code dimension");
  Word out;
  out.reserve(alpha_.size());
  for (TowerElem x : alpha_) {
    TowerElem acc = tower_.zero();
    for (std::size_t i = msg.coeffs.size(); i-- > 0;) {
      acc = tower_.add(tower_.mul(acc, x), msg.coeffs[i]);
    }
    out.push_back(acc);
  }
  return out;
}

RsCode construct_code(const BaseField& base, std::uint64_t n, ConstructionKind kind,
                      std::span<const std::uint32_t> ordering,
                      const std::optional<std::vector<BaseElem>>& gamma_min_poly) {
  DeltaSet deltas = select_delta_set(base, n, kind);
  if (!ordering.empty()) {
    if (ordering.size() != deltas.elements.size()) {
      throw std::invalid_argument("ordering must be a permutation of the delta indices");
    }
    std::vector<bool> seen(n, false);
    std::vector<BaseElem> permuted(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (ordering[i] >= n || seen[ordering[i]]) {
        throw std::invalid_argument("ordering must be a permutation of the delta indices");
      }
      seen[ordering[i]] = true;
      permuted[i] = deltas.elements[ordering[i]];
    }
    deltas.elements = std::move(permuted);
  }
  TowerField tower = gamma_min_poly ? TowerField(base, *gamma_min_poly) : TowerField(base);
  std::vector<TowerElem> alpha;
  alpha.reserve(n);
  for (BaseElem d : deltas.elements) alpha.push_back(evaluation_point(tower, d, kind));
  return RsCode(std::move(tower), 2, std::move(alpha), std::move(deltas));
}

std::vector<std::uint32_t> seeded_permutation(std::size_t n, std::uint64_t seed) {
  std::vector<std::uint32_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<std::uint32_t>(i);
  std::mt19937_64 rng(seed);
  for (std::size_t i = n; i > 1; --i) {
    std::size_t j = rng() % i;
    std::swap(perm[i - 1], perm[j]);
  }
  return perm;
}

FieldSizeBounds field_size_bounds(std::uint64_t n) {
  if (n < 3) throw std::invalid_argument("field-size bounds require n >= 3");
  unsigned __int128 upper = static_cast<unsigned __int128>(n + 1) * (n + 1) * (n + 1);
  unsigned __int128 lower = static_cast<unsigned __int128>(n) * (n - 1) * (n - 2) / 6 - 1;
  if (upper > UINT64_MAX) throw std::overflow_error("bounds do not fit in 64 bits");
  return {static_cast<std::uint64_t>(upper), static_cast<std::uint64_t>(lower)};
}

std::uint64_t decoding_radius(std::uint64_t n, unsigned k) {
  if (n + 1 < 2 * static_cast<std::uint64_t>(k)) {
    throw std::invalid_argument("decoding radius requires n >= 2k - 1");
  }
  return n - 2 * static_cast<std::uint64_t>(k) + 1;
}

std::uint64_t smallest_prime_power_at_least(std::uint64_t m) {
  for (std::uint64_t v = m < 2 ? 2 : m;; ++v) {
    std::uint64_t smallest = 0;
    for (std::uint64_t d = 2; d <= v / d; ++d) {
      if (v % d == 0) {
        smallest = d;
        break;
      }
    }
    if (smallest == 0) return v;  // prime
    std::uint64_t rest = v;
    while (rest % smallest == 0) rest /= smallest;
    if (rest == 1) return v;  // pure prime power
  }
}

}  // namespace insdel

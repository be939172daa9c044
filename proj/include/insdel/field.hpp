#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace insdel {

/// Element of a base field GF(p^e), stored as its canonical integer
/// sum_i coeffs[i] * p^i in [0, p^e). Always reduced. The encoding is a
/// bijection with the field, so equality and ordering on the integer are
/// equality and canonical ordering on elements.
struct BaseElem {
  std::uint64_t n = 0;
  friend constexpr bool operator==(BaseElem, BaseElem) = default;
  friend constexpr auto operator<=>(BaseElem, BaseElem) = default;
};

/// Arithmetic context for GF(p^e).
///
/// p must be prime (certified by trial division at construction) and
/// q = p^e must fit in 64 bits. For e > 1 the field is GF(p)[x] modulo a
/// monic irreducible polynomial of degree e; when no modulus is supplied
/// the canonical one (see canonical_irreducible) is used. Contexts are
/// immutable after construction and all operations are pure, so a context
/// may be shared freely across threads.
///
/// Elements from a different context are rejected by a range check on the
/// canonical integer; that is the extent of mismatch detection.
class BaseField {
public:
  BaseField(std::uint64_t p, unsigned e);
  BaseField(std::uint64_t p, unsigned e, const std::vector<std::uint64_t>& modulus_coeffs);

  std::uint64_t characteristic() const noexcept { return p_; }
  unsigned extension_degree() const noexcept { return e_; }
  std::uint64_t size() const noexcept { return q_; }

  /// Modulus coefficients as integers mod p, constant term first, monic,
  /// length e + 1. Empty when e == 1.
  const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }

  BaseElem zero() const noexcept { return {}; }
  BaseElem one() const noexcept { return {1}; }
  bool contains(BaseElem a) const noexcept { return a.n < q_; }

  BaseElem from_int(std::uint64_t canonical) const;
  std::uint64_t to_int(BaseElem a) const;
  std::vector<std::uint64_t> coeffs(BaseElem a) const;
  BaseElem from_coeffs(std::span<const std::uint64_t> digits) const;

  BaseElem add(BaseElem a, BaseElem b) const {
    require_elem(a);
    require_elem(b);
    if (e_ == 1) {
      std::uint64_t s = a.n + b.n;
      if (s >= p_) s -= p_;
      return {s};
    }
    if (!add_table_.empty()) return {add_table_[a.n * q_ + b.n]};
    return ext_add(a, b);
  }

  BaseElem sub(BaseElem a, BaseElem b) const { return add(a, neg(b)); }

  BaseElem neg(BaseElem a) const {
    require_elem(a);
    if (e_ == 1) return {a.n == 0 ? 0 : p_ - a.n};
    if (!neg_table_.empty()) return {neg_table_[a.n]};
    return ext_neg(a);
  }

  BaseElem mul(BaseElem a, BaseElem b) const {
    require_elem(a);
    require_elem(b);
    if (e_ == 1) {
      if (!wide_) return {(a.n * b.n) % p_};
      return {mulmod_wide(a.n, b.n, p_)};
    }
    if (!mul_table_.empty()) return {mul_table_[a.n * q_ + b.n]};
    return ext_mul(a, b);
  }

  /// Multiplicative inverse; throws on zero. Prime fields use the extended
  /// Euclidean algorithm on integers, extensions use a^(q-2); the two
  /// routes agree and that agreement is asserted in tests.
  BaseElem inv(BaseElem a) const;

  /// Square-and-multiply. 0^0 == 1 by convention.
  BaseElem pow(BaseElem a, std::uint64_t n) const;

  friend bool operator==(const BaseField& x, const BaseField& y) {
    return x.p_ == y.p_ && x.e_ == y.e_ && x.modulus_ == y.modulus_;
  }

private:
  void require_elem(BaseElem a) const;
  BaseElem ext_add(BaseElem a, BaseElem b) const;
  BaseElem ext_neg(BaseElem a) const;
  BaseElem ext_mul(BaseElem a, BaseElem b) const;
  static std::uint64_t mulmod_wide(std::uint64_t a, std::uint64_t b, std::uint64_t m);
  void build_tables();

  std::uint64_t p_ = 0;
  unsigned e_ = 0;
  std::uint64_t q_ = 0;
  bool wide_ = false;                    // p does not fit in 32 bits
  std::vector<std::uint64_t> modulus_;   // empty for e == 1
  // Lookup tables for small extensions; indexed a.n * q + b.n.
  std::vector<std::uint16_t> add_table_;
  std::vector<std::uint16_t> mul_table_;
  std::vector<std::uint16_t> neg_table_;
};

/// First monic irreducible polynomial of the given degree over the field,
/// scanning coefficient tuples (a_{d-1}, ..., a_0) in ascending
/// canonical-integer lexicographic order. Returned constant term first,
/// length degree + 1. Degree must be at least 2.
std::vector<BaseElem> canonical_irreducible(const BaseField& field, unsigned degree);

/// Irreducibility over the given field. Degree 2 and 3 reduce to root
/// testing (exhaustive for small fields, gcd(x^q - x, f) otherwise);
/// higher degrees use Rabin's deterministic test over the divisor degrees.
bool is_irreducible(const BaseField& field, std::span<const BaseElem> poly);

/// Textual form for diagnostics, e.g. "x^3+x+1". Coefficients print as
/// canonical integers.
std::string poly_to_string(const BaseField& field, std::span<const BaseElem> poly);

/// Element of the degree-3 tower GF(q^3) over a base field, represented as
/// c0 + c1*gamma + c2*gamma^2 with reduced base-field coordinates.
struct TowerElem {
  BaseElem c0, c1, c2;
  friend constexpr bool operator==(TowerElem, TowerElem) = default;
};

/// Degree-3 extension of a base field, GF(q^3) = GF(q)[x] / (gamma_min_poly),
/// with gamma the residue class of x. The minimal polynomial defaults to
/// canonical_irreducible(base, 3) and is validated to have no base-field
/// root, which at degree 3 is equivalent to irreducibility and to the
/// linear independence of {1, gamma, gamma^2}.
///
/// The canonical integer of an element is int(c0) + int(c1)*q + int(c2)*q^2;
/// encode/decode require q^3 to fit in 64 bits (int_encodable()), arithmetic
/// does not.
class TowerField {
public:
  explicit TowerField(BaseField base);
  TowerField(BaseField base, std::vector<BaseElem> gamma_min_poly);

  const BaseField& base() const noexcept { return base_; }
  /// Constant term first, length 4, monic.
  const std::vector<BaseElem>& gamma_min_poly() const noexcept { return min_poly_; }

  TowerElem zero() const noexcept { return {}; }
  TowerElem one() const noexcept { return {base_.one(), {}, {}}; }
  TowerElem gamma() const noexcept { return {{}, base_.one(), {}}; }
  bool contains(TowerElem t) const noexcept {
    return base_.contains(t.c0) && base_.contains(t.c1) && base_.contains(t.c2);
  }

  TowerElem elem(BaseElem c0, BaseElem c1, BaseElem c2) const;
  /// Ring embedding of the base field: a -> (a, 0, 0).
  TowerElem embed(BaseElem a) const;

  bool int_encodable() const noexcept;
  TowerElem from_int(std::uint64_t canonical) const;
  std::uint64_t to_int(TowerElem t) const;

  TowerElem add(TowerElem a, TowerElem b) const {
    return {base_.add(a.c0, b.c0), base_.add(a.c1, b.c1), base_.add(a.c2, b.c2)};
  }
  TowerElem sub(TowerElem a, TowerElem b) const {
    return {base_.sub(a.c0, b.c0), base_.sub(a.c1, b.c1), base_.sub(a.c2, b.c2)};
  }
  TowerElem neg(TowerElem a) const {
    return {base_.neg(a.c0), base_.neg(a.c1), base_.neg(a.c2)};
  }
  TowerElem mul(TowerElem a, TowerElem b) const;
  /// Extended Euclidean inverse against the minimal cubic; throws on zero.
  TowerElem inv(TowerElem a) const;
  TowerElem pow(TowerElem a, std::uint64_t n) const;

  friend bool operator==(const TowerField& x, const TowerField& y) {
    return x.base_ == y.base_ && x.min_poly_ == y.min_poly_;
  }

private:
  BaseField base_;
  std::vector<BaseElem> min_poly_;
  TowerElem gamma3_;  // gamma^3 expressed in the {1, gamma, gamma^2} basis
  TowerElem gamma4_;
};

}  // namespace insdel

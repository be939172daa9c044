#include "insdel/field.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace insdel {

namespace {

constexpr std::uint64_t kTableLimit = 256;   // build lookup tables up to this q
constexpr std::uint64_t kRootScanLimit = 4096;  // exhaustive root testing up to this q

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ull, 3ull}) {
    if (n % d == 0) return n == d;
  }
  for (std::uint64_t d = 5; d <= n / d; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

std::uint64_t checked_pow(std::uint64_t p, unsigned e) {
  unsigned __int128 q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= p;
    if (q > UINT64_MAX) throw std::invalid_argument("field size p^e does not fit in 64 bits");
  }
  return static_cast<std::uint64_t>(q);
}

// --- dense polynomial helpers over a BaseField ------------------------------
// Coefficients constant term first; zero polynomial is the empty vector.

using Poly = std::vector<BaseElem>;

void poly_trim(Poly& a) {
  while (!a.empty() && a.back().n == 0) a.pop_back();
}

Poly poly_sub(const BaseField& f, Poly a, const Poly& b) {
  if (b.size() > a.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = f.sub(a[i], b[i]);
  poly_trim(a);
  return a;
}

// Remainder of a modulo monic-after-scaling divisor m (m need not be monic).
Poly poly_mod(const BaseField& f, Poly a, const Poly& m) {
  if (m.empty()) throw std::invalid_argument("polynomial division by zero");
  const BaseElem lead_inv = f.inv(m.back());
  while (a.size() >= m.size()) {
    BaseElem c = f.mul(a.back(), lead_inv);
    if (c.n != 0) {
      std::size_t off = a.size() - m.size();
      for (std::size_t i = 0; i < m.size(); ++i) {
        a[off + i] = f.sub(a[off + i], f.mul(c, m[i]));
      }
    }
    a.pop_back();
    poly_trim(a);
    if (a.size() < m.size()) break;
  }
  return a;
}

Poly poly_mul(const BaseField& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].n == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
    }
  }
  poly_trim(out);
  return out;
}

Poly poly_mulmod(const BaseField& f, const Poly& a, const Poly& b, const Poly& m) {
  return poly_mod(f, poly_mul(f, a, b), m);
}

Poly poly_powmod(const BaseField& f, Poly base, std::uint64_t exp, const Poly& m) {
  Poly result{f.one()};
  base = poly_mod(f, std::move(base), m);
  while (exp > 0) {
    if (exp & 1) result = poly_mulmod(f, result, base, m);
    exp >>= 1;
    if (exp) base = poly_mulmod(f, base, base, m);
  }
  return result;
}

Poly poly_gcd(const BaseField& f, Poly a, Poly b) {
  while (!b.empty()) {
    Poly r = poly_mod(f, std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

BaseElem poly_eval(const BaseField& f, const Poly& a, BaseElem x) {
  BaseElem acc = f.zero();
  for (std::size_t i = a.size(); i-- > 0;) acc = f.add(f.mul(acc, x), a[i]);
  return acc;
}

bool poly_has_root(const BaseField& f, const Poly& a) {
  if (f.size() <= kRootScanLimit) {
    for (std::uint64_t v = 0; v < f.size(); ++v) {
      if (poly_eval(f, a, BaseElem{v}).n == 0) return true;
    }
    return false;
  }
  // gcd(x^q - x, f) is the product of the distinct linear factors of f.
  Poly xq = poly_powmod(f, Poly{f.zero(), f.one()}, f.size(), a);
  Poly diff = poly_sub(f, std::move(xq), Poly{f.zero(), f.one()});
  Poly g = poly_gcd(f, a, std::move(diff));
  return g.size() > 1;
}

std::vector<unsigned> prime_divisors(unsigned d) {
  std::vector<unsigned> out;
  for (unsigned p = 2; p * p <= d; ++p) {
    if (d % p == 0) {
      out.push_back(p);
      while (d % p == 0) d /= p;
    }
  }
  if (d > 1) out.push_back(d);
  return out;
}

// Rabin's deterministic criterion: f of degree d is irreducible iff
// x^(q^d) == x mod f and gcd(x^(q^(d/l)) - x, f) = 1 for every prime l | d.
bool rabin_irreducible(const BaseField& f, const Poly& poly) {
  const unsigned d = static_cast<unsigned>(poly.size() - 1);
  const Poly x{f.zero(), f.one()};
  std::vector<Poly> frobenius(d + 1);  // frobenius[i] = x^(q^i) mod poly
  frobenius[0] = x;
  for (unsigned i = 1; i <= d; ++i) {
    frobenius[i] = poly_powmod(f, frobenius[i - 1], f.size(), poly);
  }
  if (poly_sub(f, frobenius[d], x) != Poly{}) return false;
  for (unsigned l : prime_divisors(d)) {
    Poly g = poly_gcd(f, poly, poly_sub(f, frobenius[d / l], x));
    if (g.size() > 1) return false;
  }
  return true;
}

}  // namespace

// --- BaseField ---------------------------------------------------------------

BaseField::BaseField(std::uint64_t p, unsigned e) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic is not prime");
  if (e < 1) throw std::invalid_argument("extension degree must be at least 1");
  p_ = p;
  e_ = e;
  q_ = checked_pow(p, e);
  wide_ = p > UINT32_MAX;
  if (e > 1) {
    BaseField prime_field(p, 1);
    for (BaseElem c : canonical_irreducible(prime_field, e)) modulus_.push_back(c.n);
    build_tables();
  }
}

BaseField::BaseField(std::uint64_t p, unsigned e, const std::vector<std::uint64_t>& modulus_coeffs) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic is not prime");
  if (e < 1) throw std::invalid_argument("extension degree must be at least 1");
  if (e == 1) throw std::invalid_argument("prime fields take no modulus");
  if (modulus_coeffs.size() != e + 1) throw std::invalid_argument("modulus degree must equal the extension degree");
  if (modulus_coeffs.back() != 1) throw std::invalid_argument("modulus must be monic");
  for (std::uint64_t c : modulus_coeffs) {
    if (c >= p) throw std::invalid_argument("modulus coefficient out of range mod p");
  }
  p_ = p;
  e_ = e;
  q_ = checked_pow(p, e);
  wide_ = p > UINT32_MAX;
  BaseField prime_field(p, 1);
  Poly poly;
  for (std::uint64_t c : modulus_coeffs) poly.push_back(BaseElem{c});
  if (!is_irreducible(prime_field, poly)) throw std::invalid_argument("modulus is reducible over GF(p)");
  modulus_ = modulus_coeffs;
  build_tables();
}

void BaseField::require_elem(BaseElem a) const {
  if (a.n >= q_) {
    throw std::invalid_argument("element does not belong to this field context");
  }
}

void BaseField::build_tables() {
  if (q_ > kTableLimit) return;
  add_table_.resize(q_ * q_);
  mul_table_.resize(q_ * q_);
  neg_table_.resize(q_);
  for (std::uint64_t a = 0; a < q_; ++a) {
    neg_table_[a] = static_cast<std::uint16_t>(ext_neg(BaseElem{a}).n);
    for (std::uint64_t b = 0; b < q_; ++b) {
      add_table_[a * q_ + b] = static_cast<std::uint16_t>(ext_add(BaseElem{a}, BaseElem{b}).n);
      mul_table_[a * q_ + b] = static_cast<std::uint16_t>(ext_mul(BaseElem{a}, BaseElem{b}).n);
    }
  }
}

BaseElem BaseField::from_int(std::uint64_t canonical) const {
  if (canonical >= q_) throw std::out_of_range("canonical integer out of range for this field");
  return {canonical};
}

std::uint64_t BaseField::to_int(BaseElem a) const {
  require_elem(a);
  return a.n;
}

std::vector<std::uint64_t> BaseField::coeffs(BaseElem a) const {
  require_elem(a);
  std::vector<std::uint64_t> digits(e_);
  std::uint64_t v = a.n;
  for (unsigned i = 0; i < e_; ++i) {
    digits[i] = v % p_;
    v /= p_;
  }
  return digits;
}

BaseElem BaseField::from_coeffs(std::span<const std::uint64_t> digits) const {
  if (digits.size() != e_) throw std::invalid_argument("coefficient vector length must equal the extension degree");
  std::uint64_t v = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (digits[i] >= p_) throw std::invalid_argument("coefficient out of range mod p");
    v = v * p_ + digits[i];
  }
  return {v};
}

BaseElem BaseField::ext_add(BaseElem a, BaseElem b) const {
  std::uint64_t va = a.n, vb = b.n, out = 0, scale = 1;
  for (unsigned i = 0; i < e_; ++i) {
    std::uint64_t s = va % p_ + vb % p_;
    if (s >= p_) s -= p_;
    out += s * scale;
    scale *= p_;
    va /= p_;
    vb /= p_;
  }
  return {out};
}

BaseElem BaseField::ext_neg(BaseElem a) const {
  std::uint64_t va = a.n, out = 0, scale = 1;
  for (unsigned i = 0; i < e_; ++i) {
    std::uint64_t d = va % p_;
    out += (d == 0 ? 0 : p_ - d) * scale;
    scale *= p_;
    va /= p_;
  }
  return {out};
}

BaseElem BaseField::ext_mul(BaseElem a, BaseElem b) const {
  // Schoolbook product of the digit vectors, then reduction by the monic
  // modulus. p < 2^32 here (p^e fits 64 bits with e >= 2), so digit
  // products fit comfortably.
  std::array<std::uint64_t, 127> prod{};
  std::array<std::uint64_t, 64> da{}, db{};
  std::uint64_t va = a.n, vb = b.n;
  for (unsigned i = 0; i < e_; ++i) {
    da[i] = va % p_;
    db[i] = vb % p_;
    va /= p_;
    vb /= p_;
  }
  for (unsigned i = 0; i < e_; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < e_; ++j) {
      prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    }
  }
  for (unsigned i = 2 * e_ - 2; i >= e_ && i < prod.size(); --i) {
    std::uint64_t c = prod[i];
    if (c != 0) {
      prod[i] = 0;
      for (unsigned j = 0; j < e_; ++j) {
        prod[i - e_ + j] = (prod[i - e_ + j] + c * (p_ - modulus_[j])) % p_;
      }
    }
    if (i == e_) break;
  }
  std::uint64_t out = 0;
  for (unsigned i = e_; i-- > 0;) out = out * p_ + prod[i];
  return {out};
}

std::uint64_t BaseField::mulmod_wide(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

BaseElem BaseField::inv(BaseElem a) const {
  require_elem(a);
  if (a.n == 0) throw std::invalid_argument("zero has no multiplicative inverse");
  if (e_ == 1) {
    // Extended Euclid on (a, p); p prime so the gcd is 1.
    __int128 t = 0, new_t = 1;
    std::uint64_t r = p_, new_r = a.n;
    while (new_r != 0) {
      std::uint64_t quot = r / new_r;
      __int128 tmp_t = t - static_cast<__int128>(quot) * new_t;
      t = new_t;
      new_t = tmp_t;
      std::uint64_t tmp_r = r - quot * new_r;
      r = new_r;
      new_r = tmp_r;
    }
    if (t < 0) t += p_;
    return {static_cast<std::uint64_t>(t)};
  }
  return pow(a, q_ - 2);
}

BaseElem BaseField::pow(BaseElem a, std::uint64_t n) const {
  require_elem(a);
  BaseElem result = one();
  BaseElem base = a;
  while (n > 0) {
    if (n & 1) result = mul(result, base);
    n >>= 1;
    if (n) base = mul(base, base);
  }
  return result;
}

// --- irreducible polynomial search -------------------------------------------

std::vector<BaseElem> canonical_irreducible(const BaseField& field, unsigned degree) {
  if (degree < 2) throw std::invalid_argument("canonical_irreducible requires degree >= 2");
  // Odometer over the non-leading coefficients (a_{d-1}, ..., a_0), most
  // significant digit last so the scan is ascending lexicographic on the
  // tuple, i.e. ascending in sum int(a_i) * q^i.
  std::vector<std::uint64_t> digits(degree, 0);
  Poly candidate(degree + 1, field.zero());
  candidate[degree] = field.one();
  while (true) {
    for (unsigned i = 0; i < degree; ++i) candidate[i] = BaseElem{digits[i]};
    if (is_irreducible(field, candidate)) return candidate;
    unsigned i = 0;
    while (i < degree && ++digits[i] == field.size()) digits[i++] = 0;
    if (i == degree) break;  // wrapped; cannot happen, an irreducible always exists
  }
  throw std::logic_error("no irreducible polynomial found");
}

bool is_irreducible(const BaseField& field, std::span<const BaseElem> poly) {
  Poly a(poly.begin(), poly.end());
  poly_trim(a);
  if (a.size() < 2) return false;  // constants and zero
  if (a.back().n != 1) {
    BaseElem scale = field.inv(a.back());
    for (BaseElem& c : a) c = field.mul(c, scale);
  }
  const std::size_t degree = a.size() - 1;
  if (degree == 1) return true;
  if (degree <= 3) return !poly_has_root(field, a);
  return rabin_irreducible(field, a);
}

std::string poly_to_string(const BaseField& field, std::span<const BaseElem> poly) {
  Poly a(poly.begin(), poly.end());
  poly_trim(a);
  if (a.empty()) return "0";
  std::string out;
  for (std::size_t i = a.size(); i-- > 0;) {
    std::uint64_t c = field.to_int(a[i]);
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(c);
    } else {
      if (c != 1) out += std::to_string(c);
      out += 'x';
      if (i > 1) out += '^' + std::to_string(i);
    }
  }
  return out;
}

// --- TowerField ---------------------------------------------------------------

TowerField::TowerField(BaseField base) : TowerField(base, canonical_irreducible(base, 3)) {}

TowerField::TowerField(BaseField base, std::vector<BaseElem> gamma_min_poly)
    : base_(std::move(base)), min_poly_(std::move(gamma_min_poly)) {
  if (min_poly_.size() != 4) throw std::invalid_argument("gamma minimal polynomial must have degree 3");
  for (BaseElem c : min_poly_) {
    if (!base_.contains(c)) throw std::invalid_argument("gamma minimal polynomial coefficient outside the base field");
  }
  if (min_poly_[3].n != 1) throw std::invalid_argument("gamma minimal polynomial must be monic");
  if (!is_irreducible(base_, min_poly_)) {
    throw std::invalid_argument("gamma minimal polynomial has a base-field root (reducible)");
  }
  gamma3_ = {base_.neg(min_poly_[0]), base_.neg(min_poly_[1]), base_.neg(min_poly_[2])};
  // gamma^4 = gamma * gamma^3, folding the gamma^3 coordinate once more.
  gamma4_ = {base_.mul(gamma3_.c2, gamma3_.c0),
             base_.add(gamma3_.c0, base_.mul(gamma3_.c2, gamma3_.c1)),
             base_.add(gamma3_.c1, base_.mul(gamma3_.c2, gamma3_.c2))};
}

TowerElem TowerField::elem(BaseElem c0, BaseElem c1, BaseElem c2) const {
  TowerElem t{c0, c1, c2};
  if (!contains(t)) throw std::invalid_argument("coordinate outside the base field");
  return t;
}

TowerElem TowerField::embed(BaseElem a) const {
  if (!base_.contains(a)) throw std::invalid_argument("element does not belong to the base field");
  return {a, {}, {}};
}

bool TowerField::int_encodable() const noexcept {
  unsigned __int128 cube = static_cast<unsigned __int128>(base_.size()) * base_.size() * base_.size();
  return cube <= UINT64_MAX;
}

TowerElem TowerField::from_int(std::uint64_t canonical) const {
  if (!int_encodable()) throw std::domain_error("field too large for 64-bit canonical integers");
  const std::uint64_t q = base_.size();
  if (canonical >= q * q * q) throw std::out_of_range("canonical integer out of range for this tower");
  return {BaseElem{canonical % q}, BaseElem{canonical / q % q}, BaseElem{canonical / (q * q)}};
}

std::uint64_t TowerField::to_int(TowerElem t) const {
  if (!int_encodable()) throw std::domain_error("field too large for 64-bit canonical integers");
  if (!contains(t)) throw std::invalid_argument("element does not belong to this tower");
  const std::uint64_t q = base_.size();
  return t.c0.n + t.c1.n * q + t.c2.n * q * q;
}

TowerElem TowerField::mul(TowerElem a, TowerElem b) const {
  const BaseField& f = base_;
  BaseElem t0 = f.mul(a.c0, b.c0);
  BaseElem t1 = f.add(f.mul(a.c0, b.c1), f.mul(a.c1, b.c0));
  BaseElem t2 = f.add(f.add(f.mul(a.c0, b.c2), f.mul(a.c1, b.c1)), f.mul(a.c2, b.c0));
  BaseElem t3 = f.add(f.mul(a.c1, b.c2), f.mul(a.c2, b.c1));
  BaseElem t4 = f.mul(a.c2, b.c2);
  return {f.add(t0, f.add(f.mul(t3, gamma3_.c0), f.mul(t4, gamma4_.c0))),
          f.add(t1, f.add(f.mul(t3, gamma3_.c1), f.mul(t4, gamma4_.c1))),
          f.add(t2, f.add(f.mul(t3, gamma3_.c2), f.mul(t4, gamma4_.c2)))};
}

TowerElem TowerField::inv(TowerElem a) const {
  if (!contains(a)) throw std::invalid_argument("element does not belong to this tower");
  if (a == zero()) throw std::invalid_argument("zero has no multiplicative inverse");
  // Extended Euclid over GF(q)[x] for u = c0 + c1 x + c2 x^2 against the
  // minimal cubic m: find s with s*u + t*m = 1, then s(gamma) = u^-1.
  Poly r0(min_poly_.begin(), min_poly_.end());
  Poly r1{a.c0, a.c1, a.c2};
  poly_trim(r1);
  Poly s0{}, s1{base_.one()};
  while (r1.size() > 1 || (r1.size() == 1 && r1[0].n != 0)) {
    // Compute quotient and remainder of r0 by r1.
    Poly quot;
    Poly rem = r0;
    const BaseElem lead_inv = base_.inv(r1.back());
    if (rem.size() >= r1.size()) {
      quot.assign(rem.size() - r1.size() + 1, base_.zero());
      while (rem.size() >= r1.size()) {
        BaseElem c = base_.mul(rem.back(), lead_inv);
        std::size_t off = rem.size() - r1.size();
        quot[off] = c;
        for (std::size_t i = 0; i < r1.size(); ++i) {
          rem[off + i] = base_.sub(rem[off + i], base_.mul(c, r1[i]));
        }
        poly_trim(rem);
        if (rem.empty()) break;
      }
    }
    Poly s_next = poly_sub(base_, s0, poly_mul(base_, quot, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s_next);
    if (r0.size() == 1) break;  // gcd reached a unit
  }
  // r0 is a nonzero constant (u and m are coprime); scale s0 accordingly.
  BaseElem scale = base_.inv(r0[0]);
  Poly s = s0;
  s.resize(3, base_.zero());
  return {base_.mul(s[0], scale), base_.mul(s[1], scale), base_.mul(s[2], scale)};
}

TowerElem TowerField::pow(TowerElem a, std::uint64_t n) const {
  if (!contains(a)) throw std::invalid_argument("element does not belong to this tower");
  TowerElem result = one();
  TowerElem base = a;
  while (n > 0) {
    if (n & 1) result = mul(result, base);
    n >>= 1;
    if (n) base = mul(base, base);
  }
  return result;
}

}  // namespace insdel

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "insdel/field.hpp"

#include <cstdint>
#include <random>
#include <set>
#include <vector>

using namespace insdel;

namespace {

// Independent oracle for prime fields: scan monic cubics x^3 + a2 x^2 + a1 x
// + a0 in ascending (a2, a1, a0) order with plain integer arithmetic and
// return the coefficients of the first one without a root mod p. At degree 3
// rootlessness is irreducibility.
std::vector<std::uint64_t> first_rootless_cubic_mod_p(std::uint64_t p) {
  for (std::uint64_t a2 = 0; a2 < p; ++a2) {
    for (std::uint64_t a1 = 0; a1 < p; ++a1) {
      for (std::uint64_t a0 = 0; a0 < p; ++a0) {
        bool has_root = false;
        for (std::uint64_t x = 0; x < p && !has_root; ++x) {
          std::uint64_t v = (((x + a2) * x + a1) % p * x + a0) % p;
          has_root = v == 0;
        }
        if (!has_root) return {a0, a1, a2, 1};
      }
    }
  }
  return {};
}

std::vector<std::uint64_t> to_ints(const BaseField& f, const std::vector<BaseElem>& poly) {
  std::vector<std::uint64_t> out;
  for (BaseElem c : poly) out.push_back(f.to_int(c));
  return out;
}

void check_field_axioms_exhaustive(const BaseField& f) {
  const std::uint64_t q = f.size();
  for (std::uint64_t a = 0; a < q; ++a) {
    BaseElem ea{a};
    CHECK(f.add(ea, f.neg(ea)) == f.zero());
    CHECK(f.mul(ea, f.one()) == ea);
    if (a != 0) {
      CHECK(f.mul(ea, f.inv(ea)) == f.one());
      CHECK(f.pow(ea, q - 1) == f.one());
    }
    for (std::uint64_t b = 0; b < q; ++b) {
      BaseElem eb{b};
      CHECK(f.add(ea, eb) == f.add(eb, ea));
      CHECK(f.mul(ea, eb) == f.mul(eb, ea));
      for (std::uint64_t c = 0; c < q; ++c) {
        BaseElem ec{c};
        CHECK(f.add(f.add(ea, eb), ec) == f.add(ea, f.add(eb, ec)));
        CHECK(f.mul(f.mul(ea, eb), ec) == f.mul(ea, f.mul(eb, ec)));
        CHECK(f.mul(ea, f.add(eb, ec)) == f.add(f.mul(ea, eb), f.mul(ea, ec)));
      }
    }
  }
}

}  // namespace

TEST_CASE("prime field context") {
  BaseField f(7, 1);
  CHECK(f.size() == 7);
  CHECK(f.modulus().empty());
  CHECK_THROWS_AS(BaseField(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(BaseField(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(BaseField(7, 0), std::invalid_argument);
}

TEST_CASE("canonical irreducible cubics match the independent scan") {
  // Frozen expected values, each confirmed by first_rootless_cubic_mod_p.
  struct Case {
    std::uint64_t p;
    std::vector<std::uint64_t> expected;
  };
  for (const Case& c : {Case{7, {2, 0, 0, 1}},    // x^3 + 2
                        Case{2, {1, 1, 0, 1}},    // x^3 + x + 1
                        Case{5, {1, 1, 0, 1}}}) { // x^3 + x + 1
    CAPTURE(c.p);
    CHECK(first_rootless_cubic_mod_p(c.p) == c.expected);
    BaseField f(c.p, 1);
    CHECK(to_ints(f, canonical_irreducible(f, 3)) == c.expected);
  }
  // Independent scan and implementation agree on further primes.
  for (std::uint64_t p : {3ull, 11ull, 13ull, 31ull}) {
    BaseField f(p, 1);
    CHECK(to_ints(f, canonical_irreducible(f, 3)) == first_rootless_cubic_mod_p(p));
  }
}

TEST_CASE("canonical moduli of small extensions") {
  BaseField f8(2, 3);
  CHECK(f8.size() == 8);
  CHECK(f8.modulus() == std::vector<std::uint64_t>{1, 1, 0, 1});  // x^3+x+1
  BaseField f9(3, 2);
  CHECK(f9.size() == 9);
  CHECK(f9.modulus() == std::vector<std::uint64_t>{1, 0, 1});  // x^2+1
  BaseField f16(2, 4);
  CHECK(f16.size() == 16);
  CHECK(f16.modulus() == std::vector<std::uint64_t>{1, 1, 0, 0, 1});  // x^4+x+1
}

TEST_CASE("explicit modulus validation") {
  CHECK_NOTHROW(BaseField(2, 3, {1, 1, 0, 1}));
  // x^3 + 1 has root 1 over GF(2).
  CHECK_THROWS_AS(BaseField(2, 3, std::vector<std::uint64_t>{1, 0, 0, 1}), std::invalid_argument);
  // Not monic.
  CHECK_THROWS_AS(BaseField(7, 2, std::vector<std::uint64_t>{1, 0, 2}), std::invalid_argument);
  // Wrong degree.
  CHECK_THROWS_AS(BaseField(7, 2, std::vector<std::uint64_t>{1, 0, 0, 1}), std::invalid_argument);
  // Prime fields take no modulus.
  CHECK_THROWS_AS(BaseField(7, 1, std::vector<std::uint64_t>{1, 1}), std::invalid_argument);
  // x^4 + x^2 + 1 = (x^2+x+1)^2 has no root but is reducible; the degree-4
  // test must catch it.
  CHECK_THROWS_AS(BaseField(2, 4, std::vector<std::uint64_t>{1, 0, 1, 0, 1}), std::invalid_argument);
}

TEST_CASE("GF(8) arithmetic spot values") {
  BaseField f(2, 3);
  CHECK(f.add(f.from_int(3), f.from_int(5)) == f.from_int(6));
  CHECK(f.mul(f.from_int(2), f.from_int(2)) == f.from_int(4));  // x*x = x^2
  CHECK(f.mul(f.from_int(2), f.from_int(4)) == f.from_int(3));  // x^3 = x+1
  CHECK(f.inv(f.from_int(2)) == f.from_int(5));                 // x*(x^2+1) = 1
  // Exhaustive inverse search agrees.
  for (std::uint64_t a = 1; a < 8; ++a) {
    std::uint64_t found = 0;
    for (std::uint64_t b = 1; b < 8; ++b) {
      if (f.mul(BaseElem{a}, BaseElem{b}) == f.one()) found = b;
    }
    CHECK(f.inv(BaseElem{a}).n == found);
  }
}

TEST_CASE("GF(7) arithmetic spot values") {
  BaseField f(7, 1);
  CHECK(f.add(f.from_int(3), f.from_int(5)) == f.from_int(1));
  CHECK(f.inv(f.from_int(3)) == f.from_int(5));
  CHECK(f.pow(f.from_int(3), 6) == f.one());
  CHECK_THROWS_AS(f.inv(f.zero()), std::invalid_argument);
  CHECK(f.pow(f.zero(), 0) == f.one());  // 0^0 convention
}

TEST_CASE("field axioms exhaustively on small fields") {
  for (auto [p, e] : {std::pair<std::uint64_t, unsigned>{7, 1}, {2, 3}, {3, 2}}) {
    CAPTURE(p);
    check_field_axioms_exhaustive(BaseField(p, e));
  }
}

TEST_CASE("both inverse routes agree") {
  for (auto [p, e] : {std::pair<std::uint64_t, unsigned>{31, 1}, {2, 4}, {5, 2}}) {
    BaseField f(p, e);
    for (std::uint64_t a = 1; a < f.size(); ++a) {
      CHECK(f.inv(BaseElem{a}) == f.pow(BaseElem{a}, f.size() - 2));
    }
  }
}

TEST_CASE("integer encoding is a bijection") {
  BaseField f(3, 2);
  std::set<std::uint64_t> seen;
  for (std::uint64_t n = 0; n < f.size(); ++n) {
    BaseElem a = f.from_int(n);
    CHECK(f.to_int(a) == n);
    seen.insert(a.n);
  }
  CHECK(seen.size() == f.size());
  CHECK_THROWS_AS(f.from_int(9), std::out_of_range);

  CHECK(f.from_coeffs(std::vector<std::uint64_t>{2, 1}) == f.from_int(5));
  CHECK(f.coeffs(f.from_int(5)) == std::vector<std::uint64_t>{2, 1});
}

TEST_CASE("context mismatch is rejected by range") {
  BaseField f5(5, 1);
  BaseField f7(7, 1);
  BaseElem six = f7.from_int(6);
  CHECK_THROWS_AS(f5.add(six, f5.one()), std::invalid_argument);
  CHECK_THROWS_AS(f5.mul(six, f5.one()), std::invalid_argument);
}

TEST_CASE("tower over GF(7)") {
  TowerField t{BaseField(7, 1)};
  const BaseField& b = t.base();
  CHECK(t.gamma_min_poly().size() == 4);
  CHECK(to_ints(b, t.gamma_min_poly()) == std::vector<std::uint64_t>{2, 0, 0, 1});
  CHECK(poly_to_string(b, t.gamma_min_poly()) == "x^3+2");

  // gamma^3 = -2 = 5
  CHECK(t.pow(t.gamma(), 3) == t.embed(b.from_int(5)));
  // gamma satisfies its minimal polynomial.
  TowerElem g3 = t.pow(t.gamma(), 3);
  TowerElem acc = t.add(g3, t.embed(b.from_int(2)));
  CHECK(acc == t.zero());

  // (1,2,3) + (6,5,4) = 0
  TowerElem x = t.elem(b.from_int(1), b.from_int(2), b.from_int(3));
  TowerElem y = t.elem(b.from_int(6), b.from_int(5), b.from_int(4));
  CHECK(t.add(x, y) == t.zero());

  // canonical integer of (1,2,3) is 1 + 2*7 + 3*49 = 162
  CHECK(t.to_int(x) == 162);
  CHECK(t.from_int(162) == x);

  // group order 342
  CHECK(t.pow(x, 342) == t.one());
}

TEST_CASE("tower embedding is a ring homomorphism") {
  TowerField t{BaseField(7, 1)};
  const BaseField& b = t.base();
  CHECK(t.embed(b.zero()) == t.zero());
  CHECK(t.embed(b.one()) == t.one());
  for (std::uint64_t a = 0; a < 7; ++a) {
    for (std::uint64_t c = 0; c < 7; ++c) {
      CHECK(t.mul(t.embed(BaseElem{a}), t.embed(BaseElem{c})) == t.embed(b.mul(BaseElem{a}, BaseElem{c})));
      CHECK(t.add(t.embed(BaseElem{a}), t.embed(BaseElem{c})) == t.embed(b.add(BaseElem{a}, BaseElem{c})));
    }
  }
}

TEST_CASE("tower inverses and axioms, exhaustively over GF(7)^3") {
  TowerField t{BaseField(7, 1)};
  for (std::uint64_t n = 1; n < 343; ++n) {
    TowerElem a = t.from_int(n);
    CHECK(t.mul(a, t.inv(a)) == t.one());
  }
  CHECK_THROWS_AS(t.inv(t.zero()), std::invalid_argument);

  // Associativity and distributivity on a pseudorandom sample.
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    TowerElem a = t.from_int(rng() % 343);
    TowerElem b = t.from_int(rng() % 343);
    TowerElem c = t.from_int(rng() % 343);
    CHECK(t.mul(t.mul(a, b), c) == t.mul(a, t.mul(b, c)));
    CHECK(t.mul(a, t.add(b, c)) == t.add(t.mul(a, b), t.mul(a, c)));
  }
}

TEST_CASE("gamma basis is linearly independent") {
  // gamma_min_poly has no base-field root, checked exhaustively.
  for (auto [p, e] : {std::pair<std::uint64_t, unsigned>{7, 1}, {2, 3}, {3, 2}, {2, 4}}) {
    TowerField t{BaseField(p, e)};
    const BaseField& b = t.base();
    for (std::uint64_t v = 0; v < b.size(); ++v) {
      BaseElem x{v};
      BaseElem acc = b.zero();
      for (std::size_t i = 4; i-- > 0;) acc = b.add(b.mul(acc, x), t.gamma_min_poly()[i]);
      CHECK(acc != b.zero());
    }
  }
}

TEST_CASE("tower over a large prime base") {
  TowerField t{BaseField(1000003, 1)};
  CHECK_FALSE(t.base().size() <= 4096);     // exercises the gcd-based root test
  CHECK(t.int_encodable());
  std::mt19937_64 rng(99);
  for (int i = 0; i < 200; ++i) {
    TowerElem a = t.elem(BaseElem{rng() % 1000003}, BaseElem{rng() % 1000003}, BaseElem{rng() % 1000003});
    if (a == t.zero()) continue;
    CHECK(t.mul(a, t.inv(a)) == t.one());
  }
}

TEST_CASE("irreducibility routes agree on small fields") {
  // Exhaustive root scan vs the algebraic tests, over all monic cubics.
  BaseField f(5, 1);
  int irreducible_count = 0;
  for (std::uint64_t a2 = 0; a2 < 5; ++a2) {
    for (std::uint64_t a1 = 0; a1 < 5; ++a1) {
      for (std::uint64_t a0 = 0; a0 < 5; ++a0) {
        std::vector<BaseElem> poly{BaseElem{a0}, BaseElem{a1}, BaseElem{a2}, f.one()};
        bool has_root = false;
        for (std::uint64_t x = 0; x < 5 && !has_root; ++x) {
          has_root = (((x + a2) * x + a1) % 5 * x + a0) % 5 == 0;
        }
        CHECK(is_irreducible(f, poly) == !has_root);
        irreducible_count += !has_root;
      }
    }
  }
  // The number of monic irreducible cubics over GF(q) is (q^3 - q) / 3.
  CHECK(irreducible_count == (125 - 5) / 3);
}

TEST_CASE("polynomial rendering") {
  BaseField f(7, 1);
  std::vector<BaseElem> p1{f.from_int(1), f.from_int(1), f.zero(), f.one()};
  CHECK(poly_to_string(f, p1) == "x^3+x+1");
  std::vector<BaseElem> p2{f.from_int(3), f.from_int(5), f.from_int(2)};
  CHECK(poly_to_string(f, p2) == "2x^2+5x+3");
  CHECK(poly_to_string(f, std::vector<BaseElem>{}) == "0");
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "hopfforms/cyclotomic.hpp"
#include "hopfforms/factor.hpp"
#include "hopfforms/polynomial.hpp"
#include "hopfforms/rational.hpp"

using namespace hopfforms;

namespace {

QPoly qp(std::vector<long> coeffs) {
  std::vector<Rat> c;
  for (long v : coeffs) c.emplace_back(v);
  return QPoly(std::move(c));
}

}  // namespace

TEST_CASE("rationals are kept in canonical form") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(1, -2) == Rat(-1, 2));
  CHECK(Rat(-3, -6) == Rat(1, 2));
  CHECK(Rat(0, 5).is_zero());
  CHECK(Rat(0, 5).den() == 1);
  CHECK(Rat(7).is_integer());
  CHECK_FALSE(Rat(7, 2).is_integer());
  CHECK(Rat(-7, 2).num() == -7);
  CHECK(Rat(-7, 2).den() == 2);
}

TEST_CASE("rational arithmetic") {
  CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
  CHECK(Rat(2, 3) * Rat(9, 4) == Rat(3, 2));
  CHECK(Rat(1, 2) - Rat(3, 4) == Rat(-1, 4));
  CHECK(Rat(5, 7) / Rat(5, 7) == Rat(1));
  CHECK(Rat(3, 4).inv() == Rat(4, 3));
  CHECK(Rat(2, 3).pow(-2) == Rat(9, 4));
  CHECK(Rat(-2).pow(3) == Rat(-8));
  CHECK(Rat(-5, 3).abs() == Rat(5, 3));
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(Rat(-1, 2) < Rat(-1, 3));
}

TEST_CASE("rational parse and str round trip") {
  CHECK(Rat::parse("3/4") == Rat(3, 4));
  CHECK(Rat::parse("-7") == Rat(-7));
  CHECK(Rat::parse("0") == Rat(0));
  CHECK(Rat::parse("6/4") == Rat(3, 2));
  CHECK(Rat(3, 4).str() == "3/4");
  CHECK(Rat(-7).str() == "-7/1");
  for (const Rat& r : {Rat(0), Rat(22, 7), Rat(-1, 12), Rat(100)})
    CHECK(Rat::parse(r.str()) == r);
}

TEST_CASE("square classes of rationals") {
  CHECK(square_class(Rat(1)) == 1);
  CHECK(square_class(Rat(8)) == 2);
  CHECK(square_class(Rat(-4)) == -1);
  CHECK(square_class(Rat(18, 25)) == 2);
  CHECK(square_class(Rat(1, 3)) == 3);
  CHECK(square_class(Rat(-50)) == -2);
  CHECK(square_class(Rat(45, 4)) == 5);
  // class representative is itself squarefree
  for (long v : {12L, -27L, 360L}) {
    mpz_class c = square_class(Rat(v));
    CHECK(square_class(Rat(c)) == c);
  }
}

TEST_CASE("polynomial division, gcd, xgcd") {
  const QPoly a = qp({-3, 1}) * qp({1, 0, 1});  // (x - 3)(x^2 + 1)
  const QPoly b = qp({-3, 1});
  auto [q, r] = divmod(a, b);
  CHECK(q == qp({1, 0, 1}));
  CHECK(r.is_zero());
  CHECK((a + qp({5})) % b == qp({5}));

  CHECK(poly_gcd(qp({-1, 0, 1}), qp({-1, 0, 0, 1})) == qp({-1, 1}));

  const QPoly f = qp({2, 0, 1}), g = qp({1, 1});
  auto [d, s, t] = poly_xgcd(f, g, Rat(1));
  CHECK(d == qp({1}));  // coprime
  CHECK(s * f + t * g == d);
}

TEST_CASE("polynomial content, discriminant, eval") {
  CHECK(poly_content(qp({6, 0, 4})) == Rat(2));
  CHECK(primitive_part(qp({6, 0, 4})) == qp({3, 0, 2}));
  // disc(x^2 + bx + c) = b^2 - 4c
  CHECK(poly_discriminant(qp({3, -5, 1})) == Rat(13));
  // disc(x^3 + px + q) = -4p^3 - 27q^2
  CHECK(poly_discriminant(qp({0, -1, 0, 1})) == Rat(4));
  CHECK(qp({1, 2, 3}).eval(Rat(2)) == Rat(17));
  CHECK(qp({0, 1}).derivative() == qp({1}));
  CHECK(qp({1, 1, 1, 1}).derivative() == qp({1, 2, 3}));
  CHECK(x_pow_minus_one(4) == qp({-1, 0, 0, 0, 1}));
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == qp({-1, 1}));
  CHECK(cyclotomic_polynomial(2) == qp({1, 1}));
  CHECK(cyclotomic_polynomial(6) == qp({1, -1, 1}));
  CHECK(cyclotomic_polynomial(9) == qp({1, 0, 0, 1, 0, 0, 1}));
  CHECK(cyclotomic_polynomial(12) == qp({1, 0, -1, 0, 1}));
  // prod over d | n recovers x^n - 1
  QPoly prod = qp({1});
  for (int d : {1, 2, 3, 4, 6, 12}) prod = prod * cyclotomic_polynomial(d);
  CHECK(prod == x_pow_minus_one(12));
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(8) == 4);
  CHECK(euler_phi(9) == 6);
  CHECK(euler_phi(12) == 4);
}

TEST_CASE("cyclotomic field elements") {
  const CycElem z4 = CycElem::zeta(4);
  CHECK((z4 * z4 + CycElem::rational(Rat(1))).is_zero());
  const CycElem z3 = CycElem::zeta(3);
  CHECK((z3 * z3 + z3 + CycElem::rational(Rat(1))).is_zero());
  CHECK(CycElem::zeta_pow(8, 4) == CycElem::rational(Rat(-1)));

  const CycElem z5 = CycElem::zeta(5);
  CHECK(z5.galois_conjugate(2) == CycElem::zeta_pow(5, 2));
  CHECK(z5 * z5.inv() == CycElem::rational(Rat(1)));
  // conjugating by all units fixes the trace
  CycElem tr;
  for (long k : {1L, 2L, 3L, 4L}) tr = tr + z5.galois_conjugate(k);
  CHECK(tr == CycElem::rational(Rat(-1)));

  const CycElem up = z3.embed_into(12);
  CHECK(up.conductor() == 12);
  auto back = up.contract_to(3);
  REQUIRE(back.has_value());
  CHECK(*back == z3);
  CHECK_FALSE(CycElem::zeta(12).contract_to(3).has_value());
}

TEST_CASE("factorization over Q") {
  const QPoly f = x_pow_minus_one(4);
  const Factorization fac = factor_over_Q(f);
  CHECK(fac.unit == Rat(1));
  REQUIRE(fac.factors.size() == 3);
  QPoly back = QPoly::constant(fac.unit);
  for (const auto& [p, m] : fac.factors) {
    CHECK(is_irreducible_over_Q(p));
    for (int i = 0; i < m; ++i) back = back * p;
  }
  CHECK(back == f);

  const Factorization scaled = factor_over_Q(qp({-2, 0, 2}));
  CHECK(scaled.unit == Rat(2));
  CHECK(scaled.factors.size() == 2);

  CHECK(is_irreducible_over_Q(qp({1, 1, 1})));
  CHECK(is_irreducible_over_Q(qp({1, 0, 0, 0, 1})));  // Phi_8
  CHECK_FALSE(is_irreducible_over_Q(qp({1, 2, 1})));

  // deterministic output
  const QPoly g = cyclotomic_polynomial(3) * cyclotomic_polynomial(8);
  const Factorization f1 = factor_over_Q(g), f2 = factor_over_Q(g);
  CHECK(f1.factors == f2.factors);
  REQUIRE(f1.factors.size() == 2);
  CHECK(f1.factors[0].first == cyclotomic_polynomial(3));
  CHECK(f1.factors[1].first == cyclotomic_polynomial(8));
}

TEST_CASE("squarefree decomposition") {
  const QPoly f = qp({2, 1}) * qp({-1, 1}) * qp({-1, 1});
  const auto parts = squarefree_decomposition(f);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].first == qp({2, 1}));
  CHECK(parts[0].second == 1);
  CHECK(parts[1].first == qp({-1, 1}));
  CHECK(parts[1].second == 2);
}

TEST_CASE("cyclotomic factors over a subfield") {
  // Phi_8 splits into two quadratics over Q(zeta_4)
  const auto factors = factor_cyclotomic_over(8, 4);
  REQUIRE(factors.size() == 2);
  Poly<CycElem> prod = Poly<CycElem>::constant(CycElem::rational(Rat(1)));
  for (const auto& f : factors) {
    CHECK(f.degree() == 2);
    prod = prod * f;
  }
  const QPoly phi8 = cyclotomic_polynomial(8);
  REQUIRE(prod.degree() == 4);
  for (int i = 0; i <= 4; ++i) CHECK(prod[i] == CycElem::rational(phi8[i]));
}

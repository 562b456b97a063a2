#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "hopfforms/etale.hpp"
#include "hopfforms/group.hpp"

using namespace hopfforms;

namespace {

QVec unit_vec(int n, int i) {
  QVec v = qvec_zero(n);
  v[i] = Rat(1);
  return v;
}

// Q x Q with the nontrivial C2 element acting as the identity: dim matches
// but the Galois map cannot be onto.
GaloisAlgebra split_with_trivial_action() {
  GaloisAlgebra l = trivial_extension(FiniteGroup::cyclic(2));
  l.action[1] = l.action[0];
  return l;
}

}  // namespace

TEST_CASE("split extensions permute the idempotent basis") {
  const FiniteGroup s3 = FiniteGroup::symmetric(3);
  const GaloisAlgebra l = trivial_extension(s3);
  CHECK(l.alg.dim == 6);
  CHECK(l.comp_count == 6);
  CHECK(l.comp_dim() == 1);
  CHECK(l.alg.satisfies_ring_axioms());
  for (int f = 0; f < 6; ++f)
    for (int h = 0; h < 6; ++h) CHECK(l.apply(f, unit_vec(6, h)) == unit_vec(6, s3.mult(f, h)));
  CHECK(action_is_by_algebra_maps(l));
  CHECK(verify_galois(l).ok);
}

TEST_CASE("cyclotomic extensions") {
  const GaloisAlgebra l = cyclotomic_galois(5);
  CHECK(l.alg.dim == 4);
  CHECK(l.group.size() == 4);
  CHECK(l.alg.satisfies_ring_axioms());
  const GaloisCheck c = verify_galois(l);
  CHECK(c.ok);
  CHECK(c.dim_ok);
  CHECK(c.bijective);
  // zeta^5 = 1
  QVec z = unit_vec(4, 1);
  QVec pow = z;
  for (int i = 1; i < 5; ++i) pow = l.alg.multiply(pow, z);
  CHECK(pow == l.alg.one);
  CHECK(verify_galois(cyclotomic_galois(8)).ok);
}

TEST_CASE("quadratic fields with negation") {
  const FieldWithAction f = quadratic_field_with_negation(2);
  CHECK(f.field.dim == 2);
  CHECK(f.field.multiply(unit_vec(2, 1), unit_vec(2, 1)) == qvec_scale(Rat(2), f.field.one));
  REQUIRE(f.action.size() == 2);
  QVec neg = unit_vec(2, 1);
  neg[1] = Rat(-1);
  CHECK(f.action[1][1] == neg);  // beta -> -beta
  CHECK_THROWS_AS(quadratic_field_with_negation(4), std::invalid_argument);
  CHECK_THROWS_AS(quadratic_field_with_negation(1), std::invalid_argument);
  CHECK(quadratic_field_with_negation(-1).field.multiply(unit_vec(2, 1), unit_vec(2, 1)) ==
        qvec_scale(Rat(-1), quadratic_field_with_negation(-1).field.one));
}

TEST_CASE("biquadratic field") {
  const GaloisAlgebra l = biquadratic_sqrt2_sqrt3();
  CHECK(l.alg.dim == 4);
  CHECK(l.alg.satisfies_ring_axioms());
  const QVec s2 = unit_vec(4, 1), s3 = unit_vec(4, 2), s6 = unit_vec(4, 3);
  CHECK(l.alg.multiply(s2, s2) == qvec_scale(Rat(2), l.alg.one));
  CHECK(l.alg.multiply(s3, s3) == qvec_scale(Rat(3), l.alg.one));
  CHECK(l.alg.multiply(s2, s3) == s6);
  // generator (1,0) fixes sqrt2, (0,1) fixes sqrt3
  CHECK(l.apply(1, s2) == s2);
  CHECK(l.apply(1, s3) == qvec_scale(Rat(-1), s3));
  CHECK(l.apply(2, s3) == s3);
  CHECK(l.apply(2, s2) == qvec_scale(Rat(-1), s2));
  CHECK(verify_galois(l).ok);
  CHECK(galois_map_rank(l) == 16);
}

TEST_CASE("sextic splitting field of x^3 - 2") {
  const GaloisAlgebra l = sextic_s3();
  CHECK(l.alg.dim == 6);
  CHECK(l.group.size() == 6);
  const QVec c = unit_vec(6, 1), c2 = unit_vec(6, 2), w = unit_vec(6, 3);
  CHECK(l.alg.multiply(c, c2) == qvec_scale(Rat(2), l.alg.one));
  // w^2 + w + 1 = 0
  const QVec w2 = l.alg.multiply(w, w);
  CHECK(qvec_add(qvec_add(w2, w), l.alg.one) == qvec_zero(6));
  CHECK(action_is_by_algebra_maps(l));
  CHECK(verify_galois(l).ok);
}

TEST_CASE("induced algebras from a subgroup") {
  const GaloisAlgebra l = build_F_galois(FiniteGroup::units_mod(8), {0, 1},
                                         quadratic_field_with_negation(3));
  CHECK(l.alg.dim == 4);
  CHECK(l.comp_count == 2);
  CHECK(l.group.size() == 4);
  CHECK(verify_galois(l).ok);
  CHECK(action_is_by_algebra_maps(l));
  // |U| must match [M:Q]
  CHECK_THROWS_AS(build_F_galois(FiniteGroup::units_mod(8), {0},
                                 quadratic_field_with_negation(3)),
                  std::invalid_argument);

  const FieldWithAction cyc = cyclotomic_field_with_units(4, {1, 3});
  CHECK(cyc.field.dim == 2);
  QVec zi = unit_vec(2, 1);
  CHECK(cyc.field.multiply(zi, zi) == qvec_scale(Rat(-1), cyc.field.one));
}

TEST_CASE("a non-Galois action is rejected") {
  const GaloisAlgebra bad = split_with_trivial_action();
  const GaloisCheck c = verify_galois(bad);
  CHECK(c.dim_ok);
  CHECK_FALSE(c.bijective);
  CHECK_FALSE(c.ok);
  CHECK_FALSE(is_galois_extension(bad));
}

TEST_CASE("fixed subalgebras") {
  const GaloisAlgebra l = biquadratic_sqrt2_sqrt3();
  // element 1 = (1,0) fixes Q(sqrt2)
  const auto fix1 = fixed_subalgebra(l, {1});
  REQUIRE(fix1.size() == 2);
  CHECK(fix1[0] == unit_vec(4, 0));
  CHECK(fix1[1] == unit_vec(4, 1));
  const auto fix_all = fixed_subalgebra(l, {1, 2});
  REQUIRE(fix_all.size() == 1);
  CHECK(fix_all[0] == unit_vec(4, 0));
}

TEST_CASE("restriction to a fixed subalgebra") {
  const GaloisAlgebra l = biquadratic_sqrt2_sqrt3();
  const RestrictedAlgebra r = restrict_to_fixed_subalgebra(l, {0, 1});
  CHECK(r.algebra.alg.dim == 2);
  CHECK(r.quotient.group.size() == 2);
  CHECK(r.basis[0] == unit_vec(4, 0));
  CHECK(r.basis[1] == unit_vec(4, 1));
  // the surviving action is conjugation on Q(sqrt2)
  QVec beta = unit_vec(2, 1);
  CHECK(r.algebra.apply(1, beta) == qvec_scale(Rat(-1), beta));
  CHECK(r.algebra.alg.multiply(beta, beta) == qvec_scale(Rat(2), r.algebra.alg.one));
  CHECK(verify_galois(r.algebra).ok);

  // trivial W keeps the component structure
  const GaloisAlgebra split = trivial_extension(FiniteGroup::cyclic(2));
  CHECK(restrict_to_fixed_subalgebra(split, {0}).algebra.comp_count == 2);
}

TEST_CASE("labels for linear combinations") {
  const std::vector<std::string> labels = {"a", "b", "c"};
  CHECK(linear_combo_label({Rat(1), Rat(-2), Rat(1, 2)}, labels) == "a - 2*b + 1/2*c");
  CHECK(linear_combo_label(qvec_zero(3), labels) == "0");
  CHECK(linear_combo_label({Rat(-1), Rat(0), Rat(0)}, labels) == "-a");
  CHECK(linear_combo_label({Rat(3), Rat(0), Rat(0)}, {"1", "b", "c"}) == "3");
}

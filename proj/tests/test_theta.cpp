#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "hopfforms/theta.hpp"

using namespace hopfforms;

namespace {

bool in_span(const std::vector<QVec>& gens, const QVec& v) {
  LinSolver s(static_cast<int>(v.size()));
  for (const QVec& g : gens) s.add(g);
  return s.express(v).has_value();
}

std::vector<std::string> block_labels(const WedderburnDecomposition& d) {
  std::vector<std::string> out;
  for (const auto& b : d.blocks) out.push_back(b.label);
  return out;
}

}  // namespace

TEST_CASE("the quadratic-split form of Q[C3]") {
  const GaloisAlgebra l = trivial_extension(FiniteGroup::cyclic(2));
  const FiniteGroup c3 = FiniteGroup::cyclic(3);
  const std::vector<std::vector<int>> embed = {{0, 1, 2}, {0, 2, 1}};
  const FixedRing h = theta(l, c3, embed);
  CHECK(h.dim_ok);
  CHECK(h.fixed_ok);
  CHECK(h.form_ok);
  CHECK(h.form_rank == 6);
  CHECK(verify_hopf_axioms(h.hopf).all());
  CHECK(h.hopf.basis_labels ==
        std::vector<std::string>{"e[1] + e[g]", "e[g]*g + e[1]*g^2", "e[1]*g + e[g]*g^2"});

  // ambient coordinates are (eta, l) = eta*2 + l over the basis {e[1], e[g]}
  QVec one = qvec_zero(6), x = qvec_zero(6), y = qvec_zero(6);
  one[0] = one[1] = Rat(1);
  x[2] = x[5] = Rat(1);  // e[1] g + e[g] g^2
  y[3] = y[4] = Rat(1);  // e[g] g + e[1] g^2
  CHECK(in_span(h.basis, one));
  CHECK(in_span(h.basis, x));
  CHECK(in_span(h.basis, y));

  const auto gls = grouplikes(h.hopf);
  REQUIRE(gls.size() == 3);
  std::vector<QVec> ambient;
  for (const QVec& g : gls) ambient.push_back(h.to_ambient(g));
  for (const QVec& expected : {one, x, y})
    CHECK(std::count(ambient.begin(), ambient.end(), expected) == 1);

  const GrouplikeGroup gg = grouplike_group(h.hopf);
  CHECK(is_isomorphic(gg.group, c3));
  CHECK(matches_group_algebra(h.hopf, c3).has_value());
}

TEST_CASE("split extensions give the untwisted group algebra") {
  const FiniteGroup c4 = FiniteGroup::cyclic(4);
  const FixedRing h = theta(trivial_extension(FiniteGroup::cyclic(1)), c4, {{0, 1, 2, 3}});
  CHECK(h.dim_ok);
  CHECK(h.form_ok);
  CHECK(grouplikes(h.hopf).size() == 4);
  CHECK(matches_group_algebra(h.hopf, c4).has_value());

  // split C2-extension with the full Aut(C4) embedding: still the trivial form
  const AutomorphismGroup aut = automorphism_group(c4);
  const FixedRing h2 = theta(trivial_extension(aut.group), c4, aut.maps);
  CHECK(h2.form_ok);
  CHECK(matches_group_algebra(h2.hopf, c4).has_value());
  CHECK(hopf_invariants(h2) == hopf_invariants(group_algebra(c4)));
}

TEST_CASE("input validation") {
  const GaloisAlgebra l = trivial_extension(FiniteGroup::cyclic(2));
  // non-injective embedding
  CHECK_THROWS_AS(theta(l, FiniteGroup::cyclic(3), {{0, 1, 2}, {0, 1, 2}}),
                  std::invalid_argument);
  // not an automorphism
  CHECK_THROWS_AS(fixed_ring(l, FiniteGroup::cyclic(3), {{0, 1, 2}, {1, 2, 0}}),
                  std::invalid_argument);
  // residue embed wants the unit group itself
  CHECK_NOTHROW(residue_embed(FiniteGroup::units_mod(8), 8));
  CHECK_THROWS_AS(residue_embed(FiniteGroup::cyclic(4), 8), std::invalid_argument);
}

TEST_CASE("ambient helpers agree with the transported presentation") {
  const GaloisAlgebra l = trivial_extension(FiniteGroup::cyclic(2));
  const FixedRing h = theta(l, FiniteGroup::cyclic(3), {{0, 1, 2}, {0, 2, 1}});
  for (int i = 0; i < 3; ++i) {
    QVec e = qvec_zero(3);
    e[i] = Rat(1);
    CHECK(h.to_ambient(e) == h.basis[i]);
    for (int f = 0; f < 2; ++f) CHECK(h.ambient_apply(f, h.basis[i]) == h.basis[i]);
    for (int j = 0; j < 3; ++j) {
      QVec ej = qvec_zero(3);
      ej[j] = Rat(1);
      CHECK(h.ambient_multiply(h.basis[i], h.basis[j]) == h.to_ambient(h.hopf.mult[i][j]));
    }
  }
}

TEST_CASE("cyclotomic extensions give the dual of the cyclic group algebra") {
  for (int n : {3, 9}) {
    const GaloisAlgebra l = cyclotomic_galois(n);
    const FixedRing h = theta(l, FiniteGroup::cyclic(n), residue_embed(l.group, n));
    CHECK(h.dim_ok);
    CHECK(h.fixed_ok);
    CHECK(h.form_ok);
    CHECK(verify_hopf_axioms(h.hopf).all());
    CHECK(matches_dual_cyclic(h.hopf));
    const auto dec = wedderburn_decompose(h.hopf.algebra());
    CHECK(dec.blocks.size() == static_cast<size_t>(n));
    for (const auto& b : dec.blocks) CHECK(b.label == "Q");
  }
}

TEST_CASE("descent over the biquadratic field") {
  const GaloisAlgebra e = biquadratic_sqrt2_sqrt3();
  const auto subs = enumerate_regular_subgroups(e.group);
  REQUIRE(subs.size() == 4);
  for (const auto& s : subs) {
    const FixedRing h = descend(e, s);
    CHECK(h.dim_ok);
    CHECK(h.fixed_ok);
    CHECK(h.form_ok);
    CHECK(verify_hopf_axioms(h.hopf).all());
    const HopfActionCheck hc = hopf_action(h, s);
    CHECK(hc.unit_acts_as_identity);
    CHECK(hc.counit_on_one);
    CHECK(hc.measures_products);
    CHECK(hc.j_rank == 16);
    CHECK(hc.j_bijective);
  }
  // lambda(G) descends to the untwisted Q[C2xC2]
  const FixedRing hl = descend(e, subs[0]);
  CHECK(matches_group_algebra(hl.hopf, FiniteGroup::elementary_abelian(2, 2)).has_value());
}

TEST_CASE("preimages over the biquadratic field") {
  const GaloisAlgebra e = biquadratic_sqrt2_sqrt3();
  const auto subs = enumerate_regular_subgroups(e.group);
  QVec one = qvec_zero(4);
  one[0] = Rat(1);
  std::vector<int> fixed_generators;
  for (const auto& s : subs) {
    if (s.type != "C4") continue;
    const PreimageResult pr = theta_preimage(e, s);
    CHECK(pr.w.size() == 2);
    CHECK(pr.ew_galois.ok);
    CHECK(pr.preimage_exists);
    CHECK(pr.h_quotient.form_ok);
    CHECK(pr.h_descent.form_ok);
    CHECK(pr.basis_change_ok);
    // E^W is one of the three quadratic subfields, spanned by 1 and a surd
    REQUIRE(pr.ew.basis.size() == 2);
    CHECK(pr.ew.basis[0] == one);
    int surd = -1;
    for (int k = 1; k < 4; ++k) {
      QVec ek = qvec_zero(4);
      ek[k] = Rat(1);
      if (pr.ew.basis[1] == ek) surd = k;
    }
    CHECK(surd > 0);
    fixed_generators.push_back(surd);
    // W pairs up with the surd it fixes: w = {1, sigma} fixes sqrt2, etc.
    if (pr.w == std::vector<int>{0, 1}) CHECK(surd == 1);
  }
  // the three C4 subgroups exhaust the quadratic subfields
  std::sort(fixed_generators.begin(), fixed_generators.end());
  CHECK(fixed_generators == std::vector<int>{1, 2, 3});

  // lambda(G): W is everything, the conjugation action misses Aut(C2xC2)
  const PreimageResult pl = theta_preimage(e, subs[0]);
  CHECK(pl.w.size() == 4);
  CHECK_FALSE(pl.preimage_exists);
  CHECK(pl.ca.aut_order == 6);
  CHECK(pl.basis_change_ok);  // the quotient presentation still matches
  CHECK(matches_group_algebra(pl.h_quotient.hopf, FiniteGroup::elementary_abelian(2, 2))
            .has_value());
}

TEST_CASE("sextic C6 descents are duals of Q[C6]") {
  const GaloisAlgebra e = sextic_s3();
  const auto subs = enumerate_regular_subgroups(e.group);
  REQUIRE(subs.size() == 5);
  QVec one = qvec_zero(6), w = qvec_zero(6);
  one[0] = Rat(1);
  w[3] = Rat(1);
  int c6 = 0;
  for (const auto& s : subs) {
    if (s.type != "C6") continue;
    ++c6;
    const PreimageResult pr = theta_preimage(e, s);
    CHECK(pr.w.size() == 3);
    for (int g : pr.w) CHECK((g == 0 ? 1 : 3) == e.group.order_of(g));
    CHECK(pr.preimage_exists);
    CHECK(pr.basis_change_ok);
    // E^W = Q(zeta_3) spanned by 1 and the cube root of unity
    REQUIRE(pr.ew.basis.size() == 2);
    CHECK(pr.ew.basis[0] == one);
    CHECK(pr.ew.basis[1] == w);

    const FixedRing& h = pr.h_descent;
    CHECK(grouplikes(h.hopf).size() == 2);
    CHECK(matches_dual_cyclic(h.hopf));
    const InvariantRecord rec = hopf_invariants(h);
    CHECK(rec.block_labels == std::vector<std::string>(6, "Q"));
    CHECK(rec.grouplike_count == 2);
  }
  CHECK(c6 == 3);
}

TEST_CASE("regular C8 subgroups of Sym(Q8) admit no preimage") {
  const FiniteGroup q8 = FiniteGroup::quaternion8();
  const GaloisAlgebra e = trivial_extension(q8);
  EnumerateOptions opts;
  opts.type_filter = "C8";
  const auto subs = enumerate_regular_subgroups(q8, opts);
  REQUIRE(subs.size() == 6);
  for (const auto& s : subs) {
    const PreimageResult pr = theta_preimage(e, s);
    CHECK_FALSE(pr.preimage_exists);
    CHECK(pr.ca.quotient.group.size() == 2);
    CHECK(pr.ca.aut_order == 4);
    CHECK(pr.basis_change_ok);
  }
}

TEST_CASE("the cyclic-C8 family over Q8") {
  const Q8C8Preimage p2 = q8_c8_preimage("i", 2);
  CHECK(p2.w_match);
  CHECK(p2.quotient_proper);
  CHECK(p2.w.size() == 4);
  CHECK(p2.l.comp_count == 2);
  CHECK(p2.theta_side.form_ok);
  CHECK(p2.descent_side.form_ok);
  CHECK(p2.normalized_fixed);
  CHECK(p2.normalized_spans);
  CHECK(p2.idempotent_diff_square_one);
  CHECK(p2.psi_in_descent);
  CHECK(p2.psi_multiplicative);
  CHECK(p2.psi_hopf_compatible);
  CHECK(verify_hopf_axioms(p2.h_normalized).all());
  CHECK(p2.record.block_count == 5);
  CHECK(p2.record.grouplike_count == 2);
  CHECK(p2.record.block_labels ==
        std::vector<std::string>{"Q", "Q", "Q(sqrt(-2))", "Q(sqrt(-2))", "Q(sqrt(-2))"});
  CHECK(p2.record.quadratic_square_classes == std::vector<std::string>{"-2", "-2", "-2"});
  CHECK(p2.record.min_split_field == "Q(sqrt(-2))");

  // the record depends on d, not on the choice of t
  const Q8C8Preimage p2k = q8_c8_preimage("k", 2);
  CHECK(p2k.record == p2.record);

  const Q8C8Preimage p3 = q8_c8_preimage("j", 3);
  CHECK(p3.w_match);
  CHECK(p3.quotient_proper);
  CHECK(p3.psi_multiplicative);
  CHECK(p3.psi_hopf_compatible);
  CHECK(p3.record.block_count == 4);
  CHECK(p3.record.grouplike_count == 2);
  CHECK(p3.record.block_labels ==
        std::vector<std::string>{"Q", "Q", "Q(sqrt(-3))", "field_deg4"});
  CHECK(p3.record.quadratic_square_classes == std::vector<std::string>{"-3"});
  CHECK_FALSE(p2.record == p3.record);

  CHECK_THROWS_AS(q8_c8_preimage("x", 2), std::invalid_argument);
}

TEST_CASE("the order-8 matrix-block form over Q8") {
  const GreitherForm g = greither_form();
  CHECK(g.form.dim_ok);
  CHECK(g.form.fixed_ok);
  CHECK(g.form.form_ok);
  CHECK(verify_hopf_axioms(g.form.hopf).all());
  CHECK(g.basis_in_form);
  CHECK(g.relations_ok);
  CHECK(g.nilpotent_ok);
  CHECK(g.decomposition.semisimple);
  CHECK(block_labels(g.decomposition) ==
        std::vector<std::string>{"Q", "Q", "Q", "Q", "Mat2(Q)"});
  CHECK(g.abss.verdict);

  const GreitherPreimage gp = theta_preimage_greither();
  CHECK(gp.components == 12);
  CHECK(gp.theta_of_l.form_ok);
  CHECK(gp.matches_form);
  CHECK(block_labels(gp.profile) == block_labels(g.decomposition));
}

TEST_CASE("nine rational points from the full affine group on C3xC3") {
  const FiniteGroup c3sq = FiniteGroup::elementary_abelian(3, 2);
  const AutomorphismGroup aut = automorphism_group(c3sq);
  REQUIRE(aut.group.size() == 48);
  std::vector<int> dbl(9);
  for (int x = 0; x < 9; ++x) dbl[x] = c3sq.mult(x, x);
  int di = -1;
  for (size_t i = 0; i < aut.maps.size(); ++i)
    if (aut.maps[i] == dbl) di = static_cast<int>(i);
  REQUIRE(di > 0);
  const GaloisAlgebra l =
      build_F_galois(aut.group, {0, di}, cyclotomic_field_with_units(3, {1, 2}));
  CHECK(l.comp_count == 24);
  const FixedRing h = theta(l, c3sq, aut.maps);
  CHECK(h.form_ok);
  CHECK(verify_hopf_axioms(h.hopf).all());
  const AbsSemisimpleCertificate cert = is_absolutely_semisimple(h.hopf.algebra(), c3sq);
  CHECK(cert.verdict);
  CHECK(cert.decomposition.blocks.size() == 9);
}

TEST_CASE("complete groups give their own lambda forms back") {
  // S4: W = 1, the conjugation action is all of Aut(S4)
  const FiniteGroup s4 = FiniteGroup::symmetric(4);
  const PreimageResult p4 = theta_preimage(trivial_extension(s4),
                                           make_regular_subgroup(left_regular_rep(s4), s4));
  CHECK(p4.w == std::vector<int>{0});
  CHECK(p4.preimage_exists);
  CHECK(p4.ew.algebra.alg.dim == 24);
  CHECK(p4.h_quotient.form_ok);
  CHECK(p4.h_descent.form_ok);
  CHECK(p4.basis_change_ok);

  const GaloisAlgebra e3 = sextic_s3();
  const PreimageResult p3 = theta_preimage(e3,
                                           make_regular_subgroup(left_regular_rep(e3.group),
                                                                 e3.group));
  CHECK(p3.w == std::vector<int>{0});
  CHECK(p3.preimage_exists);
  CHECK(p3.basis_change_ok);
  CHECK(block_labels(wedderburn_decompose(p3.h_descent.hopf.algebra())) ==
        std::vector<std::string>{"Q", "Q", "Mat2(Q)"});
}

TEST_CASE("invariant records distinguish a form from the group algebra") {
  const InvariantRecord ga = hopf_invariants(group_algebra(FiniteGroup::cyclic(4)));
  const InvariantRecord du = hopf_invariants(dual_of_group_algebra(FiniteGroup::cyclic(4)));
  CHECK(ga.grouplike_count == 4);
  CHECK(du.grouplike_count == 2);
  CHECK(ga.block_labels == std::vector<std::string>{"Q", "Q", "Q(sqrt(-1))"});
  CHECK(du.block_labels == std::vector<std::string>(4, "Q"));
  CHECK(du.min_split_field == "Q");
  CHECK(ga.min_split_field == "Q(sqrt(-1))");
  CHECK_FALSE(ga == du);
  CHECK_FALSE(invariant_summary(ga).empty());
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "hopfforms/group.hpp"
#include "hopfforms/perm.hpp"
#include "hopfforms/regular.hpp"

using namespace hopfforms;

namespace {

// Independent W oracle: lambda(g) commuting with every element of N.
std::vector<int> brute_force_w(const FiniteGroup& g, const RegularSubgroup& n) {
  const auto lambda = left_regular_rep(g);
  std::vector<int> w;
  for (int i = 0; i < g.size(); ++i) {
    bool commutes = true;
    for (const Perm& p : n.elements)
      if (!(lambda[i] * p == p * lambda[i])) {
        commutes = false;
        break;
      }
    if (commutes) w.push_back(i);
  }
  return w;
}

std::vector<std::string> types_of(const std::vector<RegularSubgroup>& subs) {
  std::vector<std::string> out;
  for (const auto& s : subs) out.push_back(s.type);
  return out;
}

}  // namespace

TEST_CASE("preset group tables") {
  CHECK(FiniteGroup::cyclic(6).is_abelian());
  CHECK(FiniteGroup::cyclic(6).order_of(1) == 6);
  const FiniteGroup d4 = FiniteGroup::dihedral(4);
  CHECK(d4.size() == 8);
  CHECK_FALSE(d4.is_abelian());
  CHECK(d4.center() == std::vector<int>{0, 2});
  CHECK(FiniteGroup::symmetric(4).size() == 24);
  CHECK(FiniteGroup::symmetric(4).center() == std::vector<int>{0});

  const FiniteGroup q8 = FiniteGroup::quaternion8();
  CHECK(q8.commutator_subgroup() == std::vector<int>{0, 1});
  int order4 = 0;
  for (int a = 0; a < 8; ++a) order4 += q8.order_of(a) == 4;
  CHECK(order4 == 6);
  CHECK(q8.label(2) == "i");
  CHECK(q8.mult(2, 4) == 6);  // ij = k
  CHECK(q8.inv(2) == 3);

  CHECK(small_group_type(FiniteGroup::units_mod(8)) == "C2xC2");
  CHECK(small_group_type(FiniteGroup::units_mod(5)) == "C4");
}

TEST_CASE("group specs and type names") {
  CHECK(FiniteGroup::from_spec("C6").size() == 6);
  CHECK(FiniteGroup::from_spec("Q8").size() == 8);
  CHECK(FiniteGroup::from_spec("C2xC2").size() == 4);
  CHECK(small_group_type(FiniteGroup::from_spec("C2xC2")) == "C2xC2");
  CHECK(small_group_type(FiniteGroup::direct_product(FiniteGroup::cyclic(2),
                                                     FiniteGroup::cyclic(4))) == "C4xC2");
  CHECK(small_group_type(FiniteGroup::dihedral(3)) == "S3");
  CHECK(small_group_type(FiniteGroup::elementary_abelian(2, 3)) == "C2^3");
  CHECK(small_group_type(FiniteGroup::elementary_abelian(3, 2)) == "C3^2");
  CHECK_THROWS_AS(FiniteGroup::from_spec("nope"), std::invalid_argument);
}

TEST_CASE("closure, normality, quotients") {
  const FiniteGroup d4 = FiniteGroup::dihedral(4);
  CHECK(d4.pow(1, -1) == d4.inv(1));
  const auto rotations = d4.subgroup_closure({1});
  CHECK(rotations == std::vector<int>{0, 1, 2, 3});
  CHECK(d4.is_normal(rotations));
  CHECK_FALSE(d4.is_normal(d4.subgroup_closure({4})));

  const GroupQuotient by_rot = d4.quotient(rotations);
  CHECK(by_rot.group.size() == 2);
  const GroupQuotient by_center = d4.quotient({0, 2});
  CHECK(is_isomorphic(by_center.group, FiniteGroup::elementary_abelian(2, 2)));
  for (int g = 0; g < d4.size(); ++g) {
    const auto& coset = by_center.cosets[by_center.coset_of[g]];
    CHECK(std::count(coset.begin(), coset.end(), g) == 1);
  }
}

TEST_CASE("isomorphism search") {
  const FiniteGroup d3 = FiniteGroup::dihedral(3), s3 = FiniteGroup::symmetric(3);
  const auto iso = find_isomorphism(d3, s3);
  REQUIRE(iso.has_value());
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) CHECK((*iso)[d3.mult(a, b)] == s3.mult((*iso)[a], (*iso)[b]));
  CHECK_FALSE(find_isomorphism(FiniteGroup::cyclic(4),
                               FiniteGroup::elementary_abelian(2, 2)).has_value());
  CHECK(is_isomorphic(s3, d3));
}

TEST_CASE("automorphism groups of the catalog") {
  const AutomorphismGroup ad3 = automorphism_group(FiniteGroup::dihedral(3));
  CHECK(ad3.group.size() == 6);
  CHECK(is_isomorphic(ad3.group, FiniteGroup::dihedral(3)));

  const AutomorphismGroup ad4 = automorphism_group(FiniteGroup::dihedral(4));
  CHECK(ad4.group.size() == 8);
  CHECK(is_isomorphic(ad4.group, FiniteGroup::dihedral(4)));

  const AutomorphismGroup aq8 = automorphism_group(FiniteGroup::quaternion8());
  CHECK(aq8.group.size() == 24);
  CHECK(is_isomorphic(aq8.group, FiniteGroup::symmetric(4)));

  const AutomorphismGroup a9 = automorphism_group(FiniteGroup::elementary_abelian(3, 2));
  CHECK(a9.group.size() == 48);  // (9 - 1)(9 - 3)
  CHECK(a9.group.size() == (9 - 1) * (9 - 3));

  CHECK(small_group_type(automorphism_group(FiniteGroup::cyclic(8)).group) == "C2xC2");

  // composition law: index multiplication matches map composition
  for (int i = 0; i < ad4.group.size(); ++i)
    for (int j = 0; j < ad4.group.size(); ++j) {
      const int k = ad4.group.mult(i, j);
      for (int x = 0; x < 8; ++x) CHECK(ad4.maps[k][x] == ad4.maps[i][ad4.maps[j][x]]);
    }
}

TEST_CASE("holomorphs of small cyclic groups") {
  const FiniteGroup h3 = FiniteGroup::holomorph_cyclic(3);
  CHECK(h3.size() == 6);
  CHECK(is_isomorphic(h3, FiniteGroup::dihedral(3)));
  const FiniteGroup h4 = FiniteGroup::holomorph_cyclic(4);
  CHECK(h4.size() == 8);
  CHECK(is_isomorphic(h4, FiniteGroup::dihedral(4)));
  CHECK(FiniteGroup::holomorph_cyclic(5).size() == 20);
}

TEST_CASE("generating sets and the regular representation") {
  for (const FiniteGroup& g : {FiniteGroup::symmetric(4), FiniteGroup::quaternion8()}) {
    const auto gens = generating_set(g);
    CHECK(g.subgroup_closure(gens).size() == static_cast<size_t>(g.size()));
    CHECK(gens == generating_set(g));
  }
  const FiniteGroup s3 = FiniteGroup::symmetric(3);
  const auto lambda = left_regular_rep(s3);
  for (int a = 0; a < 6; ++a) {
    CHECK((a == 0) == lambda[a].is_identity());
    if (a != 0) CHECK_FALSE(lambda[a].has_fixed_point());
    for (int b = 0; b < 6; ++b) CHECK(lambda[s3.mult(a, b)] == lambda[a] * lambda[b]);
  }
}

TEST_CASE("regular subgroup enumeration is deterministic") {
  const FiniteGroup v4 = FiniteGroup::elementary_abelian(2, 2);
  const auto subs = enumerate_regular_subgroups(v4);
  CHECK(types_of(subs) == std::vector<std::string>{"C2xC2", "C4", "C4", "C4"});

  EnumerateOptions threaded;
  threaded.workers = 3;
  const auto subs3 = enumerate_regular_subgroups(v4, threaded);
  REQUIRE(subs3.size() == subs.size());
  for (size_t i = 0; i < subs.size(); ++i) CHECK(subs3[i].elements == subs[i].elements);

  EnumerateOptions only_c4;
  only_c4.type_filter = "C4";
  CHECK(enumerate_regular_subgroups(v4, only_c4).size() == 3);

  const auto sextic = enumerate_regular_subgroups(FiniteGroup::symmetric(3));
  CHECK(types_of(sextic) == std::vector<std::string>{"C6", "S3", "S3", "C6", "C6"});

  // each output really is regular and normalized
  const auto lambda = left_regular_rep(v4);
  for (const auto& s : subs) {
    CHECK(s.elements.size() == 4);
    CHECK(s.elements[0].is_identity());
    for (size_t i = 1; i < s.elements.size(); ++i) CHECK_FALSE(s.elements[i].has_fixed_point());
    for (const Perm& l : lambda)
      for (const Perm& p : s.elements) CHECK(s.index_of(l * p * l.inverse()) >= 0);
    CHECK(s.model.size() == 4);
    CHECK(small_group_type(s.model) == s.type);
  }
}

TEST_CASE("make_regular_subgroup validates its input") {
  const FiniteGroup v4 = FiniteGroup::elementary_abelian(2, 2);
  const RegularSubgroup lam = make_regular_subgroup(left_regular_rep(v4), v4);
  CHECK(lam.type == "C2xC2");
  CHECK(lam.index_of(Perm::identity(4)) == 0);
  // a transposition fixes points, so {e, (0 1)} is not regular
  CHECK_THROWS_AS(make_regular_subgroup({Perm::identity(4), Perm({1, 0, 2, 3})}, v4),
                  std::invalid_argument);
}

TEST_CASE("W matches the brute-force kernel") {
  for (const FiniteGroup& g : {FiniteGroup::elementary_abelian(2, 2), FiniteGroup::symmetric(3)}) {
    for (const auto& n : enumerate_regular_subgroups(g)) {
      CHECK(compute_w(g, n) == brute_force_w(g, n));
    }
  }
}

TEST_CASE("conjugation action certificates") {
  const FiniteGroup v4 = FiniteGroup::elementary_abelian(2, 2);
  const auto subs = enumerate_regular_subgroups(v4);

  // a cyclic C4 inside Sym(V4): G/W realizes all of Aut(C4)
  const ConjugationAction on_c4 = conjugation_action(v4, subs[1]);
  CHECK(on_c4.quotient.group.size() == 2);
  CHECK(on_c4.faithful);
  CHECK(on_c4.onto_aut);
  CHECK(on_c4.aut_order == 2);

  // lambda(G) for abelian G centralizes itself: trivial quotient, Aut(V4) = S3 missed
  const ConjugationAction on_self = conjugation_action(v4, subs[0]);
  CHECK(on_self.quotient.group.size() == 1);
  CHECK_FALSE(on_self.onto_aut);
  CHECK(on_self.aut_order == 6);

  const QuotientEmbedding qe = quotient_embedding(v4, subs[1]);
  CHECK(qe.hom.is_homomorphism());
  CHECK(qe.hom.is_injective());
  CHECK(qe.surjective == on_c4.onto_aut);
}

TEST_CASE("centralizers in the symmetric group") {
  const FiniteGroup c3 = FiniteGroup::cyclic(3);
  CHECK(centralizer_in_sym(left_regular_rep(c3), 3).size() == 3);
  const FiniteGroup s3 = FiniteGroup::symmetric(3);
  CHECK(centralizer_in_sym(left_regular_rep(s3), 6).size() == 6);
}

TEST_CASE("perm cycle structure") {
  const Perm p({1, 2, 0, 4, 3});
  CHECK(p.cycles() == std::vector<std::vector<int>>{{0, 1, 2}, {3, 4}});
  CHECK(p.order() == 6);
  CHECK(p.pow(6).is_identity());
  CHECK((p * p.inverse()).is_identity());
  CHECK_THROWS_AS(Perm({0, 0, 1}), std::invalid_argument);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <utility>
#include <vector>

#include "hopfforms/group.hpp"
#include "hopfforms/hopf_algebra.hpp"

using namespace hopfforms;

namespace {

QVec unit_vec(int n, int i) {
  QVec v = qvec_zero(n);
  v[i] = Rat(1);
  return v;
}

bool same_presentation(const HopfAlgebra& a, const HopfAlgebra& b) {
  return a.dim == b.dim && a.mult == b.mult && a.unit == b.unit && a.comult == b.comult &&
         a.counit == b.counit && a.antipode == b.antipode;
}

}  // namespace

TEST_CASE("group algebras satisfy the Hopf axioms") {
  for (const FiniteGroup& g : {FiniteGroup::cyclic(4), FiniteGroup::symmetric(3),
                               FiniteGroup::quaternion8()}) {
    const HopfAlgebra h = group_algebra(g);
    CHECK(h.dim == g.size());
    CHECK(verify_hopf_axioms(h).all());
    const HopfAlgebra d = dual_of_group_algebra(g);
    CHECK(verify_hopf_axioms(d).all());
  }
}

TEST_CASE("group-likes of group algebras are the group elements") {
  const auto gl = grouplikes(group_algebra(FiniteGroup::cyclic(4)));
  REQUIRE(gl.size() == 4);
  for (int i = 0; i < 4; ++i)
    CHECK(std::count(gl.begin(), gl.end(), unit_vec(4, i)) == 1);
  CHECK(grouplikes(group_algebra(FiniteGroup::symmetric(4))).size() == 24);
}

TEST_CASE("group-likes of duals are the rational characters") {
  CHECK(grouplikes(dual_of_group_algebra(FiniteGroup::cyclic(4))).size() == 2);
  CHECK(grouplikes(dual_cyclic(6)).size() == 2);
  CHECK(grouplikes(dual_cyclic(5)).size() == 1);
  CHECK(grouplikes(dual_of_group_algebra(FiniteGroup::symmetric(3))).size() == 2);
  CHECK(grouplikes(dual_of_group_algebra(FiniteGroup::quaternion8())).size() == 4);
}

TEST_CASE("group-like group structure") {
  const GrouplikeGroup gg = grouplike_group(group_algebra(FiniteGroup::dihedral(4)));
  CHECK(is_isomorphic(gg.group, FiniteGroup::dihedral(4)));
  CHECK(gg.elements[0] == group_algebra(FiniteGroup::dihedral(4)).unit);
}

TEST_CASE("dual cyclic presentation") {
  const HopfAlgebra d = dual_cyclic(4);
  CHECK(d.dim == 4);
  CHECK(verify_hopf_axioms(d).all());
  // orthogonal idempotents summing to one
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(d.mult[i][j] == (i == j ? unit_vec(4, i) : qvec_zero(4)));
  CHECK(d.unit == QVec{Rat(1), Rat(1), Rat(1), Rat(1)});
  CHECK(d.counit == unit_vec(4, 0));
}

TEST_CASE("dual_hopf is an involution on stored presentations") {
  for (const HopfAlgebra& h : {group_algebra(FiniteGroup::dihedral(3)), dual_cyclic(6)}) {
    const HopfAlgebra dd = dual_hopf(dual_hopf(h));
    CHECK(same_presentation(dd, h));
    CHECK(verify_hopf_axioms(dual_hopf(h)).all());
  }
}

TEST_CASE("dual algebra commutativity tracks cocommutativity") {
  CHECK(dual_algebra(group_algebra(FiniteGroup::symmetric(3))).is_commutative_on_basis());
  CHECK_FALSE(dual_algebra(dual_of_group_algebra(FiniteGroup::symmetric(3)))
                  .is_commutative_on_basis());
  CHECK_FALSE(group_algebra(FiniteGroup::symmetric(3)).algebra().is_commutative_on_basis());
}

TEST_CASE("matching presentations against group algebras") {
  const auto images = matches_group_algebra(group_algebra(FiniteGroup::cyclic(6)),
                                            FiniteGroup::cyclic(6));
  REQUIRE(images.has_value());
  CHECK(images->size() == 6);
  CHECK_FALSE(matches_group_algebra(dual_cyclic(4), FiniteGroup::cyclic(4)).has_value());

  CHECK(matches_dual_cyclic(dual_cyclic(5)));
  CHECK(matches_dual_cyclic(dual_cyclic(12)));
  CHECK_FALSE(matches_dual_cyclic(group_algebra(FiniteGroup::cyclic(5))));
  // Q[C2] is self-dual
  CHECK(matches_dual_cyclic(group_algebra(FiniteGroup::cyclic(2))));
  CHECK_FALSE(matches_dual_cyclic(dual_of_group_algebra(FiniteGroup::elementary_abelian(2, 2))));
}

TEST_CASE("change of basis preserves the axioms and round trips") {
  const HopfAlgebra h = dual_cyclic(3);
  const std::vector<QVec> mix = {unit_vec(3, 0), {Rat(1), Rat(2), Rat(0)},
                                 {Rat(0), Rat(1), Rat(3)}};
  const HopfAlgebra moved = change_basis(h, mix, {"m0", "m1", "m2"});
  CHECK(moved.basis_labels == std::vector<std::string>{"m0", "m1", "m2"});
  CHECK(verify_hopf_axioms(moved).all());
  CHECK_FALSE(same_presentation(moved, h));

  // express the old basis in the new one and change back
  LinSolver solver(3);
  for (const QVec& v : mix) solver.add(v);
  std::vector<QVec> back;
  for (int i = 0; i < 3; ++i) back.push_back(*solver.express(unit_vec(3, i)));
  CHECK(same_presentation(change_basis(moved, back), h));
}

TEST_CASE("hopf helpers") {
  const FiniteGroup c4 = FiniteGroup::cyclic(4);
  const HopfAlgebra h = group_algebra(c4);
  const QVec x = {Rat(1), Rat(2), Rat(0), Rat(-1)};
  CHECK(h.counit_of(x) == Rat(2));
  for (int g = 0; g < 4; ++g) CHECK(h.antipode_of(unit_vec(4, g)) == unit_vec(4, c4.inv(g)));
  CHECK(h.multiply(unit_vec(4, 1), unit_vec(4, 3)) == unit_vec(4, 0));
  CHECK(h.algebra().is_associative_on_basis());
  CHECK(h.algebra().is_unital());
}

TEST_CASE("rational character idempotents") {
  for (int n : {3, 4, 6}) {
    const CharacterIso iso = character_iso(n);
    CHECK(iso.ok());
    CHECK(iso.n == n);
    CHECK(iso.images.size() == static_cast<size_t>(n));
  }
}

TEST_CASE("prime power idempotents with the fixedness certificate") {
  for (auto [p, m] : std::vector<std::pair<int, int>>{{3, 1}, {5, 1}, {7, 1}, {3, 2}}) {
    const KohlIdempotents k = kohl_idempotents(p, m);
    CHECK(k.ok());
    CHECK(k.orthogonal_idempotents);
    CHECK(k.sum_is_one);
    CHECK(k.fixed_under_units);
    int n = 1;
    for (int i = 0; i < m; ++i) n *= p;
    CHECK(k.n == n);
    CHECK(k.elems.size() == static_cast<size_t>(n));
  }
}

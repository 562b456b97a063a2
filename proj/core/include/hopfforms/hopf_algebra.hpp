#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hopfforms/algebra.hpp"
#include "hopfforms/cyclotomic.hpp"
#include "hopfforms/group.hpp"
#include "hopfforms/linalg.hpp"

namespace hopfforms {

// Hopf algebra over Q presented exactly in a fixed basis.
// comult[i] lists (j, k, c) with Delta(b_i) = sum c * b_j (x) b_k.
struct HopfAlgebra {
  int dim = 0;
  std::vector<std::vector<QVec>> mult;
  QVec unit;
  std::vector<std::vector<std::tuple<int, int, Rat>>> comult;
  QVec counit;
  std::vector<QVec> antipode;  // column-wise: antipode[i] = S(b_i)
  std::vector<std::string> basis_labels;
  std::string desc;

  QVec multiply(const QVec& x, const QVec& y) const;
  Rat counit_of(const QVec& x) const;
  QVec antipode_of(const QVec& x) const;
  AssocAlgebra algebra() const;  // forgets the coalgebra structure
};

struct HopfAxiomReport {
  bool associative = false;
  bool unital = false;
  bool coassociative = false;
  bool counital = false;
  bool comult_algebra_map = false;
  bool counit_algebra_map = false;
  bool antipode_law = false;

  bool all() const {
    return associative && unital && coassociative && counital && comult_algebra_map &&
           counit_algebra_map && antipode_law;
  }
};
HopfAxiomReport verify_hopf_axioms(const HopfAlgebra& h);

// Q[G]: group elements as basis, Delta(g) = g (x) g, S(g) = g^{-1}.
HopfAlgebra group_algebra(const FiniteGroup& g);

// (Q[G])^*: basis p_g with p_g p_h = delta p_g, Delta(p_g) = sum_{ab=g} p_a (x) p_b,
// eps(p_g) = [g = 1], S(p_g) = p_{g^{-1}}.
HopfAlgebra dual_of_group_algebra(const FiniteGroup& g);

// The dual vector space as an algebra: multiplication transposed from comult,
// unit = counit. (Noncommutative when h is not cocommutative.)
AssocAlgebra dual_algebra(const HopfAlgebra& h);

// All group-like elements (Delta x = x (x) x, eps x = 1), exactly. These
// biject with Q-algebra homomorphisms from the dual algebra; the homs are
// found on the commutative quotient of the dual by its commutator ideal, so
// the dual itself may be noncommutative. Output sorted, each entry verified.
std::vector<QVec> grouplikes(const HopfAlgebra& h);

// (Q[C_n])^* with basis p_0..p_{n-1}: p_i p_j = delta_{ij} p_i,
// Delta p_k = sum_{i+j=k mod n} p_i (x) p_j, eps p_k = [k=0], S p_k = p_{-k}.
HopfAlgebra dual_cyclic(int n);

// Dual Hopf algebra in the dual basis: multiplication transposed from comult,
// comultiplication transposed from mult, S* = transpose of S. For the stored
// presentations dual_hopf(dual_hopf(h)) == h on the nose.
HopfAlgebra dual_hopf(const HopfAlgebra& h);

// The group-likes of h as a finite group under multiplication (throws if not
// closed or an inverse is missing; never happens for a genuine Hopf algebra).
// elements[i] is the group-like at group index i, identity first.
struct GrouplikeGroup {
  FiniteGroup group;
  std::vector<QVec> elements;
};
GrouplikeGroup grouplike_group(const HopfAlgebra& h);

// Explicit Hopf isomorphism Q[n] -> h when the group-likes of h number |n|,
// form a group isomorphic to n, and span h: returns the image of each group
// element, or nullopt. Any such linear extension is automatically Hopf.
std::optional<std::vector<QVec>> matches_group_algebra(const HopfAlgebra& h,
                                                       const FiniteGroup& n);

// h isomorphic to (Q[C_n])^*, n = dim h, detected through the group-likes of
// the dual: they are the algebra homs h -> Q, and a cyclic group of n of them
// dualizes matches_group_algebra.
bool matches_dual_cyclic(const HopfAlgebra& h);

// The same presentation rewritten in a new basis (vectors in h coordinates;
// must be a basis). Labels default to "u0", "u1", ...
HopfAlgebra change_basis(const HopfAlgebra& h, const std::vector<QVec>& basis,
                         std::vector<std::string> labels = {});

// Idempotents hat p_j = (1/n) sum_i zeta_n^{-ij} sigma^i in Q(zeta_n)[C_n];
// images[j][i] is the sigma^i coefficient. The map p_j -> hat p_j from
// dual_cyclic(n) is an isomorphism onto its image: the flags certify the
// algebra side (orthogonal idempotents summing to 1) and the coalgebra side
// (the L-linear comultiplication sigma^i -> sigma^i (x) sigma^i sends hat p_k
// to sum_{i+j=k} hat p_i (x) hat p_j).
struct CharacterIso {
  int n = 0;
  std::vector<std::vector<CycElem>> images;
  bool orthogonal_idempotents = false;
  bool sum_is_one = false;
  bool comult_intertwines = false;

  bool ok() const { return orthogonal_idempotents && sum_is_one && comult_intertwines; }
};
CharacterIso character_iso(int n);

// The same idempotents for n = p^m (p odd prime), with the fixedness
// certificate: for every unit u, applying zeta -> zeta^u to the coefficients
// and sigma^i -> sigma^{ui} to the group indices fixes each e_j.
struct KohlIdempotents {
  int p = 0, m = 0, n = 0;
  std::vector<std::vector<CycElem>> elems;
  bool orthogonal_idempotents = false;
  bool sum_is_one = false;
  bool fixed_under_units = false;

  bool ok() const { return orthogonal_idempotents && sum_is_one && fixed_under_units; }
};
KohlIdempotents kohl_idempotents(int p, int m);

}  // namespace hopfforms

#pragma once

#include <string>
#include <vector>

#include "hopfforms/group.hpp"
#include "hopfforms/linalg.hpp"

namespace hopfforms {

// Commutative algebra over Q with a fixed basis: mult[i][j] holds the
// coordinates of b_i * b_j, one the coordinates of the unit.
struct CommAlgebra {
  int dim = 0;
  std::vector<std::vector<QVec>> mult;
  QVec one;

  QVec multiply(const QVec& x, const QVec& y) const;
  bool satisfies_ring_axioms() const;  // associativity/commutativity/unit on basis
};

// An algebra with a finite group acting by Q-algebra automorphisms;
// action[f] is the matrix of f, stored column-wise (image of basis j).
// comp_count > 1 declares that the basis is component-major over comp_count
// direct factors of equal dimension (multiplication supported inside blocks).
struct GaloisAlgebra {
  CommAlgebra alg;
  FiniteGroup group;
  std::vector<std::vector<QVec>> action;
  std::vector<std::string> basis_labels;
  std::string desc;
  int comp_count = 1;

  int comp_dim() const { return alg.dim / comp_count; }
  QVec apply(int f, const QVec& x) const;
};

// Map(F, Q) with f.e_h = e_{fh}; the split F-Galois algebra.
GaloisAlgebra trivial_extension(const FiniteGroup& f);

// Q(zeta_n) with (Z/n)^* acting by zeta -> zeta^u.
GaloisAlgebra cyclotomic_galois(int n);

// A number field together with matrices for a designated automorphism list
// (parallel to the caller's subgroup element list in build_F_galois).
struct FieldWithAction {
  CommAlgebra field;
  std::vector<std::vector<QVec>> action;
  std::vector<std::string> basis_labels;
  std::string name;
};

// Q(zeta_n) with the automorphism zeta -> zeta^r for each listed residue.
FieldWithAction cyclotomic_field_with_units(int n, const std::vector<long>& residues);

// Q(beta), beta^2 = d (squarefree, not 0 or 1), with {id, beta -> -beta}.
FieldWithAction quadratic_field_with_negation(long d);

// The induced algebra Map_U(F, M) = direct sum of M f_i over a left
// transversal g_1..g_n of U <= F, n = [F:U]: g carries M f_i to M f_j where
// g g_i U = g_j U, twisting by the automorphism of g_j^{-1} g g_i in U.
// u_elems must be a subgroup of F with |U| = [M:Q], m.action[i] the
// automorphism for u_elems[i], u -> M_u a left action with fixed field Q.
// Transversal representatives are first-found ascending. The result is
// verified to be F-Galois; throws otherwise.
GaloisAlgebra build_F_galois(const FiniteGroup& f, const std::vector<int>& u_elems,
                             const FieldWithAction& m);

// Q(sqrt2, sqrt3), basis {1, sqrt2, sqrt3, sqrt6}, group C2xC2 where the
// generator (1,0) fixes sqrt2 and (0,1) fixes sqrt3.
GaloisAlgebra biquadratic_sqrt2_sqrt3();

// Q(zeta_3, 2^{1/3}), basis {1, c, c^2, w, wc, wc^2} with c^3 = 2 and
// w^2 + w + 1 = 0; group S4-style labels from FiniteGroup::symmetric(3),
// acting as the affine maps k -> a + bk on the roots w^k c.
GaloisAlgebra sextic_s3();

// Every action matrix is an algebra map and g -> M_g is a homomorphism.
bool action_is_by_algebra_maps(const GaloisAlgebra& l);

// Rank of the Galois map L (x) L -> Map(F, L), x (x) y -> (x * f(y))_f,
// as a full dim^2 x dim^2 matrix over Q.
long galois_map_rank(const GaloisAlgebra& l);

// Outcome of the Galois-extension check.
struct GaloisCheck {
  bool ok = false;
  bool dim_ok = false;     // dim L == |F|
  bool bijective = false;  // the Galois map is invertible
  long deficiency = -1;    // Q-codimension of the image, when determined
  std::string detail;
};

// dim L = |F| plus bijectivity of the Galois map. The map is L-linear in the
// first tensor factor, so it is invertible iff the |F| x |F| matrix (g(b_j))
// over L is; that is tested per direct factor by elimination over the factor
// field, falling back to the full Q-rank if a factor is not a field.
GaloisCheck verify_galois(const GaloisAlgebra& l);

// F-Galois: dim L = |F| and the Galois map is bijective.
bool is_galois_extension(const GaloisAlgebra& l);

// Canonical (reduced echelon) basis of the joint fixed space of the listed
// group elements; a subalgebra since the action is by algebra maps.
std::vector<QVec> fixed_subalgebra(const GaloisAlgebra& l, const std::vector<int>& elems);

// E^W as a Galois algebra for G/W, for a normal subgroup W given by element
// indices. basis holds the ambient coordinates of the new basis vectors; a
// coset acts through its minimal representative (well defined because the
// basis is W-fixed). comp_count survives only for trivial W.
struct RestrictedAlgebra {
  GaloisAlgebra algebra;
  std::vector<QVec> basis;
  GroupQuotient quotient;
};
RestrictedAlgebra restrict_to_fixed_subalgebra(const GaloisAlgebra& e,
                                               const std::vector<int>& w_elems);

// Display form "a - 2*b + 1/2*c" of a vector in a labeled basis.
std::string linear_combo_label(const QVec& v, const std::vector<std::string>& labels);

}  // namespace hopfforms

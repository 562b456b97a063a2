#pragma once

#include <string>
#include <vector>

#include "hopfforms/etale.hpp"
#include "hopfforms/hopf_algebra.hpp"
#include "hopfforms/regular.hpp"
#include "hopfforms/wedderburn.hpp"

namespace hopfforms {

// A Hopf form of Q[N] presented as the fixed ring of L[N] under the acting
// group of L: the group acts on L-coefficients by the Galois action and on N
// by the automorphism n_action[f]. Ambient coordinates are group-element
// major: (eta, l) = eta * dim L + l.
struct FixedRing {
  GaloisAlgebra base;                      // L
  FiniteGroup n;                           // N
  std::vector<std::vector<int>> n_action;  // per acting element, image map on N
  std::vector<QVec> basis;                 // canonical echelon basis, ambient coords
  HopfAlgebra hopf;                        // structure transported to the basis
  bool fixed_ok = false;   // every basis vector fixed by every acting element
  bool dim_ok = false;     // dim == |N|
  long form_rank = 0;      // Q-rank of L * basis inside L[N]
  bool form_ok = false;    // form_rank == |N| * dim L (scalar extension is onto)
  std::string desc;

  QVec ambient_multiply(const QVec& x, const QVec& y) const;  // product in L[N]
  QVec ambient_apply(int f, const QVec& x) const;             // twisted action of f
  QVec to_ambient(const QVec& coords) const;                  // basis coords -> L[N]
};

// H = (L[N])^F. n_action[f] must be an automorphism of n for every f and
// f -> n_action[f] a homomorphism; throws std::invalid_argument otherwise.
// Nullspace row assembly shards across workers by acting-group generator.
FixedRing fixed_ring(const GaloisAlgebra& l, const FiniteGroup& n,
                     const std::vector<std::vector<int>>& n_action, int workers = 1,
                     std::string desc = "");

// Theta(L) for an explicit embedding of the acting group into Aut(N), given
// by per-element image maps (embed[f][x] = f(x)); requires the embedding to
// be injective in addition to the fixed_ring validation.
FixedRing theta(const GaloisAlgebra& l, const FiniteGroup& n,
                const std::vector<std::vector<int>>& embed, int workers = 1);

// The embedding of (Z/n)^* into Aut(C_n): the unit-group element carrying
// residue u acts by eta -> eta^u. units must be FiniteGroup::units_mod(n).
std::vector<std::vector<int>> residue_embed(const FiniteGroup& units, int n);

// Descent form H = (E[N])^G for a regular subgroup N normalized by lambda(G);
// g acts on N by conjugation with lambda(g).
FixedRing descend(const GaloisAlgebra& e, const RegularSubgroup& n, int workers = 1);

// The action of a descent form on E: (sum_eta r_eta eta) . x =
// sum_eta r_eta * g_eta(x) with g_eta = eta^{-1}(0) in G, together with the
// map j : E (x) H -> End_Q(E), j(x (x) h)(y) = x * (h . y).
struct HopfActionCheck {
  std::vector<std::vector<QVec>> action;  // per H-basis element, column-wise on E
  bool unit_acts_as_identity = false;
  bool counit_on_one = false;      // h . 1 = eps(h) 1 for all basis h
  bool measures_products = false;  // h . (xy) = sum (h_(1) . x)(h_(2) . y)
  long j_rank = 0;
  bool j_bijective = false;        // j_rank == dim(E)^2
};
HopfActionCheck hopf_action(const FixedRing& h, const RegularSubgroup& n);

// Action of a single element of H (given in basis coordinates) on x in E.
QVec hopf_act(const FixedRing& h, const RegularSubgroup& n, const QVec& h_coords, const QVec& x);

// Theta-preimage data for a descent instance. W is the kernel of the
// conjugation action, so (E[N])^G = ((E^W)[N])^{G/W} always holds and the
// quotient presentation h_quotient is computed unconditionally; it is a
// genuine Theta-preimage (h_quotient = Theta(E^W)) exactly when the
// conjugation action is onto Aut(N). basis_change_ok certifies that the
// embedding of h_quotient into E[N] carries its Hopf presentation to
// h_descent's.
struct PreimageResult {
  std::vector<int> w;              // W as G-element indices
  ConjugationAction ca;            // G/W -> Aut(N) certificate
  bool preimage_exists = false;    // ca.onto_aut
  RestrictedAlgebra ew;            // E^W as a G/W-Galois algebra
  GaloisCheck ew_galois;
  FixedRing h_quotient;            // ((E^W)[N])^{G/W}
  FixedRing h_descent;             // (E[N])^G
  std::vector<QVec> embed_images;  // h_quotient basis inside E[N]
  std::vector<QVec> coords;        // the same in h_descent basis coordinates
  bool basis_change_ok = false;    // full Hopf presentation match
};
PreimageResult theta_preimage(const GaloisAlgebra& e, const RegularSubgroup& n, int workers = 1);

// Isomorphism invariants of a Hopf form (dim <= 16): equal records are
// necessary for Hopf isomorphism.
struct InvariantRecord {
  std::vector<std::string> block_labels;  // sorted Wedderburn block labels
  int block_count = 0;                    // primitive central idempotents
  int grouplike_count = 0;
  // Square classes of disc(center) over the quadratic-center blocks, sorted.
  std::vector<std::string> quadratic_square_classes;
  std::string min_split_field;  // smallest non-rational center label, or "Q"
  bool operator==(const InvariantRecord&) const = default;
};
InvariantRecord hopf_invariants(const HopfAlgebra& h);
InvariantRecord hopf_invariants(const FixedRing& h);
std::string invariant_summary(const InvariantRecord& r);

// The cyclic-C8 family over Q8: for t in {i, j, k} and beta^2 = d, the form
// H = Theta(L) for L = Q(beta) f1 + Q(beta) f2 induced from the index-2
// subgroup <3> of (Z/8)^*, certified against the quotient-descent side
// ((Q(beta))[C8])^{C2} (beta -> -beta, eta -> eta^3) through the algebra map
// psi that drops the f2 - f1 factor.
struct Q8C8Preimage {
  std::string t_choice;
  long d = 0;
  RegularSubgroup pair_a, pair_b;  // the two regular C8 subgroups with this t
  std::vector<int> w;              // W = <lambda(t)>, order 4, shared by the pair
  bool w_match = false;            // both pair members produce the same W
  bool quotient_proper = false;    // conj image is C2, proper in Aut(C8)
  GaloisAlgebra l;                 // the induced (Z/8)^*-Galois algebra
  FixedRing theta_side;            // Theta(L) inside L[C8]
  FixedRing descent_side;          // ((Q(beta))[C8])^{C2}
  std::vector<QVec> normalized_basis;  // ambient L[C8] coordinates
  std::vector<std::string> normalized_labels;
  HopfAlgebra h_normalized;        // theta_side presented in the normalized basis
  bool normalized_spans = false;   // normalized basis spans the fixed ring
  bool normalized_fixed = false;   // each normalized vector is fixed
  bool idempotent_diff_square_one = false;  // (f2 - f1)^2 = 1 in L
  bool psi_in_descent = false;     // psi images land in the descent form
  bool psi_multiplicative = false; // checked on all basis products
  bool psi_hopf_compatible = false;// full presentation match through psi
  InvariantRecord record;
};
Q8C8Preimage q8_c8_preimage(const std::string& t_choice, long d = 2, int workers = 1);

// The order-8 fixed ring (Q(zeta_4)[Q8])^{C2}, the C2 acting by zeta -> -zeta
// on coefficients and by conjugation with k on Q8. Certifies the
// quaternion-part basis {1, zeta v, zeta u, w} (u = i, v = j, w = k) with its
// relations, the nilpotent zeta u - w, the block profile Q^4 x Mat2(Q), and
// absolute semisimplicity.
struct GreitherForm {
  FixedRing form;
  QVec block_unit;             // e = (1 - (-1))/2 in ambient coordinates
  bool basis_in_form = false;  // the four listed elements lie in the form
  bool relations_ok = false;   // e(zv)^2 = e, e(zu)^2 = e, (zv)(zu) = w, (zu)(zv) = -w
  bool nilpotent_ok = false;   // zu - w nonzero with square 0
  WedderburnDecomposition decomposition;
  AbsSemisimpleCertificate abss;
};
GreitherForm greither_form(int workers = 1);

// Theta-preimage of the Greither form: L = Q(zeta_4)^12, Galois over the
// full automorphism group of Q8 (order 24) with U = <conjugation by k> and
// M = Q(zeta_4). Theta(L) is matched against the Greither form through the
// projection onto the first component of L.
struct GreitherPreimage {
  GaloisAlgebra l;
  int components = 0;
  FixedRing theta_of_l;
  WedderburnDecomposition profile;
  bool matches_form = false;
  GreitherForm form;
};
GreitherPreimage theta_preimage_greither(int workers = 1);

}  // namespace hopfforms

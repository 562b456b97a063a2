#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfforms/algebra.hpp"
#include "hopfforms/group.hpp"
#include "hopfforms/polynomial.hpp"

namespace hopfforms {

// One simple factor Mat_k(D) of a semisimple algebra, D a division algebra
// with center F of degree [F:Q] = center_degree.
struct WedderburnBlock {
  int dim = 0;                  // Q-dimension: k^2 d^2 [F:Q]
  int matrix_size = 1;          // k * d = matrix size over an algebraic closure
  int center_degree = 1;        // [F:Q]
  QPoly center_min_poly;        // minimal polynomial of a primitive element of F
  QVec idempotent;              // central primitive idempotent, ambient coordinates
  bool division = false;        // true when D != F (here: quaternion division)
  std::optional<std::pair<Rat, Rat>> quaternion_symbols;  // (a, b) with block ~ (a,b / Q)
  std::vector<long> ramified_places;  // for quaternion blocks; 0 denotes the real place
  std::string label;            // "Q", "Q(sqrt(-1))", "Mat2(Q)", "H(-1,-1)", ...
};

struct WedderburnDecomposition {
  bool semisimple = false;            // trace form nondegenerate
  int trace_form_rank = 0;            // = dim iff semisimple
  // Split semisimple: every block is a full matrix ring over Q, so base change
  // to any field keeps the block profile.
  bool absolutely_semisimple = false;
  std::vector<WedderburnBlock> blocks;  // sorted by (center_degree, matrix_size, min poly)
  int total_block_dim = 0;              // sum of block dims (= dim when semisimple)
};

// Full decomposition over Q. Matrix blocks of size >= 2 are only classified
// over center Q (the catalog here never needs more); anything else throws.
WedderburnDecomposition wedderburn_decompose(const AssocAlgebra& a);

// Matrix sizes over C, one entry per complex block, ascending. For a block
// Mat_k(D), D of degree d^2 over a center of degree f, this contributes f
// copies of k*d.
std::vector<int> complex_profile(const WedderburnDecomposition& d);

// Character degrees of G (= complex profile of Q[G]), ascending.
std::vector<int> complex_profile_of_group(const FiniteGroup& g);

// Certifies that a is split semisimple of dimension |N| with complex block
// profile equal to the character degrees of N.
struct AbsSemisimpleCertificate {
  bool dim_match = false;
  bool split = false;                // every block Mat_k(Q)
  std::vector<int> algebra_profile;  // complex_profile of the decomposition
  std::vector<int> group_profile;    // character degrees of N
  bool profile_match = false;
  bool verdict = false;
  WedderburnDecomposition decomposition;
};
AbsSemisimpleCertificate is_absolutely_semisimple(const AssocAlgebra& a, const FiniteGroup& n);

// Hilbert symbol (a, b)_p in {+1, -1}; p a prime, or 0 for the real place.
int hilbert_symbol(const Rat& a, const Rat& b, long p);

// Places where the quaternion algebra (a, b / Q) ramifies, sorted, with 0 for
// the real place. Always even in number.
std::vector<long> quaternion_ramified_places(const Rat& a, const Rat& b);

// Minimal polynomial of x in a (monic), by linear dependence of powers.
QPoly minimal_polynomial(const AssocAlgebra& a, const QVec& x);

}  // namespace hopfforms

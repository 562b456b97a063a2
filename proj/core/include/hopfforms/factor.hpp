#pragma once

#include <vector>

#include "hopfforms/polynomial.hpp"

namespace hopfforms {

// Yun's squarefree decomposition: f = lc * prod_i out[i].first^{out[i].second}
// with each factor monic squarefree, multiplicities ascending.
std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& f);

struct Factorization {
  Rat unit;  // leading coefficient of the input
  std::vector<std::pair<QPoly, int>> factors;  // monic irreducible, multiplicity
};

// Exact factorization over Q for deg f <= 16: squarefree decomposition, then a
// Zassenhaus search (Berlekamp mod p, Hensel lifting, subset recombination with
// symmetric rational reconstruction). Deterministic factor order (degree, then
// coefficient-lexicographic).
Factorization factor_over_Q(const QPoly& f);

bool is_irreducible_over_Q(const QPoly& f);

}  // namespace hopfforms

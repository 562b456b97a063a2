#pragma once

#include <string>
#include <vector>

#include "hopfforms/linalg.hpp"

namespace hopfforms {

// Finite-dimensional associative Q-algebra with a fixed basis; mult[i][j]
// holds the coordinates of b_i * b_j, one the coordinates of the unit.
struct AssocAlgebra {
  int dim = 0;
  std::vector<std::vector<QVec>> mult;
  QVec one;
  std::vector<std::string> basis_labels;

  QVec multiply(const QVec& x, const QVec& y) const;
  QVec power(QVec x, long e) const;  // e >= 1
  bool is_associative_on_basis() const;
  bool is_unital() const;
  bool is_commutative_on_basis() const;

  // Matrix of left multiplication by x, column-wise.
  std::vector<QVec> left_mult_matrix(const QVec& x) const;
  Rat trace_of_left_mult(const QVec& x) const;
};

}  // namespace hopfforms

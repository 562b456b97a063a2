#include "hopfforms/algebra.hpp"

#include <stdexcept>

namespace hopfforms {

QVec AssocAlgebra::multiply(const QVec& x, const QVec& y) const {
  QVec out(dim);
  for (int i = 0; i < dim; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim; ++j) {
      if (y[j].is_zero()) continue;
      Rat c = x[i] * y[j];
      const QVec& bij = mult[i][j];
      for (int k = 0; k < dim; ++k)
        if (!bij[k].is_zero()) out[k] += c * bij[k];
    }
  }
  return out;
}

QVec AssocAlgebra::power(QVec x, long e) const {
  if (e < 1) throw std::invalid_argument("power: e < 1");
  QVec acc = x;
  for (long i = 1; i < e; ++i) acc = multiply(acc, x);
  return acc;
}

bool AssocAlgebra::is_associative_on_basis() const {
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) {
        QVec ek(dim), ei(dim);
        ek[k] = Rat(1);
        ei[i] = Rat(1);
        if (multiply(mult[i][j], ek) != multiply(ei, mult[j][k])) return false;
      }
  return true;
}

bool AssocAlgebra::is_unital() const {
  for (int i = 0; i < dim; ++i) {
    QVec ei(dim);
    ei[i] = Rat(1);
    if (multiply(one, ei) != ei || multiply(ei, one) != ei) return false;
  }
  return true;
}

bool AssocAlgebra::is_commutative_on_basis() const {
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      if (mult[i][j] != mult[j][i]) return false;
  return true;
}

std::vector<QVec> AssocAlgebra::left_mult_matrix(const QVec& x) const {
  std::vector<QVec> cols(dim, QVec(dim));
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i < dim; ++i) {
      if (x[i].is_zero()) continue;
      const QVec& bij = mult[i][j];
      for (int k = 0; k < dim; ++k)
        if (!bij[k].is_zero()) cols[j][k] += x[i] * bij[k];
    }
  }
  return cols;
}

Rat AssocAlgebra::trace_of_left_mult(const QVec& x) const {
  Rat tr;
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i < dim; ++i) {
      if (x[i].is_zero()) continue;
      const Rat& c = mult[i][j][j];
      if (!c.is_zero()) tr += x[i] * c;
    }
  }
  return tr;
}

}  // namespace hopfforms

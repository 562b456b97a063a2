#pragma once

#include <string>
#include <vector>

#include "hopfforms/linalg.hpp"
#include "hopfforms/polynomial.hpp"
#include "hopfforms/rational.hpp"

namespace hopfforms {

// n-th cyclotomic polynomial, computed by dividing x^n - 1 by the proper
// cyclotomic factors (memoized).
const QPoly& cyclotomic_polynomial(int n);

int euler_phi(int n);

// Element of Q(zeta_n) in the power basis 1, zeta, ..., zeta^{phi(n)-1},
// eagerly reduced mod Phi_n. Conductor 1 represents a rational; mixed-conductor
// arithmetic promotes rationals and rejects everything else (use embed_into).
class CycElem {
public:
  CycElem() : conductor_(1), coords_{Rat(0)} {}
  CycElem(int conductor, QVec coords);

  static CycElem rational(Rat q) { return CycElem(1, {std::move(q)}); }
  static CycElem zeta(int n) { return zeta_pow(n, 1); }
  static CycElem zeta_pow(int n, long k);

  int conductor() const { return conductor_; }
  const QVec& coords() const { return coords_; }
  bool is_zero() const { return qvec_is_zero(coords_); }
  bool is_rational() const;
  // The rational value; throws unless is_rational().
  Rat rational_value() const;

  CycElem operator-() const { return CycElem(conductor_, qvec_scale(Rat(-1), coords_)); }
  friend CycElem operator+(const CycElem& a, const CycElem& b);
  friend CycElem operator-(const CycElem& a, const CycElem& b);
  friend CycElem operator*(const CycElem& a, const CycElem& b);
  friend CycElem operator/(const CycElem& a, const CycElem& b) { return a * b.inv(); }
  friend CycElem operator*(const Rat& s, const CycElem& a) {
    return CycElem(a.conductor_, qvec_scale(s, a.coords_));
  }
  friend bool operator==(const CycElem& a, const CycElem& b);
  friend bool operator!=(const CycElem& a, const CycElem& b) { return !(a == b); }

  CycElem inv() const;

  // zeta^i -> zeta^{ik}; requires gcd(k, conductor) = 1.
  CycElem galois_conjugate(long k) const;

  // Image in Q(zeta_m) for conductor | m.
  CycElem embed_into(int m) const;
  // Expression in Q(zeta_m) for m | conductor, if the element lies there.
  std::optional<CycElem> contract_to(int m) const;

  std::string str() const;

private:
  int conductor_;
  QVec coords_;
};

// The irreducible factors of Phi_n over Q(zeta_m), m | n, as orbit products
// prod_{k in coset} (x - zeta_n^k) with coefficients contracted to conductor m.
// Cosets are those of {k : k = 1 mod m} in (Z/n)^*; deterministic order
// (ascending smallest coset representative).
std::vector<Poly<CycElem>> factor_cyclotomic_over(int n, int m);

}  // namespace hopfforms

#pragma once

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "hopfforms/rational.hpp"

namespace hopfforms {

// Dense univariate polynomial over a field K.
// K must be value-semantic with: default ctor = zero, is_zero(), inv(),
// the four arithmetic operators, and ==. Coefficients are stored lowest
// degree first with no trailing zero; the zero polynomial has no coefficients.
template <class K>
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(K a) { return Poly(std::vector<K>{std::move(a)}); }
  // a * x^d
  static Poly monomial(K a, int d) {
    std::vector<K> c(d + 1);
    c[d] = std::move(a);
    return Poly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<K>& coeffs() const { return c_; }
  const K& operator[](int i) const {
    static const K kZero{};
    return 0 <= i && i <= degree() ? c_[i] : kZero;
  }
  const K& lead() const {
    if (is_zero()) throw std::domain_error("Poly: leading coefficient of zero");
    return c_.back();
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<K> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) {
      if (i < a.c_.size()) c[i] = c[i] + a.c_[i];
      if (i < b.c_.size()) c[i] = c[i] + b.c_[i];
    }
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<K> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) {
      if (i < a.c_.size()) c[i] = c[i] + a.c_[i];
      if (i < b.c_.size()) c[i] = c[i] - b.c_[i];
    }
    return Poly(std::move(c));
  }
  Poly operator-() const {
    std::vector<K> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = K{} - c_[i];
    return Poly(std::move(c));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<K> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    return Poly(std::move(c));
  }
  friend Poly operator*(const K& s, const Poly& p) {
    std::vector<K> c(p.c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = s * p.c_[i];
    return Poly(std::move(c));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Euclidean division; throws if b is zero.
  friend std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
    Poly q;
    const K lead_inv = b.lead().inv();
    q.c_.assign(std::max<int>(a.degree() - b.degree() + 1, 0), K{});
    while (!a.is_zero() && a.degree() >= b.degree()) {
      const int shift = a.degree() - b.degree();
      K factor = a.lead() * lead_inv;
      q.c_[shift] = factor;
      for (size_t i = 0; i < b.c_.size(); ++i)
        a.c_[shift + i] = a.c_[shift + i] - factor * b.c_[i];
      a.trim();
    }
    q.trim();
    return {std::move(q), std::move(a)};
  }
  friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

  bool divides(const Poly& a) const { return (a % *this).is_zero(); }

  Poly monic() const {
    if (is_zero()) return *this;
    return lead().inv() * *this;
  }

  Poly derivative() const {
    if (degree() < 1) return Poly();
    std::vector<K> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) {
      K m{};  // i * c_[i], built by addition so K needs no int ctor
      for (size_t k = 0; k < i; ++k) m = m + c_[i];
      c[i - 1] = std::move(m);
    }
    return Poly(std::move(c));
  }

  K eval(const K& x) const {
    K acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<K> c_;
};

// Monic gcd by the Euclidean algorithm; gcd(0,0) = 0.
template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// Extended Euclid: returns (g, s, t), g monic, with s*a + t*b = g.
// `one` supplies the multiplicative identity of K.
template <class K>
std::tuple<Poly<K>, Poly<K>, Poly<K>> poly_xgcd(Poly<K> a, Poly<K> b, const K& one) {
  Poly<K> r0 = std::move(a), r1 = std::move(b);
  Poly<K> s0 = Poly<K>::constant(one), s1;
  Poly<K> t0, t1 = Poly<K>::constant(one);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<K> s = s0 - q * s1, t = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  K norm = r0.lead().inv();
  return {norm * r0, norm * s0, norm * t0};
}

using QPoly = Poly<Rat>;

// x^n - 1
QPoly x_pow_minus_one(int n);
// Content of a rational polynomial: the positive rational c with f = c * primitive_part(f).
Rat poly_content(const QPoly& f);
// f / content(f): integer coefficients, gcd 1, positive leading coefficient.
QPoly primitive_part(const QPoly& f);
// Resultant of two rational polynomials (0 if either is zero).
Rat poly_resultant(QPoly f, QPoly g);
// Discriminant: (-1)^{n(n-1)/2} res(f, f') / lc(f), n = deg f >= 1.
Rat poly_discriminant(const QPoly& f);
// Squarefree part of num(r)*den(r) as a signed integer: the canonical square-class
// representative of a nonzero rational. Throws if the unfactored cofactor exceeds the
// trial-division bound without being a perfect square.
mpz_class square_class(const Rat& r);

}  // namespace hopfforms

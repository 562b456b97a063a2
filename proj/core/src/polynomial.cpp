#include "hopfforms/polynomial.hpp"

namespace hopfforms {

QPoly x_pow_minus_one(int n) {
  if (n < 1) throw std::invalid_argument("x_pow_minus_one: n must be >= 1");
  std::vector<Rat> c(n + 1);
  c[0] = Rat(-1);
  c[n] = Rat(1);
  return QPoly(std::move(c));
}

Rat poly_content(const QPoly& f) {
  if (f.is_zero()) return Rat(0);
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const Rat& c : f.coeffs()) {
    if (c.is_zero()) continue;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), c.num().get_mpz_t());
    num_gcd = g;
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
  }
  Rat content(num_gcd, den_lcm);  // positive magnitude
  return f.lead().sign() < 0 ? -content : content;
}

QPoly primitive_part(const QPoly& f) {
  if (f.is_zero()) return f;
  Rat c = poly_content(f);
  return c.inv() * f;
}

Rat poly_resultant(QPoly f, QPoly g) {
  if (f.is_zero() || g.is_zero()) return Rat(0);
  Rat acc(1);
  bool swapped_sign = false;
  // res(f,g) = (-1)^{deg f * deg g} res(g,f); reduce by Euclid.
  while (g.degree() > 0) {
    QPoly r = f % g;
    if (r.is_zero()) return Rat(0);
    // res(f,g) = lc(g)^{deg f - deg r} * (-1)^{deg f deg g} * res(g,r)
    acc *= g.lead().pow(f.degree() - r.degree());
    if ((f.degree() & 1) && (g.degree() & 1)) swapped_sign = !swapped_sign;
    f = std::move(g);
    g = std::move(r);
  }
  // g is a nonzero constant: res(f, c) = c^{deg f}
  acc *= g.lead().pow(f.degree());
  return swapped_sign ? -acc : acc;
}

Rat poly_discriminant(const QPoly& f) {
  const int n = f.degree();
  if (n < 1) throw std::domain_error("poly_discriminant: degree must be >= 1");
  Rat res = poly_resultant(f, f.derivative());
  Rat d = res / f.lead();
  return ((n * (n - 1) / 2) % 2) ? -d : d;
}

mpz_class square_class(const Rat& r) {
  if (r.is_zero()) throw std::domain_error("square_class: zero has no square class");
  mpz_class n = r.num() * r.den();  // same square class as r
  const int sign = sgn(n) < 0 ? -1 : 1;
  n = abs(n);
  mpz_class out = 1;
  // strip p^2 for small p, keep one p per odd exponent
  for (mpz_class p = 2; p * p <= n && p < 100000; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e & 1) out *= p;
  }
  if (n > 1) {
    // Leftover cofactor has no prime factor < 1e5. Below 1e10 it is p, p*q, or p^2,
    // so it is squarefree unless it is a perfect square.
    if (mpz_perfect_square_p(n.get_mpz_t())) {
      // even exponents, contributes nothing
    } else if (n < mpz_class(100000) * 100000) {
      out *= n;
    } else {
      throw std::domain_error("square_class: cofactor too large to certify squarefree");
    }
  }
  return sign * out;
}

}  // namespace hopfforms

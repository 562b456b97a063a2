#include "hopfforms/factor.hpp"

#include <algorithm>
#include <stdexcept>

namespace hopfforms {

namespace {

// ---- arithmetic mod a word-sized prime ----------------------------------

using ModPoly = std::vector<long>;  // coeffs in [0, p), lowest degree first, trimmed

long mod_inv(long a, long p) {
  long t = 0, nt = 1, r = p, nr = a % p;
  if (nr < 0) nr += p;
  while (nr != 0) {
    long q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  if (r != 1) throw std::domain_error("mod_inv: not invertible");
  return t < 0 ? t + p : t;
}

void mp_trim(ModPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int mp_deg(const ModPoly& f) { return static_cast<int>(f.size()) - 1; }

ModPoly mp_mul(const ModPoly& a, const ModPoly& b, long p) {
  if (a.empty() || b.empty()) return {};
  ModPoly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + static_cast<__int128>(a[i]) * b[j]) % p;
  }
  mp_trim(c);
  return c;
}

// returns (quotient, remainder)
std::pair<ModPoly, ModPoly> mp_divmod(ModPoly a, const ModPoly& b, long p) {
  if (b.empty()) throw std::domain_error("mp_divmod: division by zero");
  ModPoly q(std::max<int>(mp_deg(a) - mp_deg(b) + 1, 0), 0);
  const long li = mod_inv(b.back(), p);
  while (mp_deg(a) >= mp_deg(b)) {
    long f = static_cast<long>(static_cast<__int128>(a.back()) * li % p);
    int shift = mp_deg(a) - mp_deg(b);
    q[shift] = f;
    for (size_t i = 0; i < b.size(); ++i) {
      long v = (a[shift + i] - static_cast<__int128>(f) * b[i]) % p;
      a[shift + i] = v < 0 ? v + p : v;
    }
    mp_trim(a);
  }
  mp_trim(q);
  return {std::move(q), std::move(a)};
}

ModPoly mp_mod(const ModPoly& a, const ModPoly& b, long p) { return mp_divmod(a, b, p).second; }

ModPoly mp_monic(ModPoly f, long p) {
  if (f.empty()) return f;
  long li = mod_inv(f.back(), p);
  for (long& c : f) c = static_cast<long>(static_cast<__int128>(c) * li % p);
  return f;
}

ModPoly mp_gcd(ModPoly a, ModPoly b, long p) {
  while (!b.empty()) {
    ModPoly r = mp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return mp_monic(std::move(a), p);
}

// (g, s, t) with s*a + t*b = g, g monic
std::tuple<ModPoly, ModPoly, ModPoly> mp_xgcd(ModPoly a, ModPoly b, long p) {
  ModPoly s0{1}, s1, t0, t1{1};
  while (!b.empty()) {
    auto [q, r] = mp_divmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
    ModPoly qs = mp_mul(q, s1, p), qt = mp_mul(q, t1, p);
    ModPoly ns(std::max(s0.size(), qs.size()), 0), nt(std::max(t0.size(), qt.size()), 0);
    for (size_t i = 0; i < ns.size(); ++i) {
      long v = ((i < s0.size() ? s0[i] : 0) - (i < qs.size() ? qs[i] : 0)) % p;
      ns[i] = v < 0 ? v + p : v;
    }
    for (size_t i = 0; i < nt.size(); ++i) {
      long v = ((i < t0.size() ? t0[i] : 0) - (i < qt.size() ? qt[i] : 0)) % p;
      nt[i] = v < 0 ? v + p : v;
    }
    mp_trim(ns);
    mp_trim(nt);
    s0 = std::move(s1);
    s1 = std::move(ns);
    t0 = std::move(t1);
    t1 = std::move(nt);
  }
  if (a.empty()) throw std::domain_error("mp_xgcd: gcd of zeros");
  long li = mod_inv(a.back(), p);
  auto scale = [&](ModPoly& f) {
    for (long& c : f) c = static_cast<long>(static_cast<__int128>(c) * li % p);
  };
  ModPoly g = a;
  scale(g);
  scale(s0);
  scale(t0);
  return {std::move(g), std::move(s0), std::move(t0)};
}

ModPoly mp_derivative(const ModPoly& f, long p) {
  if (mp_deg(f) < 1) return {};
  ModPoly d(f.size() - 1);
  for (size_t i = 1; i < f.size(); ++i) d[i - 1] = static_cast<long>((static_cast<__int128>(i) * f[i]) % p);
  mp_trim(d);
  return d;
}

// Berlekamp factorization of a monic squarefree f mod p into monic irreducibles.
std::vector<ModPoly> berlekamp(const ModPoly& f, long p) {
  const int n = mp_deg(f);
  if (n <= 1) return {f};
  // rows of Q: x^{p*i} mod f
  // x^p mod f by square-and-multiply
  ModPoly xp{0, 1};
  {
    ModPoly acc{1}, base = xp;
    long e = p;
    while (e) {
      if (e & 1) acc = mp_mod(mp_mul(acc, base, p), f, p);
      base = mp_mod(mp_mul(base, base, p), f, p);
      e >>= 1;
    }
    xp = std::move(acc);
  }
  std::vector<ModPoly> qrow(n);
  qrow[0] = ModPoly{1};
  for (int i = 1; i < n; ++i) qrow[i] = mp_mod(mp_mul(qrow[i - 1], xp, p), f, p);
  // nullspace of (Q - I)^T over F_p: vectors v with v(x)^p = v(x) mod f.
  // Build matrix M[i][j] = coeff_j(x^{p*i}) - delta_ij, solve v M = 0, i.e.
  // nullspace of M^T acting on coordinate columns.
  std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= mp_deg(qrow[i]); ++j) m[j][i] = qrow[i][j];  // transpose
    m[i][i] = (m[i][i] - 1 + p) % p;
  }
  // Gaussian elimination, collect nullspace basis
  std::vector<int> pivot_col_of_row;
  std::vector<std::vector<long>> mat = m;
  std::vector<bool> col_is_pivot(n, false);
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int sel = -1;
    for (int r = row; r < n; ++r)
      if (mat[r][col] != 0) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    std::swap(mat[sel], mat[row]);
    long li = mod_inv(mat[row][col], p);
    for (int c = 0; c < n; ++c) mat[row][c] = static_cast<long>(static_cast<__int128>(mat[row][c]) * li % p);
    for (int r = 0; r < n; ++r) {
      if (r == row || mat[r][col] == 0) continue;
      long fct = mat[r][col];
      for (int c = 0; c < n; ++c) {
        long v = (mat[r][c] - static_cast<__int128>(fct) * mat[row][c]) % p;
        mat[r][c] = v < 0 ? v + p : v;
      }
    }
    col_is_pivot[col] = true;
    pivot_col_of_row.push_back(col);
    ++row;
  }
  std::vector<ModPoly> basis;  // Berlekamp subalgebra basis as polynomials
  for (int free_col = 0; free_col < n; ++free_col) {
    if (col_is_pivot[free_col]) continue;
    ModPoly v(n, 0);
    v[free_col] = 1;
    for (int r = 0; r < static_cast<int>(pivot_col_of_row.size()); ++r) {
      long val = mat[r][free_col];
      if (val != 0) v[pivot_col_of_row[r]] = (p - val) % p;
    }
    mp_trim(v);
    basis.push_back(std::move(v));
  }
  const int num_factors = static_cast<int>(basis.size()) + 1;  // constants excluded above? no:
  // the all-ones direction (constant polynomial) is in the nullspace; basis size == #factors.
  std::vector<ModPoly> factors{f};
  if (static_cast<int>(basis.size()) <= 1) return factors;
  for (const ModPoly& v : basis) {
    if (mp_deg(v) < 1) continue;  // constant splits nothing
    if (static_cast<int>(factors.size()) == static_cast<int>(basis.size())) break;
    std::vector<ModPoly> next;
    for (const ModPoly& g : factors) {
      if (mp_deg(g) <= 1) {
        next.push_back(g);
        continue;
      }
      ModPoly rem = g;
      for (long c = 0; c < p && mp_deg(rem) > 0; ++c) {
        ModPoly shifted = v;
        if (shifted.empty()) shifted = ModPoly{0};
        shifted[0] = (shifted[0] - c % p + p) % p;
        mp_trim(shifted);
        ModPoly d = mp_gcd(rem, shifted, p);
        if (mp_deg(d) > 0 && mp_deg(d) < mp_deg(rem)) {
          next.push_back(d);
          rem = mp_divmod(rem, d, p).first;
        }
      }
      if (mp_deg(rem) > 0) next.push_back(rem);
    }
    factors = std::move(next);
  }
  (void)num_factors;
  return factors;
}

// ---- arithmetic mod p^k with mpz coefficients ----------------------------

using ZPoly = std::vector<mpz_class>;

void zp_trim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int zp_deg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

ZPoly zp_reduce(ZPoly f, const mpz_class& m) {
  for (auto& c : f) {
    c %= m;
    if (c < 0) c += m;
  }
  zp_trim(f);
  return f;
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly c(a.size() + b.size() - 1, mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return zp_reduce(std::move(c), m);
}

ZPoly zp_add(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
  ZPoly c(std::max(a.size(), b.size()), mpz_class(0));
  for (size_t i = 0; i < c.size(); ++i) {
    if (i < a.size()) c[i] += a[i];
    if (i < b.size()) c[i] += b[i];
  }
  return zp_reduce(std::move(c), m);
}

ZPoly zp_sub(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
  ZPoly c(std::max(a.size(), b.size()), mpz_class(0));
  for (size_t i = 0; i < c.size(); ++i) {
    if (i < a.size()) c[i] += a[i];
    if (i < b.size()) c[i] -= b[i];
  }
  return zp_reduce(std::move(c), m);
}

// division by a monic divisor
std::pair<ZPoly, ZPoly> zp_divmod_monic(ZPoly a, const ZPoly& b, const mpz_class& m) {
  if (b.empty() || b.back() != 1) throw std::logic_error("zp_divmod_monic: divisor not monic");
  ZPoly q(std::max<int>(zp_deg(a) - zp_deg(b) + 1, 0), mpz_class(0));
  while (zp_deg(a) >= zp_deg(b)) {
    mpz_class f = a.back();
    int shift = zp_deg(a) - zp_deg(b);
    q[shift] = f;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a = zp_reduce(std::move(a), m);
  }
  return {zp_reduce(std::move(q), m), std::move(a)};
}

ZPoly zp_from_mod(const ModPoly& f) {
  ZPoly g(f.size());
  for (size_t i = 0; i < f.size(); ++i) g[i] = f[i];
  return g;
}

// One quadratic Hensel step: given f = g*h (mod m) with g,h monic,
// s*g + t*h = 1 (mod m), deg s < deg h, deg t < deg g, produce the same data mod m^2.
struct HenselPair {
  ZPoly g, h, s, t;
};

HenselPair hensel_step(const ZPoly& f, const HenselPair& in, const mpz_class& m) {
  const mpz_class m2 = m * m;
  ZPoly e = zp_sub(f, zp_mul(in.g, in.h, m2), m2);
  auto [q, r] = zp_divmod_monic(zp_mul(in.s, e, m2), in.h, m2);
  ZPoly g2 = zp_add(in.g, zp_add(zp_mul(in.t, e, m2), zp_mul(q, in.g, m2), m2), m2);
  ZPoly h2 = zp_add(in.h, r, m2);
  ZPoly b = zp_sub(zp_add(zp_mul(in.s, g2, m2), zp_mul(in.t, h2, m2), m2), ZPoly{mpz_class(1)}, m2);
  auto [c, d] = zp_divmod_monic(zp_mul(in.s, b, m2), h2, m2);
  ZPoly s2 = zp_sub(in.s, d, m2);
  ZPoly t2 = zp_sub(zp_sub(in.t, zp_mul(in.t, b, m2), m2), zp_mul(c, g2, m2), m2);
  return {std::move(g2), std::move(h2), std::move(s2), std::move(t2)};
}

// Lifts the monic factorization f = prod(factors) (mod p) to mod p^{2^steps},
// recursively splitting the factor list.
void hensel_tree(const ZPoly& f, std::vector<ModPoly> mod_factors, long p, int steps,
                 const mpz_class& target_mod, std::vector<ZPoly>& out) {
  if (mod_factors.size() == 1) {
    out.push_back(zp_reduce(f, target_mod));
    return;
  }
  const size_t half = mod_factors.size() / 2;
  ModPoly a{1}, b{1};
  for (size_t i = 0; i < half; ++i) a = mp_mul(a, mod_factors[i], p);
  for (size_t i = half; i < mod_factors.size(); ++i) b = mp_mul(b, mod_factors[i], p);
  auto [g0, s0, t0] = mp_xgcd(a, b, p);
  if (mp_deg(g0) != 0) throw std::logic_error("hensel_tree: factors not coprime");
  HenselPair pair{zp_from_mod(a), zp_from_mod(b), zp_from_mod(s0), zp_from_mod(t0)};
  mpz_class m = p;
  for (int i = 0; i < steps; ++i) {
    pair = hensel_step(zp_reduce(f, m * m), pair, m);
    m *= m;
  }
  hensel_tree(pair.g, {mod_factors.begin(), mod_factors.begin() + half}, p, steps, target_mod,
              out);
  hensel_tree(pair.h, {mod_factors.begin() + half, mod_factors.end()}, p, steps, target_mod,
              out);
}

mpz_class symmetric(const mpz_class& a, const mpz_class& m) {
  mpz_class r = a % m;
  if (r < 0) r += m;
  if (2 * r > m) r -= m;
  return r;
}

// integer polynomial from QPoly known to have integer coefficients
std::vector<mpz_class> to_int_poly(const QPoly& f) {
  std::vector<mpz_class> g(f.degree() + 1);
  for (int i = 0; i <= f.degree(); ++i) {
    if (!f[i].is_integer()) throw std::logic_error("to_int_poly: non-integer coefficient");
    g[i] = f[i].num();
  }
  return g;
}

QPoly from_int_poly(const std::vector<mpz_class>& f) {
  std::vector<Rat> c(f.size());
  for (size_t i = 0; i < f.size(); ++i) c[i] = Rat(f[i]);
  return QPoly(std::move(c));
}

// Zassenhaus factorization of a primitive squarefree integer polynomial,
// returns monic rational irreducible factors.
std::vector<QPoly> zassenhaus(QPoly f) {
  if (f.degree() == 1) return {f.monic()};
  std::vector<mpz_class> fi = to_int_poly(f);
  const mpz_class lc = fi.back();

  // choose a prime: p does not divide lc, f stays squarefree mod p
  static const long kPrimes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
  long p = 0;
  ModPoly fbar;
  for (long cand : kPrimes) {
    if (lc % cand == 0) continue;
    ModPoly g(fi.size());
    for (size_t i = 0; i < fi.size(); ++i) {
      mpz_class r = fi[i] % cand;
      if (r < 0) r += cand;
      g[i] = r.get_si();
    }
    mp_trim(g);
    if (mp_deg(g) != static_cast<int>(fi.size()) - 1) continue;
    ModPoly d = mp_derivative(g, cand);
    if (d.empty()) continue;
    if (mp_deg(mp_gcd(g, d, cand)) == 0) {
      p = cand;
      fbar = mp_monic(std::move(g), cand);
      break;
    }
  }
  if (p == 0) throw std::logic_error("zassenhaus: no good prime below 100");

  std::vector<ModPoly> mod_factors = berlekamp(fbar, p);
  std::sort(mod_factors.begin(), mod_factors.end());
  if (mod_factors.size() == 1) return {f.monic()};

  // Mignotte-style bound: |coeff of any factor| <= 2^n * ||f||_2 * |lc|
  mpz_class norm2 = 0;
  for (const auto& c : fi) norm2 += c * c;
  mpz_class norm = sqrt(norm2) + 1;
  mpz_class bound = (mpz_class(1) << fi.size()) * norm * abs(lc) * 2;
  int steps = 0;
  mpz_class modulus = p;
  while (modulus <= bound) {
    modulus *= modulus;
    ++steps;
  }

  // lift the monic factorization of f/lc
  mpz_class lc_inv;
  mpz_invert(lc_inv.get_mpz_t(), lc.get_mpz_t(), modulus.get_mpz_t());
  ZPoly fstar(fi.size());
  for (size_t i = 0; i < fi.size(); ++i) fstar[i] = fi[i] * lc_inv;
  fstar = zp_reduce(std::move(fstar), modulus);

  std::vector<ZPoly> lifted;
  hensel_tree(fstar, mod_factors, p, steps, modulus, lifted);

  // subset recombination
  std::vector<QPoly> result;
  QPoly remaining = f;
  std::vector<ZPoly> pool = lifted;
  bool progress = true;
  while (progress && !pool.empty()) {
    progress = false;
    const int np = static_cast<int>(pool.size());
    for (int size = 1; size <= np && !progress; ++size) {
      // iterate subsets of `size` elements in lexicographic index order
      std::vector<int> idx(size);
      for (int i = 0; i < size; ++i) idx[i] = i;
      while (true) {
        // candidate = lc * prod pool[idx]
        ZPoly cand{mpz_class(1)};
        mpz_class cur_lc = remaining.lead().num();  // remaining is primitive integer
        for (int i : idx) cand = zp_mul(cand, pool[i], modulus);
        for (auto& c : cand) c = symmetric(c * cur_lc, modulus);
        QPoly qcand = primitive_part(from_int_poly(cand));
        if (!qcand.is_zero() && qcand.degree() >= 1 && qcand.divides(remaining)) {
          result.push_back(qcand.monic());
          remaining = remaining / qcand;
          remaining = primitive_part(remaining);
          std::vector<ZPoly> next_pool;
          for (int i = 0, k = 0; i < np; ++i) {
            if (k < size && idx[k] == i) {
              ++k;
              continue;
            }
            next_pool.push_back(pool[i]);
          }
          pool = std::move(next_pool);
          progress = true;
          break;
        }
        // next subset
        int i = size - 1;
        while (i >= 0 && idx[i] == np - size + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
    if (remaining.degree() == 0) break;
  }
  if (remaining.degree() >= 1) result.push_back(remaining.monic());
  return result;
}

}  // namespace

std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& f) {
  if (f.degree() < 1) return {};
  QPoly a = poly_gcd(f, f.derivative());
  QPoly b = f / a;
  QPoly c = f.derivative() / a;
  QPoly d = c - b.derivative();
  std::vector<std::pair<QPoly, int>> out;
  int i = 1;
  while (b.degree() > 0) {
    QPoly g = poly_gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g.monic(), i);
    b = b / g;
    d = (d / g) - b.derivative();
    ++i;
  }
  return out;
}

Factorization factor_over_Q(const QPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("factor_over_Q: zero polynomial");
  if (f.degree() > 16)
    throw std::invalid_argument("factor_over_Q: supported only up to degree 16");
  Factorization out;
  out.unit = f.lead();
  if (f.degree() == 0) return out;
  for (const auto& [part, mult] : squarefree_decomposition(f)) {
    QPoly prim = primitive_part(part);
    for (const QPoly& irr : zassenhaus(prim)) out.factors.emplace_back(irr, mult);
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    for (int i = a.first.degree(); i >= 0; --i) {
      if (a.first[i] != b.first[i]) return a.first[i] < b.first[i];
    }
    return a.second < b.second;
  });
  return out;
}

bool is_irreducible_over_Q(const QPoly& f) {
  if (f.degree() < 1) return false;
  auto fac = factor_over_Q(f);
  return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

}  // namespace hopfforms

#include "hopfforms/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hopfforms {

namespace {

constexpr int kMaxConductor = 4096;

struct CycContext {
  int n = 1;
  int phi = 1;
  QPoly phi_poly;
  // x^k mod Phi_n for 0 <= k <= 2n, as coordinate vectors of length phi
  std::vector<QVec> pow_mod;
};

std::mutex g_cyc_mutex;

const QPoly& cyclotomic_polynomial_locked(int n, std::map<int, QPoly>& cache) {
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  QPoly f = x_pow_minus_one(n);
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    f = f / cyclotomic_polynomial_locked(d, cache);
  }
  return cache.emplace(n, std::move(f)).first->second;
}

const CycContext& context(int n) {
  static std::map<int, CycContext> ctx_cache;
  static std::map<int, QPoly> poly_cache;
  std::lock_guard<std::mutex> lock(g_cyc_mutex);
  auto it = ctx_cache.find(n);
  if (it != ctx_cache.end()) return it->second;

  CycContext ctx;
  ctx.n = n;
  ctx.phi_poly = cyclotomic_polynomial_locked(n, poly_cache);
  ctx.phi = ctx.phi_poly.degree();
  ctx.pow_mod.resize(2 * n + 1);
  // seed with the basis powers, then extend by multiplying with the relation
  // x^phi = -(lower terms of Phi_n)
  for (int k = 0; k <= 2 * n; ++k) {
    QVec v(ctx.phi);
    if (k < ctx.phi) {
      v[k] = Rat(1);
    } else {
      // x^k = x * x^{k-1}
      const QVec& prev = ctx.pow_mod[k - 1];
      // shift up, reduce the overflow coefficient via Phi_n
      Rat overflow = prev[ctx.phi - 1];
      for (int i = ctx.phi - 1; i >= 1; --i) v[i] = prev[i - 1];
      v[0] = Rat(0);
      if (!overflow.is_zero()) {
        for (int i = 0; i < ctx.phi; ++i) v[i] -= overflow * ctx.phi_poly[i];
      }
    }
    ctx.pow_mod[k] = std::move(v);
  }
  return ctx_cache.emplace(n, std::move(ctx)).first->second;
}

}  // namespace

const QPoly& cyclotomic_polynomial(int n) {
  if (n < 1 || n > kMaxConductor) throw std::invalid_argument("cyclotomic_polynomial: bad n");
  return context(n).phi_poly;
}

int euler_phi(int n) {
  if (n < 1) throw std::invalid_argument("euler_phi: n must be >= 1");
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

CycElem::CycElem(int conductor, QVec coords) : conductor_(conductor), coords_(std::move(coords)) {
  if (conductor_ < 1 || conductor_ > kMaxConductor)
    throw std::invalid_argument("CycElem: bad conductor");
  const int phi = context(conductor_).phi;
  if (static_cast<int>(coords_.size()) != phi)
    throw std::invalid_argument("CycElem: coordinate length must be phi(conductor)");
}

CycElem CycElem::zeta_pow(int n, long k) {
  const CycContext& ctx = context(n);
  long r = k % n;
  if (r < 0) r += n;
  return CycElem(n, ctx.pow_mod[r]);
}

bool CycElem::is_rational() const {
  for (size_t i = 1; i < coords_.size(); ++i)
    if (!coords_[i].is_zero()) return false;
  return true;
}

Rat CycElem::rational_value() const {
  if (!is_rational()) throw std::domain_error("CycElem: not rational");
  return coords_[0];
}

namespace {

// Promotes rationals (conductor 1) into the other operand's field.
std::pair<CycElem, CycElem> align(const CycElem& a, const CycElem& b) {
  if (a.conductor() == b.conductor()) return {a, b};
  if (a.conductor() == 1) return {a.embed_into(b.conductor()), b};
  if (b.conductor() == 1) return {a, b.embed_into(a.conductor())};
  throw std::invalid_argument("CycElem: mixed conductors (use embed_into)");
}

}  // namespace

CycElem operator+(const CycElem& a, const CycElem& b) {
  auto [x, y] = align(a, b);
  return CycElem(x.conductor(), qvec_add(x.coords(), y.coords()));
}

CycElem operator-(const CycElem& a, const CycElem& b) {
  auto [x, y] = align(a, b);
  return CycElem(x.conductor(), qvec_sub(x.coords(), y.coords()));
}

CycElem operator*(const CycElem& a, const CycElem& b) {
  auto [x, y] = align(a, b);
  const CycContext& ctx = context(x.conductor());
  const int phi = ctx.phi;
  // convolution, then reduce each power >= phi
  QVec conv(2 * phi - 1);
  for (int i = 0; i < phi; ++i) {
    if (x.coords()[i].is_zero()) continue;
    for (int j = 0; j < phi; ++j) {
      if (y.coords()[j].is_zero()) continue;
      conv[i + j] += x.coords()[i] * y.coords()[j];
    }
  }
  QVec out(phi);
  for (int k = 0; k < 2 * phi - 1; ++k) {
    if (conv[k].is_zero()) continue;
    if (k < phi) {
      out[k] += conv[k];
    } else {
      const QVec& red = ctx.pow_mod[k];
      for (int i = 0; i < phi; ++i) out[i] += conv[k] * red[i];
    }
  }
  return CycElem(x.conductor(), std::move(out));
}

bool operator==(const CycElem& a, const CycElem& b) {
  if (a.conductor() == b.conductor()) return a.coords() == b.coords();
  if (a.conductor() == 1 || b.conductor() == 1) {
    auto [x, y] = align(a, b);
    return x.coords() == y.coords();
  }
  return false;
}

CycElem CycElem::inv() const {
  if (is_zero()) throw std::domain_error("CycElem: inverse of zero");
  if (conductor_ == 1) return rational(coords_[0].inv());
  QPoly a{QVec(coords_)};
  auto [g, s, t] = poly_xgcd(a, cyclotomic_polynomial(conductor_), Rat(1));
  if (g.degree() != 0)
    throw std::logic_error("CycElem: gcd with Phi_n not constant");  // Phi_n irreducible
  QVec out(coords_.size());
  for (int i = 0; i <= s.degree(); ++i) out[i] = s[i];
  return CycElem(conductor_, std::move(out));
}

CycElem CycElem::galois_conjugate(long k) const {
  long r = k % conductor_;
  if (r < 0) r += conductor_;
  if (std::gcd(r, static_cast<long>(conductor_)) != 1)
    throw std::invalid_argument("CycElem: conjugation index not coprime to conductor");
  const CycContext& ctx = context(conductor_);
  QVec out(ctx.phi);
  for (int i = 0; i < ctx.phi; ++i) {
    if (coords_[i].is_zero()) continue;
    const QVec& img = ctx.pow_mod[(static_cast<long>(i) * r) % conductor_];
    for (int j = 0; j < ctx.phi; ++j) out[j] += coords_[i] * img[j];
  }
  return CycElem(conductor_, std::move(out));
}

CycElem CycElem::embed_into(int m) const {
  if (m % conductor_ != 0) throw std::invalid_argument("CycElem: conductor does not divide m");
  if (m == conductor_) return *this;
  const CycContext& ctx = context(m);
  const long step = m / conductor_;
  QVec out(ctx.phi);
  for (size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i].is_zero()) continue;
    const QVec& img = ctx.pow_mod[(static_cast<long>(i) * step) % m];
    for (int j = 0; j < ctx.phi; ++j) out[j] += coords_[i] * img[j];
  }
  return CycElem(m, std::move(out));
}

std::optional<CycElem> CycElem::contract_to(int m) const {
  if (conductor_ % m != 0) throw std::invalid_argument("CycElem: m does not divide conductor");
  if (m == conductor_) return *this;
  const int phi_m = context(m).phi;
  LinSolver solver(static_cast<int>(coords_.size()));
  for (int j = 0; j < phi_m; ++j) {
    CycElem basis_elem = CycElem::zeta_pow(m, j).embed_into(conductor_);
    solver.add(basis_elem.coords());
  }
  auto coeff = solver.express(coords_);
  if (!coeff) return std::nullopt;
  return CycElem(m, std::move(*coeff));
}

std::string CycElem::str() const {
  std::ostringstream os;
  os << "cyc(" << conductor_ << ";";
  for (size_t i = 0; i < coords_.size(); ++i) os << (i ? "," : "") << coords_[i].str();
  os << ")";
  return os.str();
}

std::vector<Poly<CycElem>> factor_cyclotomic_over(int n, int m) {
  if (n < 1 || m < 1 || n % m != 0)
    throw std::invalid_argument("factor_cyclotomic_over: need m | n");
  // units of Z/n and the subgroup fixing zeta_m
  std::vector<long> units;
  for (long k = 1; k <= n; ++k)
    if (std::gcd(k, static_cast<long>(n)) == 1) units.push_back(k % n);
  std::vector<bool> seen(n, false);
  std::vector<std::vector<long>> cosets;
  for (long u : units) {
    if (seen[u]) continue;
    // coset u * S where S = {k : k = 1 mod m}
    std::vector<long> coset;
    for (long k : units) {
      if (k % m == 1 % m) {
        long v = (u * k) % n;
        coset.push_back(v);
      }
    }
    std::sort(coset.begin(), coset.end());
    for (long v : coset) seen[v] = true;
    cosets.push_back(std::move(coset));
  }
  std::sort(cosets.begin(), cosets.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  const CycElem one = CycElem::rational(Rat(1));
  std::vector<Poly<CycElem>> factors;
  for (const auto& coset : cosets) {
    Poly<CycElem> f = Poly<CycElem>::constant(one);
    for (long k : coset) {
      Poly<CycElem> lin(std::vector<CycElem>{-CycElem::zeta_pow(n, k), one});
      f = f * lin;
    }
    // coefficients are fixed by Gal(Q(zeta_n)/Q(zeta_m)), so they contract
    std::vector<CycElem> contracted(f.degree() + 1);
    for (int i = 0; i <= f.degree(); ++i) {
      auto c = f[i].contract_to(m);
      if (!c) throw std::logic_error("factor_cyclotomic_over: coefficient not in Q(zeta_m)");
      contracted[i] = std::move(*c);
    }
    factors.emplace_back(std::move(contracted));
  }
  return factors;
}

}  // namespace hopfforms

#include "hopfforms/hopf_algebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "hopfforms/factor.hpp"

namespace hopfforms {

namespace {

using Tensor2 = std::map<std::pair<int, int>, Rat>;
using Tensor3 = std::map<std::tuple<int, int, int>, Rat>;

void tensor2_add(Tensor2& t, int j, int k, const Rat& c) {
  if (c.is_zero()) return;
  auto it = t.find({j, k});
  if (it == t.end()) {
    t.emplace(std::pair{j, k}, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

void tensor3_add(Tensor3& t, int a, int b, int c, const Rat& v) {
  if (v.is_zero()) return;
  auto key = std::tuple{a, b, c};
  auto it = t.find(key);
  if (it == t.end()) {
    t.emplace(key, v);
  } else {
    it->second += v;
    if (it->second.is_zero()) t.erase(it);
  }
}

Tensor2 comult_of(const HopfAlgebra& h, const QVec& x) {
  Tensor2 t;
  for (int i = 0; i < h.dim; ++i) {
    if (x[i].is_zero()) continue;
    for (const auto& [j, k, c] : h.comult[i]) tensor2_add(t, j, k, x[i] * c);
  }
  return t;
}

}  // namespace

QVec HopfAlgebra::multiply(const QVec& x, const QVec& y) const {
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

Rat HopfAlgebra::counit_of(const QVec& x) const {
  Rat out;
  for (int i = 0; i < dim; ++i) out += x[i] * counit[i];
  return out;
}

QVec HopfAlgebra::antipode_of(const QVec& x) const {
  QVec out(dim);
  for (int i = 0; i < dim; ++i) {
    if (x[i].is_zero()) continue;
    for (int k = 0; k < dim; ++k)
      if (!antipode[i][k].is_zero()) out[k] += x[i] * antipode[i][k];
  }
  return out;
}

AssocAlgebra HopfAlgebra::algebra() const {
  AssocAlgebra a;
  a.dim = dim;
  a.mult = mult;
  a.one = unit;
  a.basis_labels = basis_labels;
  return a;
}

HopfAxiomReport verify_hopf_axioms(const HopfAlgebra& h) {
  HopfAxiomReport r;
  AssocAlgebra a = h.algebra();
  r.associative = a.is_associative_on_basis();
  r.unital = a.is_unital();

  r.coassociative = true;
  for (int i = 0; i < h.dim && r.coassociative; ++i) {
    Tensor3 lhs, rhs;
    for (const auto& [j, k, c] : h.comult[i]) {
      for (const auto& [x, y, c2] : h.comult[j]) tensor3_add(lhs, x, y, k, c * c2);
      for (const auto& [x, y, c2] : h.comult[k]) tensor3_add(rhs, j, x, y, c * c2);
    }
    if (lhs != rhs) r.coassociative = false;
  }

  r.counital = true;
  for (int i = 0; i < h.dim && r.counital; ++i) {
    QVec left(h.dim), right(h.dim);
    for (const auto& [j, k, c] : h.comult[i]) {
      left[k] += c * h.counit[j];
      right[j] += c * h.counit[k];
    }
    QVec ei(h.dim);
    ei[i] = Rat(1);
    if (left != ei || right != ei) r.counital = false;
  }

  r.comult_algebra_map = comult_of(h, h.unit) == [&] {
    Tensor2 t;
    for (int j = 0; j < h.dim; ++j)
      for (int k = 0; k < h.dim; ++k) tensor2_add(t, j, k, h.unit[j] * h.unit[k]);
    return t;
  }();
  for (int i = 0; i < h.dim && r.comult_algebra_map; ++i) {
    for (int j = 0; j < h.dim; ++j) {
      Tensor2 lhs = comult_of(h, h.mult[i][j]);
      Tensor2 rhs;
      for (const auto& [a1, b1, c1] : h.comult[i])
        for (const auto& [a2, b2, c2] : h.comult[j]) {
          const QVec& pa = h.mult[a1][a2];
          const QVec& pb = h.mult[b1][b2];
          Rat c = c1 * c2;
          for (int x = 0; x < h.dim; ++x) {
            if (pa[x].is_zero()) continue;
            for (int y = 0; y < h.dim; ++y)
              if (!pb[y].is_zero()) tensor2_add(rhs, x, y, c * pa[x] * pb[y]);
          }
        }
      if (lhs != rhs) {
        r.comult_algebra_map = false;
        break;
      }
    }
  }

  r.counit_algebra_map = h.counit_of(h.unit).is_one();
  for (int i = 0; i < h.dim && r.counit_algebra_map; ++i)
    for (int j = 0; j < h.dim; ++j)
      if (h.counit_of(h.mult[i][j]) != h.counit[i] * h.counit[j]) {
        r.counit_algebra_map = false;
        break;
      }

  r.antipode_law = true;
  for (int i = 0; i < h.dim && r.antipode_law; ++i) {
    QVec left(h.dim), right(h.dim);
    for (const auto& [j, k, c] : h.comult[i]) {
      QVec ej(h.dim), ek(h.dim);
      ej[j] = Rat(1);
      ek[k] = Rat(1);
      QVec l = h.multiply(h.antipode_of(ej), ek);
      QVec r2 = h.multiply(ej, h.antipode_of(ek));
      for (int x = 0; x < h.dim; ++x) {
        left[x] += c * l[x];
        right[x] += c * r2[x];
      }
    }
    QVec want(h.dim);
    for (int x = 0; x < h.dim; ++x) want[x] = h.counit[i] * h.unit[x];
    if (left != want || right != want) r.antipode_law = false;
  }
  return r;
}

HopfAlgebra group_algebra(const FiniteGroup& g) {
  HopfAlgebra h;
  const int n = g.size();
  h.dim = n;
  h.mult.assign(n, std::vector<QVec>(n, QVec(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h.mult[i][j][g.mult(i, j)] = Rat(1);
  h.unit = QVec(n);
  h.unit[0] = Rat(1);
  h.comult.resize(n);
  for (int i = 0; i < n; ++i) h.comult[i].emplace_back(i, i, Rat(1));
  h.counit = QVec(n, Rat(1));
  h.antipode.assign(n, QVec(n));
  for (int i = 0; i < n; ++i) h.antipode[i][g.inv(i)] = Rat(1);
  for (int i = 0; i < n; ++i) h.basis_labels.push_back(g.label(i));
  h.desc = "Q[" + g.name() + "]";
  return h;
}

HopfAlgebra dual_of_group_algebra(const FiniteGroup& g) {
  HopfAlgebra h;
  const int n = g.size();
  h.dim = n;
  h.mult.assign(n, std::vector<QVec>(n, QVec(n)));
  for (int i = 0; i < n; ++i) h.mult[i][i][i] = Rat(1);
  h.unit = QVec(n, Rat(1));
  h.comult.resize(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) h.comult[g.mult(a, b)].emplace_back(a, b, Rat(1));
  h.counit = QVec(n);
  h.counit[0] = Rat(1);
  h.antipode.assign(n, QVec(n));
  for (int i = 0; i < n; ++i) h.antipode[i][g.inv(i)] = Rat(1);
  for (int i = 0; i < n; ++i) h.basis_labels.push_back("p[" + g.label(i) + "]");
  h.desc = "(Q[" + g.name() + "])*";
  return h;
}

AssocAlgebra dual_algebra(const HopfAlgebra& h) {
  AssocAlgebra a;
  a.dim = h.dim;
  a.mult.assign(h.dim, std::vector<QVec>(h.dim, QVec(h.dim)));
  for (int i = 0; i < h.dim; ++i)
    for (const auto& [j, k, c] : h.comult[i]) a.mult[j][k][i] += c;
  a.one = h.counit;
  return a;
}

namespace {

// Minimal polynomial of x over the unital block with unit e: the monic m of
// least degree with m(x) = 0, powers taken inside the block (x^0 = e).
QPoly block_min_poly(const AssocAlgebra& a, const QVec& e, const QVec& x,
                     std::vector<QVec>& powers_out) {
  powers_out.assign(1, e);
  LinSolver ls(a.dim);
  ls.add(e);
  QVec cur = a.multiply(e, x);
  while (true) {
    if (auto c = ls.express(cur)) {
      QVec coeffs(powers_out.size() + 1);
      for (size_t i = 0; i < powers_out.size(); ++i) coeffs[i] = -(*c)[i];
      coeffs.back() = Rat(1);
      return QPoly(std::move(coeffs));
    }
    ls.add(cur);
    powers_out.push_back(cur);
    cur = a.multiply(cur, x);
  }
}

// p evaluated at x inside the block with unit e, using precomputed powers
// (extended as needed).
QVec block_eval(const AssocAlgebra& a, const QVec& e, const QVec& x, const QPoly& p,
                std::vector<QVec>& powers) {
  while (static_cast<int>(powers.size()) <= p.degree())
    powers.push_back(a.multiply(powers.back(), x));
  QVec out(a.dim);
  for (int i = 0; i <= p.degree(); ++i)
    if (!p[i].is_zero())
      for (int k = 0; k < a.dim; ++k) out[k] += p[i] * powers[i][k];
  (void)e;
  return out;
}

// Splits a commutative algebra into idempotents fine enough that every basis
// element acts on each piece with primary minimal polynomial (for semisimple
// input: the primitive idempotents). Refines by factoring the squarefree part
// of minimal polynomials, one basis direction at a time.
std::vector<QVec> refine_idempotents(const AssocAlgebra& a) {
  std::vector<QVec> parts{a.one};
  for (int b = 0; b < a.dim; ++b) {
    QVec eb(a.dim);
    eb[b] = Rat(1);
    std::vector<QVec> next;
    for (const QVec& e : parts) {
      QVec x = a.multiply(e, eb);
      std::vector<QVec> powers;
      QPoly m = block_min_poly(a, e, x, powers);
      QPoly sf(QVec{Rat(1)});
      for (const auto& [f, mult] : squarefree_decomposition(m)) sf = sf * f;
      auto fac = factor_over_Q(sf);
      if (fac.factors.size() <= 1) {
        next.push_back(e);
        continue;
      }
      for (const auto& [f, mult] : fac.factors) {
        // Idempotent for the f-primary part: u*(sf/f) with u = (sf/f)^{-1} mod f,
        // then stabilized by squaring to absorb nilpotents when m is not squarefree.
        QPoly cof = sf / f;
        auto [g, u, v] = poly_xgcd(cof, f, Rat(1));
        if (g.degree() != 0) throw std::logic_error("grouplikes: factors not coprime");
        QVec ef = block_eval(a, e, x, u * cof, powers);
        QVec prev;
        do {
          prev = ef;
          ef = a.multiply(ef, ef);
        } while (ef != prev && !qvec_is_zero(ef));
        if (qvec_is_zero(ef)) throw std::logic_error("grouplikes: idempotent collapsed");
        next.push_back(std::move(ef));
      }
    }
    parts = std::move(next);
  }
  return parts;
}

}  // namespace

std::vector<QVec> grouplikes(const HopfAlgebra& h) {
  AssocAlgebra dual = dual_algebra(h);

  // Two-sided ideal generated by commutators; algebra homs to Q kill it.
  RowEchelon ideal(true);
  std::vector<QVec> work;
  auto push = [&](QVec v) {
    if (ideal.insert_dense(v)) work.push_back(std::move(v));
  };
  for (int i = 0; i < dual.dim; ++i)
    for (int j = i + 1; j < dual.dim; ++j)
      push(qvec_sub(dual.mult[i][j], dual.mult[j][i]));
  for (size_t w = 0; w < work.size(); ++w) {
    QVec v = work[w];
    for (int k = 0; k < dual.dim; ++k) {
      QVec ek(dual.dim);
      ek[k] = Rat(1);
      push(dual.multiply(ek, v));
      push(dual.multiply(v, ek));
    }
  }

  // Commutative quotient in the non-pivot coordinates.
  auto pivots = ideal.pivots();
  std::set<int> pivset(pivots.begin(), pivots.end());
  std::vector<int> coords;
  for (int c = 0; c < dual.dim; ++c)
    if (!pivset.count(c)) coords.push_back(c);
  const int q = static_cast<int>(coords.size());
  std::map<int, int> pos;
  for (int i = 0; i < q; ++i) pos[coords[i]] = i;
  auto project = [&](const QVec& v) {
    SparseVec r = ideal.reduce(SparseVec::from_dense(v));
    QVec out(q);
    for (const auto& [c, val] : r.e) out[pos.at(c)] = val;
    return out;
  };
  AssocAlgebra quot;
  quot.dim = q;
  quot.one = project(dual.one);
  quot.mult.assign(q, std::vector<QVec>(q));
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) quot.mult[a][b] = project(dual.mult[coords[a]][coords[b]]);

  // Each algebra hom quot -> Q lives on one refined block: every element of
  // the block must act there by a rational scalar (root of a linear primary
  // minimal polynomial). Candidates are verified group-like exactly.
  std::vector<QVec> out;
  for (const QVec& e : refine_idempotents(quot)) {
    QVec x(h.dim);
    bool hom = true;
    for (int j = 0; j < h.dim && hom; ++j) {
      QVec dj(h.dim);
      dj[j] = Rat(1);
      QVec y = quot.multiply(e, project(dj));
      // y = phi(delta_j) e + nilpotent; the scalar is the root of the
      // squarefree part of the minimal polynomial when that part is linear.
      std::vector<QVec> powers;
      QPoly m = block_min_poly(quot, e, y, powers);
      QPoly sf(QVec{Rat(1)});
      for (const auto& [f, mult] : squarefree_decomposition(m)) sf = sf * f;
      if (sf.degree() != 1)
        hom = false;
      else
        x[j] = -sf[0] / sf[1];
    }
    if (!hom) continue;
    Tensor2 delta = comult_of(h, x);
    Tensor2 want;
    for (int j = 0; j < h.dim; ++j)
      for (int k = 0; k < h.dim; ++k) tensor2_add(want, j, k, x[j] * x[k]);
    if (delta == want && h.counit_of(x).is_one()) out.push_back(std::move(x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

HopfAlgebra dual_cyclic(int n) {
  HopfAlgebra h = dual_of_group_algebra(FiniteGroup::cyclic(n));
  h.basis_labels.clear();
  for (int i = 0; i < n; ++i) h.basis_labels.push_back("p" + std::to_string(i));
  h.desc = "(Q[C" + std::to_string(n) + "])*";
  return h;
}

HopfAlgebra dual_hopf(const HopfAlgebra& h) {
  HopfAlgebra d;
  d.dim = h.dim;
  d.mult.assign(h.dim, std::vector<QVec>(h.dim, QVec(h.dim)));
  for (int k = 0; k < h.dim; ++k)
    for (const auto& [i, j, c] : h.comult[k]) d.mult[i][j][k] += c;
  d.unit = h.counit;
  d.comult.resize(h.dim);
  for (int i = 0; i < h.dim; ++i)
    for (int j = 0; j < h.dim; ++j)
      for (int k = 0; k < h.dim; ++k)
        if (!h.mult[i][j][k].is_zero()) d.comult[k].emplace_back(i, j, h.mult[i][j][k]);
  d.counit = h.unit;
  d.antipode.assign(h.dim, QVec(h.dim));
  for (int j = 0; j < h.dim; ++j)
    for (int k = 0; k < h.dim; ++k) d.antipode[k][j] = h.antipode[j][k];
  for (int i = 0; i < h.dim; ++i) d.basis_labels.push_back("d" + std::to_string(i));
  d.desc = "(" + h.desc + ")*";
  return d;
}

GrouplikeGroup grouplike_group(const HopfAlgebra& h) {
  std::vector<QVec> gl = grouplikes(h);
  const int n = static_cast<int>(gl.size());
  GrouplikeGroup out;
  // Identity first, remainder in sorted order.
  int id = -1;
  for (int i = 0; i < n; ++i)
    if (gl[i] == h.unit) id = i;
  if (id < 0) throw std::logic_error("grouplike_group: unit is not among the group-likes");
  std::swap(gl[0], gl[id]);
  std::sort(gl.begin() + 1, gl.end());
  std::map<QVec, int> index;
  for (int i = 0; i < n; ++i) index[gl[i]] = i;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto it = index.find(h.multiply(gl[a], gl[b]));
      if (it == index.end())
        throw std::logic_error("grouplike_group: group-likes not closed under product");
      table[a][b] = it->second;
    }
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
  out.group = FiniteGroup::from_table(std::move(table), "G(H)", std::move(labels));
  out.elements = std::move(gl);
  return out;
}

std::optional<std::vector<QVec>> matches_group_algebra(const HopfAlgebra& h,
                                                       const FiniteGroup& n) {
  GrouplikeGroup gg = grouplike_group(h);
  if (gg.group.size() != n.size()) return std::nullopt;
  auto iso = find_isomorphism(n, gg.group);
  if (!iso) return std::nullopt;
  std::vector<QVec> images(n.size());
  for (int a = 0; a < n.size(); ++a) images[a] = gg.elements[(*iso)[a]];
  // Group-likes are linearly independent; spanning makes the extension a
  // Hopf isomorphism onto h.
  RowEchelon ech(false);
  for (const QVec& v : images) ech.insert_dense(v);
  if (ech.rank() != h.dim) return std::nullopt;
  return images;
}

bool matches_dual_cyclic(const HopfAlgebra& h) {
  return matches_group_algebra(dual_hopf(h), FiniteGroup::cyclic(h.dim)).has_value();
}

HopfAlgebra change_basis(const HopfAlgebra& h, const std::vector<QVec>& basis,
                         std::vector<std::string> labels) {
  const int n = h.dim;
  if (static_cast<int>(basis.size()) != n)
    throw std::invalid_argument("change_basis: basis size != dim");
  LinSolver solver(n);
  for (const QVec& b : basis) solver.add(b);
  if (solver.rank() != n) throw std::invalid_argument("change_basis: vectors not a basis");
  auto expr = [&](const QVec& v) { return *solver.express(v); };

  // Old coordinates of each standard vector in the new basis.
  std::vector<QVec> to_new(n);
  for (int j = 0; j < n; ++j) {
    QVec ej(n);
    ej[j] = Rat(1);
    to_new[j] = expr(ej);
  }

  HopfAlgebra out;
  out.dim = n;
  out.unit = expr(h.unit);
  out.mult.assign(n, std::vector<QVec>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.mult[i][j] = expr(h.multiply(basis[i], basis[j]));
  out.comult.resize(n);
  for (int i = 0; i < n; ++i) {
    Tensor2 t;
    for (int a = 0; a < n; ++a) {
      if (basis[i][a].is_zero()) continue;
      for (const auto& [j, k, c] : h.comult[a]) {
        Rat w = basis[i][a] * c;
        for (int x = 0; x < n; ++x) {
          if (to_new[j][x].is_zero()) continue;
          for (int y = 0; y < n; ++y)
            if (!to_new[k][y].is_zero()) tensor2_add(t, x, y, w * to_new[j][x] * to_new[k][y]);
        }
      }
    }
    for (const auto& [jk, c] : t) out.comult[i].emplace_back(jk.first, jk.second, c);
  }
  out.counit.resize(n);
  for (int i = 0; i < n; ++i) out.counit[i] = h.counit_of(basis[i]);
  out.antipode.resize(n);
  for (int i = 0; i < n; ++i) out.antipode[i] = expr(h.antipode_of(basis[i]));
  if (labels.empty())
    for (int i = 0; i < n; ++i) labels.push_back("u" + std::to_string(i));
  out.basis_labels = std::move(labels);
  out.desc = h.desc;
  return out;
}

CharacterIso character_iso(int n) {
  CharacterIso out;
  out.n = n;
  const Rat inv_n(1, n);
  out.images.assign(n, std::vector<CycElem>(n));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      out.images[j][i] = inv_n * CycElem::zeta_pow(n, -static_cast<long>(i) * j);

  auto mul = [&](const std::vector<CycElem>& x, const std::vector<CycElem>& y) {
    // Group-ring product over C_n with coefficients in Q(zeta_n).
    std::vector<CycElem> out_(n);
    for (int a = 0; a < n; ++a) {
      if (x[a].is_zero()) continue;
      for (int b = 0; b < n; ++b) {
        if (y[b].is_zero()) continue;
        out_[(a + b) % n] = out_[(a + b) % n] + x[a] * y[b];
      }
    }
    return out_;
  };
  out.orthogonal_idempotents = true;
  for (int j = 0; j < n && out.orthogonal_idempotents; ++j)
    for (int k = 0; k < n; ++k) {
      auto prod = mul(out.images[j], out.images[k]);
      const auto& want =
          j == k ? out.images[j] : std::vector<CycElem>(n);
      if (prod != want) {
        out.orthogonal_idempotents = false;
        break;
      }
    }
  {
    std::vector<CycElem> sum(n);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) sum[i] = sum[i] + out.images[j][i];
    std::vector<CycElem> one(n);
    one[0] = CycElem::rational(Rat(1));
    out.sum_is_one = sum == one;
  }
  // Delta(hat p_k) = sum_{i+j=k} hat p_i (x) hat p_j, where Delta is L-linear
  // with sigma^t -> sigma^t (x) sigma^t: compare coefficients at (t, t').
  out.comult_intertwines = true;
  for (int k = 0; k < n && out.comult_intertwines; ++k)
    for (int t = 0; t < n && out.comult_intertwines; ++t)
      for (int t2 = 0; t2 < n; ++t2) {
        CycElem lhs = t == t2 ? out.images[k][t] : CycElem();
        CycElem rhs;
        for (int i = 0; i < n; ++i) {
          int j = ((k - i) % n + n) % n;
          rhs = rhs + out.images[i][t] * out.images[j][t2];
        }
        if (lhs != rhs) {
          out.comult_intertwines = false;
          break;
        }
      }
  return out;
}

KohlIdempotents kohl_idempotents(int p, int m) {
  if (p < 3 || m < 1) throw std::invalid_argument("kohl_idempotents: need odd p, m >= 1");
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument("kohl_idempotents: p not prime");
  KohlIdempotents out;
  out.p = p;
  out.m = m;
  out.n = 1;
  for (int i = 0; i < m; ++i) out.n *= p;

  CharacterIso ci = character_iso(out.n);
  out.elems = std::move(ci.images);
  out.orthogonal_idempotents = ci.orthogonal_idempotents;
  out.sum_is_one = ci.sum_is_one;

  out.fixed_under_units = true;
  for (long u = 1; u < out.n && out.fixed_under_units; ++u) {
    if (std::gcd(u, static_cast<long>(out.n)) != 1) continue;
    for (int j = 0; j < out.n && out.fixed_under_units; ++j)
      for (int i = 0; i < out.n; ++i)
        if (out.elems[j][i].galois_conjugate(u) != out.elems[j][(u * i) % out.n]) {
          out.fixed_under_units = false;
          break;
        }
  }
  return out;
}

}  // namespace hopfforms

#include "hopfforms/theta.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>
#include <utility>

namespace hopfforms {

namespace {

std::vector<int> identity_map(int n) {
  std::vector<int> m(n);
  for (int i = 0; i < n; ++i) m[i] = i;
  return m;
}

// v = q * one for a rational q, if possible.
std::optional<Rat> rational_multiple_of_one(const QVec& v, const QVec& one) {
  int pivot = -1;
  for (size_t a = 0; a < one.size(); ++a)
    if (!one[a].is_zero()) {
      pivot = static_cast<int>(a);
      break;
    }
  if (pivot < 0) return std::nullopt;
  Rat q = v[pivot] / one[pivot];
  for (size_t a = 0; a < one.size(); ++a)
    if (v[a] != q * one[a]) return std::nullopt;
  return q;
}

// Structural equality of Hopf presentations (labels and desc ignored);
// comultiplications are compared as coefficient maps.
bool hopf_presentations_equal(const HopfAlgebra& a, const HopfAlgebra& b) {
  if (a.dim != b.dim) return false;
  if (a.mult != b.mult || a.unit != b.unit || a.counit != b.counit || a.antipode != b.antipode)
    return false;
  auto as_map = [](const HopfAlgebra& h) {
    std::vector<std::map<std::pair<int, int>, Rat>> m(h.dim);
    for (int i = 0; i < h.dim; ++i) {
      for (const auto& [j, k, c] : h.comult[i]) {
        if (c.is_zero()) continue;
        auto key = std::make_pair(j, k);
        auto it = m[i].find(key);
        if (it == m[i].end())
          m[i].emplace(key, c);
        else if ((it->second += c).is_zero())
          m[i].erase(it);
      }
    }
    return m;
  };
  return as_map(a) == as_map(b);
}

std::vector<std::string> ambient_labels(const GaloisAlgebra& l, const FiniteGroup& n) {
  const int ld = l.alg.dim;
  std::vector<std::string> out(static_cast<size_t>(n.size()) * ld);
  for (int e = 0; e < n.size(); ++e)
    for (int a = 0; a < ld; ++a) {
      std::string nl = e == 0 ? "" : n.label(e);
      std::string ll = (a < static_cast<int>(l.basis_labels.size()) && l.basis_labels[a] != "1")
                           ? l.basis_labels[a]
                           : "";
      std::string s;
      if (ll.empty() && nl.empty())
        s = "1";
      else if (ll.empty())
        s = nl;
      else if (nl.empty())
        s = ll;
      else
        s = ll + "*" + nl;
      out[static_cast<size_t>(e) * ld + a] = std::move(s);
    }
  return out;
}

}  // namespace

QVec FixedRing::ambient_multiply(const QVec& x, const QVec& y) const {
  const int ld = base.alg.dim, nn = n.size();
  QVec out(static_cast<size_t>(nn) * ld);
  for (int e1 = 0; e1 < nn; ++e1)
    for (int l1 = 0; l1 < ld; ++l1) {
      const Rat& a = x[static_cast<size_t>(e1) * ld + l1];
      if (a.is_zero()) continue;
      for (int e2 = 0; e2 < nn; ++e2) {
        const size_t tgt = static_cast<size_t>(n.mult(e1, e2)) * ld;
        for (int l2 = 0; l2 < ld; ++l2) {
          const Rat& b = y[static_cast<size_t>(e2) * ld + l2];
          if (b.is_zero()) continue;
          const Rat ab = a * b;
          const QVec& prod = base.alg.mult[l1][l2];
          for (int k = 0; k < ld; ++k)
            if (!prod[k].is_zero()) out[tgt + k] += ab * prod[k];
        }
      }
    }
  return out;
}

QVec FixedRing::ambient_apply(int f, const QVec& x) const {
  const int ld = base.alg.dim, nn = n.size();
  QVec out(static_cast<size_t>(nn) * ld);
  const auto& cols = base.action[f];
  const auto& na = n_action[f];
  for (int e = 0; e < nn; ++e) {
    const size_t src = static_cast<size_t>(e) * ld;
    const size_t dst = static_cast<size_t>(na[e]) * ld;
    for (int a = 0; a < ld; ++a) {
      const Rat& c = x[src + a];
      if (c.is_zero()) continue;
      const QVec& col = cols[a];
      for (int k = 0; k < ld; ++k)
        if (!col[k].is_zero()) out[dst + k] += c * col[k];
    }
  }
  return out;
}

QVec FixedRing::to_ambient(const QVec& coords) const {
  QVec out(static_cast<size_t>(n.size()) * base.alg.dim);
  for (size_t i = 0; i < coords.size(); ++i) {
    if (coords[i].is_zero()) continue;
    for (size_t a = 0; a < out.size(); ++a)
      if (!basis[i][a].is_zero()) out[a] += coords[i] * basis[i][a];
  }
  return out;
}

FixedRing fixed_ring(const GaloisAlgebra& l, const FiniteGroup& n,
                     const std::vector<std::vector<int>>& n_action, int workers,
                     std::string desc) {
  const int nf = l.group.size(), ld = l.alg.dim, nn = n.size();
  const int dim = nn * ld;
  if (static_cast<int>(n_action.size()) != nf)
    throw std::invalid_argument("fixed_ring: need one N-map per acting element");
  for (int f = 0; f < nf; ++f) {
    const auto& m = n_action[f];
    if (static_cast<int>(m.size()) != nn)
      throw std::invalid_argument("fixed_ring: N-map has wrong size");
    std::vector<bool> seen(nn, false);
    for (int x : m) {
      if (x < 0 || x >= nn || seen[x])
        throw std::invalid_argument("fixed_ring: N-map is not a bijection");
      seen[x] = true;
    }
    for (int a = 0; a < nn; ++a)
      for (int b = 0; b < nn; ++b)
        if (m[n.mult(a, b)] != n.mult(m[a], m[b]))
          throw std::invalid_argument("fixed_ring: N-map is not an automorphism");
  }
  for (int f = 0; f < nf; ++f)
    for (int g = 0; g < nf; ++g) {
      const int fg = l.group.mult(f, g);
      for (int x = 0; x < nn; ++x)
        if (n_action[fg][x] != n_action[f][n_action[g][x]])
          throw std::invalid_argument("fixed_ring: N-action is not a left action");
    }

  FixedRing out;
  out.base = l;
  out.n = n;
  out.n_action = n_action;
  out.desc = std::move(desc);

  // Nullspace of the stacked (M_f - I) over a generating set; each generator's
  // rows are assembled independently (sharded across workers), the solve is
  // single-threaded and the row order is generator order either way.
  const std::vector<int> gens = generating_set(l.group);
  std::vector<std::vector<SparseVec>> per_gen(gens.size());
  auto assemble = [&](size_t gi) {
    const int f = gens[gi];
    std::vector<std::tuple<int, int, Rat>> trips;
    for (int e = 0; e < nn; ++e) {
      const int te = n_action[f][e];
      for (int a = 0; a < ld; ++a) {
        const int col = e * ld + a;
        const QVec& img = l.action[f][a];
        for (int k = 0; k < ld; ++k)
          if (!img[k].is_zero()) trips.emplace_back(te * ld + k, col, img[k]);
        trips.emplace_back(col, col, Rat(-1));
      }
    }
    per_gen[gi] = rows_from_triplets(dim, trips);
  };
  if (workers <= 1 || gens.size() <= 1) {
    for (size_t gi = 0; gi < gens.size(); ++gi) assemble(gi);
  } else {
    const size_t nt = std::min<size_t>(workers, gens.size());
    std::vector<std::thread> pool;
    for (size_t t = 0; t < nt; ++t)
      pool.emplace_back([&, t] {
        for (size_t gi = t; gi < gens.size(); gi += nt) assemble(gi);
      });
    for (auto& th : pool) th.join();
  }
  std::vector<SparseVec> rows;
  for (auto& r : per_gen)
    for (auto& v : r) rows.push_back(std::move(v));
  out.basis = nullspace(rows, dim);

  const int k = static_cast<int>(out.basis.size());
  out.dim_ok = k == nn;
  out.fixed_ok = true;
  for (int f = 0; f < nf && out.fixed_ok; ++f)
    for (const QVec& b : out.basis)
      if (out.ambient_apply(f, b) != b) {
        out.fixed_ok = false;
        break;
      }

  // Scalar multiples e_a * b_j; full rank certifies that L (x) H -> L[N] is
  // onto, and the same solver drives the comultiplication expansion below.
  LinSolver lform(dim);
  for (int j = 0; j < k; ++j)
    for (int a = 0; a < ld; ++a) {
      QVec w(dim);
      for (int e = 0; e < nn; ++e)
        for (int b = 0; b < ld; ++b) {
          const Rat& c = out.basis[j][static_cast<size_t>(e) * ld + b];
          if (c.is_zero()) continue;
          const QVec& prod = l.alg.mult[a][b];
          for (int t = 0; t < ld; ++t)
            if (!prod[t].is_zero()) w[static_cast<size_t>(e) * ld + t] += c * prod[t];
        }
      lform.add(w);
    }
  out.form_rank = lform.rank();
  out.form_ok = out.form_rank == dim;

  if (!(out.dim_ok && out.fixed_ok && out.form_ok)) return out;

  LinSolver memb(dim);
  for (const QVec& b : out.basis) memb.add(b);
  auto in_basis = [&](const QVec& v) {
    auto c = memb.express(v);
    if (!c) throw std::logic_error("fixed_ring: product left the fixed ring");
    return *c;
  };

  HopfAlgebra h;
  h.dim = k;
  h.mult.assign(k, std::vector<QVec>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      h.mult[i][j] = in_basis(out.ambient_multiply(out.basis[i], out.basis[j]));
  {
    QVec one(dim);
    for (int a = 0; a < ld; ++a) one[a] = l.alg.one[a];
    h.unit = in_basis(one);
  }
  h.counit.resize(k);
  for (int i = 0; i < k; ++i) {
    QVec s(ld);
    for (int e = 0; e < nn; ++e)
      for (int a = 0; a < ld; ++a) s[a] += out.basis[i][static_cast<size_t>(e) * ld + a];
    auto q = rational_multiple_of_one(s, l.alg.one);
    if (!q) throw std::logic_error("fixed_ring: counit is not rational");
    h.counit[i] = *q;
  }
  for (int i = 0; i < k; ++i) {
    QVec y(dim);
    for (int e = 0; e < nn; ++e)
      for (int a = 0; a < ld; ++a)
        y[static_cast<size_t>(n.inv(e)) * ld + a] = out.basis[i][static_cast<size_t>(e) * ld + a];
    h.antipode.push_back(in_basis(y));
  }

  // Comultiplication through the form property: {b_i} is an L-basis of L[N],
  // so Delta(b_m) = sum_eta x^m_eta (eta (x) eta) determines rational c_ij
  // with Delta(b_m) = sum c_ij b_i (x) b_j by two rounds of L-expansion.
  // Expanding y = sum_{i,a} mu_{i,a} e_a b_i gives L-coefficients
  // s_i = sum_a mu_{i,a} e_a.
  auto expand_L = [&](const QVec& y) {
    auto mu = lform.express(y);
    if (!mu) throw std::logic_error("fixed_ring: scalar-extension expansion failed");
    std::vector<QVec> s(k, QVec(ld));
    for (int i = 0; i < k; ++i)
      for (int a = 0; a < ld; ++a) s[i][a] = (*mu)[static_cast<size_t>(i) * ld + a];
    return s;
  };
  for (int m = 0; m < k; ++m) {
    // Block mask of b_m at eta': Y = x^m_{eta'} eta' = sum_i s_i(eta') b_i.
    std::vector<std::vector<QVec>> s(k, std::vector<QVec>(nn));
    for (int ep = 0; ep < nn; ++ep) {
      QVec y(dim);
      bool nonzero = false;
      for (int a = 0; a < ld; ++a) {
        y[static_cast<size_t>(ep) * ld + a] = out.basis[m][static_cast<size_t>(ep) * ld + a];
        nonzero = nonzero || !y[static_cast<size_t>(ep) * ld + a].is_zero();
      }
      if (!nonzero) {
        for (int i = 0; i < k; ++i) s[i][ep] = QVec(ld);
        continue;
      }
      auto si = expand_L(y);
      for (int i = 0; i < k; ++i) s[i][ep] = std::move(si[i]);
    }
    // Reassembled Z_i = sum_eta' s_i(eta') eta' = sum_j c_ij b_j with c rational.
    std::vector<std::tuple<int, int, Rat>> triples;
    for (int i = 0; i < k; ++i) {
      QVec z(dim);
      bool nonzero = false;
      for (int ep = 0; ep < nn; ++ep)
        for (int a = 0; a < ld; ++a) {
          z[static_cast<size_t>(ep) * ld + a] = s[i][ep][a];
          nonzero = nonzero || !s[i][ep][a].is_zero();
        }
      if (!nonzero) continue;
      auto lam = expand_L(z);
      for (int j = 0; j < k; ++j) {
        auto q = rational_multiple_of_one(lam[j], l.alg.one);
        if (!q)
          throw std::logic_error("fixed_ring: comultiplication did not restrict rationally");
        if (!q->is_zero()) triples.emplace_back(i, j, *q);
      }
    }
    h.comult.push_back(std::move(triples));
  }

  const auto amb = ambient_labels(l, n);
  for (int i = 0; i < k; ++i) h.basis_labels.push_back(linear_combo_label(out.basis[i], amb));
  h.desc = out.desc;
  out.hopf = std::move(h);
  return out;
}

FixedRing theta(const GaloisAlgebra& l, const FiniteGroup& n,
                const std::vector<std::vector<int>>& embed, int workers) {
  std::set<std::vector<int>> distinct(embed.begin(), embed.end());
  if (distinct.size() != embed.size())
    throw std::invalid_argument("theta: the map into Aut(N) is not injective");
  std::string d = "Theta(" + (l.desc.empty() ? std::string("L") : l.desc) + ")";
  return fixed_ring(l, n, embed, workers, std::move(d));
}

std::vector<std::vector<int>> residue_embed(const FiniteGroup& units, int n) {
  std::vector<int> residues;
  for (int a = 1; a < n; ++a)
    if (std::gcd(a, n) == 1) residues.push_back(a);
  if (static_cast<int>(residues.size()) != units.size())
    throw std::invalid_argument("residue_embed: group is not the unit group mod n");
  for (size_t i = 0; i < residues.size(); ++i)
    if (units.label(static_cast<int>(i)) != std::to_string(residues[i]))
      throw std::invalid_argument("residue_embed: group is not the unit group mod n");
  std::vector<std::vector<int>> out;
  for (long r : residues) {
    std::vector<int> m(n);
    for (int x = 0; x < n; ++x) m[x] = static_cast<int>((r * x) % n);
    out.push_back(std::move(m));
  }
  return out;
}

FixedRing descend(const GaloisAlgebra& e, const RegularSubgroup& n, int workers) {
  const auto lambda = left_regular_rep(e.group);
  const int ng = e.group.size(), nn = n.model.size();
  std::vector<std::vector<int>> act(ng, std::vector<int>(nn));
  for (int g = 0; g < ng; ++g) {
    const Perm inv = lambda[g].inverse();
    for (int i = 0; i < nn; ++i) {
      const int idx = n.index_of(lambda[g] * n.elements[i] * inv);
      if (idx < 0) throw std::invalid_argument("descend: subgroup not normalized by lambda(G)");
      act[g][i] = idx;
    }
  }
  std::string d = "(" + (e.desc.empty() ? std::string("E") : e.desc) + "[" + n.type + "])^" +
                  e.group.name();
  return fixed_ring(e, n.model, act, workers, std::move(d));
}

QVec hopf_act(const FixedRing& h, const RegularSubgroup& n, const QVec& h_coords, const QVec& x) {
  const int ld = h.base.alg.dim, nn = h.n.size();
  const QVec amb = h.to_ambient(h_coords);
  QVec out(ld);
  for (int eta = 0; eta < nn; ++eta) {
    QVec r(ld);
    bool nonzero = false;
    for (int a = 0; a < ld; ++a) {
      r[a] = amb[static_cast<size_t>(eta) * ld + a];
      nonzero = nonzero || !r[a].is_zero();
    }
    if (!nonzero) continue;
    const int g = n.elements[eta].inverse()(0);
    out = qvec_add(out, h.base.alg.multiply(r, h.base.apply(g, x)));
  }
  return out;
}

HopfActionCheck hopf_action(const FixedRing& h, const RegularSubgroup& n) {
  HopfActionCheck out;
  const int ld = h.base.alg.dim;
  const int k = static_cast<int>(h.basis.size());
  for (int m = 0; m < k; ++m) {
    QVec coords(k);
    coords[m] = Rat(1);
    std::vector<QVec> cols(ld);
    for (int b = 0; b < ld; ++b) {
      QVec x(ld);
      x[b] = Rat(1);
      cols[b] = hopf_act(h, n, coords, x);
    }
    out.action.push_back(std::move(cols));
  }

  // 1_H acts as the identity on E.
  out.unit_acts_as_identity = true;
  for (int b = 0; b < ld && out.unit_acts_as_identity; ++b) {
    QVec img(ld);
    for (int m = 0; m < k; ++m)
      if (!h.hopf.unit[m].is_zero())
        img = qvec_add(img, qvec_scale(h.hopf.unit[m], out.action[m][b]));
    QVec expect(ld);
    expect[b] = Rat(1);
    out.unit_acts_as_identity = img == expect;
  }

  // h . 1 = eps(h) 1.
  out.counit_on_one = true;
  for (int m = 0; m < k && out.counit_on_one; ++m) {
    QVec coords(k);
    coords[m] = Rat(1);
    out.counit_on_one = hopf_act(h, n, coords, h.base.alg.one) ==
                        qvec_scale(h.hopf.counit[m], h.base.alg.one);
  }

  // h . (xy) = sum (h_(1) . x)(h_(2) . y) on basis triples.
  out.measures_products = true;
  for (int m = 0; m < k && out.measures_products; ++m)
    for (int a = 0; a < ld && out.measures_products; ++a)
      for (int b = 0; b < ld; ++b) {
        QVec ea(ld), eb(ld);
        ea[a] = Rat(1);
        eb[b] = Rat(1);
        QVec coords(k);
        coords[m] = Rat(1);
        const QVec lhs = hopf_act(h, n, coords, h.base.alg.multiply(ea, eb));
        QVec rhs(ld);
        for (const auto& [i, j, c] : h.hopf.comult[m])
          rhs = qvec_add(rhs,
                         qvec_scale(c, h.base.alg.multiply(out.action[i][a], out.action[j][b])));
        if (lhs != rhs) {
          out.measures_products = false;
          break;
        }
      }

  // j : E (x) H -> End_Q(E), j(x (x) h)(y) = x (h . y), flattened row-major.
  std::vector<SparseVec> jrows;
  for (int a = 0; a < ld; ++a)
    for (int m = 0; m < k; ++m) {
      QVec flat(static_cast<size_t>(ld) * ld);
      QVec ea(ld);
      ea[a] = Rat(1);
      for (int b = 0; b < ld; ++b) {
        const QVec col = h.base.alg.multiply(ea, out.action[m][b]);
        for (int r = 0; r < ld; ++r) flat[static_cast<size_t>(r) * ld + b] = col[r];
      }
      jrows.push_back(SparseVec::from_dense(flat));
    }
  out.j_rank = rank_of(jrows);
  out.j_bijective = out.j_rank == static_cast<long>(ld) * ld && k == ld;
  return out;
}

PreimageResult theta_preimage(const GaloisAlgebra& e, const RegularSubgroup& n, int workers) {
  PreimageResult out;
  out.w = compute_w(e.group, n);
  out.ca = conjugation_action(e.group, n);
  out.preimage_exists = out.ca.onto_aut;
  out.ew = restrict_to_fixed_subalgebra(e, out.w);
  out.ew_galois = verify_galois(out.ew.algebra);
  out.h_quotient = fixed_ring(out.ew.algebra, n.model, out.ca.action, workers,
                              "((" + out.ew.algebra.desc + ")[" + n.type + "])^" +
                                  out.ew.algebra.group.name());
  out.h_descent = descend(e, n, workers);

  const int ld_e = e.alg.dim, ld_w = out.ew.algebra.alg.dim, nn = n.model.size();
  LinSolver dsolver(nn * ld_e);
  for (const QVec& b : out.h_descent.basis) dsolver.add(b);
  bool ok = out.h_quotient.basis.size() == out.h_descent.basis.size();
  for (const QVec& q : out.h_quotient.basis) {
    QVec amb(static_cast<size_t>(nn) * ld_e);
    for (int eta = 0; eta < nn; ++eta)
      for (int j = 0; j < ld_w; ++j) {
        const Rat& c = q[static_cast<size_t>(eta) * ld_w + j];
        if (c.is_zero()) continue;
        const QVec& bj = out.ew.basis[j];
        for (int a = 0; a < ld_e; ++a)
          if (!bj[a].is_zero()) amb[static_cast<size_t>(eta) * ld_e + a] += c * bj[a];
      }
    out.embed_images.push_back(std::move(amb));
  }
  for (const QVec& amb : out.embed_images) {
    auto c = dsolver.express(amb);
    if (!c) {
      ok = false;
      break;
    }
    out.coords.push_back(*c);
  }
  if (ok) {
    std::vector<SparseVec> rows;
    for (const QVec& c : out.coords) rows.push_back(SparseVec::from_dense(c));
    ok = rank_of(rows) == static_cast<long>(out.coords.size());
  }
  if (ok) {
    const HopfAlgebra transported = change_basis(out.h_descent.hopf, out.coords);
    out.basis_change_ok = hopf_presentations_equal(transported, out.h_quotient.hopf);
  }
  return out;
}

InvariantRecord hopf_invariants(const HopfAlgebra& h) {
  if (h.dim > 16) throw std::invalid_argument("hopf_invariants: dimension cap is 16");
  InvariantRecord r;
  const WedderburnDecomposition dec = wedderburn_decompose(h.algebra());
  if (!dec.semisimple) throw std::invalid_argument("hopf_invariants: algebra is not semisimple");
  r.block_count = static_cast<int>(dec.blocks.size());
  std::vector<mpz_class> classes;
  for (const auto& b : dec.blocks) {
    r.block_labels.push_back(b.label);
    if (b.center_degree == 2 && b.matrix_size == 1) {
      const Rat disc = b.center_min_poly[1] * b.center_min_poly[1] - Rat(4) * b.center_min_poly[0];
      classes.push_back(square_class(disc));
    }
  }
  std::sort(r.block_labels.begin(), r.block_labels.end());
  std::sort(classes.begin(), classes.end());
  for (const auto& c : classes) r.quadratic_square_classes.push_back(c.get_str());
  r.min_split_field = "Q";
  for (const auto& b : dec.blocks)
    if (b.center_degree > 1) {
      r.min_split_field = b.label;
      break;
    }
  r.grouplike_count = static_cast<int>(grouplikes(h).size());
  return r;
}

InvariantRecord hopf_invariants(const FixedRing& h) { return hopf_invariants(h.hopf); }

std::string invariant_summary(const InvariantRecord& r) {
  std::string s = "blocks=[";
  for (size_t i = 0; i < r.block_labels.size(); ++i)
    s += (i ? "|" : "") + r.block_labels[i];
  s += "]; idempotents=" + std::to_string(r.block_count);
  s += "; grouplikes=" + std::to_string(r.grouplike_count);
  s += "; quad-classes=[";
  for (size_t i = 0; i < r.quadratic_square_classes.size(); ++i)
    s += (i ? "," : "") + r.quadratic_square_classes[i];
  s += "]; min-split=" + r.min_split_field;
  return s;
}

Q8C8Preimage q8_c8_preimage(const std::string& t_choice, long d, int workers) {
  if (t_choice != "i" && t_choice != "j" && t_choice != "k")
    throw std::invalid_argument("q8_c8_preimage: t must be one of i, j, k");
  Q8C8Preimage out;
  out.t_choice = t_choice;
  out.d = d;
  const FiniteGroup q8 = FiniteGroup::quaternion8();

  EnumerateOptions opts;
  opts.type_filter = "C8";
  opts.workers = workers;
  const auto subs = enumerate_regular_subgroups(q8, opts);
  const int t_index = t_choice == "i" ? 2 : t_choice == "j" ? 4 : 6;
  std::vector<size_t> found;
  std::vector<std::vector<int>> ws;
  for (size_t s = 0; s < subs.size(); ++s) {
    auto w = compute_w(q8, subs[s]);
    if (std::find(w.begin(), w.end(), t_index) != w.end()) {
      found.push_back(s);
      ws.push_back(std::move(w));
    }
  }
  if (found.size() != 2)
    throw std::logic_error("q8_c8_preimage: expected exactly two subgroups per t-class");
  out.pair_a = subs[found[0]];
  out.pair_b = subs[found[1]];
  out.w = ws[0];
  out.w_match = ws[0] == ws[1];
  const auto ca = conjugation_action(q8, out.pair_a);
  out.quotient_proper = !ca.onto_aut && ca.quotient.group.size() == 2 && ca.aut_order == 4;

  const FiniteGroup units = FiniteGroup::units_mod(8);
  out.l = build_F_galois(units, {0, 1}, quadratic_field_with_negation(d));
  const FiniteGroup c8 = FiniteGroup::cyclic(8);
  out.theta_side = theta(out.l, c8, residue_embed(units, 8), workers);

  const auto qf = quadratic_field_with_negation(d);
  GaloisAlgebra qb;
  qb.alg = qf.field;
  qb.group = FiniteGroup::cyclic(2);
  qb.action = qf.action;
  qb.basis_labels = qf.basis_labels;
  qb.desc = qf.name;
  std::vector<int> three(8);
  for (int x = 0; x < 8; ++x) three[x] = 3 * x % 8;
  out.descent_side =
      fixed_ring(qb, c8, {identity_map(8), three}, workers, "((" + qf.name + ")[C8])^C2");

  // L-coefficients in the induced algebra: components are (f1, f2) with basis
  // (1, beta) each; delta = f2 - f1.
  const int ld = 4;
  QVec one(ld), beta(ld), delta(ld), beta_delta(ld);
  one[0] = one[2] = Rat(1);
  beta[1] = beta[3] = Rat(1);
  delta[0] = Rat(-1);
  delta[2] = Rat(1);
  beta_delta[1] = Rat(-1);
  beta_delta[3] = Rat(1);
  auto place = [&](const std::vector<std::pair<int, int>>& terms, const QVec& coeff, Rat scale) {
    QVec v(8 * ld);
    for (const auto& [eta, sign] : terms)
      for (int a = 0; a < ld; ++a)
        if (!coeff[a].is_zero()) v[static_cast<size_t>(eta) * ld + a] = scale * Rat(sign) * coeff[a];
    return v;
  };
  const Rat h8(1, 8), h4(1, 4), h2(1, 2);
  out.normalized_basis = {
      place({{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}, {6, 1}, {7, 1}}, one, h8),
      place({{0, 1}, {1, -1}, {2, 1}, {3, -1}, {4, 1}, {5, -1}, {6, 1}, {7, -1}}, one, h8),
      place({{0, 1}, {2, -1}, {4, 1}, {6, -1}}, one, h4),
      place({{1, 1}, {3, -1}, {5, 1}, {7, -1}}, beta, h4),
      place({{0, 1}, {4, -1}}, one, h2),
      place({{2, 1}, {6, -1}}, beta, h2),
      place({{3, 1}, {7, -1}, {1, 1}, {5, -1}}, delta, h2),
      place({{3, 1}, {7, -1}, {1, -1}, {5, 1}}, beta_delta, h2),
  };
  {
    const auto amb = ambient_labels(out.l, c8);
    for (const QVec& u : out.normalized_basis)
      out.normalized_labels.push_back(linear_combo_label(u, amb));
  }

  out.normalized_fixed = true;
  for (int f = 0; f < units.size() && out.normalized_fixed; ++f)
    for (const QVec& u : out.normalized_basis)
      if (out.theta_side.ambient_apply(f, u) != u) {
        out.normalized_fixed = false;
        break;
      }

  LinSolver tmemb(8 * ld);
  for (const QVec& b : out.theta_side.basis) tmemb.add(b);
  std::vector<QVec> ncoords;
  out.normalized_spans = true;
  for (const QVec& u : out.normalized_basis) {
    auto c = tmemb.express(u);
    if (!c) {
      out.normalized_spans = false;
      break;
    }
    ncoords.push_back(*c);
  }
  if (out.normalized_spans) {
    std::vector<SparseVec> rows;
    for (const QVec& c : ncoords) rows.push_back(SparseVec::from_dense(c));
    out.normalized_spans = rank_of(rows) == 8;
  }
  out.idempotent_diff_square_one = out.l.alg.multiply(delta, delta) == out.l.alg.one;
  if (!out.normalized_spans) return out;

  std::vector<std::string> nlabels;
  for (int i = 0; i < 8; ++i) nlabels.push_back("n" + std::to_string(i));
  out.h_normalized = change_basis(out.theta_side.hopf, ncoords, nlabels);

  // psi drops the delta factor: the descent-side images replace the
  // coefficients (1, beta, delta, beta delta) by (1, beta, 1, beta).
  QVec done(2), dbeta(2);
  done[0] = Rat(1);
  dbeta[1] = Rat(1);
  auto dplace = [&](const std::vector<std::pair<int, int>>& terms, const QVec& coeff, Rat scale) {
    QVec v(16);
    for (const auto& [eta, sign] : terms)
      for (int a = 0; a < 2; ++a)
        if (!coeff[a].is_zero()) v[static_cast<size_t>(eta) * 2 + a] = scale * Rat(sign) * coeff[a];
    return v;
  };
  const std::vector<QVec> psi = {
      dplace({{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}, {6, 1}, {7, 1}}, done, h8),
      dplace({{0, 1}, {1, -1}, {2, 1}, {3, -1}, {4, 1}, {5, -1}, {6, 1}, {7, -1}}, done, h8),
      dplace({{0, 1}, {2, -1}, {4, 1}, {6, -1}}, done, h4),
      dplace({{1, 1}, {3, -1}, {5, 1}, {7, -1}}, dbeta, h4),
      dplace({{0, 1}, {4, -1}}, done, h2),
      dplace({{2, 1}, {6, -1}}, dbeta, h2),
      dplace({{3, 1}, {7, -1}, {1, 1}, {5, -1}}, done, h2),
      dplace({{3, 1}, {7, -1}, {1, -1}, {5, 1}}, dbeta, h2),
  };
  LinSolver dmemb(16);
  for (const QVec& b : out.descent_side.basis) dmemb.add(b);
  std::vector<QVec> dcoords;
  out.psi_in_descent = true;
  for (const QVec& v : psi) {
    auto c = dmemb.express(v);
    if (!c) {
      out.psi_in_descent = false;
      break;
    }
    dcoords.push_back(*c);
  }
  if (out.psi_in_descent) {
    std::vector<SparseVec> rows;
    for (const QVec& c : dcoords) rows.push_back(SparseVec::from_dense(c));
    out.psi_in_descent = rank_of(rows) == 8;
  }
  if (!out.psi_in_descent) return out;

  out.psi_multiplicative = true;
  for (int i = 0; i < 8 && out.psi_multiplicative; ++i)
    for (int j = 0; j < 8; ++j) {
      const QVec lhs = out.descent_side.ambient_multiply(psi[i], psi[j]);
      QVec rhs(16);
      const QVec& prod = out.h_normalized.mult[i][j];
      for (int m = 0; m < 8; ++m)
        if (!prod[m].is_zero()) rhs = qvec_add(rhs, qvec_scale(prod[m], psi[m]));
      if (lhs != rhs) {
        out.psi_multiplicative = false;
        break;
      }
    }
  const HopfAlgebra transported = change_basis(out.descent_side.hopf, dcoords, nlabels);
  out.psi_hopf_compatible = hopf_presentations_equal(transported, out.h_normalized);
  out.record = hopf_invariants(out.h_normalized);
  return out;
}

GreitherForm greither_form(int workers) {
  GreitherForm out;
  const GaloisAlgebra l4 = cyclotomic_galois(4);
  const FiniteGroup q8 = FiniteGroup::quaternion8();
  // conjugation by k: fixes 1, -1, k, -k; negates i and j.
  const std::vector<int> conj_k = {0, 1, 3, 2, 5, 4, 6, 7};
  out.form = theta(l4, q8, {identity_map(8), conj_k}, workers);

  // e = (1 - (-1))/2 is the unit of the quaternion block; v, u, w are the
  // block images e*j, e*i, e*k, so e.g. zeta v sits at slots j and -j.
  QVec e(16), zv(16), zu(16), w(16), one(16);
  e[0 * 2 + 0] = Rat(1, 2);
  e[1 * 2 + 0] = Rat(-1, 2);
  zv[4 * 2 + 1] = Rat(1, 2);
  zv[5 * 2 + 1] = Rat(-1, 2);
  zu[2 * 2 + 1] = Rat(1, 2);
  zu[3 * 2 + 1] = Rat(-1, 2);
  w[6 * 2 + 0] = Rat(1, 2);
  w[7 * 2 + 0] = Rat(-1, 2);
  one[0] = Rat(1);
  out.block_unit = e;

  LinSolver memb(16);
  for (const QVec& b : out.form.basis) memb.add(b);
  out.basis_in_form = memb.express(one).has_value() && memb.express(zv).has_value() &&
                      memb.express(zu).has_value() && memb.express(w).has_value() &&
                      memb.express(e).has_value();

  auto mul = [&](const QVec& x, const QVec& y) { return out.form.ambient_multiply(x, y); };
  const QVec neg_w = qvec_scale(Rat(-1), w);
  out.relations_ok = mul(zv, zv) == e && mul(zu, zu) == e && mul(zv, zu) == w &&
                     mul(zu, zv) == neg_w;
  const QVec nil = qvec_sub(zu, w);
  out.nilpotent_ok = !qvec_is_zero(nil) && qvec_is_zero(mul(nil, nil));

  out.abss = is_absolutely_semisimple(out.form.hopf.algebra(), q8);
  out.decomposition = out.abss.decomposition;
  return out;
}

GreitherPreimage theta_preimage_greither(int workers) {
  GreitherPreimage out;
  const FiniteGroup q8 = FiniteGroup::quaternion8();
  const AutomorphismGroup aut = automorphism_group(q8);
  const std::vector<int> conj_k = {0, 1, 3, 2, 5, 4, 6, 7};
  const auto it = std::find(aut.maps.begin(), aut.maps.end(), conj_k);
  if (it == aut.maps.end())
    throw std::logic_error("theta_preimage_greither: conjugation by k not an automorphism");
  const int ck = static_cast<int>(it - aut.maps.begin());

  out.l = build_F_galois(aut.group, {0, ck}, cyclotomic_field_with_units(4, {1, 3}));
  out.components = out.l.comp_count;
  out.theta_of_l = theta(out.l, q8, aut.maps, workers);
  out.profile = wedderburn_decompose(out.theta_of_l.hopf.algebra());
  out.form = greither_form(workers);

  // Project onto the first component of L (the coset of the identity, with
  // field Q(zeta_4)); on the fixed ring this is a Hopf isomorphism onto the
  // Greither form because the automorphism group permutes the components
  // transitively.
  const int ld = out.l.alg.dim, cd = out.l.comp_dim();
  LinSolver gmemb(8 * cd);
  for (const QVec& b : out.form.form.basis) gmemb.add(b);
  bool ok = out.theta_of_l.basis.size() == out.form.form.basis.size();
  std::vector<QVec> coords;
  for (const QVec& b : out.theta_of_l.basis) {
    if (!ok) break;
    QVec proj(static_cast<size_t>(8) * cd);
    for (int eta = 0; eta < 8; ++eta)
      for (int a = 0; a < cd; ++a)
        proj[static_cast<size_t>(eta) * cd + a] = b[static_cast<size_t>(eta) * ld + a];
    auto c = gmemb.express(proj);
    if (!c)
      ok = false;
    else
      coords.push_back(*c);
  }
  if (ok) {
    std::vector<SparseVec> rows;
    for (const QVec& c : coords) rows.push_back(SparseVec::from_dense(c));
    ok = rank_of(rows) == static_cast<long>(coords.size());
  }
  if (ok) {
    const HopfAlgebra transported = change_basis(out.form.form.hopf, coords);
    out.matches_form = hopf_presentations_equal(transported, out.theta_of_l.hopf);
  }
  return out;
}

}  // namespace hopfforms

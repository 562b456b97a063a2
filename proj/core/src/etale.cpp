#include "hopfforms/etale.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hopfforms/cyclotomic.hpp"

namespace hopfforms {

QVec CommAlgebra::multiply(const QVec& x, const QVec& y) const {
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

bool CommAlgebra::satisfies_ring_axioms() const {
  for (int i = 0; i < dim; ++i) {
    QVec ei(dim);
    ei[i] = Rat(1);
    if (multiply(one, ei) != ei || multiply(ei, one) != ei) return false;
    for (int j = 0; j < dim; ++j) {
      if (mult[i][j] != mult[j][i]) return false;
      QVec ej(dim);
      ej[j] = Rat(1);
      for (int k = 0; k < dim; ++k) {
        QVec ek(dim);
        ek[k] = Rat(1);
        if (multiply(mult[i][j], ek) != multiply(ei, mult[j][k])) return false;
      }
    }
  }
  return true;
}

QVec GaloisAlgebra::apply(int f, const QVec& x) const {
  QVec out(alg.dim);
  for (int j = 0; j < alg.dim; ++j) {
    if (x[j].is_zero()) continue;
    const QVec& col = action[f][j];
    for (int k = 0; k < alg.dim; ++k)
      if (!col[k].is_zero()) out[k] += x[j] * col[k];
  }
  return out;
}

GaloisAlgebra trivial_extension(const FiniteGroup& f) {
  GaloisAlgebra l;
  const int n = f.size();
  l.alg.dim = n;
  l.alg.one = QVec(n, Rat(1));
  l.alg.mult.assign(n, std::vector<QVec>(n, QVec(n)));
  for (int i = 0; i < n; ++i) l.alg.mult[i][i][i] = Rat(1);
  l.group = f;
  l.action.assign(n, std::vector<QVec>(n, QVec(n)));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) l.action[g][h][f.mult(g, h)] = Rat(1);
  for (int h = 0; h < n; ++h) l.basis_labels.push_back("e[" + f.label(h) + "]");
  l.desc = "Map(" + f.name() + ", Q)";
  l.comp_count = n;
  return l;
}

GaloisAlgebra cyclotomic_galois(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_galois: n < 1");
  GaloisAlgebra l;
  const int d = euler_phi(n);
  l.alg.dim = d;
  l.alg.one = QVec(d);
  l.alg.one[0] = Rat(1);
  l.alg.mult.assign(d, std::vector<QVec>(d, QVec(d)));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      CycElem prod = CycElem::zeta_pow(n, i) * CycElem::zeta_pow(n, j);
      l.alg.mult[i][j] = prod.coords();
    }
  l.group = n <= 2 ? FiniteGroup::cyclic(1) : FiniteGroup::units_mod(n);
  std::vector<long> residues;
  if (n <= 2) {
    residues = {1 % n};
  } else {
    for (int u = 1; u < n; ++u)
      if (std::gcd(u, n) == 1) residues.push_back(u);
  }
  for (long r : residues) {
    std::vector<QVec> mat(d);
    for (int j = 0; j < d; ++j) mat[j] = CycElem::zeta_pow(n, j).galois_conjugate(r).coords();
    l.action.push_back(std::move(mat));
  }
  for (int j = 0; j < d; ++j)
    l.basis_labels.push_back(j == 0 ? "1" : (j == 1 ? "z" : "z^" + std::to_string(j)));
  l.desc = "Q(zeta_" + std::to_string(n) + ")";
  return l;
}

FieldWithAction cyclotomic_field_with_units(int n, const std::vector<long>& residues) {
  if (n < 1) throw std::invalid_argument("cyclotomic_field_with_units: n < 1");
  FieldWithAction m;
  const int d = euler_phi(n);
  m.field.dim = d;
  m.field.one = QVec(d);
  m.field.one[0] = Rat(1);
  m.field.mult.assign(d, std::vector<QVec>(d, QVec(d)));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      m.field.mult[i][j] = (CycElem::zeta_pow(n, i) * CycElem::zeta_pow(n, j)).coords();
  for (long r : residues) {
    long rr = ((r % n) + n) % n;
    if (n > 1 && std::gcd(rr, static_cast<long>(n)) != 1)
      throw std::invalid_argument("cyclotomic_field_with_units: residue not a unit");
    std::vector<QVec> mat(d);
    for (int j = 0; j < d; ++j) mat[j] = CycElem::zeta_pow(n, j).galois_conjugate(rr).coords();
    m.action.push_back(std::move(mat));
  }
  for (int j = 0; j < d; ++j)
    m.basis_labels.push_back(j == 0 ? "1" : (j == 1 ? "z" : "z^" + std::to_string(j)));
  m.name = "Q(zeta_" + std::to_string(n) + ")";
  return m;
}

FieldWithAction quadratic_field_with_negation(long d) {
  if (d == 0 || d == 1) throw std::invalid_argument("quadratic field: d must not be 0 or 1");
  long ad = d < 0 ? -d : d;
  for (long p = 2; p * p <= ad; ++p)
    if (ad % (p * p) == 0) throw std::invalid_argument("quadratic field: d not squarefree");
  FieldWithAction m;
  m.field.dim = 2;
  m.field.one = {Rat(1), Rat(0)};
  m.field.mult.assign(2, std::vector<QVec>(2, QVec(2)));
  m.field.mult[0][0] = {Rat(1), Rat(0)};
  m.field.mult[0][1] = m.field.mult[1][0] = {Rat(0), Rat(1)};
  m.field.mult[1][1] = {Rat(d), Rat(0)};
  m.action.push_back({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}});
  m.action.push_back({{Rat(1), Rat(0)}, {Rat(0), Rat(-1)}});
  m.basis_labels = {"1", "beta"};
  m.name = "Q(sqrt(" + std::to_string(d) + "))";
  return m;
}

GaloisAlgebra build_F_galois(const FiniteGroup& f, const std::vector<int>& u_elems,
                             const FieldWithAction& m) {
  const int nf = f.size();
  const int nu = static_cast<int>(u_elems.size());
  const int dm = m.field.dim;
  if (static_cast<int>(m.action.size()) != nu)
    throw std::invalid_argument("build_F_galois: action list size != |U|");
  std::set<int> uset(u_elems.begin(), u_elems.end());
  if (static_cast<int>(uset.size()) != nu)
    throw std::invalid_argument("build_F_galois: duplicate U elements");
  if (!uset.count(0)) throw std::invalid_argument("build_F_galois: U lacks identity");
  for (int a : u_elems)
    for (int b : u_elems)
      if (!uset.count(f.mult(a, b))) throw std::invalid_argument("build_F_galois: U not closed");
  if (dm != nu) throw std::invalid_argument("build_F_galois: [M:Q] != |U|");
  if (!m.field.satisfies_ring_axioms())
    throw std::invalid_argument("build_F_galois: M is not a commutative unital algebra");

  std::map<int, int> upos;
  for (int i = 0; i < nu; ++i) upos[u_elems[i]] = i;
  auto apply_m = [&](int ui, const QVec& x) {
    QVec out(dm);
    for (int j = 0; j < dm; ++j) {
      if (x[j].is_zero()) continue;
      for (int k = 0; k < dm; ++k) out[k] += x[j] * m.action[ui][j][k];
    }
    return out;
  };
  // u -> M_u must be a left action by algebra automorphisms with M^U = Q.
  for (int i = 0; i < nu; ++i) {
    if (static_cast<int>(m.action[i].size()) != dm)
      throw std::invalid_argument("build_F_galois: action matrix size");
    if (apply_m(i, m.field.one) != m.field.one)
      throw std::invalid_argument("build_F_galois: automorphism moves 1");
    for (int a = 0; a < dm; ++a) {
      QVec ea(dm);
      ea[a] = Rat(1);
      for (int b = 0; b < dm; ++b) {
        QVec eb(dm);
        eb[b] = Rat(1);
        if (apply_m(i, m.field.mult[a][b]) !=
            m.field.multiply(apply_m(i, ea), apply_m(i, eb)))
          throw std::invalid_argument("build_F_galois: action not by algebra maps");
      }
    }
  }
  for (int i = 0; i < nu; ++i)
    for (int j = 0; j < nu; ++j) {
      int ij = upos.at(f.mult(u_elems[i], u_elems[j]));
      for (int a = 0; a < dm; ++a) {
        QVec ea(dm);
        ea[a] = Rat(1);
        if (apply_m(ij, ea) != apply_m(i, apply_m(j, ea)))
          throw std::invalid_argument("build_F_galois: u -> M_u not a homomorphism");
      }
    }
  {
    std::vector<SparseVec> rows;
    for (int i = 0; i < nu; ++i)
      for (int r = 0; r < dm; ++r) {
        SparseVec row;
        for (int c = 0; c < dm; ++c) {
          Rat v = m.action[i][c][r];
          if (c == r) v -= Rat(1);
          if (!v.is_zero()) row.e.emplace_back(c, v);
        }
        if (!row.e.empty()) rows.push_back(std::move(row));
      }
    if (nullspace(rows, dm).size() != 1)
      throw std::invalid_argument("build_F_galois: M^U != Q");
  }

  // Left cosets g U with first-found ascending representatives.
  std::vector<int> coset_of(nf, -1), reps;
  for (int g = 0; g < nf; ++g) {
    if (coset_of[g] >= 0) continue;
    int idx = static_cast<int>(reps.size());
    reps.push_back(g);
    for (int u : u_elems) coset_of[f.mult(g, u)] = idx;
  }
  const int nc = static_cast<int>(reps.size());
  const int dim = nc * dm;

  GaloisAlgebra l;
  l.alg.dim = dim;
  l.alg.one = QVec(dim);
  l.alg.mult.assign(dim, std::vector<QVec>(dim, QVec(dim)));
  for (int i = 0; i < nc; ++i) {
    for (int k = 0; k < dm; ++k) l.alg.one[i * dm + k] = m.field.one[k];
    for (int a = 0; a < dm; ++a)
      for (int b = 0; b < dm; ++b)
        for (int k = 0; k < dm; ++k)
          l.alg.mult[i * dm + a][i * dm + b][i * dm + k] = m.field.mult[a][b][k];
  }

  l.group = f;
  l.action.assign(nf, std::vector<QVec>(dim, QVec(dim)));
  for (int g = 0; g < nf; ++g)
    for (int i = 0; i < nc; ++i) {
      int gi = f.mult(g, reps[i]);
      int j = coset_of[gi];
      int u = f.mult(f.inv(reps[j]), gi);
      int ui = upos.at(u);
      for (int a = 0; a < dm; ++a) {
        const QVec& img = m.action[ui][a];
        for (int k = 0; k < dm; ++k) l.action[g][i * dm + a][j * dm + k] = img[k];
      }
    }

  for (int i = 0; i < nc; ++i)
    for (int a = 0; a < dm; ++a) {
      std::string base = m.basis_labels.empty() ? "b" + std::to_string(a) : m.basis_labels[a];
      if (nc == 1)
        l.basis_labels.push_back(base);
      else if (base == "1")
        l.basis_labels.push_back("f" + std::to_string(i));
      else
        l.basis_labels.push_back("f" + std::to_string(i) + "*" + base);
    }
  l.desc = nc == 1 ? m.name : m.name + "^" + std::to_string(nc);
  l.comp_count = nc;

  auto chk = verify_galois(l);
  if (!chk.ok) throw std::logic_error("build_F_galois: result not F-Galois: " + chk.detail);
  return l;
}

GaloisAlgebra biquadratic_sqrt2_sqrt3() {
  GaloisAlgebra l;
  l.alg.dim = 4;
  l.alg.one = QVec(4);
  l.alg.one[0] = Rat(1);
  l.alg.mult.assign(4, std::vector<QVec>(4, QVec(4)));
  // Basis 0:1, 1:sqrt2, 2:sqrt3, 3:sqrt6.
  auto set = [&](int i, int j, int k, long c) { l.alg.mult[i][j][k] = Rat(c); };
  set(0, 0, 0, 1);
  for (int i = 1; i < 4; ++i) {
    set(0, i, i, 1);
    set(i, 0, i, 1);
  }
  set(1, 1, 0, 2);
  set(2, 2, 0, 3);
  set(3, 3, 0, 6);
  set(1, 2, 3, 1);
  set(2, 1, 3, 1);
  set(1, 3, 2, 2);  // sqrt2*sqrt6 = 2 sqrt3
  set(3, 1, 2, 2);
  set(2, 3, 1, 3);  // sqrt3*sqrt6 = 3 sqrt2
  set(3, 2, 1, 3);

  l.group = FiniteGroup::elementary_abelian(2, 2);
  l.action.assign(4, std::vector<QVec>(4, QVec(4)));
  for (int g = 0; g < 4; ++g) {
    int d0 = g % 2, d1 = g / 2;  // digits: element sigma^{d0} tau^{d1}
    // sigma fixes sqrt2 and negates sqrt3; tau negates sqrt2 and fixes sqrt3.
    int s2 = d1 ? -1 : 1, s3 = d0 ? -1 : 1;
    l.action[g][0][0] = Rat(1);
    l.action[g][1][1] = Rat(s2);
    l.action[g][2][2] = Rat(s3);
    l.action[g][3][3] = Rat(s2 * s3);
  }
  l.basis_labels = {"1", "sqrt2", "sqrt3", "sqrt6"};
  l.desc = "Q(sqrt2, sqrt3)";
  return l;
}

GaloisAlgebra sextic_s3() {
  GaloisAlgebra l;
  const int dim = 6;
  l.alg.dim = dim;
  l.alg.one = QVec(dim);
  l.alg.one[0] = Rat(1);
  // Basis index e*3 + j represents w^e c^j, c^3 = 2, w^2 = -1 - w.
  // Writes w^m c^j (j possibly >= 3) in coordinates.
  auto put = [&](QVec& out, int m, int j, Rat coeff) {
    m %= 3;
    Rat scale = coeff;
    if (j >= 3) {
      j -= 3;
      scale = scale * Rat(2);
    }
    if (m == 2) {
      out[0 * 3 + j] += -scale;
      out[1 * 3 + j] += -scale;
    } else {
      out[m * 3 + j] += scale;
    }
  };
  l.alg.mult.assign(dim, std::vector<QVec>(dim, QVec(dim)));
  for (int e1 = 0; e1 < 2; ++e1)
    for (int j1 = 0; j1 < 3; ++j1)
      for (int e2 = 0; e2 < 2; ++e2)
        for (int j2 = 0; j2 < 3; ++j2) {
          QVec out(dim);
          put(out, e1 + e2, j1 + j2, Rat(1));
          l.alg.mult[e1 * 3 + j1][e2 * 3 + j2] = out;
        }

  l.group = FiniteGroup::symmetric(3);
  // Element p permutes the roots w^k c; p(k) = a + b k with a = p(0).
  for (int g = 0; g < 6; ++g) {
    std::vector<int> img(3);
    // Recover the permutation from the regular S3 model: it was built from
    // lexicographic 3-point permutations, so rebuild the list the same way.
    static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                    {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (int k = 0; k < 3; ++k) img[k] = perms[g][k];
    int a = img[0];
    int b = (img[1] - img[0] + 3) % 3;
    if (img[2] != (a + 2 * b) % 3) throw std::logic_error("sextic_s3: non-affine permutation");
    std::vector<QVec> mat(dim, QVec(dim));
    for (int e = 0; e < 2; ++e)
      for (int j = 0; j < 3; ++j) {
        QVec out(dim);
        put(out, a * j + b * e, j, Rat(1));
        mat[e * 3 + j] = out;
      }
    l.action.push_back(std::move(mat));
  }
  l.basis_labels = {"1", "c", "c^2", "w", "w*c", "w*c^2"};
  l.desc = "Q(zeta_3, 2^(1/3))";
  return l;
}

bool action_is_by_algebra_maps(const GaloisAlgebra& l) {
  const int d = l.alg.dim;
  const int nf = l.group.size();
  if (static_cast<int>(l.action.size()) != nf) return false;
  for (int j = 0; j < d; ++j) {
    QVec ej(d);
    ej[j] = Rat(1);
    if (l.apply(0, ej) != ej) return false;
  }
  for (int g = 0; g < nf; ++g) {
    if (l.apply(g, l.alg.one) != l.alg.one) return false;
    for (int i = 0; i < d; ++i) {
      QVec ei(d);
      ei[i] = Rat(1);
      for (int j = 0; j < d; ++j) {
        QVec ej(d);
        ej[j] = Rat(1);
        if (l.apply(g, l.alg.mult[i][j]) != l.alg.multiply(l.apply(g, ei), l.apply(g, ej)))
          return false;
      }
    }
  }
  for (int g = 0; g < nf; ++g)
    for (int h = 0; h < nf; ++h) {
      int gh = l.group.mult(g, h);
      for (int j = 0; j < d; ++j) {
        QVec ej(d);
        ej[j] = Rat(1);
        if (l.apply(gh, ej) != l.apply(g, l.apply(h, ej))) return false;
      }
    }
  return true;
}

long galois_map_rank(const GaloisAlgebra& l) {
  const int d = l.alg.dim;
  const int nf = l.group.size();
  RowEchelon ech(false);
  for (int i = 0; i < d; ++i) {
    QVec ei(d);
    ei[i] = Rat(1);
    for (int j = 0; j < d; ++j) {
      QVec ej(d);
      ej[j] = Rat(1);
      // Image of b_i (x) b_j: the tuple (b_i * g(b_j))_g, flattened.
      SparseVec col;
      for (int g = 0; g < nf; ++g) {
        QVec prod = l.alg.multiply(ei, l.apply(g, ej));
        for (int k = 0; k < d; ++k)
          if (!prod[k].is_zero()) col.e.emplace_back(g * d + k, prod[k]);
      }
      ech.insert(std::move(col));
    }
  }
  return ech.rank();
}

namespace {

// One direct factor of a component-major algebra: local mult table and unit.
struct Component {
  int dim;
  std::vector<std::vector<QVec>> mult;
  QVec one;

  QVec multiply_local(const QVec& x, const QVec& y) const {
    QVec out(dim);
    for (int i = 0; i < dim; ++i) {
      if (x[i].is_zero()) continue;
      for (int j = 0; j < dim; ++j) {
        if (y[j].is_zero()) continue;
        Rat c = x[i] * y[j];
        for (int k = 0; k < dim; ++k) out[k] += c * mult[i][j][k];
      }
    }
    return out;
  }
};

// y with x*y = 1 in the component, or nullopt (dense Gaussian solve).
std::optional<QVec> component_inverse(const Component& c, const QVec& x) {
  const int d = c.dim;
  // Columns of left multiplication by x, augmented with the unit.
  std::vector<QVec> rows(d, QVec(d + 1));
  for (int k = 0; k < d; ++k) {
    for (int i = 0; i < d; ++i) {
      if (x[i].is_zero()) continue;
      for (int r = 0; r < d; ++r) rows[r][k] += x[i] * c.mult[i][k][r];
    }
  }
  for (int r = 0; r < d; ++r) rows[r][d] = c.one[r];
  int rank = 0;
  for (int col = 0; col < d; ++col) {
    int piv = -1;
    for (int r = rank; r < d; ++r)
      if (!rows[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    Rat lead = rows[rank][col];
    for (int k = col; k <= d; ++k) rows[rank][k] /= lead;
    for (int r = 0; r < d; ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      Rat f = rows[r][col];
      for (int k = col; k <= d; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  if (rank < d) {
    // Solvable iff the residual rows have zero right-hand side.
    for (int r = rank; r < d; ++r)
      if (!rows[r][d].is_zero()) return std::nullopt;
  }
  // Back-substitute: rows are reduced echelon of [M | one].
  QVec y(d);
  int rr = 0;
  for (int col = 0; col < d && rr < rank; ++col)
    if (rows[rr][col].is_one()) {
      bool pivotal = true;
      for (int cc = 0; cc < col; ++cc)
        if (!rows[rr][cc].is_zero()) pivotal = false;
      if (pivotal) {
        y[col] = rows[rr][d];
        ++rr;
      }
    }
  // Verify (guards against an under-determined system picking a non-inverse).
  QVec check(d);
  for (int i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < d; ++j) {
      if (y[j].is_zero()) continue;
      Rat cf = x[i] * y[j];
      for (int k = 0; k < d; ++k) check[k] += cf * c.mult[i][j][k];
    }
  }
  if (check != c.one) return std::nullopt;
  return y;
}

}  // namespace

GaloisCheck verify_galois(const GaloisAlgebra& l) {
  GaloisCheck out;
  const int d = l.alg.dim;
  const int nf = l.group.size();
  out.dim_ok = (d == nf) && static_cast<int>(l.action.size()) == nf;
  if (!out.dim_ok) {
    out.detail = "dim L != |F|";
    return out;
  }

  int nc = (l.comp_count >= 1 && d % l.comp_count == 0) ? l.comp_count : 1;
  int dm = d / nc;
  // The componentwise test needs multiplication supported inside blocks.
  if (nc > 1) {
    for (int i = 0; i < d && nc > 1; ++i)
      for (int j = 0; j < d && nc > 1; ++j) {
        int bi = i / dm, bj = j / dm;
        for (int k = 0; k < d; ++k) {
          if (l.alg.mult[i][j][k].is_zero()) continue;
          if (bi != bj || k / dm != bi) {
            nc = 1;
            dm = d;
            break;
          }
        }
      }
  }

  bool fallback = false;
  long deficiency = 0;
  for (int c = 0; c < nc && !fallback; ++c) {
    Component comp;
    comp.dim = dm;
    comp.one = QVec(dm);
    for (int k = 0; k < dm; ++k) comp.one[k] = l.alg.one[c * dm + k];
    comp.mult.assign(dm, std::vector<QVec>(dm, QVec(dm)));
    for (int a = 0; a < dm; ++a)
      for (int b = 0; b < dm; ++b)
        for (int k = 0; k < dm; ++k) comp.mult[a][b][k] = l.alg.mult[c * dm + a][c * dm + b][c * dm + k];

    // Rows indexed by g in F, entries A[g][j] = component-c part of g(b_j).
    std::vector<std::vector<QVec>> rows(nf, std::vector<QVec>(d, QVec(dm)));
    for (int g = 0; g < nf; ++g)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < dm; ++k) rows[g][j][k] = l.action[g][j][c * dm + k];

    int rank = 0;
    for (int col = 0; col < d && !fallback; ++col) {
      int piv = -1;
      std::optional<QVec> pinv;
      bool saw_nonzero = false;
      for (int r = rank; r < nf; ++r) {
        if (qvec_is_zero(rows[r][col])) continue;
        saw_nonzero = true;
        pinv = component_inverse(comp, rows[r][col]);
        if (pinv) {
          piv = r;
          break;
        }
      }
      if (piv < 0) {
        if (saw_nonzero) fallback = true;  // zero divisor: factor is not a field
        continue;
      }
      std::swap(rows[rank], rows[piv]);
      for (int k = col; k < d; ++k) rows[rank][k] = comp.multiply_local(*pinv, rows[rank][k]);
      for (int r = rank + 1; r < nf; ++r) {
        if (qvec_is_zero(rows[r][col])) continue;
        QVec f = rows[r][col];
        for (int k = col; k < d; ++k) {
          if (qvec_is_zero(rows[rank][k])) continue;
          QVec sub = comp.multiply_local(f, rows[rank][k]);
          for (int t = 0; t < dm; ++t) rows[r][k][t] -= sub[t];
        }
      }
      ++rank;
    }
    if (!fallback) deficiency += static_cast<long>(d - rank) * dm;
  }

  if (fallback) {
    long rank = galois_map_rank(l);
    out.deficiency = static_cast<long>(d) * d - rank;
    out.bijective = out.deficiency == 0;
    out.detail = out.bijective ? "bijective (full-rank check)"
                               : "Galois map rank deficient by " + std::to_string(out.deficiency);
  } else {
    out.deficiency = deficiency;
    out.bijective = deficiency == 0;
    out.detail = out.bijective ? "bijective"
                               : "Galois map rank deficient by " + std::to_string(deficiency);
  }
  out.ok = out.dim_ok && out.bijective;
  return out;
}

bool is_galois_extension(const GaloisAlgebra& l) {
  if (l.alg.dim != l.group.size()) return false;
  return verify_galois(l).ok;
}

std::vector<QVec> fixed_subalgebra(const GaloisAlgebra& l, const std::vector<int>& elems) {
  const int d = l.alg.dim;
  std::vector<SparseVec> rows;
  for (int g : elems) {
    for (int r = 0; r < d; ++r) {
      SparseVec row;
      for (int c = 0; c < d; ++c) {
        Rat v = l.action[g][c][r];
        if (c == r) v -= Rat(1);
        if (!v.is_zero()) row.e.emplace_back(c, v);
      }
      if (!row.e.empty()) rows.push_back(std::move(row));
    }
  }
  return nullspace(rows, d);
}

RestrictedAlgebra restrict_to_fixed_subalgebra(const GaloisAlgebra& e,
                                               const std::vector<int>& w_elems) {
  RestrictedAlgebra out;
  out.quotient = e.group.quotient(w_elems);
  out.basis = fixed_subalgebra(e, w_elems);
  const int k = static_cast<int>(out.basis.size());

  LinSolver solver(e.alg.dim);
  for (const QVec& b : out.basis) solver.add(b);
  auto expr = [&](const QVec& v) {
    auto c = solver.express(v);
    if (!c) throw std::logic_error("restrict_to_fixed_subalgebra: vector left the fixed space");
    return *c;
  };

  GaloisAlgebra& r = out.algebra;
  r.alg.dim = k;
  r.alg.one = expr(e.alg.one);
  r.alg.mult.assign(k, std::vector<QVec>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      r.alg.mult[i][j] = expr(e.alg.multiply(out.basis[i], out.basis[j]));
  r.group = out.quotient.group;
  const int m = static_cast<int>(out.quotient.cosets.size());
  r.action.resize(m);
  for (int c = 0; c < m; ++c) {
    int rep = out.quotient.cosets[c][0];
    std::vector<QVec> mat(k);
    for (int j = 0; j < k; ++j) mat[j] = expr(e.apply(rep, out.basis[j]));
    r.action[c] = std::move(mat);
  }
  for (int j = 0; j < k; ++j)
    r.basis_labels.push_back(linear_combo_label(out.basis[j], e.basis_labels));
  r.desc = e.desc + "^W";
  r.comp_count = w_elems.size() == 1 ? e.comp_count : 1;
  return out;
}

std::string linear_combo_label(const QVec& v, const std::vector<std::string>& labels) {
  auto coeff_str = [](const Rat& r) {
    return r.is_integer() ? r.num().get_str() : r.num().get_str() + "/" + r.den().get_str();
  };
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    Rat c = v[i];
    bool neg = c.sign() < 0;
    Rat a = c.abs();
    std::string term;
    std::string lab = i < labels.size() ? labels[i] : "b" + std::to_string(i);
    if (lab == "1")
      term = coeff_str(a);
    else if (a.is_one())
      term = lab;
    else
      term = coeff_str(a) + "*" + lab;
    if (out.empty())
      out = (neg ? "-" : "") + term;
    else
      out += (neg ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace hopfforms

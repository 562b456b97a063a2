#include "hopfforms/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hopfforms {

namespace {

int checked_order(const std::vector<std::vector<int>>& table, int a) {
  int x = a, ord = 1;
  while (x != 0) {
    x = table[x][a];
    ++ord;
    if (ord > static_cast<int>(table.size())) throw std::invalid_argument("group: order overflow");
  }
  return ord;
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table, std::string name,
                                    std::vector<std::string> labels) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw std::invalid_argument("group: empty table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("group: ragged table");
    for (int v : row)
      if (v < 0 || v >= n) throw std::invalid_argument("group: entry out of range");
  }
  for (int a = 0; a < n; ++a)
    if (table[0][a] != a || table[a][0] != a)
      throw std::invalid_argument("group: element 0 is not an identity");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw std::invalid_argument("group: not associative");

  FiniteGroup g;
  g.n_ = n;
  g.table_ = std::move(table);
  g.inv_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (g.table_[a][b] == 0) {
        g.inv_[a] = b;
        break;
      }
    }
    if (g.inv_[a] < 0) throw std::invalid_argument("group: missing inverse");
  }
  g.order_.resize(n);
  for (int a = 0; a < n; ++a) g.order_[a] = checked_order(g.table_, a);
  g.name_ = std::move(name);
  if (labels.empty()) {
    for (int a = 0; a < n; ++a) g.labels_.push_back(std::to_string(a));
  } else {
    if (static_cast<int>(labels.size()) != n) throw std::invalid_argument("group: label count");
    g.labels_ = std::move(labels);
  }
  return g;
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic: n < 1");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
    labels.push_back(a == 0 ? "1" : (a == 1 ? "g" : "g^" + std::to_string(a)));
  }
  return from_table(std::move(table), "C" + std::to_string(n), std::move(labels));
}

FiniteGroup FiniteGroup::elementary_abelian(int p, int m) {
  if (p < 2 || m < 1) throw std::invalid_argument("elementary_abelian: bad parameters");
  int n = 1;
  for (int i = 0; i < m; ++i) n *= p;
  // Element a has digits (a_0, ..., a_{m-1}) base p; componentwise addition.
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int x = a, y = b, pw = 1, s = 0;
      for (int i = 0; i < m; ++i) {
        s += ((x % p + y % p) % p) * pw;
        x /= p;
        y /= p;
        pw *= p;
      }
      table[a][b] = s;
    }
    std::ostringstream os;
    os << "(";
    int x = a;
    for (int i = 0; i < m; ++i) {
      os << (i ? "," : "") << x % p;
      x /= p;
    }
    os << ")";
    labels.push_back(os.str());
  }
  std::string name = (p == 2 && m == 2) ? "C2xC2"
                                        : "C" + std::to_string(p) + "^" + std::to_string(m);
  return from_table(std::move(table), std::move(name), std::move(labels));
}

FiniteGroup FiniteGroup::dihedral(int n) {
  if (n < 2) throw std::invalid_argument("dihedral: n < 2");
  // Elements 0..n-1 are r^i, n..2n-1 are r^i s, with s r = r^{-1} s.
  const int m = 2 * n;
  auto rot = [&](int e) { return e < n ? e : e - n; };
  auto flip = [&](int e) { return e >= n; };
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  std::vector<std::string> labels;
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      int ra = rot(a), rb = rot(b);
      int r = flip(a) ? (ra - rb % n + n) % n : (ra + rb) % n;
      table[a][b] = (flip(a) != flip(b)) ? r + n : r;
    }
    std::string base = rot(a) == 0 ? "" : (rot(a) == 1 ? "r" : "r^" + std::to_string(rot(a)));
    labels.push_back(flip(a) ? (base.empty() ? "s" : base + "*s") : (base.empty() ? "1" : base));
  }
  return from_table(std::move(table), "D" + std::to_string(n), std::move(labels));
}

FiniteGroup FiniteGroup::symmetric(int n) {
  if (n < 1 || n > 4) throw std::invalid_argument("symmetric: supported for n <= 4");
  std::vector<Perm> elems;
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  do {
    elems.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  // Lexicographic enumeration puts the identity first.
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < elems.size(); ++i) index[elems[i].images()] = static_cast<int>(i);
  const int m = static_cast<int>(elems.size());
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  std::vector<std::string> labels;
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) table[a][b] = index.at((elems[a] * elems[b]).images());
    labels.push_back(elems[a].cycle_str());
  }
  return from_table(std::move(table), "S" + std::to_string(n), std::move(labels));
}

FiniteGroup FiniteGroup::quaternion8() {
  // Indices: 0:1, 1:-1, 2:i, 3:-i, 4:j, 5:-j, 6:k, 7:-k.
  // axis 0 = scalar, 1 = i, 2 = j, 3 = k; element = (axis, sign).
  auto enc = [](int axis, int sign) { return 2 * axis + (sign < 0 ? 1 : 0); };
  auto axis_of = [](int e) { return e / 2; };
  auto sign_of = [](int e) { return e % 2 ? -1 : 1; };
  // i*j = k, j*k = i, k*i = j; reverse order negates; equal axes square to -1.
  auto axis_mul = [](int a, int b, int& sign) -> int {
    if (a == 0) return b;
    if (b == 0) return a;
    if (a == b) {
      sign = -sign;
      return 0;
    }
    int c = 6 - a - b;  // the remaining axis among {1,2,3}
    // (a,b) in cyclic order (1,2),(2,3),(3,1) keeps sign, otherwise negates.
    bool cyclic = (b - a + 3) % 3 == 1;
    if (!cyclic) sign = -sign;
    return c;
  };
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int sign = sign_of(a) * sign_of(b);
      int axis = axis_mul(axis_of(a), axis_of(b), sign);
      table[a][b] = enc(axis, sign);
    }
  return from_table(std::move(table), "Q8", {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

FiniteGroup FiniteGroup::units_mod(int n) {
  if (n < 2) throw std::invalid_argument("units_mod: n < 2");
  std::vector<int> units;
  for (int a = 1; a < n; ++a)
    if (std::gcd(a, n) == 1) units.push_back(a);
  const int m = static_cast<int>(units.size());
  std::map<int, int> index;
  for (int i = 0; i < m; ++i) index[units[i]] = i;
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  std::vector<std::string> labels;
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) table[a][b] = index.at(units[a] * units[b] % n);
    labels.push_back(std::to_string(units[a]));
  }
  return from_table(std::move(table), "(Z/" + std::to_string(n) + ")^*", std::move(labels));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int na = a.size(), nb = b.size(), n = na * nb;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> labels;
  for (int x = 0; x < n; ++x) {
    int xa = x / nb, xb = x % nb;
    for (int y = 0; y < n; ++y)
      table[x][y] = a.mult(xa, y / nb) * nb + b.mult(xb, y % nb);
    labels.push_back("(" + a.label(xa) + "," + b.label(xb) + ")");
  }
  return from_table(std::move(table), a.name() + "x" + b.name(), std::move(labels));
}

FiniteGroup FiniteGroup::holomorph_cyclic(int n) {
  std::vector<int> units;
  for (int u = 1; u < n; ++u)
    if (std::gcd(u, n) == 1) units.push_back(u);
  if (n == 1) units = {0};  // degenerate: trivial group
  const int nu = static_cast<int>(units.size());
  // Element index = u_index * n + a for the pair (a, u); (0, 1) is first.
  const int m = nu * n;
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  std::vector<std::string> labels;
  for (int x = 0; x < m; ++x) {
    int ux = units[x / n], ax = x % n;
    for (int y = 0; y < m; ++y) {
      int uy = units[y / n], ay = y % n;
      int az = (ax + ux * ay) % n;
      int uz = n == 1 ? 0 : (ux * uy) % n;
      int uzi = static_cast<int>(std::find(units.begin(), units.end(), uz) - units.begin());
      table[x][y] = uzi * n + az;
    }
    labels.push_back("(" + std::to_string(ax) + "," + std::to_string(ux) + ")");
  }
  return from_table(std::move(table), "Hol(C" + std::to_string(n) + ")", std::move(labels));
}

FiniteGroup FiniteGroup::from_spec(const std::string& spec) {
  std::string s;
  for (char c : spec)
    if (!isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "D3") return dihedral(3);
  if (s == "D4") return dihedral(4);
  if (s == "S3") return symmetric(3);
  if (s == "S4") return symmetric(4);
  if (s == "Q8") return quaternion8();

  // Remaining syntax: products of cyclic parts "C<n>" or "C<p>^<m>".
  std::vector<std::string> parts;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t next = s.find('x', pos);
    if (next == std::string::npos) next = s.size();
    parts.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
  if (parts.empty()) throw std::invalid_argument("from_spec: empty spec");
  std::optional<FiniteGroup> acc;
  for (const auto& part : parts) {
    if (part.size() < 2 || part[0] != 'C')
      throw std::invalid_argument("from_spec: unknown group '" + spec + "'");
    FiniteGroup factor;
    size_t caret = part.find('^');
    if (caret == std::string::npos) {
      factor = cyclic(std::stoi(part.substr(1)));
    } else {
      factor = elementary_abelian(std::stoi(part.substr(1, caret - 1)),
                                  std::stoi(part.substr(caret + 1)));
    }
    acc = acc ? direct_product(*acc, factor) : factor;
  }
  FiniteGroup g = *acc;
  return g;
}

int FiniteGroup::pow(int a, long e) const {
  long ord = order_[a];
  e %= ord;
  if (e < 0) e += ord;
  int acc = 0, base = a;
  while (e) {
    if (e & 1) acc = mult(acc, base);
    base = mult(base, base);
    e >>= 1;
  }
  return acc;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (table_[a][b] != table_[b][a]) return false;
  return true;
}

std::vector<int> FiniteGroup::center() const {
  std::vector<int> out;
  for (int a = 0; a < n_; ++a) {
    bool central = true;
    for (int b = 0; b < n_ && central; ++b) central = table_[a][b] == table_[b][a];
    if (central) out.push_back(a);
  }
  return out;
}

std::vector<std::vector<int>> FiniteGroup::conjugacy_classes() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(n_, false);
  for (int a = 0; a < n_; ++a) {
    if (seen[a]) continue;
    std::set<int> cls;
    for (int g = 0; g < n_; ++g) cls.insert(mult(mult(g, a), inv_[g]));
    for (int x : cls) seen[x] = true;
    out.emplace_back(cls.begin(), cls.end());
  }
  return out;
}

std::vector<int> FiniteGroup::subgroup_closure(const std::vector<int>& gens) const {
  std::set<int> closure{0};
  std::vector<int> frontier{0};
  for (int g : gens)
    if (closure.insert(g).second) frontier.push_back(g);
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int a : frontier)
      for (int b : std::vector<int>(closure.begin(), closure.end())) {
        for (int c : {mult(a, b), mult(b, a)})
          if (closure.insert(c).second) next.push_back(c);
      }
    frontier = std::move(next);
  }
  return std::vector<int>(closure.begin(), closure.end());
}

std::vector<int> FiniteGroup::commutator_subgroup() const {
  std::vector<int> comms;
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      comms.push_back(mult(mult(a, b), mult(inv_[a], inv_[b])));
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  return subgroup_closure(comms);
}

bool FiniteGroup::is_normal(const std::vector<int>& subgroup) const {
  std::set<int> sub(subgroup.begin(), subgroup.end());
  for (int g = 0; g < n_; ++g)
    for (int w : subgroup)
      if (!sub.count(mult(mult(g, w), inv_[g]))) return false;
  return true;
}

GroupQuotient FiniteGroup::quotient(const std::vector<int>& normal_subgroup) const {
  if (!is_normal(normal_subgroup))
    throw std::invalid_argument("quotient: subgroup is not normal");
  std::set<int> sub(normal_subgroup.begin(), normal_subgroup.end());
  if (!sub.count(0)) throw std::invalid_argument("quotient: subgroup lacks identity");

  GroupQuotient q;
  q.coset_of.assign(n_, -1);
  for (int g = 0; g < n_; ++g) {
    if (q.coset_of[g] >= 0) continue;
    std::set<int> coset;
    for (int w : sub) coset.insert(mult(g, w));
    int idx = static_cast<int>(q.cosets.size());
    for (int x : coset) q.coset_of[x] = idx;
    q.cosets.emplace_back(coset.begin(), coset.end());
  }
  const int m = static_cast<int>(q.cosets.size());
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  std::vector<std::string> labels;
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) table[a][b] = q.coset_of[mult(q.cosets[a][0], q.cosets[b][0])];
    labels.push_back("[" + label(q.cosets[a][0]) + "]");
  }
  q.group = from_table(std::move(table), name_ + "/W", std::move(labels));
  return q;
}

// Greedy generating set: repeatedly adjoin the highest-order element not yet
// generated. Deterministic and small (<= log2 |G| elements).
std::vector<int> generating_set(const FiniteGroup& g) {
  std::vector<int> by_order(g.size());
  std::iota(by_order.begin(), by_order.end(), 0);
  std::sort(by_order.begin(), by_order.end(), [&](int a, int b) {
    if (g.order_of(a) != g.order_of(b)) return g.order_of(a) > g.order_of(b);
    return a < b;
  });
  std::vector<int> gens;
  std::set<int> closure{0};
  for (int e : by_order) {
    if (closure.count(e)) continue;
    gens.push_back(e);
    auto cl = g.subgroup_closure(gens);
    closure = std::set<int>(cl.begin(), cl.end());
    if (static_cast<int>(closure.size()) == g.size()) break;
  }
  return gens;
}

bool GroupHom::is_homomorphism() const {
  if (static_cast<int>(images.size()) != source.size()) return false;
  for (int v : images)
    if (v < 0 || v >= target.size()) return false;
  if (images[0] != 0) return false;
  for (int a = 0; a < source.size(); ++a)
    for (int b = 0; b < source.size(); ++b)
      if (images[source.mult(a, b)] != target.mult(images[a], images[b])) return false;
  return true;
}

bool GroupHom::is_injective() const {
  std::set<int> seen(images.begin(), images.end());
  return static_cast<int>(seen.size()) == source.size();
}

bool GroupHom::is_surjective() const {
  std::set<int> seen(images.begin(), images.end());
  return static_cast<int>(seen.size()) == target.size();
}

namespace {

// Extends gens -> images to a homomorphism by closing under products.
// Returns the full image vector if consistent and bijective.
std::optional<std::vector<int>> extend_hom(const FiniteGroup& g, const FiniteGroup& h,
                                           const std::vector<int>& gens,
                                           const std::vector<int>& images) {
  std::vector<int> phi(g.size(), -1);
  phi[0] = 0;
  std::vector<int> known{0};
  for (size_t i = 0; i < gens.size(); ++i) {
    if (phi[gens[i]] >= 0) {
      if (phi[gens[i]] != images[i]) return std::nullopt;
    } else {
      phi[gens[i]] = images[i];
      known.push_back(gens[i]);
    }
  }
  // Close under products; every element is a word in the generators.
  for (size_t i = 0; i < known.size(); ++i) {
    for (size_t j = 0; j < known.size(); ++j) {
      for (auto [x, y] : {std::pair{known[i], known[j]}, std::pair{known[j], known[i]}}) {
        int p = g.mult(x, y);
        int q = h.mult(phi[x], phi[y]);
        if (phi[p] < 0) {
          phi[p] = q;
          known.push_back(p);
        } else if (phi[p] != q) {
          return std::nullopt;
        }
      }
    }
  }
  if (static_cast<int>(known.size()) != g.size()) return std::nullopt;
  std::vector<bool> hit(h.size(), false);
  for (int v : phi) {
    if (v < 0 || hit[v]) return std::nullopt;
    hit[v] = true;
  }
  for (int a = 0; a < g.size(); ++a)
    for (int b = 0; b < g.size(); ++b)
      if (phi[g.mult(a, b)] != h.mult(phi[a], phi[b])) return std::nullopt;
  return phi;
}

std::vector<std::vector<int>> all_isomorphisms(const FiniteGroup& g, const FiniteGroup& h,
                                               bool first_only) {
  std::vector<std::vector<int>> found;
  if (g.size() != h.size()) return found;
  {
    auto og = g.element_orders();
    auto oh = h.element_orders();
    std::sort(og.begin(), og.end());
    std::sort(oh.begin(), oh.end());
    if (og != oh) return found;
    if (g.center().size() != h.center().size()) return found;
    if (g.conjugacy_classes().size() != h.conjugacy_classes().size()) return found;
  }
  auto gens = generating_set(g);
  std::vector<std::vector<int>> candidates(gens.size());
  for (size_t i = 0; i < gens.size(); ++i)
    for (int e = 0; e < h.size(); ++e)
      if (h.order_of(e) == g.order_of(gens[i])) candidates[i].push_back(e);

  std::vector<int> images(gens.size());
  auto rec = [&](auto&& self, size_t level) -> bool {
    if (level == gens.size()) {
      auto phi = extend_hom(g, h, gens, images);
      if (phi) {
        found.push_back(*phi);
        return first_only;
      }
      return false;
    }
    for (int cand : candidates[level]) {
      images[level] = cand;
      if (self(self, level + 1)) return true;
    }
    return false;
  };
  rec(rec, 0);
  return found;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h) {
  auto all = all_isomorphisms(g, h, true);
  if (all.empty()) return std::nullopt;
  return all.front();
}

bool is_isomorphic(const FiniteGroup& g, const FiniteGroup& h) {
  return find_isomorphism(g, h).has_value();
}

std::string small_group_type(const FiniteGroup& g) {
  const int n = g.size();
  auto orders = g.element_orders();
  int max_order = *std::max_element(orders.begin(), orders.end());
  int inv_count = static_cast<int>(std::count(orders.begin(), orders.end(), 2));
  switch (n) {
    case 1: return "C1";
    case 2: return "C2";
    case 3: return "C3";
    case 4: return max_order == 4 ? "C4" : "C2xC2";
    case 5: return "C5";
    case 6: return g.is_abelian() ? "C6" : "S3";
    case 7: return "C7";
    case 8:
      if (max_order == 8) return "C8";
      if (g.is_abelian()) return inv_count == 3 ? "C4xC2" : "C2^3";
      return inv_count == 5 ? "D4" : "Q8";
    case 9: return max_order == 9 ? "C9" : "C3^2";
    default: throw std::invalid_argument("small_group_type: order > 9");
  }
}

AutomorphismGroup automorphism_group(const FiniteGroup& g) {
  auto maps = all_isomorphisms(g, g, false);
  if (maps.empty()) throw std::logic_error("automorphism_group: none found");
  std::sort(maps.begin(), maps.end());
  // The identity map is lexicographically minimal (any other map must first
  // deviate upward, since smaller values are already used), so maps[0] = id.
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < maps.size(); ++i) index[maps[i]] = static_cast<int>(i);
  const int m = static_cast<int>(maps.size());
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      std::vector<int> comp(g.size());
      for (int x = 0; x < g.size(); ++x) comp[x] = maps[a][maps[b][x]];
      table[a][b] = index.at(comp);
    }
  AutomorphismGroup out;
  out.group = FiniteGroup::from_table(std::move(table), "Aut(" + g.name() + ")");
  out.maps = std::move(maps);
  return out;
}

}  // namespace hopfforms

#include "hopfforms/regular.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

namespace hopfforms {

std::vector<Perm> left_regular_rep(const FiniteGroup& g) {
  std::vector<Perm> out;
  out.reserve(g.size());
  for (int a = 0; a < g.size(); ++a) {
    std::vector<int> img(g.size());
    for (int x = 0; x < g.size(); ++x) img[x] = g.mult(a, x);
    out.emplace_back(std::move(img));
  }
  return out;
}

int RegularSubgroup::index_of(const Perm& p) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), p);
  if (it == elements.end() || !(*it == p)) return -1;
  return static_cast<int>(it - elements.begin());
}

namespace {

using SetKey = std::vector<std::vector<int>>;  // sorted image lists

SetKey key_of(const std::set<Perm>& s) {
  SetKey k;
  k.reserve(s.size());
  for (const Perm& p : s) k.push_back(p.images());
  return k;
}

// Multiplicative closure of a lambda-stable seed; nullopt once it exceeds
// max_size. Products of lambda-stable sets are lambda-stable, so the result
// is again normalized by lambda(G).
std::optional<std::set<Perm>> closed_span(const std::set<Perm>& seed, int max_size) {
  std::set<Perm> s;
  s.insert(Perm::identity(seed.empty() ? 1 : seed.begin()->degree()));
  std::vector<Perm> frontier;
  for (const Perm& p : seed)
    if (s.insert(p).second) frontier.push_back(p);
  while (!frontier.empty()) {
    if (static_cast<int>(s.size()) > max_size) return std::nullopt;
    std::vector<Perm> next;
    std::vector<Perm> snapshot(s.begin(), s.end());
    for (const Perm& a : frontier)
      for (const Perm& b : snapshot)
        for (const Perm& c : {a * b, b * a})
          if (s.insert(c).second) next.push_back(c);
    frontier = std::move(next);
  }
  if (static_cast<int>(s.size()) > max_size) return std::nullopt;
  return s;
}

std::set<Perm> lambda_orbit(const Perm& p, const std::vector<Perm>& lambda,
                            const std::vector<Perm>& lambda_inv) {
  std::set<Perm> orbit;
  for (size_t i = 0; i < lambda.size(); ++i) orbit.insert(lambda[i] * p * lambda_inv[i]);
  return orbit;
}

bool is_transitive(const std::set<Perm>& s, int degree) {
  std::set<int> orbit{0};
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier)
      for (const Perm& p : s)
        if (orbit.insert(p(x)).second) next.push_back(p(x));
    frontier = std::move(next);
  }
  return static_cast<int>(orbit.size()) == degree;
}

}  // namespace

RegularSubgroup make_regular_subgroup(std::vector<Perm> elements, const FiniteGroup& g) {
  const int n = g.size();
  std::sort(elements.begin(), elements.end());
  if (static_cast<int>(elements.size()) != n)
    throw std::invalid_argument("regular subgroup: wrong order");
  // Every non-identity element of a regular group is fixed-point-free, so the
  // identity (image list 0,1,2,...) sorts first.
  if (!elements[0].is_identity()) throw std::invalid_argument("regular subgroup: no identity");
  for (size_t i = 1; i < elements.size(); ++i)
    if (elements[i].has_fixed_point())
      throw std::invalid_argument("regular subgroup: fixed point in non-identity element");
  std::set<Perm> s(elements.begin(), elements.end());
  if (!is_transitive(s, n)) throw std::invalid_argument("regular subgroup: not transitive");
  for (const Perm& a : elements)
    for (const Perm& b : elements)
      if (!s.count(a * b)) throw std::invalid_argument("regular subgroup: not closed");
  auto lambda = left_regular_rep(g);
  for (const Perm& l : lambda)
    for (const Perm& p : elements)
      if (!s.count(l * p * l.inverse()))
        throw std::invalid_argument("regular subgroup: not normalized by lambda(G)");

  RegularSubgroup out;
  out.elements = std::move(elements);
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < out.elements.size(); ++i)
    index[out.elements[i].images()] = static_cast<int>(i);
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table[a][b] = index.at((out.elements[a] * out.elements[b]).images());
  out.model = FiniteGroup::from_table(std::move(table), "N");
  try {
    out.type = small_group_type(out.model);
  } catch (const std::invalid_argument&) {
    out.type = "order" + std::to_string(n);
  }
  return out;
}

std::vector<RegularSubgroup> enumerate_regular_subgroups(const FiniteGroup& g,
                                                         const EnumerateOptions& opts) {
  const int n = g.size();
  auto lambda = left_regular_rep(g);
  std::vector<Perm> lambda_inv;
  for (const Perm& l : lambda) lambda_inv.push_back(l.inverse());

  // Candidate elements: non-identity members of any regular subgroup are
  // fixed-point-free of order dividing |G|.
  std::vector<Perm> candidates;
  {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    do {
      Perm p(img);
      if (p.is_identity() || p.has_fixed_point()) continue;
      if (n % p.order() != 0) continue;
      candidates.push_back(p);
    } while (std::next_permutation(img.begin(), img.end()));
  }

  std::map<SetKey, std::set<Perm>> complete;  // closures of size exactly n
  std::map<SetKey, std::set<Perm>> partial;   // proper lambda-stable subgroups
  std::set<SetKey> seen;
  std::mutex merge_mutex;

  int workers = std::max(1, opts.workers);

  // One expansion round: close each (base, candidate) pair and file the
  // result by size. Bases are lambda-stable, so closures stay lambda-stable.
  auto run_round = [&](const std::vector<const std::set<Perm>*>& bases) {
    std::vector<std::map<SetKey, std::set<Perm>>> fresh_local(workers);
    auto work = [&](int w) {
      for (size_t bi = 0; bi < bases.size(); ++bi) {
        for (size_t ci = w; ci < candidates.size(); ci += workers) {
          const Perm& c = candidates[ci];
          if (bases[bi]->count(c)) continue;
          std::set<Perm> seed = *bases[bi];
          auto orbit = lambda_orbit(c, lambda, lambda_inv);
          seed.insert(orbit.begin(), orbit.end());
          auto span = closed_span(seed, n);
          if (!span) continue;
          fresh_local[w].emplace(key_of(*span), std::move(*span));
        }
      }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
      for (auto& t : pool) t.join();
    }
    std::vector<const std::set<Perm>*> fresh_partials;
    std::lock_guard<std::mutex> lock(merge_mutex);
    for (auto& local : fresh_local) {
      for (auto& [key, span] : local) {
        if (!seen.insert(key).second) continue;
        if (static_cast<int>(span.size()) == n) {
          complete.emplace(key, std::move(span));
        } else {
          auto [it, fresh] = partial.emplace(key, std::move(span));
          if (fresh) fresh_partials.push_back(&it->second);
        }
      }
    }
    return fresh_partials;
  };

  std::set<Perm> trivial{Perm::identity(n)};
  std::vector<const std::set<Perm>*> frontier{&trivial};
  while (!frontier.empty()) frontier = run_round(frontier);

  std::vector<RegularSubgroup> out;
  for (const auto& [key, span] : complete) {
    if (!is_transitive(span, n)) continue;
    std::vector<Perm> elems(span.begin(), span.end());
    bool fpf = true;
    for (const Perm& p : elems)
      if (!p.is_identity() && p.has_fixed_point()) fpf = false;
    if (!fpf) continue;
    RegularSubgroup rs = make_regular_subgroup(std::move(elems), g);
    if (opts.type_filter) {
      FiniteGroup want = FiniteGroup::from_spec(*opts.type_filter);
      if (!is_isomorphic(want, rs.model)) continue;
    }
    out.push_back(std::move(rs));
  }
  // std::map iteration already sorted by key; out inherits that order.
  return out;
}

std::vector<Perm> centralizer_in_sym(const std::vector<Perm>& n, int degree) {
  std::vector<Perm> out;
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  do {
    Perm p(img);
    bool commutes = true;
    for (const Perm& q : n) {
      if (!(p * q == q * p)) {
        commutes = false;
        break;
      }
    }
    if (commutes) out.push_back(p);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

std::vector<int> compute_w(const FiniteGroup& g, const RegularSubgroup& n) {
  auto lambda = left_regular_rep(g);
  std::vector<int> out;
  for (int a = 0; a < g.size(); ++a) {
    bool commutes = true;
    for (const Perm& p : n.elements) {
      if (!(lambda[a] * p == p * lambda[a])) {
        commutes = false;
        break;
      }
    }
    if (commutes) out.push_back(a);
  }
  return out;
}

ConjugationAction conjugation_action(const FiniteGroup& g, const RegularSubgroup& n) {
  ConjugationAction out;
  auto w = compute_w(g, n);
  out.quotient = g.quotient(w);
  auto lambda = left_regular_rep(g);

  const int m = static_cast<int>(out.quotient.cosets.size());
  out.action.resize(m);
  for (int i = 0; i < m; ++i) {
    int rep = out.quotient.cosets[i][0];
    Perm conj_inv = lambda[rep].inverse();
    std::vector<int> act(n.elements.size());
    for (size_t j = 0; j < n.elements.size(); ++j) {
      int img = n.index_of(lambda[rep] * n.elements[j] * conj_inv);
      if (img < 0) throw std::logic_error("conjugation_action: N not normalized");
      act[j] = img;
    }
    out.action[i] = std::move(act);
  }
  {
    std::set<std::vector<int>> distinct(out.action.begin(), out.action.end());
    out.faithful = distinct.size() == out.action.size();
    auto aut = automorphism_group(n.model);
    out.aut_order = static_cast<int>(aut.maps.size());
    std::set<std::vector<int>> all(aut.maps.begin(), aut.maps.end());
    bool onto = distinct.size() == all.size();
    for (const auto& a : distinct)
      if (!all.count(a)) onto = false;
    out.onto_aut = onto;
  }
  return out;
}

QuotientEmbedding quotient_embedding(const FiniteGroup& g, const RegularSubgroup& n) {
  auto ca = conjugation_action(g, n);
  auto aut = automorphism_group(n.model);
  std::map<std::vector<int>, int> aut_index;
  for (size_t i = 0; i < aut.maps.size(); ++i) aut_index[aut.maps[i]] = static_cast<int>(i);

  QuotientEmbedding out;
  out.hom.source = ca.quotient.group;
  out.hom.target = aut.group;
  out.hom.images.resize(ca.action.size());
  for (size_t i = 0; i < ca.action.size(); ++i) {
    auto it = aut_index.find(ca.action[i]);
    if (it == aut_index.end())
      throw std::logic_error("quotient_embedding: conjugation is not an automorphism of N");
    out.hom.images[i] = it->second;
  }
  out.surjective = ca.onto_aut;
  if (!out.hom.is_homomorphism() || !out.hom.is_injective())
    throw std::logic_error("quotient_embedding: G/W -> Aut(N) not an embedding");
  return out;
}

}  // namespace hopfforms

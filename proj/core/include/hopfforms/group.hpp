#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfforms/perm.hpp"

namespace hopfforms {

struct GroupQuotient;

// Finite group given by its Cayley table. Elements are 0..n-1 and element 0
// is always the identity.
class FiniteGroup {
public:
  FiniteGroup() = default;

  // table[a][b] = a*b. Validates identity at 0, associativity and inverses.
  static FiniteGroup from_table(std::vector<std::vector<int>> table, std::string name = "",
                                std::vector<std::string> labels = {});

  static FiniteGroup cyclic(int n);
  static FiniteGroup elementary_abelian(int p, int m);
  static FiniteGroup dihedral(int n);  // order 2n; elements r^i, r^i s
  static FiniteGroup symmetric(int n); // n <= 4
  // Basis (1, -1, i, -i, j, -j, k, -k) with ij = k, jk = i, ki = j.
  static FiniteGroup quaternion8();
  static FiniteGroup units_mod(int n);  // (Z/nZ)^* under multiplication
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
  // Hol(C_n) = C_n x| (Z/n)^*: (a,u)(b,v) = (a + u b, u v).
  static FiniteGroup holomorph_cyclic(int n);

  // Parses "C6", "C3^2", "C4xC2", "C2xC2", "D3", "D4", "S3", "S4", "Q8".
  static FiniteGroup from_spec(const std::string& spec);

  int size() const { return n_; }
  int mult(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inv_[a]; }
  int order_of(int a) const { return order_[a]; }
  const std::string& name() const { return name_; }
  const std::string& label(int a) const { return labels_[a]; }
  const std::vector<std::vector<int>>& table() const { return table_; }

  int pow(int a, long e) const;
  bool is_abelian() const;
  std::vector<int> element_orders() const { return order_; }  // indexed by element
  std::vector<int> center() const;
  std::vector<std::vector<int>> conjugacy_classes() const;
  std::vector<int> subgroup_closure(const std::vector<int>& gens) const;
  std::vector<int> commutator_subgroup() const;
  bool is_normal(const std::vector<int>& subgroup) const;

  // Quotient by a normal subgroup. Cosets are ordered by minimal
  // representative; coset_of[g] gives the quotient index of g.
  GroupQuotient quotient(const std::vector<int>& normal_subgroup) const;

private:
  int n_ = 0;
  std::vector<std::vector<int>> table_;
  std::vector<int> inv_;
  std::vector<int> order_;
  std::string name_;
  std::vector<std::string> labels_;
};

struct GroupQuotient {
  FiniteGroup group;
  std::vector<int> coset_of;
  std::vector<std::vector<int>> cosets;
};

// Deterministic generating set (greedy by descending element order).
std::vector<int> generating_set(const FiniteGroup& g);

// Group homomorphism as an image vector: images[g] in target for g in source.
struct GroupHom {
  FiniteGroup source;
  FiniteGroup target;
  std::vector<int> images;

  bool is_homomorphism() const;
  bool is_injective() const;
  bool is_surjective() const;
};

// Isomorphism as image vector: phi[g] in H for g in G. Returns the first
// found in a deterministic search order, or nullopt. Brute force over
// generator images after invariant prefilters; intended for |G| <= 48.
std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h);
bool is_isomorphic(const FiniteGroup& g, const FiniteGroup& h);

// Names the isomorphism class of a group of order <= 8 ("C4", "C2xC2", ...).
std::string small_group_type(const FiniteGroup& g);

// Full automorphism group: maps[i] is an automorphism as an image vector,
// maps[0] the identity, remainder sorted; group is the Cayley table under
// composition maps[i] after maps[j].
struct AutomorphismGroup {
  FiniteGroup group;
  std::vector<std::vector<int>> maps;

  int apply(int auto_index, int elem) const { return maps[auto_index][elem]; }
};
AutomorphismGroup automorphism_group(const FiniteGroup& g);

}  // namespace hopfforms

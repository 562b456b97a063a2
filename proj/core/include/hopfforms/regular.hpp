#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfforms/group.hpp"
#include "hopfforms/perm.hpp"

namespace hopfforms {

// Left regular representation: lambda(g)(x) = g*x, indexed by group element.
std::vector<Perm> left_regular_rep(const FiniteGroup& g);

// A regular subgroup N <= Sym(G) normalized by lambda(G), as a sorted list
// of permutations with an abstract Cayley-table model attached.
struct RegularSubgroup {
  std::vector<Perm> elements;  // sorted; elements[0] is the identity
  FiniteGroup model;           // Cayley table of the permutations
  std::string type;            // isomorphism class name, e.g. "C4"

  int index_of(const Perm& p) const;  // -1 if absent
};

struct EnumerateOptions {
  std::optional<std::string> type_filter;  // keep only N isomorphic to this
  int workers = 1;                         // candidate-sharding threads
};

// All regular subgroups of Sym(G) normalized by the left regular image of G.
// Deterministic output order (by element-image lists) regardless of workers.
std::vector<RegularSubgroup> enumerate_regular_subgroups(const FiniteGroup& g,
                                                         const EnumerateOptions& opts = {});

// Builds the RegularSubgroup wrapper (sorted elements, model, type) from an
// unsorted list of permutations; validates regularity and normalization.
RegularSubgroup make_regular_subgroup(std::vector<Perm> elements, const FiniteGroup& g);

// Elements of Sym(degree) commuting with every element of n (brute force).
std::vector<Perm> centralizer_in_sym(const std::vector<Perm>& n, int degree);

// W = lambda(G) cap Centralizer(N), returned as group-element indices.
// This is the kernel of the conjugation action of G on N.
std::vector<int> compute_w(const FiniteGroup& g, const RegularSubgroup& n);

// The conjugation action of G/W on N: G/W -> Aut(N) with conjugation by
// lambda(g). Always injective by construction of W.
struct ConjugationAction {
  GroupQuotient quotient;                  // G/W
  std::vector<std::vector<int>> action;    // per coset: index map on n.elements
  bool faithful = false;                   // distinct automorphisms per coset
  bool onto_aut = false;                   // image is all of Aut(N)
  int aut_order = 0;                       // |Aut(N)| of the abstract model
};
ConjugationAction conjugation_action(const FiniteGroup& g, const RegularSubgroup& n);

// The same action packaged as a homomorphism G/W -> Aut(N), with the target
// the abstract automorphism group of n.model. surjective flags whether the
// image is all of Aut(N).
struct QuotientEmbedding {
  GroupHom hom;
  bool surjective = false;
};
QuotientEmbedding quotient_embedding(const FiniteGroup& g, const RegularSubgroup& n);

}  // namespace hopfforms

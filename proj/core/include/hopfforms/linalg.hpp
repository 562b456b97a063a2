#pragma once

#include <map>
#include <optional>
#include <vector>

#include "hopfforms/rational.hpp"

namespace hopfforms {

using QVec = std::vector<Rat>;

QVec qvec_zero(int n);
QVec qvec_add(const QVec& a, const QVec& b);
QVec qvec_sub(const QVec& a, const QVec& b);
QVec qvec_scale(const Rat& s, const QVec& a);
bool qvec_is_zero(const QVec& a);

// Sparse vector: entries sorted by column, all values nonzero.
struct SparseVec {
  std::vector<std::pair<int, Rat>> e;

  static SparseVec from_dense(const QVec& v);
  QVec to_dense(int n) const;
  bool empty() const { return e.empty(); }
  int lead_col() const { return e.front().first; }
  const Rat& lead_val() const { return e.front().second; }
  SparseVec scaled(const Rat& s) const;
  // this + a*y
  SparseVec axpy(const Rat& a, const SparseVec& y) const;
  bool operator==(const SparseVec& o) const { return e == o.e; }
};

// Exact incremental row echelon over Q, rows keyed by pivot column with
// leading coefficient 1. In reduced mode rows are mutually reduced, so the
// stored basis is the canonical reduced echelon basis of the row space
// (independent of insertion order).
class RowEchelon {
public:
  explicit RowEchelon(bool reduced = true) : reduced_(reduced) {}

  SparseVec reduce(SparseVec v) const;
  // Inserts v's reduction if nonzero; returns whether the rank grew.
  bool insert(SparseVec v);
  bool insert_dense(const QVec& v) { return insert(SparseVec::from_dense(v)); }
  int rank() const { return static_cast<int>(rows_.size()); }
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  std::vector<int> pivots() const;
  // Rows ordered by pivot column (canonical in reduced mode).
  std::vector<SparseVec> rows() const;

private:
  bool reduced_;
  std::map<int, SparseVec> rows_;
};

int rank_of(const std::vector<SparseVec>& rows);

// Canonical reduced-echelon basis of {x : M x = 0} where M has the given rows.
// Basis vectors are ordered by their free column, each with a 1 there.
std::vector<QVec> nullspace(const std::vector<SparseVec>& rows, int ncols);

// Expresses vectors in the span of a fixed generator list, exactly.
class LinSolver {
public:
  explicit LinSolver(int dim) : dim_(dim) {}

  void add(const QVec& v);
  void add_sparse(const SparseVec& v);
  int rank() const { return ech_.rank(); }
  int size() const { return ngen_; }
  // c with sum_i c_i * gen_i = v, if solvable; c has one entry per added generator.
  std::optional<QVec> express(const QVec& v) const;
  std::optional<QVec> express_sparse(const SparseVec& v) const;

private:
  int dim_;
  int ngen_ = 0;
  RowEchelon ech_{true};
};

// Rows of an nrows x ? matrix assembled from (row, col, value) triplets
// (values at repeated positions are summed; zeros dropped).
std::vector<SparseVec> rows_from_triplets(int nrows,
                                          const std::vector<std::tuple<int, int, Rat>>& trip);

}  // namespace hopfforms

#include "hopfforms/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace hopfforms {

QVec qvec_zero(int n) { return QVec(n); }

QVec qvec_add(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("qvec_add: size mismatch");
  QVec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

QVec qvec_sub(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("qvec_sub: size mismatch");
  QVec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

QVec qvec_scale(const Rat& s, const QVec& a) {
  QVec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = s * a[i];
  return c;
}

bool qvec_is_zero(const QVec& a) {
  for (const Rat& x : a)
    if (!x.is_zero()) return false;
  return true;
}

SparseVec SparseVec::from_dense(const QVec& v) {
  SparseVec s;
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.e.emplace_back(static_cast<int>(i), v[i]);
  return s;
}

QVec SparseVec::to_dense(int n) const {
  QVec v(n);
  for (const auto& [c, val] : e) {
    if (c >= n) throw std::out_of_range("SparseVec::to_dense: column out of range");
    v[c] = val;
  }
  return v;
}

SparseVec SparseVec::scaled(const Rat& s) const {
  SparseVec out;
  if (s.is_zero()) return out;
  out.e.reserve(e.size());
  for (const auto& [c, val] : e) out.e.emplace_back(c, s * val);
  return out;
}

SparseVec SparseVec::axpy(const Rat& a, const SparseVec& y) const {
  SparseVec out;
  out.e.reserve(e.size() + y.e.size());
  size_t i = 0, j = 0;
  while (i < e.size() || j < y.e.size()) {
    if (j >= y.e.size() || (i < e.size() && e[i].first < y.e[j].first)) {
      out.e.push_back(e[i++]);
    } else if (i >= e.size() || y.e[j].first < e[i].first) {
      Rat v = a * y.e[j].second;
      if (!v.is_zero()) out.e.emplace_back(y.e[j].first, std::move(v));
      ++j;
    } else {
      Rat v = e[i].second + a * y.e[j].second;
      if (!v.is_zero()) out.e.emplace_back(e[i].first, std::move(v));
      ++i, ++j;
    }
  }
  return out;
}

SparseVec RowEchelon::reduce(SparseVec v) const {
  // Entries at columns below the smallest pivot can never change; peel them off
  // as we sweep left to right. Reduction introduces entries only to the right
  // of the eliminated column.
  SparseVec done;
  while (!v.empty()) {
    auto it = rows_.find(v.lead_col());
    if (it == rows_.end()) {
      // move lead entry to output; it is final
      done.e.push_back(v.e.front());
      v.e.erase(v.e.begin());
    } else {
      v = v.axpy(-v.lead_val(), it->second);
    }
  }
  return done;
}

bool RowEchelon::insert(SparseVec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  v = v.scaled(v.lead_val().inv());
  if (reduced_) {
    const int lead = v.lead_col();
    for (auto& [piv, row] : rows_) {
      if (piv >= lead) break;  // rows with pivot >= lead have no entry at lead
      auto pos = std::lower_bound(row.e.begin(), row.e.end(), lead,
                                  [](const auto& p, int c) { return p.first < c; });
      if (pos != row.e.end() && pos->first == lead) row = row.axpy(-pos->second, v);
    }
  }
  rows_.emplace(v.lead_col(), std::move(v));
  return true;
}

std::vector<int> RowEchelon::pivots() const {
  std::vector<int> p;
  p.reserve(rows_.size());
  for (const auto& [c, _] : rows_) p.push_back(c);
  return p;
}

std::vector<SparseVec> RowEchelon::rows() const {
  std::vector<SparseVec> out;
  out.reserve(rows_.size());
  for (const auto& [_, r] : rows_) out.push_back(r);
  return out;
}

int rank_of(const std::vector<SparseVec>& rows) {
  RowEchelon ech(false);
  for (const auto& r : rows) ech.insert(r);
  return ech.rank();
}

std::vector<QVec> nullspace(const std::vector<SparseVec>& rows, int ncols) {
  RowEchelon ech(true);
  for (const auto& r : rows) ech.insert(r);
  std::vector<bool> is_pivot(ncols, false);
  for (int p : ech.pivots()) {
    if (p >= ncols) throw std::out_of_range("nullspace: pivot beyond ncols");
    is_pivot[p] = true;
  }
  auto reduced = ech.rows();
  std::vector<QVec> basis;
  for (int f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    QVec x(ncols);
    x[f] = Rat(1);
    for (const auto& row : reduced) {
      auto pos = std::lower_bound(row.e.begin(), row.e.end(), f,
                                  [](const auto& p, int c) { return p.first < c; });
      if (pos != row.e.end() && pos->first == f) x[row.lead_col()] = -pos->second;
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

void LinSolver::add(const QVec& v) {
  if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("LinSolver::add: size");
  add_sparse(SparseVec::from_dense(v));
}

void LinSolver::add_sparse(const SparseVec& v) {
  SparseVec aug = v;
  aug.e.emplace_back(dim_ + ngen_, Rat(1));  // record the combination
  ++ngen_;
  ech_.insert(std::move(aug));
}

std::optional<QVec> LinSolver::express(const QVec& v) const {
  return express_sparse(SparseVec::from_dense(v));
}

std::optional<QVec> LinSolver::express_sparse(const SparseVec& v) const {
  SparseVec r = ech_.reduce(v);
  QVec coeff(ngen_);
  for (const auto& [c, val] : r.e) {
    if (c < dim_) return std::nullopt;  // not in span
    coeff[c - dim_] = -val;
  }
  return coeff;
}

std::vector<SparseVec> rows_from_triplets(int nrows,
                                          const std::vector<std::tuple<int, int, Rat>>& trip) {
  std::vector<std::map<int, Rat>> acc(nrows);
  for (const auto& [r, c, v] : trip) {
    if (r < 0 || r >= nrows) throw std::out_of_range("rows_from_triplets: row out of range");
    acc[r][c] += v;
  }
  std::vector<SparseVec> rows(nrows);
  for (int r = 0; r < nrows; ++r)
    for (const auto& [c, v] : acc[r])
      if (!v.is_zero()) rows[r].e.emplace_back(c, v);
  return rows;
}

}  // namespace hopfforms

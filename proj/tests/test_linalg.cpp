#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "hopfforms/linalg.hpp"

using namespace hopfforms;

namespace {

QVec qv(std::vector<long> v) {
  QVec out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("qvec arithmetic") {
  CHECK(qvec_add(qv({1, 2}), qv({3, -2})) == qv({4, 0}));
  CHECK(qvec_sub(qv({1, 2}), qv({1, 2})) == qvec_zero(2));
  CHECK(qvec_scale(Rat(1, 2), qv({4, 6})) == qv({2, 3}));
  CHECK(qvec_is_zero(qvec_zero(5)));
  CHECK_FALSE(qvec_is_zero(qv({0, 1, 0})));
}

TEST_CASE("sparse vectors round trip and skip zeros") {
  const QVec d = qv({0, 3, 0, -1, 0});
  const SparseVec s = SparseVec::from_dense(d);
  REQUIRE(s.e.size() == 2);
  CHECK(s.lead_col() == 1);
  CHECK(s.lead_val() == Rat(3));
  CHECK(s.to_dense(5) == d);
  CHECK(SparseVec::from_dense(qvec_zero(4)).empty());

  const SparseVec t = s.axpy(Rat(1, 3), SparseVec::from_dense(qv({0, -9, 0, 0, 7})));
  CHECK(t.to_dense(5) == QVec{Rat(0), Rat(0), Rat(0), Rat(-1), Rat(7, 3)});
  CHECK(s.scaled(Rat(-1)).to_dense(5) == qvec_sub(qvec_zero(5), d));
}

TEST_CASE("row echelon is canonical in reduced mode") {
  RowEchelon a, b;
  const QVec r1 = qv({1, 2, 3}), r2 = qv({0, 1, 1}), r3 = qv({1, 3, 4});
  CHECK(a.insert_dense(r1));
  CHECK(a.insert_dense(r2));
  CHECK_FALSE(a.insert_dense(r3));  // dependent
  CHECK(b.insert_dense(r3));
  CHECK(b.insert_dense(r1));
  CHECK_FALSE(b.insert_dense(r2));
  CHECK(a.rank() == 2);
  CHECK(b.rank() == 2);
  // insertion order does not change the stored basis
  const auto ra = a.rows(), rb = b.rows();
  REQUIRE(ra.size() == rb.size());
  for (size_t i = 0; i < ra.size(); ++i) CHECK(ra[i] == rb[i]);
  CHECK(a.pivots() == std::vector<int>{0, 1});
  CHECK(a.contains(SparseVec::from_dense(qv({2, 5, 7}))));
  CHECK_FALSE(a.contains(SparseVec::from_dense(qv({0, 0, 1}))));
}

TEST_CASE("nullspace basis is reduced echelon with unit free columns") {
  const std::vector<SparseVec> rows = {SparseVec::from_dense(qv({1, 2, 3}))};
  const auto ns = nullspace(rows, 3);
  REQUIRE(ns.size() == 2);
  CHECK(ns[0] == qv({-2, 1, 0}));
  CHECK(ns[1] == qv({-3, 0, 1}));

  // x + y = 0, y + z = 0  ->  span{(1, -1, 1)}
  const std::vector<SparseVec> rows2 = {SparseVec::from_dense(qv({1, 1, 0})),
                                        SparseVec::from_dense(qv({0, 1, 1}))};
  const auto ns2 = nullspace(rows2, 3);
  REQUIRE(ns2.size() == 1);
  CHECK(ns2[0] == qv({1, -1, 1}));

  CHECK(nullspace({SparseVec::from_dense(qv({1, 0})), SparseVec::from_dense(qv({0, 1}))}, 2)
            .empty());
  CHECK(rank_of(rows2) == 2);
  CHECK(rank_of({rows2[0], rows2[0]}) == 1);
}

TEST_CASE("lin solver expresses vectors in a generator list") {
  LinSolver s(3);
  s.add(qv({1, 1, 0}));
  s.add(qv({0, 1, 1}));
  auto c = s.express(qv({1, 2, 1}));
  REQUIRE(c.has_value());
  CHECK(*c == qv({1, 1}));
  CHECK_FALSE(s.express(qv({1, 0, 0})).has_value());
  CHECK(s.rank() == 2);

  // a dependent generator still gets a coefficient slot
  s.add(qv({1, 2, 1}));
  CHECK(s.rank() == 2);
  CHECK(s.size() == 3);
  const QVec target = qv({2, 3, 1});
  auto c2 = s.express(target);
  REQUIRE(c2.has_value());
  REQUIRE(c2->size() == 3);
  QVec recomb = qvec_zero(3);
  const std::vector<QVec> gens = {qv({1, 1, 0}), qv({0, 1, 1}), qv({1, 2, 1})};
  for (int i = 0; i < 3; ++i) recomb = qvec_add(recomb, qvec_scale((*c2)[i], gens[i]));
  CHECK(recomb == target);

  auto c3 = s.express_sparse(SparseVec::from_dense(target));
  REQUIRE(c3.has_value());
  CHECK(*c3 == *c2);
}

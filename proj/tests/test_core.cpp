#include <doctest.h>

#include "cll/core.hpp"
#include "helpers.hpp"

using namespace cll;
using cll_test::ivec;
using cll_test::make;
using cll_test::random_polytope;

namespace {

/// Independent route to the triangular form: build each row directly from
/// the Delta products instead of going through the polynomial transform.
IMat delta_rows_oracle(const CyclicPolytope& p) {
  IMat rows(static_cast<size_t>(p.n()), IVec(static_cast<size_t>(p.d()) + 1, Int(0)));
  for (int i = 1; i <= p.n(); ++i) {
    Int prod = 1;
    rows[static_cast<size_t>(i - 1)][0] = 1;
    for (int k = 1; k <= p.d(); ++k) {
      if (k <= i - 1) {
        prod *= p.delta(k, i);
        rows[static_cast<size_t>(i - 1)][static_cast<size_t>(k)] = prod;
      }
    }
  }
  return rows;
}

}  // namespace

TEST_SUITE("core") {

TEST_CASE("build_polytope evaluates the moment curve") {
  CyclicPolytope p = make(2, {0, 1, 3});
  CHECK(p.vertex(1) == ivec({1, 0, 0}));
  CHECK(p.vertex(2) == ivec({1, 1, 1}));
  CHECK(p.vertex(3) == ivec({1, 3, 9}));
}

TEST_CASE("build_polytope on the named normal d=4 instance") {
  CyclicPolytope p = make(4, {0, 1, 3, 5, 6});
  CHECK(p.n() == 5);
  for (int i = 1; i <= 5; ++i) CHECK(p.vertex(i).size() == 5);
  CHECK(p.delta(1, 2) == 1);
  CHECK(p.delta(2, 3) == 2);
  CHECK(p.delta(3, 4) == 2);
  CHECK(p.delta(4, 5) == 1);
  CHECK(p.vertex(5) == ivec({1, 6, 36, 216, 1296}));
}

TEST_CASE("build_polytope rejects bad parameters") {
  ParameterList bad{3, {Int(0), Int(0), Int(1), Int(2)}};
  CHECK_THROWS_AS(build_polytope(bad), Error);
  try {
    build_polytope(ParameterList{3, {Int(0), Int(0), Int(1), Int(2)}});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonIncreasingParameters);
  }
  try {
    build_polytope(ParameterList{3, {Int(0), Int(1), Int(2)}});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooFewVertices);
  }
}

TEST_CASE("translate_params shifts parameters and keeps the Delta table") {
  CyclicPolytope p = make(2, {0, 2, 3});
  CyclicPolytope q = translate_params(p, Int(-2));
  CHECK(q.tau(1) == -2);
  CHECK(q.tau(2) == 0);
  CHECK(q.tau(3) == 1);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) CHECK(p.delta(i, j) == q.delta(i, j));

  CyclicPolytope r = translate_params(make(4, {0, 1, 3, 5, 6}), Int(10));
  CHECK(r.tau(1) == 10);
  CHECK(r.tau(5) == 16);

  CyclicPolytope s = make(1, {0, 1});
  CyclicPolytope s0 = translate_params(s, Int(0));
  CHECK(s0.params().taus == s.params().taus);
}

TEST_CASE("negate_params reverses the gap sequence") {
  CyclicPolytope p = make(2, {0, 2, 3});
  CyclicPolytope q = negate_params(p);
  CHECK(q.tau(1) == -3);
  CHECK(q.tau(2) == -2);
  CHECK(q.tau(3) == 0);
  CHECK(q.delta(1, 2) == 1);
  CHECK(q.delta(2, 3) == 2);

  CyclicPolytope r = negate_params(make(4, {0, 1, 3, 5, 6}));
  CHECK(r.tau(1) == -6);
  CHECK(r.tau(5) == 0);

  CyclicPolytope rr = negate_params(negate_params(p));
  CHECK(rr.params().taus == p.params().taus);
}

TEST_CASE("delta_matrix_form matches the frozen small example") {
  CyclicPolytope p = make(2, {0, 1, 3});
  DeltaMatrixForm form = delta_matrix_form(p);
  CHECK(form.m[0] == ivec({1, 0, 0}));
  CHECK(form.m[1] == ivec({1, 1, 0}));
  CHECK(form.m[2] == ivec({1, 3, 6}));
}

TEST_CASE("delta_matrix_form row one is a unit row and products close the rows") {
  CyclicPolytope p = make(4, {0, 2, 3, 5, 8});
  DeltaMatrixForm form = delta_matrix_form(p);
  CHECK(form.m[0] == ivec({1, 0, 0, 0, 0}));
  // last entry of row 5: 8*6*5*3
  CHECK(form.m[4][4] == 720);
}

TEST_CASE("delta_matrix_form is exact: V*U = M, |det U| = 1, oracle rows") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    int d = 1 + static_cast<int>(rng() % 5);
    int n = d + 1 + static_cast<int>(rng() % static_cast<unsigned>(8 - d));
    CyclicPolytope p = random_polytope(rng, d, n, 12);
    DeltaMatrixForm form = delta_matrix_form(p);
    Int det = determinant(form.u.matrix);
    CHECK((det == 1 || det == -1));
    IMat oracle = delta_rows_oracle(p);
    CHECK(form.m == oracle);
    for (int i = 1; i <= n; ++i)
      CHECK(row_times_matrix(p.vertex(i), form.u.matrix) == oracle[static_cast<size_t>(i - 1)]);
  }
}

TEST_CASE("Delta table is an exact cocycle") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    CyclicPolytope p = random_polytope(rng, 3, 6, 30);
    for (int i = 1; i <= 6; ++i)
      for (int j = 1; j <= 6; ++j) {
        CHECK(p.delta(i, j) == -p.delta(j, i));
        for (int k = 1; k <= 6; ++k)
          CHECK(p.delta(i, j) + p.delta(j, k) == p.delta(i, k));
      }
  }
}

TEST_CASE("triangular form depends only on the differences") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    CyclicPolytope p = random_polytope(rng, 3, 5, 15);
    CyclicPolytope q = translate_params(p, Int(static_cast<long>(rng() % 50) - 25));
    CHECK(delta_matrix_form(p).m == delta_matrix_form(q).m);
  }
}

}  // TEST_SUITE

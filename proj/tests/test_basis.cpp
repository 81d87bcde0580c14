#include <doctest.h>

#include <algorithm>

#include "cll/basis.hpp"
#include "cll/core.hpp"
#include "helpers.hpp"

using namespace cll;
using cll_test::ivec;
using cll_test::make;
using cll_test::random_polytope;

namespace {

/// Independent rational-arithmetic oracle for b_S.
QVec b_oracle(const CyclicPolytope& p, const std::vector<int>& s) {
  QVec acc(static_cast<size_t>(p.d()) + 1, Rat(0));
  for (int i : s) {
    Rat w(1);
    for (int j : s)
      if (j != i) w /= Rat(p.delta(i, j));
    for (size_t c = 0; c < acc.size(); ++c) acc[c] += w * Rat(p.vertex(i)[c]);
  }
  return acc;
}

std::vector<int> random_subset(std::mt19937_64& rng, int n, int size) {
  std::vector<int> all(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<size_t>(i)] = i + 1;
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(static_cast<size_t>(size));
  return all;
}

}  // namespace

TEST_SUITE("basis") {

TEST_CASE("b of a singleton is the vertex") {
  CyclicPolytope p = make(2, {0, 1, 3});
  CHECK(b_vector(p, {1}).value == p.vertex(1));
  CHECK(b_vector(p, {3}).value == p.vertex(3));
}

TEST_CASE("b_123 on the small example") {
  CyclicPolytope p = make(2, {0, 1, 3});
  BVector b = b_vector(p, {1, 2, 3});
  CHECK(b.value == ivec({0, 0, 1}));
  QVec oracle = b_oracle(p, {1, 2, 3});
  for (size_t c = 0; c < oracle.size(); ++c) CHECK(oracle[c] == Rat(b.value[c]));
}

TEST_CASE("b vanishes once the set is too large") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    CyclicPolytope p = random_polytope(rng, 2, 5, 25);
    std::vector<int> s = random_subset(rng, 5, 4);  // d+2 = 4
    CHECK(ivec_is_zero(b_vector(p, s).value));
  }
}

TEST_CASE("degree coordinate of b is 1 for singletons and 0 otherwise") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 50; ++trial) {
    int d = 1 + static_cast<int>(rng() % 5);
    int n = d + 1 + static_cast<int>(rng() % 3);
    CyclicPolytope p = random_polytope(rng, d, n, 40);
    int size = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
    BVector b = b_vector(p, random_subset(rng, n, size));
    CHECK(b.value[0] == (size == 1 ? 1 : 0));
  }
}

TEST_CASE("b is independent of the input order of S") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 50; ++trial) {
    CyclicPolytope p = random_polytope(rng, 4, 7, 30);
    std::vector<int> s = random_subset(rng, 7, 4);
    std::vector<int> shuffled = s;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(b_vector(p, s).value == b_vector(p, shuffled).value);
  }
}

TEST_CASE("recursion agrees with the direct formula") {
  CyclicPolytope p = make(2, {0, 1, 3});
  CHECK(b_vector_recursive(p, {1, 2, 3}, 1, 3).value == ivec({0, 0, 1}));

  // two-element case: (v_i - v_j)/Delta_ij
  BVector pair = b_vector_recursive(p, {1, 3}, 1, 3);
  IVec diff = ivec_sub(p.vertex(1), p.vertex(3));
  QVec scaled = to_qvec(diff);
  for (Rat& c : scaled) c /= Rat(p.delta(1, 3));
  CHECK(to_qvec(pair.value) == scaled);

  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 200; ++trial) {
    int d = 2 + static_cast<int>(rng() % 4);
    int n = d + 1 + static_cast<int>(rng() % 3);
    CyclicPolytope q = random_polytope(rng, d, n, 35);
    int size = 2 + static_cast<int>(rng() % static_cast<unsigned>(std::min(n, d + 2) - 1));
    std::vector<int> s = random_subset(rng, n, size);
    int a = s[rng() % s.size()];
    int b = a;
    while (b == a) b = s[rng() % s.size()];
    CHECK(b_vector_recursive(q, s, a, b).value == b_vector(q, s).value);
  }
}

TEST_CASE("recursion rejects bad pivots") {
  CyclicPolytope p = make(2, {0, 1, 3});
  CHECK_THROWS_AS(b_vector_recursive(p, {1, 2}, 1, 1), Error);
  CHECK_THROWS_AS(b_vector_recursive(p, {1, 2}, 1, 3), Error);
  CHECK_THROWS_AS(b_vector(p, {}), Error);
}

TEST_CASE("z_basis on the small example") {
  CyclicPolytope p = make(2, {0, 1, 3});
  LatticeBasis basis = z_basis(p, {1, 2, 3});
  CHECK(basis.vectors[0] == ivec({1, 0, 0}));
  CHECK(basis.vectors[1] == ivec({0, -1, -1}));
  CHECK(basis.vectors[2] == ivec({0, 0, 1}));
  CHECK((basis.det == 1 || basis.det == -1));

  LatticeBasis reversed = z_basis(p, {3, 2, 1});
  CHECK((reversed.det == 1 || reversed.det == -1));
}

TEST_CASE("z_basis looks like signed unit vectors in the triangular frame") {
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 25; ++trial) {
    int d = 1 + static_cast<int>(rng() % 4);
    int n = d + 1 + static_cast<int>(rng() % 3);
    CyclicPolytope p = random_polytope(rng, d, n, 25);
    std::vector<int> order = random_subset(rng, n, d + 1);

    std::vector<int> frame_order = order;
    for (int i = 1; i <= n; ++i)
      if (std::find(frame_order.begin(), frame_order.end(), i) == frame_order.end())
        frame_order.push_back(i);
    DeltaMatrixForm form = delta_matrix_form(p, frame_order);

    LatticeBasis basis = z_basis(p, order);
    for (size_t t = 0; t < basis.vectors.size(); ++t) {
      IVec framed = row_times_matrix(basis.vectors[t], form.u.matrix);
      for (size_t c = 0; c < framed.size(); ++c) {
        if (c == t)
          CHECK((framed[c] == 1 || framed[c] == -1));
        else
          CHECK(framed[c] == 0);
      }
    }
  }
}

TEST_CASE("z_basis coordinates round-trip integer points") {
  std::mt19937_64 rng(36);
  for (int trial = 0; trial < 100; ++trial) {
    int d = 1 + static_cast<int>(rng() % 4);
    int n = d + 1 + static_cast<int>(rng() % 3);
    CyclicPolytope p = random_polytope(rng, d, n, 20);
    std::vector<int> order = random_subset(rng, n, d + 1);
    IVec x(static_cast<size_t>(d) + 1);
    for (Int& c : x) c = Int(static_cast<long>(rng() % 2001) - 1000);
    IVec coords = z_basis_coordinates(p, order, x);
    LatticeBasis basis = z_basis(p, order);
    IVec rebuilt(static_cast<size_t>(d) + 1, Int(0));
    for (size_t t = 0; t < coords.size(); ++t)
      for (size_t c = 0; c < rebuilt.size(); ++c)
        rebuilt[c] += coords[t] * basis.vectors[t][c];
    CHECK(rebuilt == x);
  }
}

TEST_CASE("c_basis on the small example lies in the polytope") {
  CyclicPolytope p = make(2, {0, 1, 3});
  LatticeBasis cb = c_basis(p, {1, 2, 3});
  CHECK(cb.vectors[0] == ivec({1, 2, 6}));
  CHECK(cb.vectors[1] == ivec({1, 2, 5}));
  CHECK(cb.vectors[2] == p.vertex(3));
  CHECK((cb.det == 1 || cb.det == -1));
}

TEST_CASE("c_basis properties over random instances") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 60; ++trial) {
    int d = 1 + static_cast<int>(rng() % 4);
    int n = d + 1 + static_cast<int>(rng() % 3);
    CyclicPolytope p = random_polytope(rng, d, n, 25);
    std::vector<int> order = random_subset(rng, n, d + 1);
    std::sort(order.begin(), order.end());
    LatticeBasis cb = c_basis(p, order);  // containment asserted internally
    CHECK(cb.vectors.back() == p.vertex(order.back()));
    for (const IVec& c : cb.vectors) CHECK(c[0] == 1);
    CHECK((cb.det == 1 || cb.det == -1));

    // Arbitrary orders still give a determinant +-1 basis, containment aside.
    std::vector<int> shuffled = order;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    LatticeBasis any = c_basis(p, shuffled);
    CHECK((any.det == 1 || any.det == -1));
  }
}

TEST_CASE("c_basis containment can fail off the ascending order") {
  // (1,1,3) = v1 - v2 + v3 leaves the triangle; the basis is still unimodular.
  CyclicPolytope p = make(2, {0, 1, 2});
  LatticeBasis cb = c_basis(p, {2, 1, 3});
  CHECK((cb.det == 1 || cb.det == -1));
  CHECK(cb.vectors[0] == ivec({1, 1, 3}));
}

TEST_CASE("lattice_index of the homogenized T3 vertices is 2") {
  std::vector<IVec> t3 = {ivec({1, 0, 0, 0}), ivec({1, 1, 1, 0}), ivec({1, 1, 0, 1}),
                          ivec({1, 0, 1, 1})};
  LatticeIndexResult idx = lattice_index(t3);
  REQUIRE(idx.finite);
  CHECK(idx.index == 2);
}

TEST_CASE("lattice_index is infinite for rank-deficient input") {
  LatticeIndexResult idx = lattice_index({ivec({1, 2, 3})});
  CHECK_FALSE(idx.finite);
}

TEST_CASE("the lattice points of a cyclic polytope span the full lattice") {
  std::mt19937_64 rng(38);
  for (int trial = 0; trial < 20; ++trial) {
    int d = 1 + static_cast<int>(rng() % 4);
    int n = d + 1 + static_cast<int>(rng() % 3);
    CyclicPolytope p = random_polytope(rng, d, n, 30);
    std::vector<int> order;
    for (int i = 1; i <= d + 1; ++i) order.push_back(i);
    std::vector<IVec> gens = c_basis(p, order).vectors;  // members of A_P
    for (int i = 1; i <= n; ++i) gens.push_back(p.vertex(i));
    LatticeIndexResult idx = lattice_index(gens);
    REQUIRE(idx.finite);
    CHECK(idx.index == 1);
  }
}

TEST_CASE("RowLattice membership") {
  std::vector<IVec> t3 = {ivec({1, 0, 0, 0}), ivec({1, 1, 1, 0}), ivec({1, 1, 0, 1}),
                          ivec({1, 0, 1, 1})};
  RowLattice lat(t3);
  CHECK(lat.member(ivec({2, 1, 1, 0})));  // v1 + v2
  CHECK(lat.member(ivec({0, 0, 0, 0})));
  CHECK_FALSE(lat.member(ivec({2, 1, 1, 1})));  // the T3 midpoint
}

TEST_CASE("b integrality holds across random draws") {
  std::mt19937_64 rng(39);
  for (int trial = 0; trial < 200; ++trial) {
    int d = 1 + static_cast<int>(rng() % 6);
    int n = d + 1 + static_cast<int>(rng() % 3);
    CyclicPolytope p = random_polytope(rng, d, n, 50);
    int size = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
    CHECK_NOTHROW(b_vector(p, random_subset(rng, n, size)));
  }
}

}  // TEST_SUITE

#include <doctest.h>

#include <algorithm>

#include "cll/facets.hpp"
#include "helpers.hpp"

using namespace cll;
using cll_test::ivec;
using cll_test::make;
using cll_test::random_polytope;

TEST_SUITE("facets") {

TEST_CASE("gale evenness on hand-checked subsets") {
  CyclicPolytope p = make(3, {0, 1, 2, 3, 4});
  CHECK(is_gale_even(p, FacetSet{{1, 2, 5}}));
  CHECK_FALSE(is_gale_even(p, FacetSet{{1, 3, 5}}));

  CyclicPolytope simplex = make(3, {0, 1, 2, 3});
  for (const FacetSet& s :
       {FacetSet{{1, 2, 3}}, FacetSet{{1, 2, 4}}, FacetSet{{1, 3, 4}}, FacetSet{{2, 3, 4}}})
    CHECK(is_gale_even(simplex, s));
}

TEST_CASE("gale evenness rejects malformed subsets") {
  CyclicPolytope p = make(3, {0, 1, 2, 3, 4});
  CHECK_THROWS_AS(is_gale_even(p, FacetSet{{1, 2}}), Error);
  CHECK_THROWS_AS(is_gale_even(p, FacetSet{{1, 2, 9}}), Error);
}

TEST_CASE("enumerate_facets matches the hand enumeration for C_3(5)") {
  CyclicPolytope p = make(3, {0, 1, 2, 3, 4});
  std::vector<FacetSet> facets = enumerate_facets(p);
  std::vector<std::vector<int>> expected = {{1, 2, 3}, {1, 2, 5}, {1, 3, 4},
                                            {1, 4, 5}, {2, 3, 5}, {3, 4, 5}};
  REQUIRE(facets.size() == expected.size());
  for (size_t i = 0; i < expected.size(); ++i) CHECK(facets[i].indices == expected[i]);
}

TEST_CASE("a simplex has every d-subset as a facet") {
  CyclicPolytope p = make(2, {0, 1, 3});
  std::vector<FacetSet> facets = enumerate_facets(p);
  REQUIRE(facets.size() == 3);
  CHECK(facets[0].indices == std::vector<int>{1, 2});
  CHECK(facets[1].indices == std::vector<int>{1, 3});
  CHECK(facets[2].indices == std::vector<int>{2, 3});
}

TEST_CASE("sigma_form expands the monic polynomial") {
  CyclicPolytope p = make(2, {0, 1, 3});
  LinearForm form = sigma_form(p, FacetSet{{1, 2}});
  CHECK(form.coeffs == ivec({0, -1, 1}));  // t(t-1) = t^2 - t
  CHECK(evaluate_sigma(form, p.vertex(1)) == 0);
  CHECK(evaluate_sigma(form, p.vertex(2)) == 0);
  CHECK(evaluate_sigma(form, p.vertex(3)) == 6);  // Delta_13 * Delta_23
}

TEST_CASE("sigma vanishes exactly on its roots") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    CyclicPolytope p = random_polytope(rng, 4, 7, 20);
    FacetSet s{{1, 3, 4, 6}};
    LinearForm form = sigma_form(p, s);
    for (int i : s.indices) CHECK(evaluate_sigma(form, p.vertex(i)) == 0);
  }
}

TEST_CASE("sigma against the product identity") {
  CyclicPolytope p = make(4, {0, 2, 3, 5, 8});
  LinearForm form = sigma_form(p, FacetSet{{1, 2, 4, 5}});
  CHECK(evaluate_sigma(form, p.vertex(3)) == 30);  // 3*1*(-2)*(-5)

  LinearForm f1234 = sigma_form(p, FacetSet{{1, 2, 3, 4}});
  Int expected = p.delta(1, 5) * p.delta(2, 5) * p.delta(3, 5) * p.delta(4, 5);
  CHECK(evaluate_sigma(f1234, p.vertex(5)) == expected);

  QVec zero(5, Rat(0));
  CHECK(evaluate_sigma(f1234, zero) == 0);
}

TEST_CASE("product identity and constant sign hold on every facet") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 20; ++trial) {
    int d = 2 + static_cast<int>(rng() % 3);
    int n = d + 2 + static_cast<int>(rng() % 3);
    CyclicPolytope p = random_polytope(rng, d, n, 15);
    for (const FacetSet& s : enumerate_facets(p)) {
      LinearForm form = sigma_form(p, s);
      int sign = 0;
      for (int j = 1; j <= n; ++j) {
        if (std::binary_search(s.indices.begin(), s.indices.end(), j)) continue;
        Int prod = 1;
        for (int i : s.indices) prod *= p.delta(i, j);
        CHECK(evaluate_sigma(form, p.vertex(j)) == prod);
        CHECK(prod != 0);
        int here = sgn(prod);
        if (sign == 0) sign = here;
        CHECK(here == sign);  // the monic form is single-signed off the facet
      }
    }
    // and the oriented system is nonnegative on every vertex
    FacetSystem fs(p);
    for (const OrientedFacet& f : fs.facets())
      for (int j = 1; j <= n; ++j)
        CHECK(ivec_dot(f.form.coeffs, p.vertex(j)) >= 0);
  }
}

TEST_CASE("brute force oracle equals gale enumeration") {
  CyclicPolytope p5 = make(3, {0, 1, 2, 3, 4});
  auto gale = enumerate_facets(p5);
  auto brute = brute_force_facets(p5);
  CHECK(gale == brute);

  CyclicPolytope square = make(2, {0, 1, 2, 5});
  CHECK(brute_force_facets(square).size() == 4);

  CyclicPolytope simplex = make(4, {0, 3, 4, 9, 11});
  CHECK(brute_force_facets(simplex).size() == 5);
}

TEST_CASE("oracle equivalence over random draws") {
  std::mt19937_64 rng(23);
  for (int d = 1; d <= 5; ++d) {
    for (int n = d + 1; n <= 8; ++n) {
      for (int trial = 0; trial < 5; ++trial) {
        CyclicPolytope p = random_polytope(rng, d, n, 20);
        CHECK(enumerate_facets(p) == brute_force_facets(p));
      }
    }
  }
}

TEST_CASE("facet count of C_4(6) matches the brute force oracle") {
  CyclicPolytope p = make(4, {0, 1, 2, 4, 7, 11});
  auto gale = enumerate_facets(p);
  CHECK(gale.size() == brute_force_facets(p).size());
  CHECK(gale.size() == 9);
}

TEST_CASE("contains accepts vertices and the known edge point") {
  CyclicPolytope p = make(2, {0, 1, 2});
  for (int i = 1; i <= 3; ++i) CHECK(contains(p, p.vertex(i)));
  CHECK(contains(p, ivec({1, 1, 2})));
  CHECK_FALSE(contains(p, ivec({1, 1, 3})));
  CHECK_FALSE(contains(p, ivec({-1, 0, 0})));
}

}  // TEST_SUITE

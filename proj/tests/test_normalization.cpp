#include <doctest.h>

#include <numeric>

#include "hzb/arith.hpp"
#include "hzb/errors.hpp"
#include "hzb/normalization.hpp"

using namespace hzb;

TEST_CASE("lens space factory") {
  CHECK(make_lens(12, 5) == LensSpace{12, 5});
  CHECK(make_lens(1, 1) == LensSpace{1, 1});
  CHECK(make_lens(12, 5).str() == "L(12,5)");
  CHECK_THROWS_AS(make_lens(0, 1), std::domain_error);
  CHECK_THROWS_AS(make_lens(1, 2), std::domain_error);
  CHECK_THROWS_AS(make_lens(10, 0), std::domain_error);
  CHECK_THROWS_AS(make_lens(10, 10), std::domain_error);
  CHECK_THROWS_AS(make_lens(10, 4), std::domain_error);
}

TEST_CASE("normalization boundary examples") {
  CHECK(normalization_boundary(make_germ(12, 5, 11)) == LensSpace{12, 5});
  CHECK(normalization_boundary(make_germ(12, 17, 11, true)) == LensSpace{12, 5});
  // m = 2, k = 1: the 3-sphere for even l, L(2,1) for odd l
  CHECK(normalization_boundary(make_germ(2, 1, 4)) == LensSpace{1, 1});
  CHECK(normalization_boundary(make_germ(2, 1, 8)) == LensSpace{1, 1});
  CHECK(normalization_boundary(make_germ(2, 1, 5)) == LensSpace{2, 1});
  CHECK(normalization_boundary(make_germ(2, 1, 1)) == LensSpace{2, 1});
  // k = l = 1 gives L(m, m-1)
  for (Int m = 2; m <= 9; ++m)
    CHECK(normalization_boundary(make_germ(m, 1, 1)) == LensSpace{m, m - 1});
}

TEST_CASE("normalization matches a direct congruence scan when gcds are 1") {
  for (Int m = 2; m <= 25; ++m)
    for (Int k = 1; k <= 25; ++k)
      for (Int l = k; l <= 25; ++l) {
        if (std::gcd(m, std::gcd(k, l)) != 1) continue;
        if (std::gcd(m, k) != 1 || std::gcd(m, l) != 1) continue;
        Int target = (-k % m + m) % m;
        Int lambda0 = 0;
        for (Int lam = 1; lam <= m && lambda0 == 0; ++lam)
          if ((lam * l) % m == target) lambda0 = lam;
        REQUIRE(lambda0 > 0);
        const LensSpace ls = normalization_boundary(make_germ(m, k, l));
        if (m == 1) continue;
        REQUIRE(ls.n == m);
        REQUIRE(ls.q == lambda0);
      }
}

TEST_CASE("normalization depends only on residues of k and l mod m") {
  for (Int m = 2; m <= 14; ++m)
    for (Int k = 1; k <= 14; ++k)
      for (Int l = k; l <= 14; ++l) {
        if (std::gcd(m, std::gcd(k, l)) != 1) continue;
        const LensSpace ls = normalization_boundary(make_germ(m, k, l));
        CHECK(normalization_boundary(make_germ(m, k + m, l, true)) == ls);
        CHECK(normalization_boundary(make_germ(m, k, l + m)) == ls);
        CHECK(normalization_boundary(make_germ(m, k + 2 * m, l + m, true)) == ls);
      }
}

TEST_CASE("normalization is symmetric in k and l up to lens equivalence") {
  for (Int m = 2; m <= 16; ++m)
    for (Int k = 1; k <= 16; ++k)
      for (Int l = k; l <= 16; ++l) {
        if (std::gcd(m, std::gcd(k, l)) != 1) continue;
        const LensSpace a = normalization_boundary(make_germ(m, k, l));
        const LensSpace b = normalization_boundary(make_germ(m, l, k, true));
        CHECK(lens_equivalent(a, b, true));
      }
}

TEST_CASE("normalization plumbing bamboos") {
  CHECK(normalization_plumbing(make_germ(12, 5, 11)) == build_bamboo({-3, -2, -3}));
  CHECK(normalization_plumbing(make_germ(12, 17, 11, true)) == build_bamboo({-3, -2, -3}));
  CHECK(normalization_plumbing(make_germ(2, 1, 4)) == PlumbingGraph{});
  CHECK(normalization_plumbing(make_germ(2, 1, 5)) == build_bamboo({-2}));
  CHECK(normalization_plumbing(make_germ(5, 1, 1)) == build_bamboo({-2, -2, -2, -2}));
}

TEST_CASE("normalization bamboo evaluates back to n/q") {
  for (Int m = 2; m <= 15; ++m)
    for (Int k = 1; k <= 15; ++k)
      for (Int l = k; l <= 15; ++l) {
        if (std::gcd(m, std::gcd(k, l)) != 1) continue;
        const Germ g = make_germ(m, k, l);
        const LensSpace ls = normalization_boundary(g);
        const PlumbingGraph bam = normalization_plumbing(g);
        ContinuedFraction cf;
        for (const PlumbingVertex& v : bam.vertices) cf.push_back(-v.euler);
        REQUIRE(cf_eval(cf) == Rational(ls.n, ls.q));
      }
}

TEST_CASE("lens equivalence") {
  CHECK(lens_equivalent(LensSpace{7, 2}, LensSpace{7, 2}, true));
  CHECK(lens_equivalent(LensSpace{7, 2}, LensSpace{7, 4}, true));   // 2*4 = 1 (mod 7)
  CHECK(!lens_equivalent(LensSpace{10, 1}, LensSpace{2, 1}, true));
  CHECK(!lens_equivalent(LensSpace{7, 2}, LensSpace{7, 3}, true));
  CHECK(!lens_equivalent(LensSpace{7, 2}, LensSpace{7, 5}, true));
  CHECK(lens_equivalent(LensSpace{7, 2}, LensSpace{7, 5}, false));  // 5 = -2 (mod 7)
  CHECK(lens_equivalent(LensSpace{1, 1}, LensSpace{1, 1}, true));
  CHECK(!lens_equivalent(LensSpace{1, 1}, LensSpace{2, 1}, true));
}

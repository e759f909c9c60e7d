#include <doctest.h>

#include "centun/errors.hpp"
#include "centun/irrep.hpp"
#include "centun/multiplicity.hpp"

using namespace centun;

TEST_CASE("freudenthal multiplicities") {
  RootSystem a2 = RootSystem::build(Family::A, 2);
  Weight theta = a2.highest_root();
  CHECK(freudenthal_mult(a2, theta, a2.zero_weight()) == 2);

  RootSystem a1 = RootSystem::build(Family::A, 1);
  for (long k = 1; k <= 5; ++k) {
    Weight kw = k * a1.fundamental_weight(0);
    CHECK(freudenthal_mult(a1, kw, kw) == 1);
  }

  // oracle: dimension of the zero weight space of the explicitly built
  // module (independent path through the contravariant-form ranks)
  Weight twotheta = 2 * theta;
  Irrep v27 = Irrep::build(a2, twotheta);
  int zidx = v27.weight_space_index(a2.zero_weight());
  REQUIRE(zidx >= 0);
  CHECK(freudenthal_mult(a2, twotheta, a2.zero_weight()) ==
        v27.weight_space(zidx).dim);
}

TEST_CASE("freudenthal is weyl invariant and supported in the root shift") {
  RootSystem b2 = RootSystem::build(Family::B, 2);
  Weight theta = b2.highest_root();
  FreudenthalTable t(b2, theta);
  for (const auto& [mu, m] : t.dominant_support())
    for (const auto& img : weyl_orbit(b2, mu)) CHECK(t.mult(img) == m);
  // off the root-lattice shift
  CHECK(freudenthal_mult(b2, theta, b2.fundamental_weight(1)) == 0);
  CHECK_THROWS_AS(
      freudenthal_mult(b2, b2.zero_weight() - theta, b2.zero_weight()),
      UsageError);
}

TEST_CASE("weyl dimension formula") {
  RootSystem a2 = RootSystem::build(Family::A, 2);
  CHECK(weyl_dimension(a2, a2.highest_root()) == 8);
  CHECK(weyl_dimension(a2, 2 * a2.highest_root()) == 27);
  RootSystem a1 = RootSystem::build(Family::A, 1);
  for (long k = 0; k <= 6; ++k)
    CHECK(weyl_dimension(a1, k * a1.fundamental_weight(0)) == k + 1);
  // dimension equals the total of the weight multiplicities
  RootSystem b2 = RootSystem::build(Family::B, 2);
  Weight theta = b2.highest_root();
  long total = 0;
  for (const auto& [mu, m] : weight_support(b2, theta)) total += m;
  CHECK(mpz_class(total) == weyl_dimension(b2, theta));
}

TEST_CASE("max weight multiplicity") {
  RootSystem a1 = RootSystem::build(Family::A, 1);
  for (long k = 1; k <= 4; ++k)
    CHECK(max_weight_multiplicity(a1, k * a1.fundamental_weight(0)) == 1);
  RootSystem a2 = RootSystem::build(Family::A, 2);
  CHECK(max_weight_multiplicity(a2, a2.highest_root()) == 2);
  RootSystem b2 = RootSystem::build(Family::B, 2);
  CHECK(max_weight_multiplicity(b2, b2.highest_root()) == 2);
}

TEST_CASE("zero weight space is nonzero exactly on the root lattice") {
  for (auto [f, r] : std::vector<std::pair<Family, int>>{{Family::A, 2},
                                                         {Family::B, 2}}) {
    RootSystem rs = RootSystem::build(f, r);
    for (long c0 = 0; c0 <= 2; ++c0)
      for (long c1 = 0; c1 <= 2; ++c1) {
        if (c0 + c1 == 0) continue;
        Weight lam = c0 * rs.fundamental_weight(0) +
                     c1 * rs.fundamental_weight(1);
        bool has_zero = freudenthal_mult(rs, lam, rs.zero_weight()) > 0;
        CHECK(has_zero == lam.in_root_lattice());
      }
  }
}

#include <random>

#include <catch_amalgamated.hpp>

#include "drcay/drg.hpp"
#include "drcay/schur.hpp"

using namespace drcay;

TEST_CASE("convolution of class sums counts representations") {
  std::mt19937 rng(31);
  const Group g = Group::pair(3, 2);
  for (int t = 0; t < 30; ++t) {
    Bits a, b;
    for (int x = 0; x < g.order(); ++x) {
      if (rng() & 1) a.set(x);
      if (rng() & 1) b.set(x);
    }
    const auto c = convolve(g, ClassSum::of(g, a), ClassSum::of(g, b));
    for (int z = 0; z < g.order(); ++z) {
      int reps = 0;
      a.for_each([&](int x) { reps += b.test(g.sub(z, x)); });
      CHECK(c.coeff[static_cast<std::size_t>(z)] == reps);
    }
  }
}

TEST_CASE("distance module of the lattice graph") {
  const Group g = Group::pair(3, 1);
  const CayleyGraph cg(g, SymmetricSet(g, g.parse_set("(1,0),(2,0),(0,1),(0,2)")));
  const auto basis = distance_module(cg);
  const auto p = is_schur_ring(g, basis);
  REQUIRE(p);
  CHECK((*p)[1][1][0] == 4);  // k
  CHECK((*p)[1][1][1] == 1);  // λ
  CHECK((*p)[1][1][2] == 2);  // μ
  CHECK(is_primitive(g, basis));
  CHECK_FALSE(is_trivial(basis));
  const auto pi = power_map(g, basis, 2);
  CHECK(pi == std::vector<int>{0, 1, 2});
  CHECK_THROWS_AS(power_map(g, basis, 3), PreconditionError);
}

TEST_CASE("non-Schur partitions are rejected") {
  const Group g = Group::pair(3, 1);
  // a cell that is not closed under negation
  SchurBasis bad{{Bits::from_indices({0}), g.parse_set("(1,0)"), g.all() - g.parse_set("(0,0),(1,0)")}, {}};
  CHECK_FALSE(is_schur_ring(g, bad));
  // cells missing an element
  SchurBasis gap{{Bits::from_indices({0}), g.parse_set("(1,0),(2,0)")}, {}};
  CHECK_FALSE(is_schur_ring(g, gap));
  // the trivial ring is always Schur
  SchurBasis triv{{Bits::from_indices({0}), g.all() - Bits::from_indices({0})}, {}};
  CHECK(is_schur_ring(g, triv));
  CHECK(is_trivial(triv));
}

TEST_CASE("Schur condition matches distance-regularity over Z_3+Z_3") {
  const Group g = Group::pair(3, 1);
  const auto pairs = g.inverse_pairs();
  for (int mask = 0; mask < 16; ++mask) {
    Bits s;
    for (int j = 0; j < 4; ++j)
      if (mask >> j & 1)
        for (int x : pairs[static_cast<std::size_t>(j)]) s.set(x);
    const CayleyGraph cg(g, SymmetricSet(g, s));
    if (!cg.is_connected()) continue;
    CHECK(check_drg(cg).has_value() == is_schur_ring(g, distance_module(cg)).has_value());
  }
}

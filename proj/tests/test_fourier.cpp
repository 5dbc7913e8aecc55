#include <complex>
#include <numbers>
#include <random>

#include <catch_amalgamated.hpp>

#include "drcay/classify.hpp"
#include "drcay/fourier.hpp"

using namespace drcay;

namespace {

std::complex<double> evaluate(const CyclotomicInteger& x) {
  std::complex<double> v = 0;
  const auto& c = x.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i)
    v += static_cast<double>(c[i]) * std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(i) / x.n());
  return v;
}

}  // namespace

TEST_CASE("transform agrees with a floating-point DFT") {
  std::mt19937 rng(51);
  std::uniform_int_distribution<int> val(-9, 9);
  for (auto [p, s] : {std::pair{3, 2}, {5, 1}, {3, 3}}) {
    const auto d = CyclicDomain::of(p, s);
    for (int t = 0; t < 10; ++t) {
      IntFunction f(static_cast<std::size_t>(d.n));
      for (auto& x : f) x = val(rng);
      const auto tf = transform(d, f);
      for (int z = 0; z < d.n; ++z) {
        std::complex<double> expect = 0;
        for (int i = 0; i < d.n; ++i)
          expect += static_cast<double>(f[static_cast<std::size_t>(i)]) * std::polar(1.0, 2 * std::numbers::pi * i * z / d.n);
        CHECK(std::abs(evaluate(tf[static_cast<std::size_t>(z)]) - expect) < 1e-6);
      }
    }
  }
}

TEST_CASE("inversion and convolution hold exactly") {
  std::mt19937 rng(52);
  std::uniform_int_distribution<int> val(-20, 20);
  const auto d = CyclicDomain::of(3, 2);
  for (int t = 0; t < 50; ++t) {
    IntFunction f(9);
    for (auto& x : f) x = val(rng);
    const auto rep = inversion_check(d, f);
    CHECK(rep.ok);
    CHECK(rep.checks == 9);
    Bits a, b;
    for (int x = 0; x < 9; ++x) {
      if (rng() & 1) a.set(x);
      if (rng() & 1) b.set(x);
    }
    CHECK(convolution_check(d, a, b).ok);
  }
}

TEST_CASE("transversals of rZ_n have vanishing transforms") {
  const auto d = CyclicDomain::of(3, 2);
  const Group z9 = Group::cyclic(9);
  int transversals = 0;
  for (int mask = 0; mask < 512; ++mask) {
    Bits a;
    for (int x = 0; x < 9; ++x)
      if (mask >> x & 1) a.set(x);
    Subgroup h{Bits::from_indices({0, 3, 6}), 3, {3}};
    if (!z9.is_transversal(a, h)) {
      if (a.count() == 3) CHECK_THROWS_AS(transversal_zeros(d, a, 3), PreconditionError);
      continue;
    }
    ++transversals;
    CHECK(transversal_zeros(d, a, 3));
  }
  CHECK(transversals == 27);
  // Z_3 with r = 3: the transversal is Z_3 itself
  CHECK(transversal_zeros(CyclicDomain::of(3, 1), Bits::from_indices({0, 1, 2}), 3));
}

TEST_CASE("rational transforms are exactly unions of unit orbits") {
  const auto d = CyclicDomain::of(3, 2);
  CHECK(unit_orbit(d, 9).count() == 6);
  CHECK(unit_orbit(d, 3) == Bits::from_indices({3, 6}));
  int rational = 0;
  for (int mask = 0; mask < 512; ++mask) {
    Bits a;
    for (int x = 0; x < 9; ++x)
      if (mask >> x & 1) a.set(x);
    if (const auto orbits = rational_image_orbits(d, a)) {
      ++rational;
      Bits u;
      for (int r : *orbits) u |= unit_orbit(d, r);
      CHECK(u == a);
    }
  }
  CHECK(rational == 8);  // 2^3 unions of the orbits O_1, O_3, O_9
}

TEST_CASE("row-transform identities hold on every DRG over small pair groups") {
  for (const auto& g : {Group::pair(3, 1), Group::pair(3, 2), Group::pair(5, 1)}) {
    const auto rep = census(g, CensusOptions{});
    for (const auto& r : rep.records) {
      if (r.array.diameter() < 2) continue;
      const CayleyGraph cg(g, SymmetricSet(g, r.set));
      const auto audit = fourier_audit(cg, r.array);
      INFO(g.spec_string() << " " << audit.first_failure);
      CHECK(audit.ok);
      CHECK(audit.checks > 0);
    }
  }
}

TEST_CASE("row-transform audit rejects a wrong array") {
  const Group g = Group::pair(3, 1);
  const CayleyGraph cg(g, SymmetricSet(g, g.parse_set("(1,0),(2,0),(0,1),(0,2)")));
  auto arr = *check_drg(cg);
  CHECK(fourier_audit(cg, arr).ok);
  arr.c[1] = 1;  // wrong μ
  arr.b[1] = 3;
  arr.a[1] = 0;
  CHECK_FALSE(fourier_audit(cg, arr).ok);
}

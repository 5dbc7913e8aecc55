#include <algorithm>
#include <random>

#include <catch_amalgamated.hpp>

#include "drcay/bits.hpp"

using drcay::BasicBits;
using drcay::Bits;

TEST_CASE("set, reset, count and iteration agree") {
  Bits b;
  for (int i : {0, 5, 63, 64, 200, 383}) b.set(i);
  CHECK(b.count() == 6);
  CHECK(b.first() == 0);
  CHECK(b.indices() == std::vector<int>{0, 5, 63, 64, 200, 383});
  b.reset(0);
  CHECK(b.first() == 5);
  CHECK_FALSE(b.test(0));
  CHECK(Bits::prefix(70).count() == 70);
  CHECK(Bits::prefix(70).test(69));
  CHECK_FALSE(Bits::prefix(70).test(70));
}

TEST_CASE("set algebra") {
  const auto a = Bits::from_indices({1, 2, 3, 100});
  const auto b = Bits::from_indices({3, 4, 100});
  CHECK((a & b).indices() == std::vector<int>{3, 100});
  CHECK((a | b).count() == 5);
  CHECK((a - b).indices() == std::vector<int>{1, 2});
  CHECK((a ^ b).indices() == std::vector<int>{1, 2, 4});
  CHECK(a.intersection_count(b) == 2);
  CHECK((a & b).subset_of(a));
  CHECK_FALSE(a.subset_of(b));
}

TEST_CASE("lex_less matches comparison of sorted index lists") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pos(0, 140), sz(0, 6);
  for (int trial = 0; trial < 5000; ++trial) {
    Bits a, b;
    for (int i = sz(rng); i > 0; --i) a.set(pos(rng));
    // same size half of the time, to exercise the fast path
    if (trial % 2) {
      b = a;
      if (a.any()) {
        b.reset(a.first());
        int x;
        do x = pos(rng); while (b.test(x));
        b.set(x);
      }
    } else {
      for (int i = sz(rng); i > 0; --i) b.set(pos(rng));
    }
    const auto la = a.indices(), lb = b.indices();
    CHECK(lex_less(a, b) == std::lexicographical_compare(la.begin(), la.end(), lb.begin(), lb.end()));
  }
}

TEST_CASE("narrowed keeps the low words") {
  Bits b = Bits::from_indices({1, 65, 127});
  const auto n = BasicBits<2>::narrowed(b);
  CHECK(n.indices() == std::vector<int>{1, 65, 127});
  CHECK(Bits::narrowed(n) == b);
}

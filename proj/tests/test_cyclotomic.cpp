#include <complex>
#include <numbers>
#include <random>

#include <catch_amalgamated.hpp>

#include "drcay/cyclotomic.hpp"

using namespace drcay;

namespace {

std::complex<double> evaluate(const CyclotomicInteger& x) {
  std::complex<double> v = 0;
  const auto& c = x.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i)
    v += static_cast<double>(c[i]) * std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(i) / x.n());
  return v;
}

CyclotomicInteger random_value(int p, int s, std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-5, 5);
  CyclotomicInteger x(p, s);
  for (int e = 0; e < x.n(); ++e) x += CyclotomicInteger::monomial(p, s, e) * coef(rng);
  return x;
}

}  // namespace

TEST_CASE("canonical form: equal values have equal coefficients") {
  std::mt19937 rng(41);
  for (auto [p, s] : {std::pair{3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}, {7, 1}}) {
    for (int t = 0; t < 100; ++t) {
      const auto a = random_value(p, s, rng), b = random_value(p, s, rng);
      const bool numeric_equal = std::abs(evaluate(a) - evaluate(b)) < 1e-6;
      CHECK((a == b) == numeric_equal);
      CHECK(std::abs(evaluate(a * b) - evaluate(a) * evaluate(b)) < 1e-6 * (1 + std::abs(evaluate(a * b))));
      CHECK(std::abs(evaluate(a + b) - evaluate(a) - evaluate(b)) < 1e-6);
      // canonical form has no top block
      for (int e = a.degree(); e < a.n(); ++e) CHECK(a.coefficients()[static_cast<std::size_t>(e)] == 0);
    }
  }
}

TEST_CASE("ring identities") {
  std::mt19937 rng(42);
  for (int t = 0; t < 50; ++t) {
    const auto a = random_value(3, 2, rng), b = random_value(3, 2, rng), c = random_value(3, 2, rng);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a - a == CyclotomicInteger(3, 2));
    CHECK(a.rotated(5) == a * CyclotomicInteger::monomial(3, 2, 5));
  }
}

TEST_CASE("sums of roots of unity") {
  // Σ_{i<p} ω^{i p^{s-1}} = 0 and Σ_{e<n} ω^e = 0
  for (auto [p, s] : {std::pair{3, 2}, {5, 1}, {3, 3}}) {
    CyclotomicInteger sub(p, s), all(p, s);
    const int n = static_cast<int>(detail::ipow(p, s));
    for (int i = 0; i < p; ++i) sub += CyclotomicInteger::monomial(p, s, i * n / p);
    for (int e = 0; e < n; ++e) all += CyclotomicInteger::monomial(p, s, e);
    CHECK(sub.is_zero());
    CHECK(all.is_zero());
  }
  const auto w = CyclotomicInteger::monomial(3, 1, 1);
  CHECK(w * w * w == CyclotomicInteger::constant(3, 1, 1));
  CHECK((w + w * w).is_rational());
  CHECK((w + w * w).rational_value() == -1);
  CHECK_THROWS_AS(w.rational_value(), PreconditionError);
  CHECK_THROWS_AS(CyclotomicInteger(4, 1), PreconditionError);
  CHECK_THROWS_AS(w + CyclotomicInteger::monomial(5, 1, 1), PreconditionError);
  CHECK((w * 2 - CyclotomicInteger::constant(3, 1, 3)).to_string() == "-3 + 2*w^1");
}

#pragma once

// Exact discrete Fourier analysis over Z_n, n = p^s:
//   (F f)(z) = Σ_i f(i) ω^{iz},   (f * g)(z) = Σ_i f(i) g(z - i),
// with values in Z[ω].

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "drcay/cayley.hpp"
#include "drcay/cyclotomic.hpp"
#include "drcay/drg.hpp"

namespace drcay {

struct CyclicDomain {
  int p = 0, s = 0, n = 0;
  static CyclicDomain of(int p, int s) {
    if (!detail::is_prime(p) || s < 1) throw PreconditionError("cyclic domain needs prime p and s >= 1");
    return {p, s, static_cast<int>(detail::ipow(p, s))};
  }
  [[nodiscard]] int mod(long long x) const { return static_cast<int>(((x % n) + n) % n); }
};

using IntFunction = std::vector<std::int64_t>;
using TransformTable = std::vector<CyclotomicInteger>;

struct VerificationReport {
  bool ok = true;
  long long checks = 0;
  std::string first_failure;

  void fail(const std::string& what) {
    if (ok) first_failure = what;
    ok = false;
  }
};

inline IntFunction indicator(const CyclicDomain& d, const Bits& a) {
  IntFunction f(static_cast<std::size_t>(d.n), 0);
  a.for_each([&](int x) { f[static_cast<std::size_t>(x)] = 1; });
  return f;
}

inline TransformTable transform(const CyclicDomain& d, const IntFunction& f) {
  TransformTable t;
  t.reserve(static_cast<std::size_t>(d.n));
  for (int z = 0; z < d.n; ++z) {
    CyclotomicInteger v(d.p, d.s);
    std::vector<std::int64_t> raw(static_cast<std::size_t>(d.n), 0);
    for (int i = 0; i < d.n; ++i)
      raw[static_cast<std::size_t>(d.mod(static_cast<long long>(i) * z))] += f[static_cast<std::size_t>(i)];
    for (int e = 0; e < d.n; ++e)
      if (raw[static_cast<std::size_t>(e)]) v += CyclotomicInteger::monomial(d.p, d.s, e) * raw[static_cast<std::size_t>(e)];
    t.push_back(std::move(v));
  }
  return t;
}

/// F Δ_A(z) = Σ_{t ∈ A} ω^{tz}.
inline TransformTable transform(const CyclicDomain& d, const Bits& a) { return transform(d, indicator(d, a)); }

/// F applied to a Z[ω]-valued function.
inline TransformTable transform(const CyclicDomain& d, const TransformTable& f) {
  TransformTable t;
  for (int z = 0; z < d.n; ++z) {
    CyclotomicInteger v(d.p, d.s);
    for (int i = 0; i < d.n; ++i) v += f[static_cast<std::size_t>(i)].rotated(static_cast<long long>(i) * z);
    t.push_back(std::move(v));
  }
  return t;
}

inline IntFunction convolve(const CyclicDomain& d, const IntFunction& f, const IntFunction& g) {
  IntFunction out(static_cast<std::size_t>(d.n), 0);
  for (int z = 0; z < d.n; ++z)
    for (int i = 0; i < d.n; ++i) out[static_cast<std::size_t>(z)] += f[static_cast<std::size_t>(i)] * g[static_cast<std::size_t>(d.mod(z - i))];
  return out;
}

/// F(Δ_A * Δ_B) = FΔ_A · FΔ_B pointwise, and (Δ_A * Δ_B)(i) = |(i - A) ∩ B|.
inline VerificationReport convolution_check(const CyclicDomain& d, const Bits& a, const Bits& b) {
  VerificationReport rep;
  const IntFunction conv = convolve(d, indicator(d, a), indicator(d, b));
  for (int i = 0; i < d.n; ++i) {
    Bits shifted;
    a.for_each([&](int x) { shifted.set(d.mod(i - x)); });
    ++rep.checks;
    if (conv[static_cast<std::size_t>(i)] != shifted.intersection_count(b))
      rep.fail("counting form differs at i=" + std::to_string(i));
  }
  const auto lhs = transform(d, conv);
  const auto fa = transform(d, a);
  const auto fb = transform(d, b);
  for (int z = 0; z < d.n; ++z) {
    ++rep.checks;
    if (!(lhs[static_cast<std::size_t>(z)] == fa[static_cast<std::size_t>(z)] * fb[static_cast<std::size_t>(z)]))
      rep.fail("convolution theorem fails at z=" + std::to_string(z));
  }
  return rep;
}

/// F(F f)(z) = n f(-z).
inline VerificationReport inversion_check(const CyclicDomain& d, const IntFunction& f) {
  VerificationReport rep;
  const auto ff = transform(d, transform(d, f));
  for (int z = 0; z < d.n; ++z) {
    ++rep.checks;
    const auto expect = CyclotomicInteger::constant(d.p, d.s, d.n * f[static_cast<std::size_t>(d.mod(-z))]);
    if (!(ff[static_cast<std::size_t>(z)] == expect)) rep.fail("inversion fails at z=" + std::to_string(z));
  }
  return rep;
}

/// For a transversal A of rZ_n: FΔ_A vanishes on (n/r)Z_n \ {0}. Returns
/// false on a counterexample.
inline bool transversal_zeros(const CyclicDomain& d, const Bits& a, int r) {
  if (r < 1 || d.n % r != 0) throw PreconditionError("r must divide n");
  const Group zn = Group::cyclic(d.n);
  Subgroup h;
  for (int x = 0; x < d.n; x += r) h.members.set(x);
  h.order = h.members.count();
  if (!zn.is_transversal(a, h)) throw PreconditionError("set is not a transversal of rZ_n");
  const auto t = transform(d, a);
  for (int m = 0; m < d.n; ++m) {
    if (m % r == 0) continue;
    const int z = d.mod(static_cast<long long>(m) * (d.n / r));
    if (!t[static_cast<std::size_t>(z)].is_zero()) return false;
  }
  return true;
}

/// O_r = {elements of additive order r}, for r | n.
inline Bits unit_orbit(const CyclicDomain& d, int r) {
  Bits o;
  const Group zn = Group::cyclic(d.n);
  for (int x = 0; x < d.n; ++x)
    if (zn.element_order(x) == r) o.set(x);
  return o;
}

/// When every FΔ_A(z) is rational, the orders r of the orbits O_r making up
/// A. Absent otherwise. Rational transform and orbit-union are checked to
/// coincide in both directions.
inline std::optional<std::vector<int>> rational_image_orbits(const CyclicDomain& d, const Bits& a) {
  bool rational = true;
  for (const auto& v : transform(d, a)) rational = rational && v.is_rational();
  std::vector<int> orbits;
  bool union_of_orbits = true;
  for (int r = 1; r <= d.n; ++r) {
    if (d.n % r) continue;
    const Bits o = unit_orbit(d, r);
    if (o.subset_of(a)) orbits.push_back(r);
    else if (o.intersects(a)) union_of_orbits = false;
  }
  if (rational != union_of_orbits)
    throw VerificationFailure("rational transform and orbit-union disagree");
  if (!rational) return std::nullopt;
  return orbits;
}

/// Row-transform identities for a DRG over Z_{p^s} (+) Z_p of diameter >= 2:
///   Σ_i r_i r_{j-i} = [j = 0] k + λ r_j + μ r_{j,2}     (0 <= j < p)
/// and their character-weighted forms with ε = ω^{p^{s-1}}:
///   X_t^2 = k + (λ - μ) X_t + μ (X_t + Y_t),
///   X_t = Σ_j ε^{tj} r_j,  Y_t = Σ_j ε^{tj} r_{j,2}.
inline VerificationReport fourier_audit(const CayleyGraph& cg, const IntersectionArray& arr) {
  const Group& g = cg.group();
  if (g.flavor() != Flavor::PrimePowerPair) throw PreconditionError("fourier audit needs a Z_{p^s}+Z_p group");
  if (arr.diameter() < 2) throw PreconditionError("fourier audit needs diameter >= 2");
  const int p = g.p(), s = g.s();
  const auto d = CyclicDomain::of(p, s);
  const auto dp = cg.distance_partition();
  const auto rows = RowDecomposition::of(g, cg.connection_set().members());
  const auto rows2 = RowDecomposition::of(g, dp.layers[2]);
  const std::int64_t k = arr.valency(), lam = *arr.lambda(), mu = *arr.mu();

  VerificationReport rep;
  // Row symmetry R_0 = -R_0, R_i = -R_{p-i}.
  for (int i = 0; i < p; ++i) {
    Bits neg;
    rows.rows[static_cast<std::size_t>(i)].for_each([&](int u) { neg.set(d.mod(-u)); });
    ++rep.checks;
    if (neg != rows.rows[static_cast<std::size_t>((p - i) % p)]) rep.fail("row symmetry fails at i=" + std::to_string(i));
  }

  std::vector<TransformTable> r1, r2;
  for (int i = 0; i < p; ++i) {
    r1.push_back(transform(d, rows.rows[static_cast<std::size_t>(i)]));
    r2.push_back(transform(d, rows2.rows[static_cast<std::size_t>(i)]));
  }
  for (int j = 0; j < p; ++j)
    for (int z = 0; z < d.n; ++z) {
      CyclotomicInteger lhs(p, s);
      for (int i = 0; i < p; ++i)
        lhs += r1[static_cast<std::size_t>(i)][static_cast<std::size_t>(z)] * r1[static_cast<std::size_t>(((j - i) % p + p) % p)][static_cast<std::size_t>(z)];
      CyclotomicInteger rhs = r1[static_cast<std::size_t>(j)][static_cast<std::size_t>(z)] * lam + r2[static_cast<std::size_t>(j)][static_cast<std::size_t>(z)] * mu;
      if (j == 0) rhs += CyclotomicInteger::constant(p, s, k);
      ++rep.checks;
      if (!(lhs == rhs)) rep.fail("row identity j=" + std::to_string(j) + " fails at z=" + std::to_string(z));
    }

  const long long eps = d.n / p;  // ε = ω^{p^{s-1}}
  for (int t = 0; t < p; ++t)
    for (int z = 0; z < d.n; ++z) {
      CyclotomicInteger x(p, s), y(p, s);
      for (int j = 0; j < p; ++j) {
        x += r1[static_cast<std::size_t>(j)][static_cast<std::size_t>(z)].rotated(eps * t * j);
        y += r2[static_cast<std::size_t>(j)][static_cast<std::size_t>(z)].rotated(eps * t * j);
      }
      const CyclotomicInteger rhs = CyclotomicInteger::constant(p, s, k) + x * (lam - mu) + (x + y) * mu;
      ++rep.checks;
      if (!(x * x == rhs)) rep.fail("weighted identity t=" + std::to_string(t) + " fails at z=" + std::to_string(z));
    }
  return rep;
}

}  // namespace drcay

#pragma once

// Exact arithmetic in Z[ω], ω a primitive p^s-th root of unity.
//
// Values are coefficient vectors over ω^0 .. ω^{n-1} (n = p^s) kept in
// canonical form: every exponent >= φ(n) = (p-1) p^{s-1} is eliminated with
//   ω^{j + (p-1) p^{s-1}} = -Σ_{i=0}^{p-2} ω^{j + i p^{s-1}},
// so two values are equal iff their coefficient vectors are equal.

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "drcay/error.hpp"
#include "drcay/group.hpp"

namespace drcay {

class CyclotomicInteger {
 public:
  CyclotomicInteger() = default;
  CyclotomicInteger(int p, int s) : p_(p), s_(s), n_(static_cast<int>(detail::ipow(p, s))), c_(static_cast<std::size_t>(n_), 0) {
    if (!detail::is_prime(p) || s < 1) throw PreconditionError("cyclotomic ring needs prime p and s >= 1");
  }

  static CyclotomicInteger constant(int p, int s, std::int64_t v) {
    CyclotomicInteger x(p, s);
    x.c_[0] = v;
    return x;
  }

  /// ω^e for any integer e.
  static CyclotomicInteger monomial(int p, int s, long long e) {
    CyclotomicInteger x(p, s);
    x.c_[static_cast<std::size_t>(((e % x.n_) + x.n_) % x.n_)] = 1;
    x.reduce();
    return x;
  }

  [[nodiscard]] int p() const { return p_; }
  [[nodiscard]] int s() const { return s_; }
  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] int block() const { return n_ / p_; }
  [[nodiscard]] int degree() const { return (p_ - 1) * block(); }
  [[nodiscard]] const std::vector<std::int64_t>& coefficients() const { return c_; }

  /// Value lies in Z (canonical form concentrated at ω^0).
  [[nodiscard]] bool is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (c_[i]) return false;
    return true;
  }
  [[nodiscard]] std::int64_t rational_value() const {
    if (!is_rational()) throw PreconditionError("cyclotomic value is not rational");
    return c_.empty() ? 0 : c_[0];
  }
  [[nodiscard]] bool is_zero() const {
    for (auto v : c_)
      if (v) return false;
    return true;
  }

  /// Multiply by ω^e.
  [[nodiscard]] CyclotomicInteger rotated(long long e) const {
    CyclotomicInteger out(p_, s_);
    const long long sh = ((e % n_) + n_) % n_;
    for (int i = 0; i < n_; ++i) out.c_[static_cast<std::size_t>((i + sh) % n_)] = c_[static_cast<std::size_t>(i)];
    out.reduce();
    return out;
  }

  CyclotomicInteger& operator+=(const CyclotomicInteger& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  CyclotomicInteger& operator-=(const CyclotomicInteger& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  CyclotomicInteger& operator*=(std::int64_t k) {
    for (auto& v : c_) v *= k;
    return *this;
  }
  friend CyclotomicInteger operator+(CyclotomicInteger a, const CyclotomicInteger& b) { return a += b; }
  friend CyclotomicInteger operator-(CyclotomicInteger a, const CyclotomicInteger& b) { return a -= b; }
  friend CyclotomicInteger operator*(CyclotomicInteger a, std::int64_t k) { return a *= k; }
  friend CyclotomicInteger operator*(std::int64_t k, CyclotomicInteger a) { return a *= k; }
  friend CyclotomicInteger operator-(CyclotomicInteger a) { return a *= -1; }

  friend CyclotomicInteger operator*(const CyclotomicInteger& a, const CyclotomicInteger& b) {
    a.check(b);
    CyclotomicInteger out(a.p_, a.s_);
    const int n = a.n_;
    for (int i = 0; i < n; ++i) {
      const auto ai = a.c_[static_cast<std::size_t>(i)];
      if (!ai) continue;
      for (int j = 0; j < n; ++j) {
        const auto bj = b.c_[static_cast<std::size_t>(j)];
        if (bj) out.c_[static_cast<std::size_t>((i + j) % n)] += ai * bj;
      }
    }
    out.reduce();
    return out;
  }
  CyclotomicInteger& operator*=(const CyclotomicInteger& o) { return *this = *this * o; }

  friend bool operator==(const CyclotomicInteger&, const CyclotomicInteger&) = default;

  /// Eliminates the top block. Idempotent.
  void reduce() {
    const int blk = block();
    const int phi = degree();
    for (int e = phi; e < n_; ++e) {
      const auto v = c_[static_cast<std::size_t>(e)];
      if (!v) continue;
      const int j = e - phi;
      for (int i = 0; i + 1 < p_; ++i) c_[static_cast<std::size_t>(j + i * blk)] -= v;
      c_[static_cast<std::size_t>(e)] = 0;
    }
  }

  [[nodiscard]] std::string to_string() const {
    std::ostringstream os;
    bool any = false;
    for (int i = 0; i < n_; ++i) {
      const auto v = c_[static_cast<std::size_t>(i)];
      if (!v) continue;
      if (any) os << (v > 0 ? " + " : " - ");
      else if (v < 0) os << '-';
      const auto mag = v < 0 ? -v : v;
      if (i == 0) os << mag;
      else {
        if (mag != 1) os << mag << '*';
        os << "w^" << i;
      }
      any = true;
    }
    if (!any) os << '0';
    return os.str();
  }

 private:
  void check(const CyclotomicInteger& o) const {
    if (o.p_ != p_ || o.s_ != s_) throw PreconditionError("cyclotomic values from different rings");
  }

  int p_ = 0, s_ = 0, n_ = 0;
  std::vector<std::int64_t> c_;
};

}  // namespace drcay

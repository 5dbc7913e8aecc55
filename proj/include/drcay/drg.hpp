#pragma once

// Distance-regularity: intersection arrays, strongly regular parameters and
// parameter-based family recognition.

#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "drcay/cayley.hpp"

namespace drcay {

struct IntersectionArray {
  std::vector<int> b;  // b_0 .. b_{d-1}
  std::vector<int> c;  // c_1 .. c_d
  std::vector<int> a;  // a_0 .. a_d
  std::vector<int> k;  // layer sizes k_0 .. k_d

  [[nodiscard]] int diameter() const { return static_cast<int>(b.size()); }
  [[nodiscard]] int valency() const { return b.empty() ? 0 : b[0]; }
  [[nodiscard]] int order() const {
    int n = 0;
    for (int x : k) n += x;
    return n;
  }
  /// a_1, or nullopt when d = 0.
  [[nodiscard]] std::optional<int> lambda() const {
    if (a.size() < 2) return std::nullopt;
    return a[1];
  }
  /// c_2, or nullopt when d < 2.
  [[nodiscard]] std::optional<int> mu() const {
    if (c.size() < 2) return std::nullopt;
    return c[1];
  }

  /// c_1 = 1, a_i + b_i + c_i = k and k_i b_i = k_{i+1} c_{i+1}.
  [[nodiscard]] bool consistent() const {
    const int d = diameter();
    if (d == 0) return a.size() == 1 && k.size() == 1;
    if (static_cast<int>(c.size()) != d || static_cast<int>(a.size()) != d + 1 ||
        static_cast<int>(k.size()) != d + 1)
      return false;
    if (c[0] != 1) return false;
    const int val = b[0];
    for (int i = 0; i <= d; ++i) {
      const int bi = i < d ? b[static_cast<std::size_t>(i)] : 0;
      const int ci = i > 0 ? c[static_cast<std::size_t>(i - 1)] : 0;
      if (a[static_cast<std::size_t>(i)] + bi + ci != val) return false;
    }
    for (int i = 0; i < d; ++i)
      if (k[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(i)] !=
          k[static_cast<std::size_t>(i + 1)] * c[static_cast<std::size_t>(i)])
        return false;
    return true;
  }

  /// c non-decreasing and b non-increasing. Reported, never assumed.
  [[nodiscard]] bool monotone() const {
    for (std::size_t i = 1; i < c.size(); ++i)
      if (c[i] < c[i - 1]) return false;
    for (std::size_t i = 1; i < b.size(); ++i)
      if (b[i] > b[i - 1]) return false;
    return true;
  }

  /// "{b_0,...,b_{d-1}; c_1,...,c_d}".
  [[nodiscard]] std::string to_string() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
    os << "; ";
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << '}';
    return os.str();
  }

  friend bool operator==(const IntersectionArray&, const IntersectionArray&) = default;
};

struct SrgParams {
  int n = 0, k = 0, lambda = 0, mu = 0;
  /// k(k - λ - 1) = (n - k - 1) μ.
  [[nodiscard]] bool feasible() const { return k * (k - lambda - 1) == (n - k - 1) * mu; }
  friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

namespace detail {

// Layer triples (c, a, b) from a root, requiring constancy within each layer.
inline std::optional<IntersectionArray> array_from_root(const Graph& g, int root, bool lambda_first) {
  const auto layers = g.layers_from(root);
  int reached = 0;
  for (const auto& l : layers) reached += l.count();
  if (reached != g.order()) return std::nullopt;
  const int d = static_cast<int>(layers.size()) - 1;
  const int k = g.degree(root);
  IntersectionArray arr;
  arr.a.assign(static_cast<std::size_t>(d + 1), 0);
  arr.k.resize(static_cast<std::size_t>(d + 1));
  for (int i = 0; i <= d; ++i) arr.k[static_cast<std::size_t>(i)] = layers[static_cast<std::size_t>(i)].count();
  if (d == 0) return arr;

  auto layer_triple = [&](int i, int& ci, int& ai, int& bi) {
    bool first = true, ok = true;
    const Bits empty;
    const Bits& prev = i > 0 ? layers[static_cast<std::size_t>(i - 1)] : empty;
    const Bits& cur = layers[static_cast<std::size_t>(i)];
    const Bits& next = i < d ? layers[static_cast<std::size_t>(i + 1)] : empty;
    cur.for_each([&](int v) {
      if (!ok) return;
      const Bits& nv = g.neighbors(v);
      const int c = nv.intersection_count(prev);
      const int a = nv.intersection_count(cur);
      const int b = nv.intersection_count(next);
      if (c + a + b != k) ok = false;
      if (first) {
        ci = c, ai = a, bi = b, first = false;
      } else if (c != ci || a != ai || b != bi) {
        ok = false;
      }
    });
    return ok;
  };

  std::vector<int> cs(static_cast<std::size_t>(d + 1)), as(static_cast<std::size_t>(d + 1)),
      bs(static_cast<std::size_t>(d + 1));
  // λ-constancy over N_1 first: most candidates fail here.
  if (lambda_first && !layer_triple(1, cs[1], as[1], bs[1])) return std::nullopt;
  for (int i = 0; i <= d; ++i) {
    if (lambda_first && i == 1) continue;
    if (!layer_triple(i, cs[static_cast<std::size_t>(i)], as[static_cast<std::size_t>(i)], bs[static_cast<std::size_t>(i)]))
      return std::nullopt;
  }
  for (int i = 0; i < d; ++i) arr.b.push_back(bs[static_cast<std::size_t>(i)]);
  for (int i = 1; i <= d; ++i) arr.c.push_back(cs[static_cast<std::size_t>(i)]);
  for (int i = 0; i <= d; ++i) arr.a[static_cast<std::size_t>(i)] = as[static_cast<std::size_t>(i)];
  return arr;
}

}  // namespace detail

/// Distance-regularity of a Cayley graph. Translations are automorphisms, so
/// identity-rooted layer triples decide it. Disconnected graphs are never
/// distance-regular.
inline std::optional<IntersectionArray> check_drg(const CayleyGraph& cg) {
  if (!cg.generates_group()) return std::nullopt;
  return detail::array_from_root(cg.graph(), Group::identity(), true);
}

/// Distance-regularity of an arbitrary graph: every root must produce the
/// same array.
inline std::optional<IntersectionArray> check_drg_general(const Graph& g) {
  if (g.order() == 0) return std::nullopt;
  auto first = detail::array_from_root(g, 0, true);
  if (!first) return std::nullopt;
  for (int v = 1; v < g.order(); ++v) {
    auto arr = detail::array_from_root(g, v, true);
    if (!arr || !(*arr == *first)) return std::nullopt;
  }
  return first;
}

inline std::optional<SrgParams> srg_params(const IntersectionArray& arr) {
  if (arr.diameter() != 2) return std::nullopt;
  return SrgParams{arr.order(), arr.b[0], arr.a[1], arr.c[1]};
}

/// Direct count of (n, k, λ, μ) on an arbitrary graph, if strongly regular.
inline std::optional<SrgParams> srg_by_count(const Graph& g) {
  const auto k = g.valency();
  if (!k) return std::nullopt;
  std::optional<int> lam, mu;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v) {
      const int c = g.neighbors(u).intersection_count(g.neighbors(v));
      auto& slot = g.adjacent(u, v) ? lam : mu;
      if (!slot) slot = c;
      else if (*slot != c) return std::nullopt;
    }
  if (!lam || !mu) return std::nullopt;
  return SrgParams{g.order(), *k, *lam, *mu};
}

struct FamilyTag {
  enum class Kind { Complete, CompleteMultipartite, Cycle, Paley, CocktailComplement, TDLineGraph, Other };
  Kind kind = Kind::Other;
  int x = 0;  // t (multipartite), n (cycle), q (Paley), m (cocktail), r (TD)
  int y = 0;  // m (multipartite), v (TD)

  [[nodiscard]] std::string to_string() const {
    auto two = [&](const char* name) { return std::string(name) + "(" + std::to_string(x) + "," + std::to_string(y) + ")"; };
    auto one = [&](const char* name) { return std::string(name) + "(" + std::to_string(x) + ")"; };
    switch (kind) {
      case Kind::Complete: return "Complete";
      case Kind::CompleteMultipartite: return two("CompleteMultipartite");
      case Kind::Cycle: return one("Cycle");
      case Kind::Paley: return one("Paley");
      case Kind::CocktailComplement: return one("CocktailComplement");
      case Kind::TDLineGraph: return two("TDLineGraph");
      case Kind::Other: return "Other";
    }
    return "Other";
  }
  friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
};

inline SrgParams td_line_srg_params(int r, int v) {
  if (r < 2 || r > v) throw PreconditionError("TD line graph parameters need 2 <= r <= v");
  return SrgParams{v * v, r * (v - 1), v + r * r - 3 * r, r * r - r};
}

namespace detail {

inline int isqrt(long long n) {
  if (n < 0) return -1;
  auto r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return static_cast<int>(r);
}

inline std::optional<FamilyTag> match_td(const SrgParams& s) {
  const int v = isqrt(s.n);
  if (v < 2 || v * v != s.n || s.k % (v - 1) != 0) return std::nullopt;
  const int r = s.k / (v - 1);
  if (r < 2 || r > v) return std::nullopt;
  if (td_line_srg_params(r, v) == s) return FamilyTag{FamilyTag::Kind::TDLineGraph, r, v};
  return std::nullopt;
}

inline std::optional<FamilyTag> match_paley(const SrgParams& s) {
  const int n = s.n;
  if (!is_prime(n) || n % 4 != 1) return std::nullopt;
  if (s == SrgParams{n, (n - 1) / 2, (n - 5) / 4, (n - 1) / 4}) return FamilyTag{FamilyTag::Kind::Paley, n, 0};
  return std::nullopt;
}

inline std::optional<FamilyTag> match_cocktail(const IntersectionArray& arr) {
  const int n = arr.order();
  if (n % 2 || arr.diameter() != 3) return std::nullopt;
  const int m = n / 2;
  if (m < 3) return std::nullopt;
  if (arr.b == std::vector<int>{m - 1, m - 2, 1} && arr.c == std::vector<int>{1, m - 2, m - 1})
    return FamilyTag{FamilyTag::Kind::CocktailComplement, m, 0};
  return std::nullopt;
}

}  // namespace detail

/// Parameter-only family tag, with precedence Complete, CompleteMultipartite,
/// Cycle, CocktailComplement, Paley, TDLineGraph, Other.
inline FamilyTag recognize(const IntersectionArray& arr) {
  using K = FamilyTag::Kind;
  const int n = arr.order();
  const int k = arr.valency();
  const int d = arr.diameter();
  if (d == 1) return {K::Complete, n, 0};
  if (d == 2 && arr.c[1] == k) {
    const int m = n - k;
    return {K::CompleteMultipartite, n / m, m};
  }
  if (k == 2) return {K::Cycle, n, 0};
  if (auto t = detail::match_cocktail(arr)) return *t;
  if (auto s = srg_params(arr)) {
    if (auto t = detail::match_paley(*s)) return *t;
    if (auto t = detail::match_td(*s)) return *t;
  }
  return {K::Other, 0, 0};
}

inline FamilyTag recognize(const Graph& g, const IntersectionArray& arr) {
  if (g.order() != arr.order()) throw PreconditionError("array does not belong to graph");
  return recognize(arr);
}

/// Paley and TD parameter tuples that both match (should never happen on
/// the pair-flavor groups). Empty when unambiguous.
inline std::vector<FamilyTag> recognition_collisions(const IntersectionArray& arr) {
  std::vector<FamilyTag> out;
  if (auto s = srg_params(arr)) {
    auto p = detail::match_paley(*s);
    auto t = detail::match_td(*s);
    if (p && t) out = {*p, *t};
  }
  return out;
}

}  // namespace drcay

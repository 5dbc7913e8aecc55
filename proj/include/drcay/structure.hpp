#pragma once

// Imprimitivity analysis: bipartite and antipodal structure, quotients by
// subgroups, halved graphs, equitable partitions and the diameter-3
// antipodal spectrum.

#include <array>
#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "drcay/cayley.hpp"
#include "drcay/drg.hpp"

namespace drcay {

struct VertexPartition {
  std::vector<Bits> blocks;

  [[nodiscard]] bool valid(int n) const {
    Bits seen;
    for (const auto& b : blocks) {
      if (b.none() || b.intersects(seen)) return false;
      seen |= b;
    }
    return seen == Bits::prefix(n);
  }

  /// Cosets of a subgroup, ordered by smallest member.
  static VertexPartition cosets(const Group& g, const Bits& subgroup) {
    VertexPartition p;
    Bits covered;
    for (int x = 0; x < g.order(); ++x) {
      if (covered.test(x)) continue;
      Bits c = g.translate(subgroup, x);
      covered |= c;
      p.blocks.push_back(c);
    }
    return p;
  }

  static VertexPartition singletons(int n) {
    VertexPartition p;
    for (int v = 0; v < n; ++v) {
      Bits b;
      b.set(v);
      p.blocks.push_back(b);
    }
    return p;
  }
};

/// Two-coloring by BFS parity, if consistent.
inline std::optional<std::array<Bits, 2>> is_bipartite(const Graph& g) {
  if (!g.connected()) throw PreconditionError("bipartiteness test needs a connected graph");
  const auto layers = g.layers_from(0);
  std::array<Bits, 2> sides;
  for (std::size_t i = 0; i < layers.size(); ++i) sides[i % 2] |= layers[i];
  for (int v = 0; v < g.order(); ++v) {
    const int side = sides[0].test(v) ? 0 : 1;
    if (g.neighbors(v).intersects(sides[static_cast<std::size_t>(side)])) return std::nullopt;
  }
  return sides;
}

/// Classes of u ~ v <=> ∂(u,v) ∈ {0, d}, when that relation is an
/// equivalence (checked exhaustively).
inline std::optional<VertexPartition> antipodal_classes(const Graph& g, const DistancePartition& dp) {
  const int d = dp.diameter();
  if (d < 2) throw PreconditionError("antipodal classes need diameter >= 2");
  if (!g.connected()) throw PreconditionError("antipodal classes need a connected graph");
  const auto dist = g.distances();
  const int n = g.order();
  std::vector<Bits> cls(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      const int duv = dist[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
      if (duv == 0 || duv == d) cls[static_cast<std::size_t>(u)].set(v);
    }
  for (int u = 0; u < n; ++u) {
    bool ok = true;
    cls[static_cast<std::size_t>(u)].for_each([&](int v) {
      ok = ok && cls[static_cast<std::size_t>(v)] == cls[static_cast<std::size_t>(u)];
    });
    if (!ok) return std::nullopt;
  }
  VertexPartition p;
  Bits covered;
  for (int u = 0; u < n; ++u) {
    if (covered.test(u)) continue;
    p.blocks.push_back(cls[static_cast<std::size_t>(u)]);
    covered |= cls[static_cast<std::size_t>(u)];
  }
  const int r = p.blocks.front().count();
  for (const auto& b : p.blocks)
    if (b.count() != r) throw VerificationFailure("antipodal classes of unequal size");
  return p;
}

/// Every distance-i graph is connected.
inline bool is_primitive_graph(const Graph& g) {
  const auto dist = g.distances();
  const int n = g.order();
  int d = 0;
  for (const auto& row : dist)
    for (int x : row) d = std::max(d, x);
  for (int i = 1; i <= d; ++i) {
    Graph gi(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (dist[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] == i) gi.add_edge(u, v);
    if (!gi.connected()) return false;
  }
  return true;
}

/// The quotient G/B presented as Z_a (+) Z_b, together with the vertex map.
struct QuotientGraph {
  CayleyGraph graph;
  std::vector<int> coset_of;  // vertex of the original graph -> quotient rank
};

namespace detail {

struct QuotientGroup {
  Group group;
  std::vector<int> image;  // element rank -> rank in the quotient
};

inline QuotientGroup quotient_group(const Group& g, const Bits& b) {
  const int n = g.order();
  const int bo = b.count();
  const int qn = n / bo;
  std::vector<int> coset_id(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int x = 0; x < n; ++x) {
    if (coset_id[static_cast<std::size_t>(x)] >= 0) continue;
    g.translate(b, x).for_each([&](int y) { coset_id[static_cast<std::size_t>(y)] = next; });
    ++next;
  }
  auto coset_order = [&](int x) {
    int t = 1, y = x;
    while (!b.test(y)) y = g.add(y, x), ++t;
    return t;
  };
  int x = 0, a = 1;
  for (int e = 0; e < n; ++e)
    if (int o = coset_order(e); o > a) a = o, x = e;
  const int bq = qn / a;
  // Complement of <x + B>: an element of coset order bq meeting <x + B> trivially.
  std::vector<char> in_x(static_cast<std::size_t>(qn), 0);
  for (int i = 0, y = 0; i < a; ++i, y = g.add(y, x)) in_x[static_cast<std::size_t>(coset_id[static_cast<std::size_t>(y)])] = 1;
  int yg = 0;
  bool found = bq == 1;
  for (int e = 0; e < n && !found; ++e) {
    if (coset_order(e) != bq) continue;
    bool trivial = true;
    for (int j = 1, y = e; j < bq; ++j, y = g.add(y, e))
      if (in_x[static_cast<std::size_t>(coset_id[static_cast<std::size_t>(y)])]) trivial = false;
    if (trivial) yg = e, found = true;
  }
  if (!found) throw VerificationFailure("quotient is not 2-generated");
  Group qg = Group::product(a, bq);
  std::vector<int> coset_to_q(static_cast<std::size_t>(qn), -1);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < bq; ++j) {
      const int e = g.add(g.scale(i, x), g.scale(j, yg));
      coset_to_q[static_cast<std::size_t>(coset_id[static_cast<std::size_t>(e)])] = qg.rank(i, j);
    }
  QuotientGroup out{qg, std::vector<int>(static_cast<std::size_t>(n))};
  for (int e = 0; e < n; ++e) {
    const int r = coset_to_q[static_cast<std::size_t>(coset_id[static_cast<std::size_t>(e)])];
    if (r < 0) throw VerificationFailure("quotient presentation does not cover every coset");
    out.image[static_cast<std::size_t>(e)] = r;
  }
  // Homomorphism check.
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (out.image[static_cast<std::size_t>(g.add(u, v))] !=
          qg.add(out.image[static_cast<std::size_t>(u)], out.image[static_cast<std::size_t>(v)]))
        throw VerificationFailure("quotient map is not a homomorphism");
  return out;
}

}  // namespace detail

/// Cay(G/B, S/B) with S/B = {s + B : s ∈ S \ B}; block adjacency in the
/// original graph is verified against the quotient.
inline QuotientGraph quotient_by_subgroup(const CayleyGraph& cg, const Subgroup& b) {
  const Group& g = cg.group();
  const Bits& s = cg.connection_set().members();
  if (s.subset_of(b.members)) throw PreconditionError("connection set lies inside the subgroup");
  auto qg = detail::quotient_group(g, b.members);
  Bits qs;
  (s - b.members).for_each([&](int x) { qs.set(qg.image[static_cast<std::size_t>(x)]); });
  QuotientGraph out{CayleyGraph(qg.group, SymmetricSet(qg.group, qs)), qg.image};
  // Blocks X, Y (X != Y) are adjacent iff some edge joins them.
  const int qn = qg.group.order();
  std::vector<Bits> block_adj(static_cast<std::size_t>(qn));
  for (int u = 0; u < g.order(); ++u)
    cg.graph().neighbors(u).for_each([&](int v) {
      const int bu = qg.image[static_cast<std::size_t>(u)], bv = qg.image[static_cast<std::size_t>(v)];
      if (bu != bv) block_adj[static_cast<std::size_t>(bu)].set(bv);
    });
  for (int x = 0; x < qn; ++x)
    if (block_adj[static_cast<std::size_t>(x)] != out.graph.graph().neighbors(x))
      throw VerificationFailure("quotient adjacency disagrees with block adjacency");
  return out;
}

/// The distance-2 graph restricted to each color class.
inline std::pair<Graph, Graph> halved_graphs(const Graph& g, const std::array<Bits, 2>& sides) {
  if (!g.connected()) throw PreconditionError("halved graphs need a connected graph");
  for (int v = 0; v < g.order(); ++v) {
    const int side = sides[0].test(v) ? 0 : 1;
    if (g.neighbors(v).intersects(sides[static_cast<std::size_t>(side)]))
      throw PreconditionError("halved graphs need a bipartite graph");
  }
  Graph d2(g.order());
  for (int v = 0; v < g.order(); ++v) {
    Bits two;
    g.neighbors(v).for_each([&](int u) { two |= g.neighbors(u); });
    two -= g.neighbors(v);
    two.reset(v);
    d2.neighbors(v) = two;
  }
  return {d2.induced(sides[0]), d2.induced(sides[1])};
}

/// Block degree matrix b_ij when every vertex of B_i has b_ij neighbors in B_j.
inline std::optional<std::vector<std::vector<int>>> is_equitable(const Graph& g, const VertexPartition& p) {
  const std::size_t nb = p.blocks.size();
  std::vector<std::vector<int>> m(nb, std::vector<int>(nb, -1));
  for (std::size_t i = 0; i < nb; ++i) {
    bool ok = true;
    p.blocks[i].for_each([&](int v) {
      for (std::size_t j = 0; j < nb && ok; ++j) {
        const int c = g.neighbors(v).intersection_count(p.blocks[j]);
        if (m[i][j] < 0) m[i][j] = c;
        else if (m[i][j] != c) ok = false;
      }
    });
    if (!ok) return std::nullopt;
  }
  return m;
}

/// Spectrum of a non-bipartite r-fold antipodal DRG of diameter 3 with the
/// given (k, r, λ, μ). The discriminant 4k + (λ-μ)^2 = (2δ)^2 is kept exact
/// so integrality is decided without floating point.
struct AntipodalSpectrum {
  int k = 0, r = 0, lambda = 0, mu = 0;
  long long discriminant = 0;            // (2δ)^2
  std::optional<long long> two_delta;    // exact 2δ when the discriminant is a square
  double delta = 0, theta1 = 0, theta2 = -1, theta3 = 0;
  double m1 = 0, m2 = 0, m3 = 0;
  int vertices = 0;
  bool integral = false;
  bool feasible = true;  // false when λ ≠ μ yet the eigenvalues are irrational
  /// Exact θ1, θ3 when integral.
  std::optional<long long> theta1_exact, theta3_exact;
};

inline AntipodalSpectrum antipodal_spectrum(int k, int r, int lambda, int mu) {
  if (k < 0 || lambda < 0 || mu < 0 || r < 2) throw PreconditionError("antipodal spectrum needs non-negative inputs and r >= 2");
  if (k != mu * (r - 1) + lambda + 1) throw PreconditionError("consistency equation k = mu(r-1) + lambda + 1 fails");
  AntipodalSpectrum sp;
  sp.k = k, sp.r = r, sp.lambda = lambda, sp.mu = mu;
  const long long diff = lambda - mu;
  sp.discriminant = 4LL * k + diff * diff;
  const int root = detail::isqrt(sp.discriminant);
  if (static_cast<long long>(root) * root == sp.discriminant) {
    sp.two_delta = root;
    // root ≡ diff (mod 2) since root^2 ≡ diff^2 (mod 4)
    sp.theta1_exact = (diff + root) / 2;
    sp.theta3_exact = (diff - root) / 2;
    sp.integral = true;
  }
  sp.delta = std::sqrt(static_cast<double>(sp.discriminant)) / 2.0;
  sp.theta1 = static_cast<double>(diff) / 2.0 + sp.delta;
  sp.theta3 = static_cast<double>(diff) / 2.0 - sp.delta;
  const double fibres = static_cast<double>(r - 1) * (k + 1);
  sp.m1 = -sp.theta3 / (sp.theta1 - sp.theta3) * fibres;
  sp.m3 = sp.theta1 / (sp.theta1 - sp.theta3) * fibres;
  sp.m2 = k;
  sp.vertices = r * (k + 1);
  sp.feasible = !(lambda != mu && !sp.integral);
  return sp;
}

}  // namespace drcay

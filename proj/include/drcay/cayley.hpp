#pragma once

// Cayley graphs Cay(G, S) over the groups of group.hpp, stored as one
// neighbor bit vector per vertex, plus BFS distance partitions.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "drcay/bits.hpp"
#include "drcay/error.hpp"
#include "drcay/group.hpp"

namespace drcay {

/// Simple undirected graph on vertices 0..n-1 with bit-vector rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : rows_(static_cast<std::size_t>(n)) {
    if (n > static_cast<int>(Bits::kCapacity))
      throw PreconditionError("graph order exceeds supported maximum");
  }

  [[nodiscard]] int order() const { return static_cast<int>(rows_.size()); }
  void add_edge(int u, int v) {
    rows_[static_cast<std::size_t>(u)].set(v);
    rows_[static_cast<std::size_t>(v)].set(u);
  }
  [[nodiscard]] bool adjacent(int u, int v) const { return rows_[static_cast<std::size_t>(u)].test(v); }
  [[nodiscard]] const Bits& neighbors(int v) const { return rows_[static_cast<std::size_t>(v)]; }
  Bits& neighbors(int v) { return rows_[static_cast<std::size_t>(v)]; }
  [[nodiscard]] int degree(int v) const { return neighbors(v).count(); }

  /// Regular valency, or nullopt.
  [[nodiscard]] std::optional<int> valency() const {
    if (rows_.empty()) return 0;
    const int k = degree(0);
    for (int v = 1; v < order(); ++v)
      if (degree(v) != k) return std::nullopt;
    return k;
  }

  [[nodiscard]] Bits vertices() const { return Bits::prefix(order()); }

  /// BFS layers from a root; unreachable vertices are absent.
  [[nodiscard]] std::vector<Bits> layers_from(int root) const {
    std::vector<Bits> layers;
    Bits seen, frontier;
    frontier.set(root);
    seen.set(root);
    while (frontier.any()) {
      layers.push_back(frontier);
      Bits next;
      frontier.for_each([&](int v) { next |= neighbors(v); });
      next -= seen;
      seen |= next;
      frontier = next;
    }
    return layers;
  }

  [[nodiscard]] bool connected() const {
    if (order() == 0) return true;
    int reached = 0;
    for (const auto& l : layers_from(0)) reached += l.count();
    return reached == order();
  }

  /// Distance matrix via BFS from every vertex; -1 when unreachable.
  [[nodiscard]] std::vector<std::vector<int>> distances() const {
    std::vector<std::vector<int>> d(static_cast<std::size_t>(order()),
                                    std::vector<int>(static_cast<std::size_t>(order()), -1));
    for (int u = 0; u < order(); ++u) {
      const auto layers = layers_from(u);
      for (std::size_t i = 0; i < layers.size(); ++i)
        layers[i].for_each([&](int v) { d[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = static_cast<int>(i); });
    }
    return d;
  }

  /// Graph induced on the given vertices, relabeled in increasing order.
  [[nodiscard]] Graph induced(const Bits& keep) const {
    const auto idx = keep.indices();
    std::vector<int> pos(static_cast<std::size_t>(order()), -1);
    for (std::size_t i = 0; i < idx.size(); ++i) pos[static_cast<std::size_t>(idx[i])] = static_cast<int>(i);
    Graph g(static_cast<int>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i)
      (neighbors(idx[i]) & keep).for_each([&](int v) { g.neighbors(static_cast<int>(i)).set(pos[static_cast<std::size_t>(v)]); });
    return g;
  }

  [[nodiscard]] int edge_count() const {
    int c = 0;
    for (const auto& r : rows_) c += r.count();
    return c / 2;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<Bits> rows_;
};

/// Identity-free, negation-closed connection set.
class SymmetricSet {
 public:
  SymmetricSet() = default;
  SymmetricSet(const Group& g, const Bits& members) : members_(members) {
    if (members.test(Group::identity())) throw PreconditionError("connection set contains the identity");
    bool symmetric = true;
    members.for_each([&](int x) { symmetric = symmetric && members.test(g.neg(x)); });
    if (!symmetric) throw PreconditionError("connection set is not closed under negation");
    members.for_each([&](int x) {
      if (x >= g.order()) throw PreconditionError("connection set element outside the group");
    });
  }

  /// Union of subgroups minus the identity.
  static SymmetricSet union_of(const Group& g, const std::vector<Subgroup>& hs) {
    Bits b;
    for (const auto& h : hs) b |= h.members;
    b.reset(Group::identity());
    return SymmetricSet(g, b);
  }

  [[nodiscard]] const Bits& members() const { return members_; }
  [[nodiscard]] int size() const { return members_.count(); }
  friend bool operator==(const SymmetricSet&, const SymmetricSet&) = default;

 private:
  Bits members_;
};

/// Rows R_j = {u : (u, j) in S} of a connection set over Z_m (+) Z_q.
struct RowDecomposition {
  int first_modulus = 0;
  std::vector<Bits> rows;  // bit u of rows[j] <=> (u, j) in S

  static RowDecomposition of(const Group& g, const Bits& set) {
    RowDecomposition r;
    r.first_modulus = g.first_modulus();
    r.rows.resize(static_cast<std::size_t>(g.second_modulus()));
    set.for_each([&](int x) {
      const auto e = g.element(x);
      r.rows[static_cast<std::size_t>(e.second)].set(e.first);
    });
    return r;
  }

  [[nodiscard]] Bits reassemble(const Group& g) const {
    Bits out;
    for (std::size_t j = 0; j < rows.size(); ++j)
      rows[j].for_each([&](int u) { out.set(g.rank(u, static_cast<int>(j))); });
    return out;
  }
};

struct DistancePartition {
  std::vector<Bits> layers;  // N_0 .. N_d as element ranks
  [[nodiscard]] int diameter() const { return static_cast<int>(layers.size()) - 1; }
  [[nodiscard]] std::vector<int> sizes() const {
    std::vector<int> s;
    for (const auto& l : layers) s.push_back(l.count());
    return s;
  }
  /// R_{i,j} = {u : (u, i) in N_j}.
  [[nodiscard]] Bits row_layer(const Group& g, int i, int j) const {
    if (j < 0 || j >= static_cast<int>(layers.size())) return {};
    return RowDecomposition::of(g, layers[static_cast<std::size_t>(j)]).rows[static_cast<std::size_t>(i)];
  }
  /// Distance of each vertex from the identity.
  [[nodiscard]] std::vector<int> distance_of(int order) const {
    std::vector<int> d(static_cast<std::size_t>(order), -1);
    for (std::size_t i = 0; i < layers.size(); ++i)
      layers[i].for_each([&](int v) { d[static_cast<std::size_t>(v)] = static_cast<int>(i); });
    return d;
  }
};

class CayleyGraph {
 public:
  CayleyGraph(Group group, SymmetricSet set) : group_(std::move(group)), set_(std::move(set)), graph_(group_.order()) {
    for (int v = 0; v < group_.order(); ++v) graph_.neighbors(v) = group_.translate(set_.members(), v);
  }

  [[nodiscard]] const Group& group() const { return group_; }
  [[nodiscard]] const SymmetricSet& connection_set() const { return set_; }
  [[nodiscard]] const Graph& graph() const { return graph_; }
  [[nodiscard]] int order() const { return group_.order(); }
  [[nodiscard]] int valency() const { return set_.size(); }

  [[nodiscard]] bool is_connected() const { return graph_.connected(); }
  /// Connectivity via <S> = G, independent of BFS.
  [[nodiscard]] bool generates_group() const { return group_.generates(set_.members()); }

  [[nodiscard]] DistancePartition distance_partition() const {
    DistancePartition dp{graph_.layers_from(Group::identity())};
    int reached = 0;
    for (const auto& l : dp.layers) reached += l.count();
    if (reached != order()) throw PreconditionError("distance partition of a disconnected graph");
    return dp;
  }

  /// |N(0) ∩ N(target)| by mask intersection.
  [[nodiscard]] int common_neighbors(int target) const {
    return graph_.neighbors(Group::identity()).intersection_count(graph_.neighbors(target));
  }

  /// |N(0) ∩ N((i,j))| as the row sum Σ_t |R_t ∩ (i - R_{j-t})|.
  [[nodiscard]] int common_neighbors_by_rows(int target) const {
    const auto rows = RowDecomposition::of(group_, set_.members());
    const int m = group_.first_modulus();
    const int q = group_.second_modulus();
    const auto e = group_.element(target);
    int total = 0;
    for (int t = 0; t < q; ++t) {
      const Bits& rt = rows.rows[static_cast<std::size_t>(t)];
      const Bits& rj = rows.rows[static_cast<std::size_t>(((e.second - t) % q + q) % q)];
      // i - R_{j-t}
      Bits shifted;
      rj.for_each([&](int u) { shifted.set(((e.first - u) % m + m) % m); });
      total += rt.intersection_count(shifted);
    }
    return total;
  }

  /// Every translation x -> x + g maps edges to edges.
  [[nodiscard]] bool translations_are_automorphisms() const {
    for (int g = 0; g < order(); ++g)
      for (int u = 0; u < order(); ++u)
        if (graph_.neighbors(group_.add(u, g)) != group_.translate(graph_.neighbors(u), g)) return false;
    return true;
  }

 private:
  Group group_;
  SymmetricSet set_;
  Graph graph_;
};

inline CayleyGraph build(const Group& g, const SymmetricSet& s) { return CayleyGraph(g, s); }

/// "u v" per edge (u < v), one per line.
inline std::string edge_list(const Graph& g) {
  std::ostringstream os;
  for (int u = 0; u < g.order(); ++u)
    g.neighbors(u).for_each([&](int v) {
      if (u < v) os << u << ' ' << v << '\n';
    });
  return os.str();
}

/// graph6 encoding (orders < 63 use the one-byte size header).
inline std::string graph6(const Graph& g) {
  std::string out;
  const int n = g.order();
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0, nbits = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = nbits = 0;
      }
    }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

inline Graph parse_graph6(const std::string& text) {
  if (text.empty()) throw ParseError("empty graph6 string");
  std::size_t pos = 0;
  int n = 0;
  if (text[0] == 126) {
    if (text.size() < 4) throw ParseError("truncated graph6 header");
    n = ((text[1] - 63) << 12) | ((text[2] - 63) << 6) | (text[3] - 63);
    pos = 4;
  } else {
    n = text[0] - 63;
    pos = 1;
  }
  Graph g(n);
  int bit = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++bit) {
      const std::size_t byte = pos + static_cast<std::size_t>(bit / 6);
      if (byte >= text.size()) throw ParseError("truncated graph6 body");
      if (((text[byte] - 63) >> (5 - bit % 6)) & 1) g.add_edge(u, v);
    }
  return g;
}

}  // namespace drcay

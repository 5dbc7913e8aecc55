#pragma once

// Group-algebra layer over Z[G]: class sums, distance modules and Schur ring
// verification.

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "drcay/cayley.hpp"

namespace drcay {

/// Element of Z[G] as a coefficient per element rank.
struct ClassSum {
  std::vector<std::int64_t> coeff;

  static ClassSum of(const Group& g, const Bits& set) {
    ClassSum x{std::vector<std::int64_t>(static_cast<std::size_t>(g.order()), 0)};
    set.for_each([&](int r) { x.coeff[static_cast<std::size_t>(r)] = 1; });
    return x;
  }
  friend bool operator==(const ClassSum&, const ClassSum&) = default;
};

/// (x * y)(g) = Σ_h x(h) y(g - h).
inline ClassSum convolve(const Group& g, const ClassSum& x, const ClassSum& y) {
  const auto n = static_cast<std::size_t>(g.order());
  if (x.coeff.size() != n || y.coeff.size() != n) throw PreconditionError("class sums over different groups");
  ClassSum out{std::vector<std::int64_t>(n, 0)};
  for (std::size_t h = 0; h < n; ++h) {
    if (!x.coeff[h]) continue;
    for (std::size_t k = 0; k < n; ++k)
      if (y.coeff[k]) out.coeff[static_cast<std::size_t>(g.add(static_cast<int>(h), static_cast<int>(k)))] += x.coeff[h] * y.coeff[k];
  }
  return out;
}

struct SchurBasis {
  std::vector<Bits> cells;  // T_0 = {identity}, T_1, ...
  /// p[i][j][k] when verified.
  std::vector<std::vector<std::vector<std::int64_t>>> constants;
};

inline SchurBasis distance_module(const CayleyGraph& cg) {
  return SchurBasis{cg.distance_partition().layers, {}};
}

inline SchurBasis distance_module(const CayleyGraph&, const DistancePartition& dp) {
  return SchurBasis{dp.layers, {}};
}

/// Structure constants p_ij^k if the cell sums span a Schur ring: cells
/// partition G, T_0 = {0}, every -T_i is a cell, and each product T_i T_j is
/// constant on every cell.
inline std::optional<std::vector<std::vector<std::vector<std::int64_t>>>> is_schur_ring(const Group& g,
                                                                                          const SchurBasis& basis) {
  const auto& cells = basis.cells;
  const std::size_t r = cells.size();
  if (r == 0) return std::nullopt;
  Bits id;
  id.set(Group::identity());
  if (cells[0] != id) return std::nullopt;
  Bits seen;
  for (const auto& c : cells) {
    if (c.none() || c.intersects(seen)) return std::nullopt;
    seen |= c;
  }
  if (seen != g.all()) return std::nullopt;
  std::vector<int> cell_of(static_cast<std::size_t>(g.order()));
  for (std::size_t i = 0; i < r; ++i) cells[i].for_each([&](int x) { cell_of[static_cast<std::size_t>(x)] = static_cast<int>(i); });
  for (const auto& c : cells) {
    const Bits neg = g.negate(c);
    if (neg != cells[static_cast<std::size_t>(cell_of[static_cast<std::size_t>(neg.first())])]) return std::nullopt;
  }
  std::vector<ClassSum> sums;
  for (const auto& c : cells) sums.push_back(ClassSum::of(g, c));
  std::vector<std::vector<std::vector<std::int64_t>>> p(r, std::vector<std::vector<std::int64_t>>(r, std::vector<std::int64_t>(r, 0)));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i; j < r; ++j) {
      const ClassSum prod = convolve(g, sums[i], sums[j]);
      for (std::size_t k = 0; k < r; ++k) {
        const std::int64_t v = prod.coeff[static_cast<std::size_t>(cells[k].first())];
        bool constant = true;
        cells[k].for_each([&](int x) { constant = constant && prod.coeff[static_cast<std::size_t>(x)] == v; });
        if (!constant) return std::nullopt;
        p[i][j][k] = p[j][i][k] = v;
      }
    }
  return p;
}

/// Every non-identity cell generates G.
inline bool is_primitive(const Group& g, const SchurBasis& basis) {
  for (std::size_t i = 1; i < basis.cells.size(); ++i)
    if (g.span(basis.cells[i]).order != g.order()) return false;
  return true;
}

inline bool is_trivial(const SchurBasis& basis) { return basis.cells.size() == 2; }

/// The permutation π with T_i^(m) = T_π(i), where T^(m) = {m x : x ∈ T}.
inline std::vector<int> power_map(const Group& g, const SchurBasis& basis, long long m) {
  if (std::gcd(((m % g.order()) + g.order()) % g.order(), static_cast<long long>(g.order())) != 1)
    throw PreconditionError("power map needs m coprime to the group order");
  std::vector<int> perm;
  for (const auto& c : basis.cells) {
    const Bits img = g.scale(m, c);
    int found = -1;
    for (std::size_t j = 0; j < basis.cells.size(); ++j)
      if (basis.cells[j] == img) found = static_cast<int>(j);
    if (found < 0) throw VerificationFailure("power map image is not a basis cell");
    perm.push_back(found);
  }
  return perm;
}

}  // namespace drcay

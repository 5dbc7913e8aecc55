#pragma once

// Exhaustive census of distance-regular connection sets over a group of odd
// order, with automorphism-orbit deduplication.

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "drcay/cayley.hpp"
#include "drcay/drg.hpp"
#include "drcay/fourier.hpp"
#include "drcay/schur.hpp"
#include "drcay/structure.hpp"

namespace drcay {

/// Streams every symmetric subset (a union of inverse pairs) in increasing
/// order of its pair mask. Stops early when the callback returns false.
inline std::uint64_t enumerate_symmetric_sets(const Group& g, const std::function<bool(const SymmetricSet&)>& fn) {
  const auto pairs = g.inverse_pairs();
  if (pairs.size() > 62) throw BudgetExceeded("too many inverse pairs to enumerate");
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  std::uint64_t seen = 0;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Bits s;
    for (std::uint64_t m = mask; m; m &= m - 1)
      for (int x : pairs[static_cast<std::size_t>(std::countr_zero(m))]) s.set(x);
    ++seen;
    if (!fn(SymmetricSet(g, s))) break;
  }
  return seen;
}

struct OrbitInfo {
  Bits canonical;
  long long orbit_size = 0;
};

/// Lexicographic minimum of the Aut(G)-orbit of S, and the orbit size.
inline OrbitInfo orbit_canonical(const std::vector<GroupAutomorphism>& autos, const Bits& s) {
  std::set<std::vector<int>> images;
  OrbitInfo out{s, 0};
  for (const auto& a : autos) {
    const Bits img = a.apply(s);
    if (images.insert(img.indices()).second && lex_less(img, out.canonical)) out.canonical = img;
  }
  out.orbit_size = static_cast<long long>(images.size());
  return out;
}

inline OrbitInfo orbit_canonical(const Group& g, const Bits& s) { return orbit_canonical(g.automorphism_group(), s); }

struct CensusOptions {
  bool prune = true;            // cheap filters before the full check
  bool orbit_first = false;     // orderly generation of orbit representatives
  int partitions = 1;           // contiguous index ranges
  int threads = 1;
  int schur_every = 1;          // Schur-ring cross-check on every n-th record, 0 = never
  bool fourier = true;          // row-identity audit on pair-flavor hits of diameter >= 2
  std::uint64_t max_sets = std::uint64_t{1} << 24;
  long long max_nodes = 10'000'000;
};

struct CensusRecord {
  Bits set;
  long long orbit_size = 0;
  FamilyTag family;
  IntersectionArray array;
  bool primitive = false;
  bool bipartite = false;
  bool antipodal = false;
  std::optional<bool> schur;
  std::optional<bool> module_primitive;
  std::optional<bool> fourier;
};

struct FamilyCount {
  long long sets = 0;
  long long orbits = 0;
  std::set<std::string> arrays;
};

struct CensusReport {
  std::string group;
  std::string mode;
  std::uint64_t symmetric_sets = 0;
  std::uint64_t connected = 0;
  long long drg_sets = 0;
  long long orbits = 0;
  int parameter_classes = 0;
  long long antipodal_non_bipartite_d3 = 0;
  std::map<std::string, FamilyCount> families;
  std::vector<CensusRecord> records;
  std::vector<std::string> anomalies;
  std::vector<std::string> review_notes;
};

namespace detail {

/// Pair-mask evaluation in narrow bitsets. Every set is a 64-bit mask over
/// inverse pairs; set and translate images come from per-byte tables.
template <std::size_t W>
class CensusKernel {
 public:
  using B = BasicBits<W>;
  enum class Verdict { Disconnected, Rejected, Drg };

  explicit CensusKernel(const Group& g) : n_(g.order()) {
    if (n_ > static_cast<int>(B::kCapacity)) throw PreconditionError("kernel width too small");
    const auto pairs = g.inverse_pairs();
    pairs_ = static_cast<int>(pairs.size());
    chunks_ = (pairs_ + 7) / 8;
    for (const auto& pr : pairs) rep_.push_back(pr[0]);
    sets_.assign(static_cast<std::size_t>(chunks_) * 256, B{});
    for (int c = 0; c < chunks_; ++c)
      for (int v = 0; v < 256; ++v)
        for (int b = 0; b < 8; ++b)
          if ((v >> b) & 1 && c * 8 + b < pairs_)
            for (int x : pairs[static_cast<std::size_t>(c * 8 + b)]) sets_[static_cast<std::size_t>(c * 256 + v)].set(x);
    trans_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(chunks_) * 256, B{});
    for (int x = 0; x < n_; ++x)
      for (int c = 0; c < chunks_; ++c)
        for (int v = 0; v < 256; ++v) {
          B& t = trans_[index(x, c, v)];
          sets_[static_cast<std::size_t>(c * 256 + v)].for_each([&](int y) { t.set(g.add(x, y)); });
        }
    for (const auto& h : g.maximal_subgroups()) {
      std::uint64_t m = 0;
      for (int j = 0; j < pairs_; ++j)
        if (h.members.test(rep_[static_cast<std::size_t>(j)])) m |= std::uint64_t{1} << j;
      maximal_.push_back(m);
    }
    all_ = B::prefix(n_);
  }

  [[nodiscard]] int pairs() const { return pairs_; }

  [[nodiscard]] B set_of(std::uint64_t mask) const {
    B s;
    for (int c = 0; c < chunks_; ++c) s |= sets_[static_cast<std::size_t>(c * 256) + ((mask >> (8 * c)) & 0xff)];
    return s;
  }

  /// x + S.
  [[nodiscard]] B neighbors(int x, std::uint64_t mask) const {
    B s;
    for (int c = 0; c < chunks_; ++c) s |= trans_[index(x, c, static_cast<int>((mask >> (8 * c)) & 0xff))];
    return s;
  }

  /// <S> = G iff S avoids every maximal subgroup.
  [[nodiscard]] bool generates(std::uint64_t mask) const {
    if (!mask) return n_ == 1;
    for (auto m : maximal_)
      if ((mask & ~m) == 0) return false;
    return true;
  }

  [[nodiscard]] Verdict evaluate(std::uint64_t mask) const {
    if (!generates(mask)) return Verdict::Disconnected;
    const B s = set_of(mask);
    // λ-constancy on N_1; λ(x) = λ(-x) so one element per pair suffices.
    int lambda = -1;
    for (std::uint64_t m = mask; m; m &= m - 1) {
      const int x = rep_[static_cast<std::size_t>(std::countr_zero(m))];
      const int l = neighbors(x, mask).intersection_count(s);
      if (lambda < 0) lambda = l;
      else if (l != lambda) return Verdict::Rejected;
    }
    // BFS from the identity, caching neighborhoods.
    std::array<B, B::kCapacity> nb;
    std::array<B, B::kCapacity + 1> layers;
    int d = 0;
    layers[0].set(0);
    nb[0] = s;
    B visited = layers[0];
    B cur = layers[0];
    for (;;) {
      B next;
      cur.for_each([&](int v) {
        if (v != 0) nb[static_cast<std::size_t>(v)] = neighbors(v, mask);
        next |= nb[static_cast<std::size_t>(v)];
      });
      next -= visited;
      if (next.none()) break;
      visited |= next;
      layers[static_cast<std::size_t>(++d)] = next;
      cur = next;
    }
    if (visited != all_) return Verdict::Disconnected;
    for (int i = 1; i <= d; ++i) {
      int ci = -1, ai = -1;
      bool ok = true;
      layers[static_cast<std::size_t>(i)].for_each([&](int v) {
        if (!ok) return;
        const B& nv = nb[static_cast<std::size_t>(v)];
        const int c = nv.intersection_count(layers[static_cast<std::size_t>(i - 1)]);
        const int a = nv.intersection_count(layers[static_cast<std::size_t>(i)]);
        if (ci < 0) ci = c, ai = a;
        else if (c != ci || a != ai) ok = false;
      });
      if (!ok) return Verdict::Rejected;
    }
    return Verdict::Drg;
  }

 private:
  [[nodiscard]] std::size_t index(int x, int c, int v) const {
    return (static_cast<std::size_t>(x) * static_cast<std::size_t>(chunks_) + static_cast<std::size_t>(c)) * 256 +
           static_cast<std::size_t>(v);
  }

  int n_ = 0, pairs_ = 0, chunks_ = 0;
  std::vector<int> rep_;
  std::vector<B> sets_, trans_;
  std::vector<std::uint64_t> maximal_;
  B all_;
};

/// Automorphisms as permutations of inverse-pair indices.
inline std::vector<std::vector<int>> pair_permutations(const Group& g, const std::vector<GroupAutomorphism>& autos) {
  const auto pairs = g.inverse_pairs();
  std::vector<int> pair_of(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t j = 0; j < pairs.size(); ++j)
    for (int x : pairs[j]) pair_of[static_cast<std::size_t>(x)] = static_cast<int>(j);
  std::vector<std::vector<int>> out;
  for (const auto& a : autos) {
    std::vector<int> perm;
    for (const auto& pr : pairs) perm.push_back(pair_of[static_cast<std::size_t>(a.apply(pr[0]))]);
    out.push_back(std::move(perm));
  }
  return out;
}

inline std::uint64_t permute_mask(const std::vector<int>& perm, std::uint64_t mask) {
  std::uint64_t out = 0;
  for (std::uint64_t m = mask; m; m &= m - 1) out |= std::uint64_t{1} << perm[static_cast<std::size_t>(std::countr_zero(m))];
  return out;
}

/// Order on pair masks matching lex order on element sets: the lowest
/// differing pair belongs to the smaller set.
inline bool mask_less(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t diff = a ^ b;
  return diff && (a & diff & (~diff + 1)) != 0;
}

struct MaskOrbit {
  std::uint64_t canonical = 0;
  long long orbit_size = 0;
  bool is_canonical = false;
};

inline MaskOrbit mask_orbit(const std::vector<std::vector<int>>& perms, std::uint64_t mask) {
  MaskOrbit out{mask, 0, true};
  long long stabilizer = 0;
  for (const auto& p : perms) {
    const std::uint64_t img = permute_mask(p, mask);
    if (img == mask) ++stabilizer;
    if (mask_less(img, out.canonical)) out.canonical = img;
  }
  out.is_canonical = out.canonical == mask;
  out.orbit_size = static_cast<long long>(perms.size()) / stabilizer;
  return out;
}

inline bool mask_is_canonical(const std::vector<std::vector<int>>& perms, std::uint64_t mask) {
  for (const auto& p : perms)
    if (mask_less(permute_mask(p, mask), mask)) return false;
  return true;
}

inline Bits mask_to_set(const std::vector<std::vector<int>>& pairs, std::uint64_t mask) {
  Bits s;
  for (std::uint64_t m = mask; m; m &= m - 1)
    for (int x : pairs[static_cast<std::size_t>(std::countr_zero(m))]) s.set(x);
  return s;
}

struct PartialCensus {
  std::uint64_t symmetric_sets = 0;
  std::uint64_t connected = 0;
  std::map<std::uint64_t, long long> hits;  // canonical mask -> sets seen

  void merge(const PartialCensus& o) {
    symmetric_sets += o.symmetric_sets;
    connected += o.connected;
    for (const auto& [k, v] : o.hits) hits[k] += v;
  }
};

template <std::size_t W>
PartialCensus scan_range(const Group& g, const CensusKernel<W>& kernel, const std::vector<std::vector<int>>& perms,
                         const std::vector<std::vector<int>>& pairs, std::uint64_t lo, std::uint64_t hi, bool prune) {
  PartialCensus part;
  for (std::uint64_t mask = lo; mask < hi; ++mask) {
    ++part.symmetric_sets;
    bool drg = false;
    if (prune) {
      const auto v = kernel.evaluate(mask);
      if (v == CensusKernel<W>::Verdict::Disconnected) continue;
      ++part.connected;
      drg = v == CensusKernel<W>::Verdict::Drg;
    } else {
      const CayleyGraph cg(g, SymmetricSet(g, mask_to_set(pairs, mask)));
      if (!cg.is_connected()) continue;
      ++part.connected;
      drg = check_drg(cg).has_value();
    }
    if (drg) part.hits[mask_orbit(perms, mask).canonical] += 1;
  }
  return part;
}

template <std::size_t W>
PartialCensus scan_full(const Group& g, const CensusOptions& opt, const std::vector<std::vector<int>>& perms) {
  const CensusKernel<W> kernel(g);
  const auto pairs = g.inverse_pairs();
  const std::uint64_t total = std::uint64_t{1} << kernel.pairs();
  const int parts = std::max(1, opt.partitions);
  std::vector<PartialCensus> results(static_cast<std::size_t>(parts));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < parts; i = next++) {
      const std::uint64_t lo = total / static_cast<std::uint64_t>(parts) * static_cast<std::uint64_t>(i);
      const std::uint64_t hi = i + 1 == parts ? total : total / static_cast<std::uint64_t>(parts) * static_cast<std::uint64_t>(i + 1);
      results[static_cast<std::size_t>(i)] = scan_range(g, kernel, perms, pairs, lo, hi, opt.prune);
    }
  };
  const int nthreads = std::clamp(opt.threads, 1, parts);
  std::vector<std::thread> pool;
  for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  PartialCensus all;
  for (const auto& r : results) all.merge(r);
  return all;
}

/// Orderly generation: children add a pair above the current maximum and
/// are kept only when canonical. Removing the top pair of a canonical mask
/// leaves a canonical mask, so every orbit is reached exactly once.
template <std::size_t W>
PartialCensus scan_orbits(const Group& g, const CensusOptions& opt, const std::vector<std::vector<int>>& perms) {
  const CensusKernel<W> kernel(g);
  PartialCensus part;
  long long nodes = 0;
  auto visit = [&](std::uint64_t mask) {
    if (++nodes > opt.max_nodes) throw BudgetExceeded("orbit-first node budget exceeded");
    const auto orb = mask_orbit(perms, mask);
    part.symmetric_sets += static_cast<std::uint64_t>(orb.orbit_size);
    const auto v = kernel.evaluate(mask);
    if (v == CensusKernel<W>::Verdict::Disconnected) return;
    part.connected += static_cast<std::uint64_t>(orb.orbit_size);
    if (v == CensusKernel<W>::Verdict::Drg) part.hits[mask] = orb.orbit_size;
  };
  std::vector<std::pair<std::uint64_t, int>> stack{{0, 0}};
  while (!stack.empty()) {
    const auto [mask, from] = stack.back();
    stack.pop_back();
    visit(mask);
    for (int j = kernel.pairs() - 1; j >= from; --j) {
      const std::uint64_t child = mask | (std::uint64_t{1} << j);
      if (mask_is_canonical(perms, child)) stack.push_back({child, j + 1});
    }
  }
  return part;
}

inline bool expected_family(const Group& g, const FamilyTag& t) {
  using K = FamilyTag::Kind;
  switch (t.kind) {
    case K::Complete: return true;
    case K::CompleteMultipartite: return t.x * t.y == g.order() && !g.subgroups_of_order(t.y).empty();
    case K::TDLineGraph: return g.flavor() == Flavor::PrimePowerPair && g.s() == 1 && t.y == g.p() && t.x >= 2 && t.x <= g.p() - 1;
    default: return false;
  }
}

}  // namespace detail

/// Full analysis of one distance-regular connection set.
inline CensusRecord analyze_hit(const CayleyGraph& cg, const IntersectionArray& arr, bool schur, bool fourier) {
  CensusRecord r;
  r.set = cg.connection_set().members();
  r.array = arr;
  r.family = recognize(cg.graph(), arr);
  r.primitive = is_primitive_graph(cg.graph());
  r.bipartite = is_bipartite(cg.graph()).has_value();
  const auto dp = cg.distance_partition();
  r.antipodal = dp.diameter() >= 2 && antipodal_classes(cg.graph(), dp).has_value();
  if (schur) {
    const auto basis = distance_module(cg, dp);
    r.schur = is_schur_ring(cg.group(), basis).has_value();
    r.module_primitive = is_primitive(cg.group(), basis);
  }
  if (fourier && cg.group().flavor() == Flavor::PrimePowerPair && dp.diameter() >= 2)
    r.fourier = fourier_audit(cg, arr).ok;
  return r;
}

/// Checks one record against the expected families; returns anomaly messages.
inline std::vector<std::string> reconcile(const Group& g, const CensusRecord& r) {
  std::vector<std::string> out;
  const std::string where = " at {" + [&] {
    std::string s;
    for (const auto& e : g.format_set(r.set)) s += (s.empty() ? "" : ",") + e;
    return s;
  }() + "}";
  const auto kind = r.family.kind;
  if (kind == FamilyTag::Kind::Other) out.push_back("unrecognized family " + r.array.to_string() + where);
  else if (!detail::expected_family(g, r.family)) out.push_back("unexpected family " + r.family.to_string() + where);
  if (!recognition_collisions(r.array).empty()) out.push_back("Paley/TD parameter collision" + where);
  if (r.array.diameter() == 3 && r.antipodal && !r.bipartite) out.push_back("antipodal non-bipartite diameter-3 graph" + where);
  if (g.flavor() == Flavor::PrimePowerPair && g.s() >= 2 && r.primitive && kind != FamilyTag::Kind::Complete)
    out.push_back("primitive non-complete graph with s >= 2" + where);
  if (r.schur && !*r.schur) out.push_back("distance module is not a Schur ring" + where);
  if (r.module_primitive && *r.module_primitive != r.primitive) out.push_back("graph and module primitivity disagree" + where);
  if (r.fourier && !*r.fourier) out.push_back("row-transform identities fail" + where);
  return out;
}

inline CensusReport census(const Group& g, const CensusOptions& opt = {}) {
  if (g.order() % 2 == 0) throw PreconditionError("census needs a group of odd order");
  const auto pairs = g.inverse_pairs();
  if (pairs.size() > 62) throw BudgetExceeded("too many inverse pairs for a census");
  if (!opt.orbit_first && (std::uint64_t{1} << pairs.size()) > opt.max_sets)
    throw BudgetExceeded("full enumeration of 2^" + std::to_string(pairs.size()) + " sets exceeds the budget");
  const auto autos = g.automorphism_group();
  const auto perms = detail::pair_permutations(g, autos);

  detail::PartialCensus part;
  const bool narrow = g.order() <= 64;
  if (g.order() > 128) throw BudgetExceeded("group too large for the census kernel");
  if (opt.orbit_first) part = narrow ? detail::scan_orbits<1>(g, opt, perms) : detail::scan_orbits<2>(g, opt, perms);
  else part = narrow ? detail::scan_full<1>(g, opt, perms) : detail::scan_full<2>(g, opt, perms);

  CensusReport rep;
  rep.group = g.spec_string();
  rep.mode = opt.orbit_first ? "orbit-first" : (opt.prune ? "full" : "full-unpruned");
  rep.symmetric_sets = part.symmetric_sets;
  rep.connected = part.connected;
  long long index = 0;
  for (const auto& [mask, seen] : part.hits) {
    const Bits s = detail::mask_to_set(pairs, mask);
    const CayleyGraph cg(g, SymmetricSet(g, s));
    const auto arr = check_drg(cg);
    if (!arr) {
      rep.anomalies.push_back("kernel and generic distance-regularity checks disagree");
      continue;
    }
    const bool schur = opt.schur_every > 0 && index % opt.schur_every == 0;
    auto rec = analyze_hit(cg, *arr, schur, opt.fourier);
    rec.orbit_size = detail::mask_orbit(perms, mask).orbit_size;
    if (!opt.orbit_first && rec.orbit_size != seen)
      rep.anomalies.push_back("orbit of size " + std::to_string(rec.orbit_size) + " met " + std::to_string(seen) + " times");
    for (auto& a : reconcile(g, rec)) rep.anomalies.push_back(std::move(a));
    if (rec.array.diameter() == 3 && rec.antipodal && !rec.bipartite) ++rep.antipodal_non_bipartite_d3;
    rep.records.push_back(std::move(rec));
    ++index;
  }
  std::sort(rep.records.begin(), rep.records.end(), [](const auto& a, const auto& b) { return lex_less(a.set, b.set); });
  std::set<std::string> classes;
  for (const auto& r : rep.records) {
    rep.drg_sets += r.orbit_size;
    ++rep.orbits;
    auto& fc = rep.families[r.family.to_string()];
    fc.sets += r.orbit_size;
    ++fc.orbits;
    fc.arrays.insert(r.array.to_string());
    classes.insert(r.family.to_string() + " " + r.array.to_string());
  }
  rep.parameter_classes = static_cast<int>(classes.size());
  for (const auto& [name, fc] : rep.families)
    if (fc.orbits > static_cast<long long>(fc.arrays.size()))
      rep.review_notes.push_back(name + ": " + std::to_string(fc.orbits) + " Aut(G)-orbits share " +
                                 std::to_string(fc.arrays.size()) + " parameter class(es); isomorphism not decided");
  return rep;
}

/// Connection set realizing a family over g; the built graph is verified
/// against the expected array.
inline CayleyGraph construct_family(const Group& g, const FamilyTag& tag) {
  using K = FamilyTag::Kind;
  const int n = g.order();
  Bits s;
  IntersectionArray expect;
  switch (tag.kind) {
    case K::Complete:
      if (n < 2) throw PreconditionError("complete graph needs at least two vertices");
      s = g.all();
      s.reset(Group::identity());
      expect.b = {n - 1};
      expect.c = {1};
      break;
    case K::CompleteMultipartite: {
      const int t = tag.x, m = tag.y;
      if (t < 2 || m < 2 || t * m != n) throw PreconditionError("multipartite parameters need t, m >= 2 and t*m = |G|");
      const auto hs = g.subgroups_of_order(m);
      if (hs.empty()) throw PreconditionError("no subgroup of order " + std::to_string(m));
      s = g.all() - hs.front().members;
      expect.b = {n - m, m - 1};
      expect.c = {1, n - m};
      break;
    }
    case K::TDLineGraph: {
      const int r = tag.x, v = tag.y;
      if (v * v != n || !(g.flavor() == Flavor::PrimePowerPair && g.s() == 1))
        throw PreconditionError("TD line graphs are built over Z_p (+) Z_p with v = p");
      if (r < 2 || r > v - 1) throw PreconditionError("TD line graph needs 2 <= r <= p - 1");
      const auto hs = g.subgroups_of_order(v);
      s = SymmetricSet::union_of(g, std::vector<Subgroup>(hs.begin(), hs.begin() + r)).members();
      const auto srg = td_line_srg_params(r, v);
      expect.b = {srg.k, srg.k - srg.lambda - 1};
      expect.c = {1, srg.mu};
      break;
    }
    case K::CocktailComplement: {
      // (G \ H) \ {z} for an index-2 subgroup H and an involution z outside it.
      const int m = tag.x;
      if (2 * m != n || m < 3) throw PreconditionError("K_{m,m} - mK_2 needs |G| = 2m with m >= 3");
      bool found = false;
      for (const auto& h : g.subgroups_of_order(m)) {
        for (int z = 1; z < n && !found; ++z)
          if (!h.members.test(z) && g.neg(z) == z) {
            s = g.all() - h.members;
            s.reset(z);
            found = true;
          }
        if (found) break;
      }
      if (!found) throw PreconditionError("no index-2 subgroup with an involution outside it");
      expect.b = {m - 1, m - 2, 1};
      expect.c = {1, m - 2, m - 1};
      break;
    }
    default: throw PreconditionError("no construction for family " + tag.to_string());
  }
  CayleyGraph cg(g, SymmetricSet(g, s));
  const auto arr = check_drg(cg);
  if (!arr || arr->b != expect.b || arr->c != expect.c)
    throw VerificationFailure("constructed graph does not have the expected intersection array");
  return cg;
}

}  // namespace drcay

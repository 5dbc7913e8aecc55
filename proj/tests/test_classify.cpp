#include <random>

#include <catch_amalgamated.hpp>

#include "drcay/classify.hpp"
#include "drcay/serialize.hpp"

using namespace drcay;

namespace {

std::vector<std::vector<int>> record_sets(const CensusReport& r) {
  std::vector<std::vector<int>> out;
  for (const auto& x : r.records) out.push_back(x.set.indices());
  return out;
}

}  // namespace

TEST_CASE("symmetric subsets are streamed exhaustively") {
  CHECK(enumerate_symmetric_sets(Group::pair(3, 1), [](const SymmetricSet&) { return true; }) == 16);
  CHECK(enumerate_symmetric_sets(Group::pair(3, 2), [](const SymmetricSet&) { return true; }) == 8192);
  std::set<std::vector<int>> seen;
  enumerate_symmetric_sets(Group::pair(3, 1), [&](const SymmetricSet& s) {
    seen.insert(s.members().indices());
    return true;
  });
  CHECK(seen.size() == 16);
  int n = 0;
  enumerate_symmetric_sets(Group::pair(5, 1), [&](const SymmetricSet&) { return ++n < 10; });
  CHECK(n == 10);
}

TEST_CASE("orbit canonical forms") {
  const Group g = Group::pair(3, 1);
  const auto autos = g.automorphism_group();
  Bits all = g.all();
  all.reset(0);
  CHECK(orbit_canonical(autos, all).orbit_size == 1);
  const auto hs = g.subgroups_of_order(3);
  Bits h = hs[1].members;
  h.reset(0);
  CHECK(orbit_canonical(autos, h).orbit_size == 4);
  Bits two = hs[0].members | hs[2].members;
  two.reset(0);
  const auto o = orbit_canonical(autos, two);
  CHECK(o.orbit_size == 6);
  // canonical form is the least image and is itself in the orbit
  for (const auto& a : autos) CHECK_FALSE(lex_less(a.apply(two), o.canonical));
  CHECK(orbit_canonical(autos, o.canonical).canonical == o.canonical);
}

TEST_CASE("pair-mask order agrees with element-set order") {
  std::mt19937 rng(61);
  const Group g = Group::pair(5, 1);
  const auto pairs = g.inverse_pairs();
  for (int t = 0; t < 3000; ++t) {
    const std::uint64_t a = rng() & 0xfff, b = rng() & 0xfff;
    const Bits sa = detail::mask_to_set(pairs, a), sb = detail::mask_to_set(pairs, b);
    if (sa.count() != sb.count()) continue;
    CHECK(detail::mask_less(a, b) == lex_less(sa, sb));
  }
  const auto autos = g.automorphism_group();
  const auto perms = detail::pair_permutations(g, autos);
  for (int t = 0; t < 50; ++t) {
    const std::uint64_t m = rng() & 0xfff;
    const auto mo = detail::mask_orbit(perms, m);
    const auto oc = orbit_canonical(autos, detail::mask_to_set(pairs, m));
    CHECK(detail::mask_to_set(pairs, mo.canonical) == oc.canonical);
    CHECK(mo.orbit_size == oc.orbit_size);
  }
}

TEST_CASE("census of Z_3+Z_3") {
  const auto r = census(Group::pair(3, 1));
  CHECK(r.symmetric_sets == 16);
  CHECK(r.drg_sets == 11);
  CHECK(r.orbits == 3);
  CHECK(r.families.at("TDLineGraph(2,3)").sets == 6);
  CHECK(r.families.at("CompleteMultipartite(3,3)").sets == 4);
  CHECK(r.families.at("Complete").sets == 1);
  CHECK(r.anomalies.empty());
  for (const auto& rec : r.records) {
    CHECK(rec.schur == true);
    CHECK(rec.module_primitive == rec.primitive);
  }
}

TEST_CASE("census of Z_9+Z_3 and Z_5+Z_5") {
  const auto a = census(Group::pair(3, 2));
  CHECK(a.symmetric_sets == 8192);
  CHECK(a.drg_sets == 9);
  CHECK(a.parameter_classes == 3);
  CHECK(a.families.count("TDLineGraph(2,3)") == 0);
  CHECK(a.anomalies.empty());
  CHECK(a.review_notes.size() == 2);

  const auto b = census(Group::pair(5, 1));
  CHECK(b.drg_sets == 57);
  CHECK(b.parameter_classes == 5);
  CHECK(b.families.at("TDLineGraph(2,5)").sets == 15);
  CHECK(b.families.at("TDLineGraph(3,5)").sets == 20);
  CHECK(b.families.at("TDLineGraph(4,5)").sets == 15);
  CHECK(b.families.at("CompleteMultipartite(5,5)").sets == 6);
  CHECK(b.anomalies.empty());
}

TEST_CASE("record invariants") {
  const Group g = Group::pair(5, 1);
  const auto r = census(g);
  long long total = 0;
  const auto autos = g.automorphism_group();
  for (const auto& rec : r.records) {
    total += rec.orbit_size;
    const auto o = orbit_canonical(autos, rec.set);
    CHECK(o.canonical == rec.set);
    CHECK(o.orbit_size == rec.orbit_size);
    CHECK(static_cast<long long>(autos.size()) % rec.orbit_size == 0);
  }
  CHECK(total == r.drg_sets);
}

TEST_CASE("pruned and unpruned scans agree") {
  for (const auto& g : {Group::pair(3, 1), Group::pair(3, 2), Group::pair(5, 1)}) {
    CensusOptions fast, slow;
    slow.prune = false;
    const auto a = census(g, fast), b = census(g, slow);
    CHECK(record_sets(a) == record_sets(b));
    CHECK(a.connected == b.connected);
    CHECK(a.drg_sets == b.drg_sets);
  }
}

TEST_CASE("orbit-first generation agrees with full enumeration") {
  for (const auto& g : {Group::pair(3, 1), Group::pair(3, 2), Group::pair(5, 1)}) {
    CensusOptions orb;
    orb.orbit_first = true;
    const auto a = census(g), b = census(g, orb);
    CHECK(record_sets(a) == record_sets(b));
    CHECK(a.symmetric_sets == b.symmetric_sets);
    CHECK(a.connected == b.connected);
    CHECK(a.drg_sets == b.drg_sets);
  }
  CensusOptions tiny;
  tiny.orbit_first = true;
  tiny.max_nodes = 50;
  CHECK_THROWS_AS(census(Group::pair(3, 3), tiny), BudgetExceeded);
}

TEST_CASE("reports are identical across partitions and threads") {
  const Group g = Group::pair(3, 2);
  const auto base = to_json(census(g)).dump();
  for (int parts : {2, 3, 8})
    for (int threads : {1, 4}) {
      CensusOptions o;
      o.partitions = parts;
      o.threads = threads;
      CHECK(to_json(census(g, o)).dump() == base);
    }
}

TEST_CASE("budgets and preconditions") {
  CHECK_THROWS_AS(census(Group::pair(3, 3)), BudgetExceeded);
  CHECK_THROWS_AS(census(Group::product(4, 2)), PreconditionError);
}

TEST_CASE("family constructors") {
  using K = FamilyTag::Kind;
  const Group g = Group::pair(3, 2);
  const auto k27 = construct_family(g, {K::Complete, 27, 0});
  CHECK(check_drg(k27)->to_string() == "{26; 1}");
  const auto multi = construct_family(g, {K::CompleteMultipartite, 3, 9});
  CHECK(check_drg(multi)->b == std::vector<int>{18, 8});
  CHECK(check_drg(multi)->c == std::vector<int>{1, 18});
  const auto td = construct_family(Group::pair(5, 1), {K::TDLineGraph, 2, 5});
  CHECK(srg_params(*check_drg(td)) == SrgParams{25, 8, 3, 2});
  const auto cocktail = construct_family(Group::product(16, 2), {K::CocktailComplement, 16, 0});
  CHECK(check_drg(cocktail)->b == std::vector<int>{15, 14, 1});
  CHECK_THROWS_AS(construct_family(g, {K::CompleteMultipartite, 2, 13}), PreconditionError);
  CHECK_THROWS_AS(construct_family(g, {K::TDLineGraph, 2, 3}), PreconditionError);
  CHECK_THROWS_AS(construct_family(Group::pair(5, 1), {K::TDLineGraph, 5, 5}), PreconditionError);
  CHECK_THROWS_AS(construct_family(g, {K::Paley, 27, 0}), PreconditionError);
  CHECK_THROWS_AS(construct_family(g, {K::CocktailComplement, 13, 0}), PreconditionError);
}

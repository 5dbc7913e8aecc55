#include <random>

#include <catch_amalgamated.hpp>

#include "drcay/drg.hpp"

using namespace drcay;

namespace {

// Definition-level oracle: over all ordered pairs at distance i the counts
// c_i, a_i, b_i must agree.
std::optional<IntersectionArray> drg_oracle(const Graph& g) {
  const auto d = g.distances();
  const int n = g.order();
  int diam = 0;
  for (const auto& row : d)
    for (int x : row) {
      if (x < 0) return std::nullopt;
      diam = std::max(diam, x);
    }
  std::vector<int> c(diam + 1, -1), a(diam + 1, -1), b(diam + 1, -1);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      const int i = d[u][v];
      int ci = 0, ai = 0, bi = 0;
      g.neighbors(v).for_each([&](int w) {
        if (d[u][w] == i - 1) ++ci;
        else if (d[u][w] == i) ++ai;
        else ++bi;
      });
      if (c[i] < 0) c[i] = ci, a[i] = ai, b[i] = bi;
      else if (c[i] != ci || a[i] != ai || b[i] != bi) return std::nullopt;
    }
  IntersectionArray arr;
  for (int i = 0; i < diam; ++i) arr.b.push_back(b[i]);
  for (int i = 1; i <= diam; ++i) arr.c.push_back(c[i]);
  return arr;
}

Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph petersen() {
  return from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                         {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

}  // namespace

TEST_CASE("check_drg agrees with the definition on every set of Z_3+Z_3 and Z_9+Z_3") {
  for (const auto& g : {Group::pair(3, 1), Group::pair(3, 2)}) {
    const auto pairs = g.inverse_pairs();
    for (long mask = 0; mask < (1L << pairs.size()); ++mask) {
      Bits s;
      for (std::size_t j = 0; j < pairs.size(); ++j)
        if (mask >> j & 1)
          for (int x : pairs[j]) s.set(x);
      const CayleyGraph cg(g, SymmetricSet(g, s));
      const auto ours = check_drg(cg);
      const auto oracle = drg_oracle(cg.graph());
      REQUIRE(ours.has_value() == oracle.has_value());
      if (ours) {
        CHECK(ours->b == oracle->b);
        CHECK(ours->c == oracle->c);
        CHECK(ours->consistent());
      }
    }
  }
}

TEST_CASE("check_drg agrees with the definition on random sets of Z_5+Z_5") {
  std::mt19937 rng(21);
  const Group g = Group::pair(5, 1);
  for (int t = 0; t < 300; ++t) {
    Bits s;
    for (const auto& p : g.inverse_pairs())
      if (rng() % 3 == 0)
        for (int x : p) s.set(x);
    const CayleyGraph cg(g, SymmetricSet(g, s));
    CHECK(check_drg(cg).has_value() == drg_oracle(cg.graph()).has_value());
  }
}

TEST_CASE("known arrays") {
  const auto p = check_drg_general(petersen());
  REQUIRE(p);
  CHECK(p->to_string() == "{3,2; 1,1}");
  CHECK(srg_params(*p) == SrgParams{10, 3, 0, 1});
  CHECK(srg_by_count(petersen()) == SrgParams{10, 3, 0, 1});

  // cube as Cay(Z_4+Z_2, {(1,0),(3,0),(0,1)})
  const Group g = Group::product(4, 2);
  const CayleyGraph cube(g, SymmetricSet(g, g.parse_set("(1,0),(3,0),(0,1)")));
  const auto c = check_drg(cube);
  REQUIRE(c);
  CHECK(c->b == std::vector<int>{3, 2, 1});
  CHECK(c->c == std::vector<int>{1, 2, 3});
  CHECK(c->k == std::vector<int>{1, 3, 3, 1});
  CHECK(recognize(*c).kind == FamilyTag::Kind::CocktailComplement);

  // a path is not distance-regular
  CHECK_FALSE(check_drg_general(from_edges(3, {{0, 1}, {1, 2}})));
  // vertex-rooted arrays must agree everywhere
  CHECK_FALSE(check_drg_general(from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}})));
}

TEST_CASE("family recognition") {
  const Group z13 = Group::cyclic(13);
  const CayleyGraph paley(z13, SymmetricSet(z13, z13.parse_set("1,3,4,9,10,12")));
  const auto arr = check_drg(paley);
  REQUIRE(arr);
  CHECK(recognize(*arr).to_string() == "Paley(13)");

  const Group z7 = Group::cyclic(7);
  const CayleyGraph cyc(z7, SymmetricSet(z7, z7.parse_set("1,6")));
  CHECK(recognize(*check_drg(cyc)).to_string() == "Cycle(7)");

  const Group g = Group::pair(5, 1);
  Bits all = g.all();
  all.reset(0);
  CHECK(recognize(*check_drg(CayleyGraph(g, SymmetricSet(g, all)))).to_string() == "Complete");

  const auto hs = g.subgroups_of_order(5);
  const CayleyGraph td(g, SymmetricSet::union_of(g, {hs[0], hs[1], hs[2]}));
  const auto tarr = check_drg(td);
  REQUIRE(tarr);
  CHECK(recognize(*tarr).to_string() == "TDLineGraph(3,5)");
  CHECK(srg_params(*tarr) == td_line_srg_params(3, 5));
  CHECK(recognition_collisions(*tarr).empty());

  const CayleyGraph multi(g, SymmetricSet(g, g.all() - hs[0].members));
  CHECK(recognize(*check_drg(multi)).to_string() == "CompleteMultipartite(5,5)");
}

TEST_CASE("TD line parameters follow the closed formula") {
  for (int v : {3, 5, 7})
    for (int r = 2; r <= v; ++r) {
      const auto s = td_line_srg_params(r, v);
      CHECK(s == SrgParams{v * v, r * (v - 1), v + r * r - 3 * r, r * r - r});
      CHECK(s.feasible());
    }
  CHECK_THROWS_AS(td_line_srg_params(1, 5), PreconditionError);
  CHECK(td_line_srg_params(2, 5) == SrgParams{25, 8, 3, 2});
  CHECK(td_line_srg_params(4, 5) == SrgParams{25, 16, 9, 12});
}

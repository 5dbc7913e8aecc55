#include <catch_amalgamated.hpp>

#include "drcay/structure.hpp"

using namespace drcay;

namespace {

CayleyGraph cube() {
  const Group g = Group::product(4, 2);
  return CayleyGraph(g, SymmetricSet(g, g.parse_set("(1,0),(3,0),(0,1)")));
}

CayleyGraph cycle(int n) {
  const Group g = Group::cyclic(n);
  return CayleyGraph(g, SymmetricSet(g, Bits::from_indices({1, n - 1})));
}

}  // namespace

TEST_CASE("bipartition") {
  const auto c = cube();
  const auto sides = is_bipartite(c.graph());
  REQUIRE(sides);
  CHECK((*sides)[0].count() == 4);
  CHECK_FALSE(is_bipartite(cycle(5).graph()));
  CHECK(is_bipartite(cycle(6).graph()));
}

TEST_CASE("antipodal classes") {
  const auto c = cube();
  const auto cls = antipodal_classes(c.graph(), c.distance_partition());
  REQUIRE(cls);
  CHECK(cls->blocks.size() == 4);
  CHECK(cls->valid(8));
  // C_6 is antipodal, C_7 is not
  CHECK(antipodal_classes(cycle(6).graph(), cycle(6).distance_partition()));
  CHECK_FALSE(antipodal_classes(cycle(7).graph(), cycle(7).distance_partition()));
  // complete multipartite graphs are antipodal with diameter 2
  const Group g = Group::pair(3, 1);
  const CayleyGraph k33(g, SymmetricSet(g, g.all() - g.subgroups_of_order(3)[0].members));
  CHECK(antipodal_classes(k33.graph(), k33.distance_partition()));
}

TEST_CASE("halved graphs of the cube are two K_4") {
  const auto c = cube();
  const auto [h0, h1] = halved_graphs(c.graph(), *is_bipartite(c.graph()));
  CHECK(h0.order() == 4);
  CHECK(h0.edge_count() == 6);
  CHECK(h1.edge_count() == 6);
}

TEST_CASE("primitivity at graph level") {
  CHECK(is_primitive_graph(cycle(7).graph()));
  CHECK_FALSE(is_primitive_graph(cycle(6).graph()));
  CHECK_FALSE(is_primitive_graph(cube().graph()));
  const Group g = Group::pair(5, 1);
  const auto hs = g.subgroups_of_order(5);
  CHECK(is_primitive_graph(CayleyGraph(g, SymmetricSet::union_of(g, {hs[0], hs[1]})).graph()));
  CHECK_FALSE(is_primitive_graph(CayleyGraph(g, SymmetricSet(g, g.all() - hs[0].members)).graph()));
}

TEST_CASE("quotient by a subgroup") {
  const Group g = Group::pair(3, 2);
  for (const auto& h : g.subgroups_of_order(3)) {
    const CayleyGraph multi(g, SymmetricSet(g, g.all() - h.members));
    const auto q = quotient_by_subgroup(multi, h);
    CHECK(q.graph.order() == 9);
    CHECK(q.graph.valency() == 8);  // K_9
    // coset map respects the group
    for (int x = 0; x < g.order(); ++x)
      for (int y = 0; y < g.order(); ++y)
        CHECK(q.coset_of[static_cast<std::size_t>(g.add(x, y))] ==
              q.graph.group().add(q.coset_of[static_cast<std::size_t>(x)], q.coset_of[static_cast<std::size_t>(y)]));
  }
  for (const auto& h : g.subgroups_of_order(9)) {
    const CayleyGraph cg(g, SymmetricSet(g, g.parse_set("(1,0),(8,0),(0,1),(0,2)")));
    if (cg.connection_set().members().subset_of(h.members)) continue;
    const auto q = quotient_by_subgroup(cg, h);
    CHECK(q.graph.order() == 3);
  }
}

TEST_CASE("distance partitions of DRGs are equitable") {
  const auto c = cube();
  VertexPartition p{c.distance_partition().layers};
  const auto m = is_equitable(c.graph(), p);
  REQUIRE(m);
  CHECK((*m)[1][2] == 2);
  CHECK((*m)[2][1] == 2);
  CHECK(is_equitable(c.graph(), VertexPartition::singletons(8)));
  const Group g = Group::pair(3, 1);
  const auto cosets = VertexPartition::cosets(g, g.subgroups_of_order(3)[0].members);
  CHECK(cosets.valid(9));
  CHECK(cosets.blocks.size() == 3);
}

TEST_CASE("antipodal spectrum") {
  // K_{4,4} - 4K_2 style: k=3, r=2, λ=0, μ=2 (cube, but bipartite; formula only)
  const auto sp = antipodal_spectrum(3, 2, 0, 2);
  CHECK(sp.discriminant == 16);
  CHECK(sp.integral);
  CHECK(sp.theta1_exact == 1);
  CHECK(sp.theta3_exact == -3);
  CHECK(sp.vertices == 8);
  CHECK(sp.m1 + sp.m2 + sp.m3 + 1 == Catch::Approx(8));
  // λ ≠ μ with irrational eigenvalues is infeasible
  const auto bad = antipodal_spectrum(4, 2, 1, 2);
  CHECK_FALSE(bad.integral);
  CHECK_FALSE(bad.feasible);
  // λ = μ leaves θ = ±sqrt(k), which may be irrational
  const auto conf = antipodal_spectrum(5, 2, 2, 2);
  CHECK(conf.feasible);
  CHECK_THROWS_AS(antipodal_spectrum(5, 2, 0, 0), PreconditionError);
}

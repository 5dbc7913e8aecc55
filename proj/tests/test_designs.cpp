#include <catch_amalgamated.hpp>

#include "drcay/designs.hpp"

using namespace drcay;

TEST_CASE("partial congruence partitions of Z_p+Z_p") {
  CHECK(pcp_enumerate(Group::pair(5, 1), 2).size() == 15);
  CHECK(pcp_enumerate(Group::pair(5, 1), 6).size() == 1);
  CHECK(pcp_enumerate(Group::pair(3, 1), 3).size() == 4);
  CHECK(pcp_enumerate(Group::pair(3, 1), 5).empty());
  CHECK_THROWS_AS(pcp_enumerate(Group::pair(3, 2), 2), PreconditionError);
  // Z_9 (+) Z_9 is not a pair group; Z_3+Z_3 order-3 subgroups meet trivially
  for (const auto& pcp : pcp_enumerate(Group::pair(3, 1), 2)) CHECK(pcp.subgroups.size() == 2);
}

TEST_CASE("transversal designs and their line graphs") {
  for (int p : {3, 5, 7}) {
    const Group g = Group::pair(p, 1);
    for (int r = 2; r <= p; ++r) {
      const auto pcp = pcp_enumerate(g, r).front();
      const auto td = td_from_pcp(g, pcp);
      CHECK(td.verify());
      CHECK(td.points.size() == static_cast<std::size_t>(r * p));
      const auto lg = line_graph(g, pcp, td);
      CHECK(lg.isomorphic);
      CHECK(srg_by_count(lg.graph) == td_line_srg_params(r, p));
    }
    CHECK_THROWS_AS(td_from_pcp(g, pcp_enumerate(g, p + 1).front()), PreconditionError);
  }
}

TEST_CASE("a broken design fails verification") {
  const Group g = Group::pair(3, 1);
  auto td = td_from_pcp(g, pcp_enumerate(g, 2).front());
  td.lines[1] = td.lines[0];
  CHECK_FALSE(td.verify());
}

TEST_CASE("difference set certificates") {
  const Group z7 = Group::cyclic(7);
  const auto c = diffset_verify(z7, Bits::from_indices({1, 2, 4}));
  REQUIRE(c);
  CHECK(c->v == 7);
  CHECK(c->k == 3);
  CHECK(c->lambda == 1);
  CHECK(c->n == 2);
  CHECK(c->nontrivial);
  CHECK_FALSE(diffset_verify(z7, Bits::from_indices({1, 2, 3})));
  const auto triv = diffset_verify(z7, Bits::from_indices({1, 2, 3, 4, 5, 6}));
  REQUIRE(triv);
  CHECK_FALSE(triv->nontrivial);
  // within a subgroup universe
  const Group z8 = Group::cyclic(8);
  CHECK(diffset_verify(z8, Bits::from_indices({0, 2, 4}), Bits::from_indices({0, 2, 4, 6})));
  CHECK_FALSE(diffset_verify(z8, Bits::from_indices({0, 2}), Bits::from_indices({0, 2, 4, 6})));
  CHECK_FALSE(diffset_verify(z8, Bits::from_indices({0, 1}), Bits::from_indices({0, 2, 4, 6})));
}

TEST_CASE("difference set search up to translation") {
  const Group z7 = Group::cyclic(7);
  const auto reps = diffset_search(z7, 3);
  REQUIRE(reps.size() == 2);
  CHECK(reps[0].set == Bits::from_indices({0, 1, 3}));
  CHECK(reps[1].set == Bits::from_indices({0, 1, 5}));
  CHECK(all_difference_sets(z7, 3).size() == 14);
  CHECK(diffset_automorphism_classes(z7, reps).size() == 1);
  // (16,6,2) in Z_4+Z_4 exists
  const Group z44 = Group::product(4, 4);
  CHECK_FALSE(diffset_search(z44, 6).empty());
  CHECK_THROWS_AS(diffset_search(Group::pair(7, 1), 20, 1000), BudgetExceeded);
}

TEST_CASE("bipartite construction over Z_n+Z_2") {
  // all odd residues in both rows: the shifted set is all of 2Z_n+Z_2, K_{n,n}
  const auto full = theorem4_construct(8, {1, 3, 5, 7}, {1, 3, 5, 7});
  CHECK(full.shifted);
  CHECK_FALSE(full.shifted->nontrivial);
  CHECK(full.array);
  CHECK(full.bipartite);
  CHECK(full.prediction_holds);
  // a non-certificate gives no DRG
  const auto r = theorem4_construct(8, {1, 7}, {3, 5});
  CHECK_FALSE(r.shifted);
  CHECK_FALSE(r.array);
  CHECK(r.prediction_holds);
  CHECK_THROWS_AS(theorem4_construct(7, {1}, {1}), PreconditionError);
  CHECK_THROWS_AS(theorem4_construct(8, {2, 6}, {1, 7}), PreconditionError);
  CHECK_THROWS_AS(theorem4_construct(8, {1}, {1, 7}), PreconditionError);
  CHECK_THROWS_AS(theorem4_construct(8, {}, {1, 7}), PreconditionError);
}

TEST_CASE("realizations map difference sets back to symmetric rows") {
  // D = all of Z_4+Z_2 realizes as R_0 = R_1 = all odd residues of Z_8
  const Group h = Group::product(4, 2);
  const auto ch = row_choices(8, h.all());
  REQUIRE(ch.size() == 1);
  CHECK(ch[0].r0 == std::vector<int>{1, 3, 5, 7});
  for (const auto& c : row_choices(8, h.all()))
    CHECK(theorem4_construct(8, c.r0, c.r1).shifted);
}

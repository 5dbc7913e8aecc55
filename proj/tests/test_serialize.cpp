#include <catch_amalgamated.hpp>

#include "drcay/serialize.hpp"

using namespace drcay;

TEST_CASE("census report schema") {
  const auto j = to_json(census(Group::pair(3, 1)));
  CHECK(j["group"] == "3^1x3");
  CHECK(j["totals"]["symmetricSets"] == 16);
  CHECK(j["totals"]["drgSets"] == 11);
  CHECK(j["records"].size() == 3);
  const auto& rec = j["records"][0];
  CHECK(rec.contains("set"));
  CHECK(rec.contains("orbitSize"));
  CHECK(rec.contains("family"));
  CHECK(rec.contains("array"));
  CHECK(rec["flags"].contains("bipartite"));
  CHECK(j["anomalies"].is_array());
  CHECK(j["anomalies"].empty());
  // record sets are "(a,b)" strings
  CHECK(rec["set"][0].get<std::string>().front() == '(');
}

TEST_CASE("output is stable across runs") {
  const Group g = Group::pair(5, 1);
  CHECK(to_json(census(g)).dump(2) == to_json(census(g)).dump(2));
}

TEST_CASE("construction report") {
  const auto j = to_json(theorem4_construct(8, {1, 3, 5, 7}, {1, 3, 5, 7}));
  CHECK(j["drg"] == true);
  CHECK(j["shiftedDifferenceSet"]["nontrivial"] == false);
  const auto a = to_json(IntersectionArray{{3, 2}, {1, 1}, {0, 0, 2}, {1, 3, 6}});
  CHECK(a["text"] == "{3,2; 1,1}");
}

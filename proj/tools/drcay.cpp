// drcay: command-line front end.
//
// Exit codes: 0 ok, 2 negative verdict or anomalies, 64 usage/parse error,
// 65 budget exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "drcay/drcay.hpp"

namespace {

using namespace drcay;

constexpr int kOk = 0;
constexpr int kNegative = 2;
constexpr int kUsage = 64;
constexpr int kBudget = 65;

int default_threads() {
  if (const char* env = std::getenv("DRCAY_THREADS")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (const std::exception&) {
      return 1;
    }
  }
  return 1;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep = ",") {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : sep) + x;
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Bits parse_connection_set(const Group& g, const std::string& text) {
  if (text == "all") {
    Bits s = g.all();
    s.reset(Group::identity());
    return s;
  }
  return g.parse_set(text);
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t used = 0;
    const int v = std::stoi(tok, &used);
    if (used != tok.size()) throw ParseError("bad integer list: " + text);
    out.push_back(v);
  }
  return out;
}

void emit(const Json& j, const std::string& format, const std::string& text, const std::string& output) {
  const std::string body = format == "json" ? j.dump(2) + "\n" : text;
  if (output.empty()) {
    std::cout << body;
  } else {
    std::ofstream f(output);
    if (!f) throw PreconditionError("cannot write " + output);
    f << body;
  }
}

struct Common {
  std::string group;
  std::string set;
  std::string format = "text";
  std::string output;
};

int cmd_check(const Common& c) {
  const Group g = Group::parse(c.group);
  const SymmetricSet s(g, parse_connection_set(g, c.set));
  const CayleyGraph cg(g, s);
  std::ostringstream t;
  Json j{{"group", g.spec_string()}, {"set", set_json(g, s.members())}, {"connected", cg.is_connected()}};
  t << "group " << g.spec_string() << "\nset {" << join(g.format_set(s.members())) << "}\n";
  if (!cg.is_connected()) {
    j["drg"] = false;
    t << "verdict not DRG (not connected)\n";
    emit(j, c.format, t.str(), c.output);
    return kNegative;
  }
  const auto arr = check_drg(cg);
  j["drg"] = arr.has_value();
  if (!arr) {
    t << "verdict not DRG\n";
    emit(j, c.format, t.str(), c.output);
    return kNegative;
  }
  const auto rec = analyze_hit(cg, *arr, true, true);
  j["array"] = to_json(*arr);
  j["family"] = rec.family.to_string();
  j["flags"] = to_json(g, rec)["flags"];
  t << "verdict DRG\narray " << arr->to_string() << "\nfamily " << rec.family.to_string() << "\n";
  if (const auto srg = srg_params(*arr)) {
    j["srg"] = {srg->n, srg->k, srg->lambda, srg->mu};
    t << "srg (" << srg->n << "," << srg->k << "," << srg->lambda << "," << srg->mu << ")\n";
  }
  t << "primitive " << yes_no(rec.primitive) << "\nbipartite " << yes_no(rec.bipartite) << "\nantipodal "
    << yes_no(rec.antipodal) << "\nschur " << yes_no(rec.schur.value_or(false)) << "\n";
  if (rec.fourier) t << "fourier " << yes_no(*rec.fourier) << "\n";
  emit(j, c.format, t.str(), c.output);
  return kOk;
}

int cmd_census(const Common& c, const CensusOptions& opt) {
  const Group g = Group::parse(c.group);
  const auto rep = census(g, opt);
  std::ostringstream t;
  t << "group " << rep.group << " (" << rep.mode << ")\n"
    << "symmetric sets " << rep.symmetric_sets << "\nconnected " << rep.connected << "\nDRG sets " << rep.drg_sets
    << "\norbits " << rep.orbits << "\nparameter classes " << rep.parameter_classes << "\n";
  for (const auto& [name, fc] : rep.families)
    t << "  " << name << ": " << fc.sets << " sets, " << fc.orbits << " orbits, " << join({fc.arrays.begin(), fc.arrays.end()}, " ") << "\n";
  t << "anomalies " << rep.anomalies.size() << "\n";
  for (const auto& a : rep.anomalies) t << "  " << a << "\n";
  for (const auto& n : rep.review_notes) t << "review: " << n << "\n";
  emit(to_json(rep), c.format, t.str(), c.output);
  return rep.anomalies.empty() ? kOk : kNegative;
}

struct ConstructArgs {
  std::string family;
  int p = 0, s = 1, t = 0, m = 0, r = 0, n = 0;
};

int cmd_construct(const Common& c, const ConstructArgs& a) {
  using K = FamilyTag::Kind;
  auto group_from_args = [&] {
    if (!c.group.empty()) return Group::parse(c.group);
    if (a.p > 0) return Group::pair(a.p, a.s);
    throw ParseError("construct needs --group or --p");
  };
  std::optional<Group> g;
  FamilyTag tag;
  if (a.family == "complete") {
    g = group_from_args();
    tag = {K::Complete, g->order(), 0};
  } else if (a.family == "multipartite") {
    g = group_from_args();
    tag = {K::CompleteMultipartite, a.t, a.m};
  } else if (a.family == "td-line") {
    if (a.p <= 0) throw ParseError("td-line needs --p");
    g = Group::pair(a.p, 1);
    tag = {K::TDLineGraph, a.r, a.p};
  } else if (a.family == "cocktail") {
    if (a.n <= 2) throw ParseError("cocktail needs --n > 2 (group Z_n (+) Z_2)");
    g = Group::product(a.n, 2);
    tag = {K::CocktailComplement, a.n, 0};
  } else {
    throw ParseError("unknown family " + a.family);
  }
  const CayleyGraph cg = construct_family(*g, tag);
  const auto arr = *check_drg(cg);
  std::ostringstream t;
  Json j{{"group", g->spec_string()},
         {"family", recognize(arr).to_string()},
         {"set", set_json(*g, cg.connection_set().members())},
         {"array", to_json(arr)},
         {"graph6", graph6(cg.graph())}};
  t << "group " << g->spec_string() << "\nfamily " << recognize(arr).to_string() << "\nset {"
    << join(g->format_set(cg.connection_set().members())) << "}\narray " << arr.to_string() << "\n";
  if (const auto srg = srg_params(arr)) {
    j["srg"] = {srg->n, srg->k, srg->lambda, srg->mu};
    t << "srg (" << srg->n << "," << srg->k << "," << srg->lambda << "," << srg->mu << ")\n";
  }
  t << "graph6 " << graph6(cg.graph()) << "\n";
  emit(j, c.format, t.str(), c.output);
  return kOk;
}

int cmd_fourier_audit(const Common& c) {
  const Group g = Group::parse(c.group);
  const CayleyGraph cg(g, SymmetricSet(g, parse_connection_set(g, c.set)));
  const auto arr = check_drg(cg);
  if (!arr || arr->diameter() < 2) {
    std::cout << (arr ? "diameter 1: nothing to audit\n" : "not a distance-regular graph\n");
    return kNegative;
  }
  const auto rep = fourier_audit(cg, *arr);
  std::ostringstream t;
  if (rep.ok) t << "all identities hold (" << rep.checks << " checks)\n";
  else t << "identity failure: " << rep.first_failure << "\n";
  Json j{{"group", g.spec_string()}, {"array", arr->to_string()}, {"audit", to_json(rep)}};
  emit(j, c.format, t.str(), c.output);
  return rep.ok ? kOk : kNegative;
}

struct BipartiteArgs {
  int n = 0;
  std::string r0, r1;
  bool auto_search = false;
  int k = 0;
  long long budget = 10'000'000;
};

int cmd_theorem4(const Common& c, const BipartiteArgs& a) {
  std::ostringstream t;
  Json j;
  bool all_hold = true;
  if (!a.auto_search) {
    if (a.r0.empty() || a.r1.empty()) throw ParseError("theorem4 needs --r0 and --r1, or --auto-search");
    const auto res = theorem4_construct(a.n, parse_ints(a.r0), parse_ints(a.r1));
    j = to_json(res);
    all_hold = res.prediction_holds;
    t << "group " << res.group.spec_string() << "\nset {" << join(res.group.format_set(res.connection_set)) << "}\n"
      << "shifted set is " << (res.shifted ? (res.shifted->nontrivial ? "a non-trivial" : "a trivial") : "not a")
      << " difference set\n"
      << "DRG " << yes_no(res.array.has_value());
    if (res.array) t << " " << res.array->to_string() << " " << res.family.to_string();
    t << "\nbipartite " << yes_no(res.bipartite) << "\nantipodal " << yes_no(res.antipodal) << "\nprediction "
      << (res.prediction_holds ? "holds" : "FAILS") << "\n";
  } else {
    if (a.n <= 2 || a.n % 2) throw PreconditionError("construction needs even n > 2");
    const Group h = Group::product(a.n / 2, 2);
    const int v = h.order();
    j = Json{{"n", a.n}, {"searchGroup", h.spec_string()}, {"searches", Json::array()}};
    for (int k = 2; k <= v - 2; ++k) {
      if (a.k && k != a.k) continue;
      if ((k * (k - 1)) % (v - 1)) continue;
      const auto reps = diffset_search(h, k, a.budget);
      const auto all = all_difference_sets(h, k, a.budget);
      const auto classes = diffset_automorphism_classes(h, reps);
      int realizable = 0, held = 0;
      Json built = Json::array();
      for (const auto& d : all)
        for (const auto& ch : row_choices(a.n, d)) {
          ++realizable;
          const auto res = theorem4_construct(a.n, ch.r0, ch.r1);
          held += res.prediction_holds;
          all_hold = all_hold && res.prediction_holds;
          built.push_back(to_json(res));
        }
      Json certs = Json::array();
      for (const auto& r : reps) certs.push_back(to_json(r, h));
      j["searches"].push_back(Json{{"k", k},
                                   {"lambda", k * (k - 1) / (v - 1)},
                                   {"certificates", all.size()},
                                   {"translationClasses", reps.size()},
                                   {"automorphismClasses", classes.size()},
                                   {"representatives", certs},
                                   {"realizableChoices", realizable},
                                   {"constructions", built}});
      t << "k=" << k << " lambda=" << k * (k - 1) / (v - 1) << ": certificates " << all.size() << " in " << h.spec_string()
        << " (" << reps.size() << " translation classes, " << classes.size() << " under Aut)\n"
        << "  choices (R_0,R_1) with symmetric rows: " << realizable << ", bipartite non-antipodal d=3 DRG: " << held << "\n";
    }
  }
  emit(j, c.format, t.str(), c.output);
  return all_hold ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distance-regular Cayley graphs over Z_{p^s} (+) Z_p"};
  app.require_subcommand(1);
  Common common;
  CensusOptions copt;
  copt.threads = default_threads();
  int partitions = 0;
  bool no_prune = false, no_fourier = false;
  ConstructArgs cargs;
  BipartiteArgs targs;

  auto add_io = [&](CLI::App* sub) {
    sub->add_option("--format", common.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--output", common.output, "write the report to a file");
  };

  auto* check = app.add_subcommand("check", "decide distance-regularity of Cay(G,S)");
  check->add_option("--group", common.group, "group, e.g. 3^1x3 or Zn:16x2")->required();
  check->add_option("--set", common.set, "connection set \"(a,b),...\" or all")->required();
  add_io(check);

  auto* cen = app.add_subcommand("census", "classify all distance-regular connection sets");
  cen->add_option("--group", common.group, "group, e.g. 5^1x5")->required();
  cen->add_option("--threads", copt.threads, "worker threads (default from DRCAY_THREADS)");
  cen->add_option("--partitions", partitions, "index ranges (default: thread count)");
  cen->add_flag("--no-prune", no_prune, "full check on every set");
  cen->add_flag("--orbit-first", copt.orbit_first, "experimental orbit-representative generation");
  cen->add_option("--max-sets", copt.max_sets, "budget for full enumeration");
  cen->add_option("--max-nodes", copt.max_nodes, "budget for orbit-first generation");
  cen->add_option("--schur-every", copt.schur_every, "Schur cross-check every n-th record (0 = off)");
  cen->add_flag("--no-fourier", no_fourier, "skip the row-transform audit");
  add_io(cen);

  auto* con = app.add_subcommand("construct", "build a family member and verify it");
  con->add_option("--family", cargs.family, "complete | multipartite | td-line | cocktail")->required();
  con->add_option("--group", common.group, "group (complete, multipartite)");
  con->add_option("--p", cargs.p, "prime");
  con->add_option("--s", cargs.s, "exponent");
  con->add_option("--t", cargs.t, "multipartite part count");
  con->add_option("--m", cargs.m, "multipartite part size");
  con->add_option("--r", cargs.r, "TD classes");
  con->add_option("--n", cargs.n, "cocktail: group Z_n (+) Z_2");
  add_io(con);

  auto* fa = app.add_subcommand("fourier-audit", "verify the row-transform identities of a DRG");
  fa->add_option("--group", common.group, "pair group")->required();
  fa->add_option("--set", common.set, "connection set")->required();
  add_io(fa);

  auto* t4 = app.add_subcommand("theorem4", "bipartite construction over Z_n (+) Z_2 from difference sets");
  t4->add_option("--n", targs.n, "even n > 2")->required();
  t4->add_option("--r0", targs.r0, "odd residues, comma separated");
  t4->add_option("--r1", targs.r1, "odd residues, comma separated");
  t4->add_flag("--auto-search", targs.auto_search, "search difference sets in Z_{n/2} (+) Z_2");
  t4->add_option("--k", targs.k, "restrict the search to one size");
  t4->add_option("--budget", targs.budget, "subset budget for the search");
  add_io(t4);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }
  copt.partitions = partitions > 0 ? partitions : copt.threads;
  copt.prune = !no_prune;
  copt.fourier = !no_fourier;

  try {
    if (*check) return cmd_check(common);
    if (*cen) return cmd_census(common, copt);
    if (*con) return cmd_construct(common, cargs);
    if (*fa) return cmd_fourier_audit(common);
    if (*t4) return cmd_theorem4(common, targs);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kNegative;
  }
  return kUsage;
}

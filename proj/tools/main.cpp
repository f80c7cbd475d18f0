#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pgrouplab/hom.hpp"
#include "pgrouplab/inertia.hpp"
#include "pgrouplab/invariance.hpp"
#include "pgrouplab/json_io.hpp"
#include "pgrouplab/parse.hpp"
#include "pgrouplab/subgroup.hpp"
#include "pgrouplab/suite.hpp"

namespace pgl = pgrouplab;
using pgl::u32;
using pgl::u64;

namespace {

// Every command fills one of these; rendering happens in exactly one place
// so identical configurations print identical bytes.
struct Output {
  bool as_json = false;
  pgl::Json json;
  std::string text;
  int exit_code = 0;
};

void emit(const Output& out) {
  if (out.as_json)
    std::cout << out.json.dump(2) << "\n";
  else
    std::cout << out.text;
}

std::string gens_str(const pgl::Subgroup& x) {
  const std::vector<pgl::Element> gens = x.generators();
  if (gens.empty()) return "(zero)";
  std::string s;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) s += ";";
    s += gens[i].str();
  }
  return s;
}

// ---- describe ----------------------------------------------------------

Output run_describe(const std::string& group, bool as_json) {
  const pgl::GroupShape g = pgl::parse_group(group);
  const pgl::PPower endos = pgl::endo_order(g);
  const u64 auts = pgl::aut_order(g);  // BoundError on overflow -> exit 3

  std::vector<u64> ulm;
  for (u32 n = 0; n < g.max_exponent(); ++n) ulm.push_back(pgl::ulm_invariant(g, n));

  Output out;
  out.as_json = as_json;
  out.json = pgl::Json{{"group", pgl::to_json(g)},
                       {"order", pgl::to_json(g.order())},
                       {"exponent", pgl::to_json(g.group_exponent())},
                       {"ulm", ulm},
                       {"endomorphisms", pgl::to_json(endos)},
                       {"automorphisms", auts}};
  std::string t;
  t += "group " + g.str() + "\n";
  t += "order " + g.order().str() + "\n";
  t += "exponent " + g.group_exponent().str() + "\n";
  for (u32 n = 0; n < g.max_exponent(); ++n)
    t += "ulm f_" + std::to_string(n) + " = " + std::to_string(ulm[n]) + "\n";
  t += "endomorphisms " + endos.str() + "\n";
  t += "automorphisms " + std::to_string(auts) + "\n";
  out.text = t;
  return out;
}

// ---- classify -----------------------------------------------------------

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string classify_dot(const pgl::ClassificationReport& rep) {
  const std::vector<pgl::Subgroup>& subs = rep.subgroups;
  auto listed = [](const std::vector<pgl::Subgroup>& v, const pgl::Subgroup& x) {
    for (const pgl::Subgroup& s : v)
      if (s == x) return true;
    return false;
  };

  std::string dot = "digraph subgroups {\n  rankdir=BT;\n  node [style=filled];\n";
  for (std::size_t i = 0; i < subs.size(); ++i) {
    const bool fi = listed(rep.fully_invariant, subs[i]);
    const bool ch = listed(rep.characteristic, subs[i]);
    const char* fill = fi ? "#8dd3c7" : ch ? "#ffffb3" : "white";
    dot += "  n" + std::to_string(i) + " [label=\"" + dot_escape(gens_str(subs[i])) +
           "\", fillcolor=\"" + fill + "\"];\n";
  }
  // Covering relation only: an edge a -> b when b properly contains a with
  // nothing strictly between.
  for (std::size_t a = 0; a < subs.size(); ++a)
    for (std::size_t b = 0; b < subs.size(); ++b) {
      if (a == b || !subs[a].is_subset_of(subs[b]) ||
          subs[a].order_exponent() == subs[b].order_exponent())
        continue;
      bool covering = true;
      for (std::size_t c = 0; c < subs.size() && covering; ++c) {
        if (c == a || c == b) continue;
        covering = !(subs[a].is_subset_of(subs[c]) && subs[c].is_subset_of(subs[b]) &&
                     subs[a].order_exponent() != subs[c].order_exponent() &&
                     subs[c].order_exponent() != subs[b].order_exponent());
      }
      if (covering) dot += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
    }
  return dot + "}\n";
}

Output run_classify(const std::string& group, bool as_json, bool as_dot, u64 limit) {
  const pgl::GroupShape g = pgl::parse_group(group);
  const pgl::ClassificationReport rep = pgl::classify(g, limit);

  Output out;
  out.as_json = as_json;
  if (as_dot) {
    out.text = classify_dot(rep);
    return out;
  }
  out.json = pgl::to_json(rep);
  std::string t;
  t += "group " + g.str() + "\n";
  t += "subgroups " + std::to_string(rep.subgroups.size()) + "\n";
  t += "fully invariant " + std::to_string(rep.fully_invariant.size()) + "\n";
  t += "characteristic " + std::to_string(rep.characteristic.size()) + "\n";
  for (const auto& [sub, witness] : rep.gap)
    t += "gap " + gens_str(sub) + " : map sends " + witness.source.str() + " to " +
         witness.image.str() + " outside\n";
  out.text = t;
  return out;
}

// ---- inertia -------------------------------------------------------------

Output run_inertia(const std::string& group, const std::string& gens, const std::string& mode_name,
                   const std::string& strategy_name, u64 samples, u64 seed, bool as_json,
                   u64 limit) {
  const pgl::GroupShape g = pgl::parse_group(group);
  const pgl::Subgroup x = pgl::Subgroup::span(g, pgl::parse_generators(g, gens));
  const pgl::MapFamily mode =
      mode_name == "auto" ? pgl::MapFamily::automorphisms : pgl::MapFamily::endomorphisms;
  const pgl::ProfileStrategy strategy = strategy_name == "sampled"
                                            ? pgl::ProfileStrategy::sampled(seed, samples)
                                            : pgl::ProfileStrategy::exhaustive();
  const pgl::InertiaProfile profile = pgl::inertia_profile(x, mode, strategy, limit);

  Output out;
  out.as_json = as_json;
  out.json = pgl::to_json(profile);
  std::string t;
  t += "group " + g.str() + "\n";
  t += "subgroup " + gens_str(x) + "\n";
  t += std::string("mode ") +
       (mode == pgl::MapFamily::automorphisms ? "automorphisms" : "endomorphisms") + "\n";
  if (strategy.is_exhaustive)
    t += "strategy exhaustive\n";
  else
    t += "strategy sampled seed=" + std::to_string(strategy.seed) +
         " count=" + std::to_string(strategy.count) + "\n";
  t += "maps " + std::to_string(profile.records.size()) + "\n";
  std::map<u64, u64> histogram;
  for (const auto& [id, order] : profile.records) ++histogram[order.exp];
  for (const auto& [exp, count] : histogram)
    t += "order " + pgl::PPower{g.p(), exp}.str() + " x " + std::to_string(count) + "\n";
  t += "sup " + profile.sup.str() + (profile.exact ? " (exact)" : " (observed)") + "\n";
  out.text = t;
  return out;
}

// ---- decompose -----------------------------------------------------------

Output run_decompose(const std::string& group, const std::string& endo, bool two, u64 budget,
                     bool as_json) {
  const pgl::GroupShape g = pgl::parse_group(group);
  const pgl::Homomorphism f = pgl::parse_endo(g, endo);

  Output out;
  out.as_json = as_json;
  if (!two) {
    const pgl::AutDecomposition dec = pgl::four_auto_decompose(f);
    out.json = pgl::Json{{"found", true}, {"decomposition", pgl::to_json(dec)}};
    std::string t = "four-automorphism decomposition of " + g.str() + "\n";
    for (std::size_t i = 0; i < dec.parts.size(); ++i)
      t += "part " + std::to_string(i) + " " + pgl::to_json(dec.parts[i].forward)["matrix"].dump() +
           "\n";
    out.text = t;
    return out;
  }
  const std::optional<pgl::AutDecomposition> dec = pgl::two_auto_decompose(f, budget);
  if (!dec) {
    out.json = pgl::Json{{"found", false}, {"decomposition", nullptr}};
    out.text = "no two-automorphism decomposition exists\n";
    return out;
  }
  out.json = pgl::Json{{"found", true}, {"decomposition", pgl::to_json(*dec)}};
  std::string t = "two-automorphism decomposition of " + g.str() + "\n";
  for (std::size_t i = 0; i < dec->parts.size(); ++i)
    t += "part " + std::to_string(i) + " " + pgl::to_json(dec->parts[i].forward)["matrix"].dump() +
         "\n";
  out.text = t;
  return out;
}

// ---- noone ---------------------------------------------------------------

Output run_noone(u64 p, u32 big_n, bool as_json) {
  const pgl::NoOneFamily fam = pgl::noone_family(p, big_n);
  Output out;
  out.as_json = as_json;
  out.json = pgl::to_json(fam);
  std::string t;
  t += "group " + fam.group.str() + "\n";
  t += "subgroup " + gens_str(fam.x) + "\n";
  for (u32 k = 0; k < fam.hat_exponents.size(); ++k)
    t += "k " + std::to_string(k) + " order " + pgl::PPower{p, fam.hat_exponents[k]}.str() + "\n";
  out.text = t;
  return out;
}

// ---- split-height ----------------------------------------------------------

Output run_split_height(const std::string& group, const std::string& xs, const std::string& zs,
                        u64 budget, bool as_json) {
  const pgl::GroupShape g = pgl::parse_group(group);
  const pgl::Element x = pgl::parse_element(g, xs);
  const pgl::Element z = pgl::parse_element(g, zs);
  const pgl::SplitChain chain = pgl::split_by_height(x, z, budget);

  Output out;
  out.as_json = as_json;
  out.json = pgl::Json{{"group", pgl::to_json(g)},
                       {"x", pgl::to_json(x)},
                       {"z", pgl::to_json(z)},
                       {"chain", pgl::to_json(chain)}};
  std::string t;
  t += "group " + g.str() + "\n";
  t += "x " + x.str() + "  z " + z.str() + "\n";
  for (const pgl::SplitLevel& lv : chain.levels)
    t += "level " + std::to_string(lv.level) + ": y=" + lv.y.str() + " y'=" + lv.y_prime.str() +
         "\n";
  out.text = t;
  return out;
}

// ---- square-hull -----------------------------------------------------------

Output run_square_hull(const std::string& group, const std::string& gens, bool as_json) {
  const pgl::GroupShape g = pgl::parse_group(group);
  const pgl::Subgroup x = pgl::Subgroup::span(g, pgl::parse_generators(g, gens));
  const pgl::SquareHullResult res = pgl::square_hull(x);

  Output out;
  out.as_json = as_json;
  out.json = pgl::to_json(res);
  std::string t;
  t += "group " + g.str() + "\n";
  t += "subgroup " + gens_str(x) + "\n";
  t += "hull " + gens_str(res.hull) + "\n";
  t += "index " + res.index.str() + "\n";
  t += "bound " + res.bound.str() + "\n";
  t += std::string("holds ") + (res.holds ? "true" : "false") + "\n";
  out.text = t;
  out.exit_code = res.holds ? 0 : 1;
  return out;
}

// ---- suite -----------------------------------------------------------------

Output run_suite_cmd(const std::string& corpus, bool corpus_given, int only, bool corrupt,
                     u64 seed, bool as_json) {
  pgl::SuiteOptions opts;
  opts.seed = seed;
  opts.only = only;
  opts.corrupt_oracle = corrupt;
  if (corpus_given) {
    opts.corpus.clear();
    std::size_t from = 0;
    while (from <= corpus.size() && from != std::string::npos && from < corpus.size()) {
      const std::size_t semi = corpus.find(';', from);
      const std::string piece =
          corpus.substr(from, semi == std::string::npos ? std::string::npos : semi - from);
      if (piece.find_first_not_of(" \t") != std::string::npos)
        opts.corpus.push_back(pgl::parse_group(piece));
      if (semi == std::string::npos) break;
      from = semi + 1;
    }
    if (opts.corpus.empty())
      std::cerr << "warning: empty corpus; corpus sweeps are vacuous\n";
  }
  const pgl::SuiteReport rep = pgl::run_suite(opts);

  Output out;
  out.as_json = as_json;
  // suite_report_text is the byte-stability contract; reuse its bytes.
  out.json = pgl::Json::parse(pgl::suite_report_text(rep));
  out.exit_code = rep.all_passed ? 0 : 1;
  std::string t;
  for (const pgl::CriterionResult& r : rep.results) {
    t += std::string(r.passed ? "[PASS] " : "[FAIL] ") + std::to_string(r.id) + " " + r.name +
         " checks=" + std::to_string(r.checks);
    if (!r.passed) t += " : " + r.detail;
    t += "\n";
  }
  t += rep.all_passed ? "all checks passed\n" : "some checks failed\n";
  out.text = t;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pgrouplab: invariance and inertia of finite abelian p-groups"};
  app.require_subcommand(1);

  bool as_json = false;
  bool as_dot = false;
  u64 seed = 0;
  u64 limit_order = pgl::limits::kMaxEndos;
  u64 budget = pgl::limits::kBudget;
  app.add_flag("--json", as_json, "emit JSON instead of text");
  app.add_option("--seed", seed, "seed for sampled strategies (default 0)");
  app.add_option("--limit-order", limit_order, "cap on enumerated maps/subgroups");
  app.add_option("--budget", budget, "cap on search steps");

  std::string group, gens, xs, zs, endo;
  std::string mode_name = "endo", strategy_name = "exhaustive";
  u64 samples = 100, noone_p = 2;
  u32 noone_n = 5;
  bool dec_four = false, dec_two = false;
  std::string corpus;
  bool corpus_given = false;
  int only = 0;
  bool corrupt = false;

  CLI::App* c_describe = app.add_subcommand("describe", "order, exponent, Ulm invariants, |End|, |Aut|");
  c_describe->add_option("group", group, "group as p:[l1,l2,...]")->required();

  CLI::App* c_classify = app.add_subcommand("classify", "fully invariant vs characteristic subgroups");
  c_classify->add_option("group", group)->required();
  c_classify->add_flag("--dot", as_dot, "emit the subgroup covering lattice as DOT");

  CLI::App* c_inertia = app.add_subcommand("inertia", "inertia quotient profile of a subgroup");
  c_inertia->add_option("--group", group)->required();
  c_inertia->add_option("--gens", gens, "subgroup generators, e.g. \"(1,2);(0,4)\"");
  c_inertia->add_option("--mode", mode_name)->check(CLI::IsMember({"endo", "auto"}));
  c_inertia->add_option("--strategy", strategy_name)->check(CLI::IsMember({"exhaustive", "sampled"}));
  c_inertia->add_option("--samples", samples, "probe count for --strategy sampled");

  CLI::App* c_decompose = app.add_subcommand("decompose", "express an endomorphism as a sum of automorphisms");
  c_decompose->add_option("--group", group)->required();
  c_decompose->add_option("--endo", endo, "matrix, e.g. \"[[1,0],[0,1]]\"")->required();
  c_decompose->add_flag("--four", dec_four, "four parts; the group must be a square");
  c_decompose->add_flag("--two", dec_two, "two parts, or a proof none exist");

  CLI::App* c_noone = app.add_subcommand("noone", "swap family with inertia orders p^0..p^N");
  c_noone->add_option("--p", noone_p)->required();
  c_noone->add_option("--N", noone_n)->required();

  CLI::App* c_split = app.add_subcommand("split-height", "split z into two summands matching x's heights");
  c_split->add_option("--group", group)->required();
  c_split->add_option("--x", xs)->required();
  c_split->add_option("--z", zs)->required();

  CLI::App* c_hull = app.add_subcommand("square-hull", "smallest doubled hull of a subgroup of a square");
  c_hull->add_option("--group", group)->required();
  c_hull->add_option("--gens", gens);

  CLI::App* c_suite = app.add_subcommand("suite", "run the property-check suite");
  c_suite->add_option("--corpus", corpus, "semicolon-separated groups for corpus sweeps")
      ->trigger_on_parse();
  c_suite->add_option("--only", only, "run one check by id")->check(CLI::Range(1, 12));
  c_suite->add_flag("--corrupt-oracle", corrupt, "self-test: corrupt one frozen value");

  for (CLI::App* sub : {c_describe, c_classify, c_inertia, c_decompose, c_noone, c_split, c_hull,
                        c_suite})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
    corpus_given = c_suite->count("--corpus") > 0;

    Output out;
    if (*c_describe) out = run_describe(group, as_json);
    if (*c_classify) out = run_classify(group, as_json, as_dot, limit_order);
    if (*c_inertia)
      out = run_inertia(group, gens, mode_name, strategy_name, samples, seed, as_json, limit_order);
    if (*c_decompose) {
      if (dec_four == dec_two)
        throw CLI::ValidationError("decompose", "exactly one of --four/--two is required");
      out = run_decompose(group, endo, dec_two, budget, as_json);
    }
    if (*c_noone) out = run_noone(noone_p, noone_n, as_json);
    if (*c_split) out = run_split_height(group, xs, zs, budget, as_json);
    if (*c_hull) out = run_square_hull(group, gens, as_json);
    if (*c_suite) out = run_suite_cmd(corpus, corpus_given, only, corrupt, seed, as_json);

    emit(out);
    return out.exit_code;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return 2;
  } catch (const pgl::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const pgl::BoundError& e) {
    std::cerr << "resource bound exceeded: " << e.what() << "\n";
    return 3;
  } catch (const pgl::PropertyError& e) {
    std::cerr << "property failure: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return 2;
  }
}

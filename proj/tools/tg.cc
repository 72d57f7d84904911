// Copyright 2026 The tokgraph Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// tg: command-line front end for token graphs and their cut automorphisms.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "tokgraph/cuts.h"
#include "tokgraph/graph.h"
#include "tokgraph/group_algebra.h"
#include "tokgraph/oracle.h"
#include "tokgraph/report.h"
#include "tokgraph/symmetry.h"
#include "tokgraph/token_graph.h"
#include "tokgraph/tuple_syntax.h"
#include "tokgraph/verify.h"

namespace {

using nlohmann::ordered_json;
using namespace tokgraph;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Common {
  std::string file;
  int k = 0;
  bool json = false;
  std::size_t cap = kDefaultGroupCap;
};

std::size_t default_cap() {
  if (const char* env = std::getenv("TG_CAP")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      std::cerr << "tg: ignoring malformed TG_CAP='" << env << "'\n";
    }
  }
  return kDefaultGroupCap;
}

void add_common(CLI::App* cmd, Common& c, bool k_required) {
  cmd->add_option("file", c.file, "Edge-list or graph6 file")->required();
  auto* k = cmd->add_option("-k,--tokens", c.k, "Number of tokens");
  if (k_required) k->required();
  cmd->add_flag("--json", c.json, "Emit JSON");
  cmd->add_option("--cap", c.cap, "Closure and oracle element limit (env TG_CAP)");
}

void print_json(const ordered_json& j) { std::cout << j.dump(2) << '\n'; }

std::string config_name(const TokenGraph& tg, Permutation::Point p) {
  return tg.label(static_cast<TokenIndex>(p));
}

std::string_view kind_name(InducedKind kind) {
  switch (kind) {
    case InducedKind::kIota:
      return "iota";
    case InducedKind::kComplementIota:
      return "complement-iota";
    case InducedKind::kNonInduced:
      return "non-induced";
  }
  return "unknown";
}

void emit_permutation(const Common& c, const TokenGraph& tg, const Graph& g,
                      const Permutation& p, ordered_json j) {
  const std::string cycles =
      p.cycles([&](Permutation::Point q) { return config_name(tg, q); });
  const bool aut = is_automorphism(p, tg);
  std::optional<InducedWitness> witness;
  try {
    const PermGroup aut_g = brute_force_aut(g, OracleOptions{c.cap, kMaxBaseVertices});
    witness = classify_induced(p, tg, aut_g.elements());
  } catch (const CapExceeded&) {
  }
  if (c.json) {
    j["cycles"] = cycles;
    ordered_json mapping = ordered_json::array();
    for (TokenIndex i = 0; i < tg.num_vertices(); ++i) {
      mapping.push_back({{"from", tg.label(i)}, {"to", tg.label(static_cast<TokenIndex>(p(i)))}});
    }
    j["mapping"] = mapping;
    j["automorphism"] = aut;
    j["induced"] = witness ? ordered_json(std::string(kind_name(witness->kind))) : ordered_json();
    if (witness && witness->f) {
      j["witness"] = witness->f->cycles([&](Permutation::Point v) {
        return g.label(static_cast<Vertex>(v));
      });
    }
    print_json(j);
    return;
  }
  std::cout << cycles << '\n';
  std::cout << "automorphism: " << (aut ? "yes" : "no") << '\n';
  if (witness) {
    std::cout << "induced: " << kind_name(witness->kind);
    if (witness->f) {
      std::cout << " by " << witness->f->cycles([&](Permutation::Point v) {
        return g.label(static_cast<Vertex>(v));
      });
    }
    std::cout << '\n';
  }
}

int cmd_build(const Common& c, const std::string& emit) {
  const Graph g = read_graph_file(c.file);
  const TokenGraph tg = build_token_graph(g, c.k);
  const Graph fk = tg.as_graph();
  if (c.json) {
    ordered_json j;
    j["schema"] = kReportSchema;
    j["n"] = g.num_vertices();
    j["k"] = c.k;
    j["vertices"] = fk.labels();
    ordered_json edges = ordered_json::array();
    for (auto [u, v] : fk.edges()) edges.push_back({u, v});
    j["edges"] = edges;
    print_json(j);
  } else if (emit == "dot") {
    std::cout << render_dot(fk, "F" + std::to_string(c.k));
  } else {
    std::cout << render_edge_list(fk);
  }
  return kExitOk;
}

int cmd_cuts(const Common& c) {
  const Graph g = read_graph_file(c.file);
  const bool with_k = c.k > 0;
  if (with_k && (c.k < 1 || c.k > g.num_vertices() - 1)) throw Error("k out of range");
  const CutFamily family = find_cuts(g, with_k ? c.k : 1);
  if (c.json) {
    ordered_json j;
    j["schema"] = kReportSchema;
    j["q"] = family.size();
    ordered_json cuts = ordered_json::array();
    for (int i = 0; i < family.size(); ++i) {
      const Cut& cut = family.cut(i);
      ordered_json cj;
      cj["x"] = g.label(cut.x);
      cj["y"] = g.label(cut.y);
      ordered_json comps = ordered_json::array();
      for (const auto& comp : cut.components.components) {
        ordered_json labels = ordered_json::array();
        for (Vertex v : comp) labels.push_back(g.label(v));
        comps.push_back(labels);
      }
      cj["components"] = comps;
      cj["component_sizes"] = cut.sizes();
      if (with_k) {
        cj["tuples"] = family.tuples(i);
        cj["tuple_count"] = family.tuples(i).size();
      }
      cuts.push_back(cj);
    }
    j["cuts"] = cuts;
    if (with_k) {
      j["k"] = c.k;
      j["tuple_universe"] = family.universe_size();
    }
    print_json(j);
    return kExitOk;
  }
  std::cout << "q(G) = " << family.size() << '\n';
  for (int i = 0; i < family.size(); ++i) {
    const Cut& cut = family.cut(i);
    std::cout << "S" << i + 1 << " = " << describe_cut(g, cut) << "  components:";
    for (const auto& comp : cut.components.components) {
      std::cout << " {";
      for (std::size_t v = 0; v < comp.size(); ++v) {
        std::cout << (v ? "," : "") << g.label(comp[v]);
      }
      std::cout << '}';
    }
    std::cout << "  sizes " << describe_tuple(cut.sizes()) << '\n';
    if (with_k) {
      std::cout << "  |T_S" << i + 1 << "| = " << family.tuples(i).size() << ":";
      for (const auto& t : family.tuples(i)) std::cout << ' ' << describe_tuple(t);
      std::cout << '\n';
    }
  }
  if (with_k) std::cout << "|T_G| = " << family.universe_size() << '\n';
  return kExitOk;
}

int cmd_phi(const Common& c, int cut_number, const std::string& alpha_text) {
  const Graph g = read_graph_file(c.file);
  const TokenGraph tg = build_token_graph(g, c.k);
  const CutFamily family = find_cuts(g, c.k);
  if (cut_number < 1 || cut_number > family.size()) {
    throw Error("cut number " + std::to_string(cut_number) + " outside 1.." +
                std::to_string(family.size()));
  }
  const auto tuples = parse_tuple_list(alpha_text);
  const AlphaSet alpha = AlphaSet::Of(family, cut_number - 1, tuples);
  ordered_json j;
  j["schema"] = kReportSchema;
  j["cut"] = cut_number;
  j["alpha"] = tuples;
  emit_permutation(c, tg, g, phi(family, alpha, tg), std::move(j));
  return kExitOk;
}

int cmd_psi(const Common& c, const std::string& beta_text) {
  const Graph g = read_graph_file(c.file);
  const TokenGraph tg = build_token_graph(g, c.k);
  const CutFamily family = find_cuts(g, c.k);
  BetaSet beta = BetaSet::Empty(family);
  for (const auto& [cut, t] : parse_beta_list(beta_text)) {
    if (cut >= family.size()) throw Error("cut number " + std::to_string(cut + 1) + " out of range");
    auto global = family.find(cut, t);
    if (!global) throw Error("tuple " + describe_tuple(t) + " not in T_S" + std::to_string(cut + 1));
    beta.members.set(*global);
  }
  ordered_json j;
  j["schema"] = kReportSchema;
  j["beta"] = describe_beta(family, beta);
  emit_permutation(c, tg, g, psi(beta, family, tg), std::move(j));
  return kExitOk;
}

int cmd_order(const Common& c, bool compare_oracle) {
  const Graph g = read_graph_file(c.file);
  ReportOptions options;
  options.cap = c.cap;
  options.oracle = compare_oracle;
  const ordered_json r = build_report(g, c.k, options);
  ordered_json j;
  j["schema"] = kReportSchema;
  for (const char* key : {"q", "tuple_universe", "aut_g", "stabilizer", "predicted", "closure"}) {
    j[key] = r[key];
  }
  if (compare_oracle) j["oracle"] = r["oracle"];
  if (c.json) {
    print_json(j);
    return kExitOk;
  }
  auto show = [](const ordered_json& v) { return v.is_null() ? std::string("n/a") : v.dump(); };
  std::cout << "|T_G|       " << show(j["tuple_universe"]) << '\n'
            << "|S|         " << show(j["stabilizer"]) << '\n'
            << "predicted   " << show(j["predicted"]) << '\n'
            << "closure     " << show(j["closure"]) << '\n';
  if (compare_oracle) std::cout << "oracle      " << show(j["oracle"]) << '\n';
  return kExitOk;
}

int cmd_oracle(const Common& c) {
  const Graph g = read_graph_file(c.file);
  Graph target = g;
  int limit = 40;
  if (c.k > 0) {
    target = build_token_graph(g, c.k).as_graph();
  } else {
    limit = kMaxBaseVertices;
  }
  const PermGroup group = brute_force_aut(target, OracleOptions{c.cap, limit});
  auto name = [&](Permutation::Point p) { return target.label(static_cast<Vertex>(p)); };
  if (c.json) {
    ordered_json j;
    j["schema"] = kReportSchema;
    j["order"] = group.order();
    ordered_json gens = ordered_json::array();
    for (const Permutation& p : group.generators()) gens.push_back(p.cycles(name));
    j["generators"] = gens;
    print_json(j);
    return kExitOk;
  }
  std::cout << "|Aut| = " << group.order() << '\n';
  for (const Permutation& p : group.generators()) std::cout << p.cycles(name) << '\n';
  return kExitOk;
}

int cmd_verify(const Common& c) {
  const Graph g = read_graph_file(c.file);
  VerifyOptions options;
  options.cap = c.cap;
  const VerificationRun run = run_verification(g, c.k, options);
  if (c.json) {
    print_json(to_json(run));
  } else {
    for (const ClaimResult& r : run.claims) {
      std::cout << to_string(r.status);
      for (std::size_t pad = to_string(r.status).size(); pad < 9; ++pad) std::cout << ' ';
      std::cout << r.id;
      if (!r.detail.empty()) std::cout << "  " << r.detail;
      std::cout << '\n';
    }
  }
  return run.any_failed() ? kExitFail : kExitOk;
}

int cmd_report(const Common& c) {
  const Graph g = read_graph_file(c.file);
  ReportOptions options;
  options.cap = c.cap;
  const ordered_json r = build_report(g, c.k, options);
  if (c.json) {
    print_json(r);
    return kExitOk;
  }
  for (const auto& [key, value] : r.items()) {
    if (key == "cuts") continue;
    std::cout << key << ": " << (value.is_null() ? "n/a" : value.dump()) << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Token graphs, 2-cuts with the same neighbours, and their automorphisms"};
  app.require_subcommand(1);

  const std::size_t cap = default_cap();
  Common build_c, cuts_c, phi_c, psi_c, order_c, oracle_c, verify_c, report_c;
  for (Common* c : {&build_c, &cuts_c, &phi_c, &psi_c, &order_c, &oracle_c, &verify_c, &report_c}) {
    c->cap = cap;
  }

  std::string emit = "edgelist";
  auto* build = app.add_subcommand("build", "Write F_k(G)");
  add_common(build, build_c, true);
  build->add_option("--emit", emit, "Output format")->check(CLI::IsMember({"dot", "edgelist"}));

  auto* cuts = app.add_subcommand("cuts", "List 2-cuts with the same neighbours");
  add_common(cuts, cuts_c, false);

  int cut_number = 0;
  std::string alpha;
  auto* phi_cmd = app.add_subcommand("phi", "Flip the token of one cut on selected classes");
  add_common(phi_cmd, phi_c, true);
  phi_cmd->add_option("--cut", cut_number, "1-based cut number")->required();
  phi_cmd->add_option("--alpha", alpha, "Tuples, e.g. (0,1),(1,0)");

  std::string beta;
  auto* psi_cmd = app.add_subcommand("psi", "Compose flips over all cuts");
  add_common(psi_cmd, psi_c, true);
  psi_cmd->add_option("--beta", beta, "cut:tuple items, e.g. 1:(0,1),2:(1,0)");

  bool compare_oracle = false;
  auto* order = app.add_subcommand("order", "Predicted and generated group orders");
  add_common(order, order_c, true);
  order->add_flag("--compare-oracle", compare_oracle, "Also run the brute-force oracle on F_k(G)");

  auto* oracle = app.add_subcommand("oracle", "Brute-force automorphism group of G, or of F_k(G) with -k");
  add_common(oracle, oracle_c, false);

  bool all = true;
  auto* verify = app.add_subcommand("verify", "Check every registered claim");
  add_common(verify, verify_c, true);
  verify->add_flag("--all", all, "Run the full claim registry (default)");

  auto* report = app.add_subcommand("report", "Summary of cuts and group orders");
  add_common(report, report_c, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*build) return cmd_build(build_c, emit);
    if (*cuts) return cmd_cuts(cuts_c);
    if (*phi_cmd) return cmd_phi(phi_c, cut_number, alpha);
    if (*psi_cmd) return cmd_psi(psi_c, beta);
    if (*order) return cmd_order(order_c, compare_oracle);
    if (*oracle) return cmd_oracle(oracle_c);
    if (*verify) return cmd_verify(verify_c);
    if (*report) return cmd_report(report_c);
  } catch (const std::exception& e) {
    std::cerr << "tg: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

#include "tgf/cli.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "tgf/cayley.hpp"
#include "tgf/chains.hpp"
#include "tgf/complexity.hpp"
#include "tgf/forest.hpp"
#include "tgf/ponzi.hpp"
#include "tgf/random.hpp"
#include "tgf/words.hpp"

namespace tgf {

namespace {

using json = nlohmann::ordered_json;

constexpr std::uint64_t kDefaultSeed = 1;

std::string word_line(const char* prefix, const Word& u) {
  std::string line = prefix;
  if (!u.empty()) {
    line += ' ';
    line += to_string(u);
  }
  return line;
}

int cmd_relations(unsigned max_index, unsigned samples, std::uint64_t seed,
                  std::ostream& out) {
  Rng rng(seed);
  std::size_t pairs = 0;
  for (unsigned i = 2; i <= max_index; ++i) pairs += i - 1;
  for (unsigned sample = 0; sample < samples; ++sample) {
    const PointedForest p = random_pforest(rng, 6, 12);
    for (unsigned i = 2; i <= max_index; ++i) {
      for (unsigned j = 0; j + 2 <= i; ++j) {
        if (!check_relation(i, j, p)) {
          out << "FAIL x" << i << " x" << j << " != x" << j << " x" << i - 1
              << " on " << to_string(p) << "\n";
          return 1;
        }
      }
    }
  }
  out << "relation x_i x_j = x_j x_{i-1}: " << samples << " samples x "
      << pairs << " pairs (j+2 <= i <= " << max_index << "): OK\n";
  for (unsigned i = 2; i <= max_index; ++i) {
    if (evaluate({i, 0}) != evaluate({0, i - 1})) {
      out << "FAIL x" << i << " x0 != x0 x" << i - 1 << " on the identity\n";
      return 1;
    }
  }
  out << "positive conjugation x_i x_0 = x_0 x_{i-1} (2 <= i <= " << max_index
      << "): OK\n";
  if (evaluate({1, 0}) == evaluate({0, 0})) {
    out << "FAIL x1 x0 = x0 x0 holds but must not\n";
    return 1;
  }
  out << "excluded case i = j+1: x1 x0 != x0 x0 confirmed\n";
  out << "all relation checks passed\n";
  return 0;
}

json spec_to_json(const GraphSpec& spec) {
  json j;
  if (spec.gamma) {
    j["membership"] = "gamma";
    j["k"] = spec.gamma->k;
    j["l"] = spec.gamma->l;
  } else {
    j["membership"] = "full";
  }
  return j;
}

int cmd_ball(const GraphSpec& spec, unsigned radius, bool as_json,
             unsigned jobs, std::ostream& out) {
  const Ball b = ball(spec, radius, jobs);
  const std::size_t edge_count = b.edges().size();
  if (as_json) {
    json j;
    j["spec"] = spec_to_json(spec);
    j["radius"] = radius;
    j["vertex_count"] = b.vertices.size();
    j["edge_count"] = edge_count;
    j["growth"] = b.growth;
    out << j.dump() << "\n";
    return 0;
  }
  out << "spec: " << spec.label() << "\n";
  out << "radius: " << radius << "\n";
  out << "depth\tvertices\tcumulative\n";
  std::size_t cumulative = 0;
  for (std::size_t depth = 0; depth < b.growth.size(); ++depth) {
    cumulative += b.growth[depth];
    out << depth << "\t" << b.growth[depth] << "\t" << cumulative << "\n";
  }
  out << "vertices: " << b.vertices.size() << "\n";
  out << "edges: " << edge_count << "\n";
  return 0;
}

int cmd_folner(const GraphSpec& spec, unsigned radius, std::ostream& out) {
  const Ball b = ball(spec, radius);
  out << "folner boundary ratios, " << spec.label() << ":\n";
  // Vertices are sorted by depth, so the ball of radius r is a prefix.
  std::size_t end = 0;
  for (unsigned r = 0; r < b.growth.size(); ++r) {
    end += b.growth[r];
    std::vector<PointedForest> prefix;
    prefix.reserve(end);
    for (std::size_t i = 0; i < end; ++i)
      prefix.push_back(b.vertices[i].element);
    out << "radius " << r << ": " << to_string(folner_ratio(prefix, spec))
        << "\n";
  }
  out << "note: no claim is made about the limit of these ratios; for the\n"
         "full positive monoid that limit question is equivalent to the\n"
         "amenability of Thompson's group F, which is an open problem.\n";
  return 0;
}

int cmd_verify_ponzi(const GammaParams& params, unsigned radius, bool as_json,
                     unsigned jobs, std::ostream& out) {
  const VerificationReport report = verify_ball(params, radius, jobs);
  if (as_json) {
    json j;
    j["k"] = report.params.k;
    j["l"] = report.params.l;
    j["radius"] = report.radius;
    j["vertex_count"] = report.vertex_count;
    j["min_divergence"] = report.min_divergence;
    j["max_abs_flow"] = report.max_abs_flow;
    j["max_c"] = report.max_c;
    j["max_right_nontrivial"] = report.max_right_nontrivial;
    j["violations"] = json::array();
    for (const Violation& v : report.violations)
      j["violations"].push_back({{"vertex", v.vertex}, {"reason", v.reason}});
    out << j.dump() << "\n";
  } else {
    out << "gamma(k=" << params.k << ", l=" << params.l << ") ball radius "
        << radius << ": " << report.vertex_count << " vertices\n";
    out << "min divergence: " << report.min_divergence << "\n";
    out << "max |flow|: " << report.max_abs_flow << "\n";
    out << "max c_P: " << report.max_c << "\n";
    out << "max right nontrivial: " << report.max_right_nontrivial << "\n";
    out << "bound k+l: " << params.k + params.l << "\n";
    if (report.violations.empty()) {
      out << "violations: none\n";
    } else {
      out << "violations: " << report.violations.size() << "\n";
      for (const Violation& v : report.violations)
        out << "  " << v.vertex << ": " << v.reason << "\n";
    }
  }
  return report.violations.empty() ? 0 : 1;
}

int cmd_chain_to_flow(const std::string& graph_path,
                      const std::string& chain_path, std::ostream& out,
                      std::ostream& err) {
  std::ifstream graph_file(graph_path);
  if (!graph_file) {
    err << "error: cannot open graph file " << graph_path << "\n";
    return 2;
  }
  std::ifstream chain_file(chain_path);
  if (!chain_file) {
    err << "error: cannot open chain file " << chain_path << "\n";
    return 2;
  }
  const ExplicitGraph g = load_graph(graph_file);
  const UFChain c = load_chain(chain_file);
  const EdgeFlow flow = chain_to_flow(g, c);
  out << "flow:\n";
  for (const auto& [key, value] : flow.entries())
    out << key.first << " " << key.second << " " << value << "\n";
  const std::vector<long long> flow_div = flow.divergences(g.n);
  out << "divergence:\n";
  bool preserved = true;
  for (unsigned x = 0; x < g.n; ++x) {
    out << x << " " << flow_div[x] << "\n";
    if (flow_div[x] != chain_divergence(c, x)) preserved = false;
  }
  out << "divergence preserved: " << (preserved ? "yes" : "no") << "\n";
  return preserved ? 0 : 1;
}

int cmd_export_dot(const GraphSpec& spec, unsigned radius,
                   const std::string& out_path, std::ostream& out,
                   std::ostream& err) {
  const Ball b = ball(spec, radius);
  std::ofstream file(out_path);
  if (!file) {
    err << "error: cannot open output file " << out_path << "\n";
    return 2;
  }
  file << export_dot(b);
  out << "wrote " << b.vertices.size() << " vertices, " << b.edges().size()
      << " edges to " << out_path << "\n";
  return 0;
}

struct GammaFlags {
  unsigned k = 0;
  unsigned l = 1;
  bool have_k = false;
  bool have_l = false;
  bool full = false;
};

void add_gamma_options(CLI::App* cmd, GammaFlags& flags, bool allow_full) {
  cmd->add_option("--k", flags.k, "caret budget k")
      ->check(CLI::NonNegativeNumber)
      ->each([&flags](const std::string&) { flags.have_k = true; });
  cmd->add_option("--l", flags.l, "generator index bound l (>= 1)")
      ->check(CLI::PositiveNumber)
      ->each([&flags](const std::string&) { flags.have_l = true; });
  if (allow_full)
    cmd->add_flag("--full", flags.full,
                  "use the full positive monoid instead of gamma(k, l)");
}

// nullopt on a usage error (message already written).
std::optional<GraphSpec> resolve_spec(const GammaFlags& flags,
                                      std::ostream& err) {
  if (flags.full) return GraphSpec::full();
  if (!flags.have_k || !flags.have_l) {
    err << "error: either --full or both --k and --l are required\n";
    return std::nullopt;
  }
  return GraphSpec::gamma_of(GammaParams{flags.k, flags.l});
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "pointed-forest toolkit: the positive monoid of Thompson's group F,\n"
      "its Gamma(k, l) Cayley subgraphs, and their Ponzi flows"};
  app.name("tgf");
  app.require_subcommand(1);

  std::string word_text, pforest_text, tree_text;
  GammaFlags member_flags, decompose_flags, ball_flags, folner_flags,
      verify_flags, dot_flags;
  unsigned phi_l = 1;
  unsigned radius = 0;
  unsigned jobs = 1;
  bool as_json = false;
  unsigned rel_max_index = 8, rel_samples = 200;
  std::uint64_t rel_seed = kDefaultSeed;
  std::string graph_path, chain_path, out_path;

  CLI::App* eval_cmd =
      app.add_subcommand("eval", "evaluate a positive word to a pointed forest");
  eval_cmd->add_option("word", word_text, "word, e.g. \"x1 x0\"")->required();

  CLI::App* member_cmd = app.add_subcommand(
      "member", "test membership of a pointed forest in gamma(k, l)");
  add_gamma_options(member_cmd, member_flags, false);
  member_cmd->get_option("--k")->required();
  member_cmd->get_option("--l")->required();
  member_cmd->add_option("pforest", pforest_text, "pointed forest, e.g. \"p=0: (..)\"")
      ->required();

  CLI::App* phi_cmd =
      app.add_subcommand("phi", "apply the stripping map phi_l to a pointed forest");
  phi_cmd->add_option("--l", phi_l, "number of applications at the pointer")
      ->check(CLI::PositiveNumber)
      ->required();
  phi_cmd->add_option("pforest", pforest_text)->required();

  CLI::App* cpx_cmd =
      app.add_subcommand("complexity", "complexity of a binary tree");
  cpx_cmd->add_option("tree", tree_text, "tree, e.g. \"(.(..))\"")->required();

  CLI::App* decompose_cmd = app.add_subcommand(
      "decompose", "split a member of gamma(k, l) into P = w v");
  add_gamma_options(decompose_cmd, decompose_flags, false);
  decompose_cmd->get_option("--k")->required();
  decompose_cmd->get_option("--l")->required();
  decompose_cmd->add_option("pforest", pforest_text)->required();

  CLI::App* relations_cmd = app.add_subcommand(
      "relations", "check the defining relations on random pointed forests");
  relations_cmd->add_option("--max-index", rel_max_index, "largest generator index")
      ->check(CLI::Range(2u, 64u));
  relations_cmd->add_option("--samples", rel_samples, "random forests per pair");
  relations_cmd->add_option("--seed", rel_seed, "PRNG seed");

  CLI::App* ball_cmd =
      app.add_subcommand("ball", "BFS ball growth table around the identity");
  add_gamma_options(ball_cmd, ball_flags, true);
  ball_cmd->add_option("--radius", radius)->required();
  ball_cmd->add_flag("--json", as_json, "machine-readable summary");
  ball_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  CLI::App* folner_cmd = app.add_subcommand(
      "folner", "exact boundary/size ratios of balls, per radius");
  add_gamma_options(folner_cmd, folner_flags, true);
  folner_cmd->add_option("--radius", radius)->required();

  CLI::App* verify_cmd = app.add_subcommand(
      "verify-ponzi", "verify the Ponzi flow on a ball of gamma(k, l)");
  add_gamma_options(verify_cmd, verify_flags, false);
  verify_cmd->get_option("--k")->required();
  verify_cmd->get_option("--l")->required();
  verify_cmd->add_option("--radius", radius)->required();
  verify_cmd->add_flag("--json", as_json, "machine-readable report");
  verify_cmd->add_option("--jobs", jobs, "worker threads")
      ->check(CLI::PositiveNumber);

  CLI::App* chain_cmd = app.add_subcommand(
      "chain-to-flow", "reroute a 1-chain into an edge flow, divergences intact");
  chain_cmd->add_option("--graph", graph_path, "graph file: \"n m\" then \"u v\" lines")
      ->required();
  chain_cmd->add_option("--chain", chain_path, "chain file: \"u v coeff\" lines")
      ->required();

  CLI::App* dot_cmd =
      app.add_subcommand("export-dot", "write a ball as a DOT digraph");
  add_gamma_options(dot_cmd, dot_flags, true);
  dot_cmd->add_option("--radius", radius)->required();
  dot_cmd->add_option("--out", out_path, "output file")->required();

  std::vector<const char*> argv;
  argv.push_back("tgf");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (eval_cmd->parsed())
      out << to_string(evaluate(parse_word(word_text))) << "\n";

    if (member_cmd->parsed()) {
      const GammaParams params{member_flags.k, member_flags.l};
      const PointedForest p = parse_pforest(pforest_text);
      const std::size_t survivors = phi_carets(p, params.l);
      out << (survivors <= params.k ? "true" : "false") << " (" << survivors
          << (survivors == 1 ? " caret survives" : " carets survive") << ")\n";
    }

    if (phi_cmd->parsed())
      out << to_string(phi(parse_pforest(pforest_text), phi_l)) << "\n";

    if (cpx_cmd->parsed()) out << complexity(parse_tree(tree_text)) << "\n";

    if (decompose_cmd->parsed()) {
      const GammaParams params{decompose_flags.k, decompose_flags.l};
      const Decomposition d = decompose(parse_pforest(pforest_text), params);
      out << word_line("w:", d.w) << "\n" << word_line("v:", d.v) << "\n";
    }

    if (relations_cmd->parsed())
      return cmd_relations(rel_max_index, rel_samples, rel_seed, out);

    if (ball_cmd->parsed()) {
      const auto spec = resolve_spec(ball_flags, err);
      if (!spec) return 2;
      return cmd_ball(*spec, radius, as_json, jobs, out);
    }

    if (folner_cmd->parsed()) {
      const auto spec = resolve_spec(folner_flags, err);
      if (!spec) return 2;
      return cmd_folner(*spec, radius, out);
    }

    if (verify_cmd->parsed())
      return cmd_verify_ponzi(GammaParams{verify_flags.k, verify_flags.l},
                              radius, as_json, jobs, out);

    if (chain_cmd->parsed())
      return cmd_chain_to_flow(graph_path, chain_path, out, err);

    if (dot_cmd->parsed()) {
      const auto spec = resolve_spec(dot_flags, err);
      if (!spec) return 2;
      return cmd_export_dot(*spec, radius, out_path, out, err);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace tgf

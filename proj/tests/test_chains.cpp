#include <sstream>

#include "doctest.h"

#include "test_helpers.hpp"
#include "tgf/cayley.hpp"
#include "tgf/chains.hpp"
#include "tgf/ponzi.hpp"

using namespace tgf;
using namespace tgf::test;

namespace {

// path 0 - 1 - 2
ExplicitGraph path3() {
  return ExplicitGraph::make(3, {{0, 1}, {1, 2}});
}

}  // namespace

TEST_CASE("chain divergence, frozen cases") {
  UFChain empty;
  for (unsigned x = 0; x < 3; ++x) CHECK(chain_divergence(empty, x) == 0);

  UFChain c;
  c.add(0, 2, 1);
  CHECK(chain_divergence(c, 0) == -1);
  CHECK(chain_divergence(c, 1) == 0);
  CHECK(chain_divergence(c, 2) == 1);
}

TEST_CASE("chain divergences telescope to zero") {
  Rng rng(80);
  for (int it = 0; it < 100; ++it) {
    const ExplicitGraph g = random_connected_graph(rng, 12, 5);
    const UFChain c = random_chain(rng, g, 3, 5);
    long long total = 0;
    for (unsigned x = 0; x < g.n; ++x) total += chain_divergence(c, x);
    CHECK(total == 0);
  }
}

TEST_CASE("no Ponzi scheme on a finite graph") {
  const ExplicitGraph g = path3();
  CHECK(!is_ponzi_scheme(g, UFChain{}));
  UFChain c;
  c.add(0, 2, 1);
  c.add(1, 2, 2);
  CHECK(!is_ponzi_scheme(g, c));
  Rng rng(81);
  for (int it = 0; it < 50; ++it) {
    const ExplicitGraph rg = random_connected_graph(rng, 10, 5);
    const UFChain rc = random_chain(rng, rg, 3, 5);
    CHECK(!is_ponzi_scheme(rg, rc));
  }
}

TEST_CASE("edge flow arithmetic") {
  EdgeFlow flow;
  flow.set(0, 1, 3);
  CHECK(flow.value(0, 1) == 3);
  CHECK(flow.value(1, 0) == -3);
  CHECK(flow.value(0, 2) == 0);
  flow.add(1, 0, 3);
  CHECK(flow.value(0, 1) == 0);
  CHECK(flow.entries().empty());
  CHECK_THROWS_AS(flow.set(2, 2, 1), std::invalid_argument);
}

TEST_CASE("chain_to_flow, frozen path reroute") {
  const ExplicitGraph g = path3();
  UFChain c;
  c.add(0, 2, 1);
  const EdgeFlow flow = chain_to_flow(g, c);
  CHECK(flow.value(0, 1) == 1);
  CHECK(flow.value(1, 2) == 1);
  const std::vector<long long> div = flow.divergences(3);
  CHECK(div == std::vector<long long>{-1, 0, 1});
}

TEST_CASE("distance-1 chains pass through as a - a^T") {
  const ExplicitGraph g = path3();
  UFChain c;
  c.add(0, 1, 4);
  c.add(1, 0, 1);
  c.add(1, 2, -2);
  const EdgeFlow flow = chain_to_flow(g, c);
  CHECK(flow.value(0, 1) == 3);
  CHECK(flow.value(1, 2) == -2);
}

TEST_CASE("chain_to_flow rejects disconnected coefficients") {
  const ExplicitGraph g = ExplicitGraph::make(4, {{0, 1}, {2, 3}});
  UFChain c;
  c.add(0, 3, 1);
  CHECK_THROWS_AS(chain_to_flow(g, c), std::domain_error);
}

TEST_CASE("chain_to_flow preserves divergence exactly, randomized") {
  Rng rng(82);
  for (int it = 0; it < 120; ++it) {
    const ExplicitGraph g = random_connected_graph(rng, 25, 6);
    const UFChain c = random_chain(rng, g, 3, 5);
    const EdgeFlow flow = chain_to_flow(g, c);
    for (const auto& [key, value] : flow.entries()) {
      CHECK(g.has_edge(key.first, key.second));
      CHECK(value != 0);
      CHECK(flow.value(key.first, key.second) ==
            -flow.value(key.second, key.first));
    }
    const std::vector<long long> div = flow.divergences(g.n);
    for (unsigned x = 0; x < g.n; ++x)
      CHECK(div[x] == chain_divergence(c, x));
  }
}

TEST_CASE("flow lists, frozen cases") {
  // isolated vertex, one label, bound 1
  LabeledDigraph isolated(1, 1);
  const FlowLists empty_lists = build_flow_lists(isolated, EdgeFlow{}, 1, 0);
  CHECK(empty_lists.outgoing == FlowList{0, 0});
  CHECK(empty_lists.incoming == FlowList{0, 0, 0});

  // single outgoing g1 edge carrying flow 1
  LabeledDigraph single(2, 1);
  single.add_edge(0, 1, 1);
  EdgeFlow flow;
  flow.set(0, 1, 1);
  const FlowLists lists = build_flow_lists(single, flow, 1, 0);
  CHECK(lists.outgoing == FlowList{1, 0});
  CHECK(lists.incoming == FlowList{0, 0, 0});
  // the target vertex sees it as incoming
  const FlowLists target = build_flow_lists(single, flow, 1, 1);
  CHECK(target.outgoing == FlowList{0, 0});
  CHECK(target.incoming == FlowList{1, 0, 0});

  CHECK(to_string(lists.outgoing) == "g1 h");
  CHECK(h_count(lists.incoming) == 3);
}

TEST_CASE("flow lists reject incomplete neighborhoods and oversize flows") {
  LabeledDigraph d(2, 1);
  d.add_edge(0, 1, 1);
  d.complete[0] = 0;
  EdgeFlow flow;
  flow.set(0, 1, 1);
  CHECK_THROWS_AS(build_flow_lists(d, flow, 1, 0), std::invalid_argument);
  flow.set(0, 1, 5);
  CHECK_THROWS_AS(build_flow_lists(d, flow, 1, 1), std::invalid_argument);
}

TEST_CASE("digraph label uniqueness is enforced") {
  LabeledDigraph d(3, 2);
  d.add_edge(0, 1, 1);
  CHECK_THROWS_AS(d.add_edge(0, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(d.add_edge(2, 1, 1), std::invalid_argument);
  d.add_edge(0, 2, 1);  // different label is fine
}

TEST_CASE("cayley ball to labeled digraph") {
  const Ball b0 = ball(GraphSpec::gamma_of(GammaParams{1, 1}), 0);
  const LabeledDigraph d0 = cayley_ball_to_labeled_digraph(b0);
  CHECK(d0.size() == 1);
  CHECK(d0.labels == 2);
  CHECK(d0.out_edges[0][0] == LabeledDigraph::npos);
  CHECK(d0.complete[0] == 0);  // identity's neighbors lie outside radius 0

  const Ball b = ball(GraphSpec::gamma_of(GammaParams{1, 1}), 4);
  const LabeledDigraph d = cayley_ball_to_labeled_digraph(b);
  std::size_t edge_count = 0;
  for (std::size_t v = 0; v < d.size(); ++v)
    for (std::size_t lab = 0; lab < d.labels; ++lab)
      if (d.out_edges[v][lab] != LabeledDigraph::npos) ++edge_count;
  CHECK(edge_count == b.edges().size());
  for (std::size_t v = 0; v < d.size(); ++v)
    CHECK(d.complete[v] == (b.vertices[v].depth < b.radius ? 1 : 0));
}

TEST_CASE("flow lists on gamma ball interiors match the divergence") {
  const GammaParams params{1, 1};
  const Ball b = ball(GraphSpec::gamma_of(params), 5);
  const LabeledDigraph d = cayley_ball_to_labeled_digraph(b);
  const EdgeFlow flow = flow_on_ball(b, params);
  const long long bound = params.k + params.l;
  const std::size_t expected_out = 2 * d.labels * static_cast<std::size_t>(bound);
  for (std::size_t v = 0; v < d.size(); ++v) {
    if (!d.complete[v]) continue;
    const FlowLists lists = build_flow_lists(d, flow, bound, v);
    CHECK(lists.outgoing.size() == expected_out);
    CHECK(lists.incoming.size() == expected_out + 1);
    const std::size_t out_nonh = lists.outgoing.size() - h_count(lists.outgoing);
    const std::size_t in_nonh = lists.incoming.size() - h_count(lists.incoming);
    const long long div = divergence(b.vertices[v].element, params);
    CHECK(static_cast<long long>(in_nonh) - static_cast<long long>(out_nonh) ==
          div);
    CHECK(in_nonh > out_nonh);
    CHECK(h_count(lists.incoming) <= h_count(lists.outgoing));
  }
}

TEST_CASE("file loaders round trip") {
  std::istringstream graph_text("3 2\n0 1\n1 2\n");
  const ExplicitGraph g = load_graph(graph_text);
  CHECK(g.n == 3);
  CHECK(g.has_edge(1, 0));
  CHECK(!g.has_edge(0, 2));
  CHECK(g.degree_bound() == 2);

  std::istringstream chain_text("0 2 1\n1 2 2\n0 2 -1\n");
  const UFChain c = load_chain(chain_text);
  CHECK(c.at(0, 2) == 0);  // accumulated away
  CHECK(c.at(1, 2) == 2);

  std::istringstream digraph_text("0 1 1\n1 2 0\n");
  const LabeledDigraph d = load_labeled_digraph(digraph_text);
  CHECK(d.size() == 2);
  CHECK(d.labels == 2);
  CHECK(d.out_edges[0][0] == 1);
  CHECK(d.in_edges[0][1] == 1);

  std::istringstream bad("3\n");
  CHECK_THROWS_AS(load_graph(bad), std::invalid_argument);
}

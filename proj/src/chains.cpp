#include "tgf/chains.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "tgf/ponzi.hpp"

namespace tgf {

ExplicitGraph ExplicitGraph::make(
    std::size_t n, std::vector<std::pair<unsigned, unsigned>> edges) {
  ExplicitGraph g;
  g.n = n;
  for (auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("graph: self-loop at vertex " +
                                            std::to_string(u));
    if (u >= n || v >= n)
      throw std::invalid_argument("graph: vertex index out of range");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  g.edges = std::move(edges);
  g.adj.resize(n);
  for (const auto& [u, v] : g.edges) {
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& list : g.adj) std::sort(list.begin(), list.end());
  return g;
}

bool ExplicitGraph::has_edge(unsigned u, unsigned v) const {
  if (u >= n || v >= n || u == v) return false;
  return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

std::size_t ExplicitGraph::degree_bound() const {
  std::size_t d = 0;
  for (const auto& list : adj) d = std::max(d, list.size());
  return d;
}

void UFChain::add(unsigned x, unsigned y, long long a) {
  if (a == 0) return;
  auto key = std::make_pair(x, y);
  auto it = coeff.find(key);
  if (it == coeff.end()) {
    coeff.emplace(key, a);
  } else if ((it->second += a) == 0) {
    coeff.erase(it);
  }
}

long long UFChain::at(unsigned x, unsigned y) const {
  auto it = coeff.find({x, y});
  return it == coeff.end() ? 0 : it->second;
}

long long UFChain::max_abs() const {
  long long m = 0;
  for (const auto& [key, a] : coeff) m = std::max(m, std::abs(a));
  return m;
}

long long chain_divergence(const UFChain& c, unsigned x) {
  long long div = 0;
  for (const auto& [key, a] : c.coeff) {
    if (key.second == x) div += a;
    if (key.first == x) div -= a;
  }
  return div;
}

bool is_ponzi_scheme(const ExplicitGraph& g, const UFChain& c) {
  for (unsigned x = 0; x < g.n; ++x)
    if (chain_divergence(c, x) <= 0) return false;
  return g.n > 0;
}

long long EdgeFlow::value(unsigned a, unsigned b) const {
  const bool flip = a > b;
  auto it = half_.find(flip ? std::make_pair(b, a) : std::make_pair(a, b));
  if (it == half_.end()) return 0;
  return flip ? -it->second : it->second;
}

void EdgeFlow::add(unsigned a, unsigned b, long long v) {
  if (a == b) throw std::invalid_argument("edge flow on a self-pair");
  if (a > b) {
    std::swap(a, b);
    v = -v;
  }
  auto key = std::make_pair(a, b);
  auto it = half_.find(key);
  if (it == half_.end()) {
    if (v != 0) half_.emplace(key, v);
  } else if ((it->second += v) == 0) {
    half_.erase(it);
  }
}

void EdgeFlow::set(unsigned a, unsigned b, long long v) {
  add(a, b, v - value(a, b));
}

long long EdgeFlow::max_abs() const {
  long long m = 0;
  for (const auto& [key, v] : half_) m = std::max(m, std::abs(v));
  return m;
}

std::vector<long long> EdgeFlow::divergences(std::size_t n) const {
  std::vector<long long> div(n, 0);
  for (const auto& [key, v] : half_) {
    if (key.first >= n || key.second >= n)
      throw std::out_of_range("edge flow vertex out of range");
    div[key.second] += v;  // inward at the head
    div[key.first] -= v;
  }
  return div;
}

namespace {

constexpr unsigned kUnreached = std::numeric_limits<unsigned>::max();

std::vector<unsigned> bfs_distances(const ExplicitGraph& g, unsigned from) {
  std::vector<unsigned> dist(g.n, kUnreached);
  std::deque<unsigned> queue{from};
  dist[from] = 0;
  while (!queue.empty()) {
    const unsigned cur = queue.front();
    queue.pop_front();
    for (unsigned next : g.adj[cur])
      if (dist[next] == kUnreached) {
        dist[next] = dist[cur] + 1;
        queue.push_back(next);
      }
  }
  return dist;
}

// Lexicographically least shortest path x .. y: greedily take the smallest
// neighbor that still lies on some shortest path.
std::vector<unsigned> lex_shortest_path(const ExplicitGraph& g, unsigned x,
                                        unsigned y) {
  const std::vector<unsigned> from_x = bfs_distances(g, x);
  if (from_x[y] == kUnreached)
    throw std::domain_error("chain coefficient joins disconnected vertices " +
                            std::to_string(x) + " and " + std::to_string(y));
  const std::vector<unsigned> from_y = bfs_distances(g, y);
  const unsigned d = from_x[y];
  std::vector<unsigned> path{x};
  unsigned cur = x;
  for (unsigned step = 1; step <= d; ++step) {
    for (unsigned next : g.adj[cur]) {  // adjacency lists are sorted
      if (from_x[next] == step && from_y[next] == d - step) {
        path.push_back(next);
        cur = next;
        break;
      }
    }
    if (path.size() != step + 1)
      throw std::logic_error("shortest path reconstruction lost the geodesic");
  }
  return path;
}

}  // namespace

EdgeFlow chain_to_flow(const ExplicitGraph& g, const UFChain& c) {
  UFChain local;
  for (const auto& [key, a] : c.coeff) {
    const auto [x, y] = key;
    if (x >= g.n || y >= g.n)
      throw std::invalid_argument("chain vertex out of range");
    if (x == y) continue;  // contributes equally to both divergence sums
    if (g.has_edge(x, y)) {
      local.add(x, y, a);
      continue;
    }
    const std::vector<unsigned> path = lex_shortest_path(g, x, y);
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      local.add(path[i], path[i + 1], a);
  }
  EdgeFlow flow;
  for (const auto& [key, a] : local.coeff) flow.add(key.first, key.second, a);
  return flow;
}

LabeledDigraph::LabeledDigraph(std::size_t vertex_count,
                               std::size_t label_count)
    : labels(label_count),
      out_edges(vertex_count, std::vector<std::size_t>(label_count, npos)),
      in_edges(vertex_count, std::vector<std::size_t>(label_count, npos)),
      complete(vertex_count, 1),
      names() {}

void LabeledDigraph::add_edge(std::size_t u, unsigned label, std::size_t v) {
  if (label < 1 || label > labels)
    throw std::invalid_argument("digraph: label out of range");
  if (u >= size() || v >= size())
    throw std::invalid_argument("digraph: vertex out of range");
  if (out_edges[u][label - 1] != npos || in_edges[v][label - 1] != npos)
    throw std::invalid_argument(
        "digraph: duplicate label " + std::to_string(label) + " at vertex " +
        std::to_string(out_edges[u][label - 1] != npos ? u : v));
  out_edges[u][label - 1] = v;
  in_edges[v][label - 1] = u;
}

std::string to_string(const FlowList& list) {
  std::string out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (i) out += ' ';
    if (list[i] == 0)
      out += 'h';
    else if (list[i] > 0)
      out += 'g' + std::to_string(list[i]);
    else
      out += 'g' + std::to_string(-list[i]) + "^-1";
  }
  return out;
}

std::size_t h_count(const FlowList& list) {
  return static_cast<std::size_t>(std::count(list.begin(), list.end(), 0));
}

FlowLists build_flow_lists(const LabeledDigraph& d, const EdgeFlow& flow,
                           long long bound, std::size_t v) {
  if (v >= d.size())
    throw std::invalid_argument("build_flow_lists: vertex out of range");
  if (!d.complete[v])
    throw std::invalid_argument(
        "build_flow_lists: neighborhood of vertex " + std::to_string(v) +
        " is incomplete (ball boundary)");
  if (bound <= 0) throw std::invalid_argument("build_flow_lists: bound <= 0");

  const std::size_t n = d.labels;
  const std::size_t base_len = 2 * n * static_cast<std::size_t>(bound);
  const unsigned vu = static_cast<unsigned>(v);

  auto append = [&](FlowList& list, int symbol, long long copies) {
    if (copies > bound)
      throw std::invalid_argument("build_flow_lists: |flow| exceeds bound");
    for (long long i = 0; i < copies; ++i) list.push_back(symbol);
  };

  FlowLists lists;
  // L_v: positive outgoing flow, g_1..g_n then g_1^{-1}..g_n^{-1}.
  for (unsigned i = 1; i <= n; ++i)
    if (const std::size_t w = d.out_edges[v][i - 1]; w != LabeledDigraph::npos)
      append(lists.outgoing, static_cast<int>(i),
             std::max(flow.value(vu, static_cast<unsigned>(w)), 0ll));
  for (unsigned i = 1; i <= n; ++i)
    if (const std::size_t u = d.in_edges[v][i - 1]; u != LabeledDigraph::npos)
      append(lists.outgoing, -static_cast<int>(i),
             std::max(flow.value(vu, static_cast<unsigned>(u)), 0ll));
  if (lists.outgoing.size() > base_len)
    throw std::logic_error("build_flow_lists: outgoing list overflow");
  lists.outgoing.resize(base_len, 0);

  // L_v': positive incoming flow, padded one longer.
  for (unsigned i = 1; i <= n; ++i)
    if (const std::size_t u = d.in_edges[v][i - 1]; u != LabeledDigraph::npos)
      append(lists.incoming, static_cast<int>(i),
             std::max(flow.value(static_cast<unsigned>(u), vu), 0ll));
  for (unsigned i = 1; i <= n; ++i)
    if (const std::size_t w = d.out_edges[v][i - 1]; w != LabeledDigraph::npos)
      append(lists.incoming, -static_cast<int>(i),
             std::max(flow.value(static_cast<unsigned>(w), vu), 0ll));
  if (lists.incoming.size() > base_len + 1)
    throw std::logic_error("build_flow_lists: incoming list overflow");
  lists.incoming.resize(base_len + 1, 0);
  return lists;
}

LabeledDigraph cayley_ball_to_labeled_digraph(const Ball& b) {
  LabeledDigraph d(b.vertices.size(), 2);  // g_1 = x_0, g_2 = x_1
  d.names.reserve(b.vertices.size());
  for (std::size_t i = 0; i < b.vertices.size(); ++i) {
    d.names.push_back(b.vertices[i].key);
    d.complete[i] = b.vertices[i].depth < b.radius ? 1 : 0;
  }
  for (const BallEdge& e : b.edges()) d.add_edge(e.from, e.label + 1, e.to);
  return d;
}

EdgeFlow flow_on_ball(const Ball& b, const GammaParams& params) {
  EdgeFlow flow;
  for (const BallEdge& e : b.edges()) {
    const long long value = flow_value(b.vertices[e.from].element,
                                       b.vertices[e.to].element, params);
    if (value != 0)
      flow.set(static_cast<unsigned>(e.from), static_cast<unsigned>(e.to),
               value);
  }
  return flow;
}

namespace {

[[noreturn]] void bad_file(const char* what) {
  throw std::invalid_argument(std::string("malformed input: ") + what);
}

}  // namespace

ExplicitGraph load_graph(std::istream& in) {
  std::size_t n = 0, m = 0;
  if (!(in >> n >> m)) bad_file("graph header must be \"n m\"");
  std::vector<std::pair<unsigned, unsigned>> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    unsigned u = 0, v = 0;
    if (!(in >> u >> v)) bad_file("graph edge line must be \"u v\"");
    edges.emplace_back(u, v);
  }
  return ExplicitGraph::make(n, std::move(edges));
}

UFChain load_chain(std::istream& in) {
  UFChain c;
  unsigned u = 0, v = 0;
  long long a = 0;
  while (in >> u >> v >> a) c.add(u, v, a);
  if (!in.eof() && in.fail()) bad_file("chain line must be \"u v coeff\"");
  return c;
}

LabeledDigraph load_labeled_digraph(std::istream& in) {
  // plain "u label v" lines; vertex and label counts are inferred
  std::vector<std::tuple<std::size_t, unsigned, std::size_t>> triples;
  std::size_t u = 0, v = 0;
  unsigned label = 0;
  std::size_t n = 0, labels = 0;
  while (in >> u >> label >> v) {
    triples.emplace_back(u, label, v);
    n = std::max({n, u + 1, v + 1});
    labels = std::max<std::size_t>(labels, label);
  }
  if (!in.eof() && in.fail()) bad_file("digraph line must be \"u label v\"");
  LabeledDigraph d(n, labels);
  for (const auto& [from, lab, to] : triples) d.add_edge(from, lab, to);
  return d;
}

}  // namespace tgf

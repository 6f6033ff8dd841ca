// Uniformly finite 1-chains and Ponzi flows on explicit finite graphs: the
// scheme-to-flow rerouting, labeled directed graphs, and the per-vertex
// flow lists L_v / L_v' used by the no-right-invariant-measure argument.

#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tgf/cayley.hpp"
#include "tgf/complexity.hpp"

namespace tgf {

// Undirected graph of bounded degree over vertex indices 0..n-1, no
// self-loops.
struct ExplicitGraph {
  std::size_t n = 0;
  std::vector<std::pair<unsigned, unsigned>> edges;  // u < v, sorted, unique
  std::vector<std::vector<unsigned>> adj;            // sorted neighbor lists

  static ExplicitGraph make(std::size_t n,
                            std::vector<std::pair<unsigned, unsigned>> edges);
  bool has_edge(unsigned u, unsigned v) const;
  std::size_t degree_bound() const;
};

// Sparse integer coefficients a_{x,y} on ordered vertex pairs. The
// uniform bound K is any integer exceeding max_abs(); the propagation
// radius R relative to a graph is the largest distance of a carried pair.
struct UFChain {
  std::map<std::pair<unsigned, unsigned>, long long> coeff;

  void add(unsigned x, unsigned y, long long a);
  long long at(unsigned x, unsigned y) const;
  long long max_abs() const;
};

// Net inward coefficient sum at x: sum_v a_{v,x} - sum_v a_{x,v}.
long long chain_divergence(const UFChain& c, unsigned x);

// Divergence positive at every vertex. On a nonempty finite graph the
// divergences telescope to zero, so this is always false there; it is the
// executable form of the definition.
bool is_ponzi_scheme(const ExplicitGraph& g, const UFChain& c);

// Antisymmetric integer edge weights, stored once per unordered pair.
class EdgeFlow {
 public:
  long long value(unsigned a, unsigned b) const;  // 0 off support
  void add(unsigned a, unsigned b, long long v);
  void set(unsigned a, unsigned b, long long v);
  // Entries keyed u < v with nonzero weight, in key order.
  const std::map<std::pair<unsigned, unsigned>, long long>& entries() const {
    return half_;
  }
  long long max_abs() const;
  // Net inward flow per vertex.
  std::vector<long long> divergences(std::size_t n) const;

 private:
  std::map<std::pair<unsigned, unsigned>, long long> half_;
};

// Reroutes every coefficient on a non-adjacent pair along a deterministic
// shortest path (lexicographically least vertex sequence); each interior
// path vertex gains one canceling +a/-a pair, so per-vertex divergence is
// preserved exactly. The result G(x,y) = a'_{x,y} - a'_{y,x} is
// antisymmetric and supported on edges. Throws std::domain_error when a
// nonzero coefficient joins disconnected vertices.
EdgeFlow chain_to_flow(const ExplicitGraph& g, const UFChain& c);

// Directed graph with edges labeled g_1..g_n, at most one incoming and one
// outgoing edge per label per vertex. `complete[v]` records whether v's
// whole neighborhood is present (ball boundaries are not).
struct LabeledDigraph {
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t labels = 0;
  std::vector<std::vector<std::size_t>> out_edges;  // [v][label-1] or npos
  std::vector<std::vector<std::size_t>> in_edges;
  std::vector<char> complete;
  std::vector<std::string> names;  // optional, for reporting

  LabeledDigraph() = default;
  LabeledDigraph(std::size_t vertex_count, std::size_t label_count);
  std::size_t size() const { return out_edges.size(); }
  // Throws std::invalid_argument on a duplicate label slot.
  void add_edge(std::size_t u, unsigned label, std::size_t v);
};

// Flow-list symbols: +i is g_i, -i is g_i^{-1}, 0 is the padding symbol h.
using FlowList = std::vector<int>;
std::string to_string(const FlowList& list);
std::size_t h_count(const FlowList& list);

struct FlowLists {
  FlowList outgoing;  // L_v, length 2nK
  FlowList incoming;  // L_v', length 2nK + 1
};

// L_v lists, per label in order, the positive outgoing flow values as
// repeated symbols, then the inverse labels, padded with h to length 2nK;
// L_v' does the same with incoming values and is padded to 2nK + 1.
// Throws when v's neighborhood is incomplete or some incident |flow|
// exceeds the bound.
FlowLists build_flow_lists(const LabeledDigraph& d, const EdgeFlow& flow,
                           long long bound, std::size_t v);

// Ball vertices become indexed digraph vertices; generator edges keep
// their direction, labeled g_1 = x_0, g_2 = x_1. Vertices on the ball
// boundary are marked incomplete. The per-label uniqueness invariant is
// checked on every inserted edge.
LabeledDigraph cayley_ball_to_labeled_digraph(const Ball& b);

// The Gamma_k^l flow restricted to a ball's internal edges, indexed like
// cayley_ball_to_labeled_digraph.
EdgeFlow flow_on_ball(const Ball& b, const GammaParams& params);

// File formats, whitespace-separated ASCII with 0-based vertex indices:
//   graph:   first line "n m", then m lines "u v"
//   chain:   lines "u v coeff"
//   digraph: lines "u label v" (labels 1-based; sizes inferred)
ExplicitGraph load_graph(std::istream& in);
UFChain load_chain(std::istream& in);
LabeledDigraph load_labeled_digraph(std::istream& in);

}  // namespace tgf

// Right Cayley graph of the positive monoid on {x_0, x_1}, the induced
// subgraphs Gamma_k^l, BFS ball enumeration, Folner boundary ratios and
// DOT export.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tgf/complexity.hpp"
#include "tgf/forest.hpp"

namespace tgf {

// Which induced subgraph the vertices live in.
struct GraphSpec {
  std::optional<GammaParams> gamma;  // nullopt = full positive monoid

  static GraphSpec full() { return GraphSpec{}; }
  static GraphSpec gamma_of(GammaParams params) { return GraphSpec{params}; }

  bool member(const PointedForest& p) const {
    return !gamma || in_gamma(p, *gamma);
  }
  std::string label() const;
};

enum class EdgeDir { outgoing, incoming };

struct Neighbor {
  unsigned label;  // generator index, 0 or 1
  EdgeDir direction;
  PointedForest vertex;
};

// Incident edges of p in the induced graph: p x_i going out, p x_i^{-1}
// coming in (when positive), both filtered by membership. At most four.
std::vector<Neighbor> neighbors(const PointedForest& p, const GraphSpec& spec);

struct BallVertex {
  PointedForest element;
  std::string key;  // canonical text, the dedup key
  unsigned depth;
};

struct BallEdge {
  std::size_t from;
  std::size_t to;
  unsigned label;
};

// BFS ball around the identity, distances taken inside the induced
// subgraph. Vertices are sorted by (depth, key), so the prefix of any
// depth is contiguous and the layout is identical for any worker count.
struct Ball {
  GraphSpec spec;
  unsigned radius = 0;
  std::vector<BallVertex> vertices;
  std::vector<std::size_t> growth;  // vertex count per depth
  std::unordered_map<std::string, std::size_t> index;

  bool contains(const std::string& key) const { return index.count(key) != 0; }

  // Generator edges with both endpoints inside the ball, enumerated from
  // each source vertex in order; materialized on demand.
  std::vector<BallEdge> edges() const;
};

Ball ball(const GraphSpec& spec, unsigned radius, unsigned jobs = 1);

// Exact nonnegative ratio, reduced.
struct Rational {
  long long num = 0;
  long long den = 1;
};
Rational make_rational(long long num, long long den);
std::string to_string(const Rational& r);
inline bool operator==(const Rational& a, const Rational& b) {
  return a.num == b.num && a.den == b.den;
}

// Folner quotient: edges of the induced graph with exactly one endpoint in
// s, divided by |s|. Throws on an empty set or a non-member element.
Rational folner_ratio(const std::vector<PointedForest>& s,
                      const GraphSpec& spec);

// Deterministic DOT digraph: vertices labeled by canonical pforest text,
// edges labeled x0/x1. Byte-identical across runs for the same ball.
std::string export_dot(const Ball& b);

}  // namespace tgf

#include "tgf/cayley.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_set>
#include <utility>

namespace tgf {

std::string GraphSpec::label() const {
  if (!gamma) return "full positive monoid";
  return "gamma(k=" + std::to_string(gamma->k) +
         ", l=" + std::to_string(gamma->l) + ")";
}

std::vector<Neighbor> neighbors(const PointedForest& p, const GraphSpec& spec) {
  std::vector<Neighbor> out;
  out.reserve(4);
  for (unsigned gen : {0u, 1u}) {
    PointedForest q = apply_generator(p, gen);
    if (spec.member(q)) out.push_back({gen, EdgeDir::outgoing, std::move(q)});
  }
  for (unsigned gen : {0u, 1u}) {
    std::optional<PointedForest> q = apply_generator_inverse(p, gen);
    if (q && spec.member(*q))
      out.push_back({gen, EdgeDir::incoming, std::move(*q)});
  }
  return out;
}

namespace {

std::vector<std::pair<std::size_t, std::size_t>> split_ranges(std::size_t n,
                                                              unsigned jobs) {
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(jobs, n));
  std::vector<std::pair<std::size_t, std::size_t>> ranges;
  std::size_t begin = 0;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t len = n / workers + (w < n % workers ? 1 : 0);
    ranges.emplace_back(begin, begin + len);
    begin += len;
  }
  return ranges;
}

}  // namespace

Ball ball(const GraphSpec& spec, unsigned radius, unsigned jobs) {
  Ball b;
  b.spec = spec;
  b.radius = radius;

  const PointedForest id = identity();
  std::vector<std::pair<std::string, PointedForest>> layer{
      {to_string(id), id}};
  b.index.emplace(layer[0].first, 0);
  b.vertices.push_back({id, layer[0].first, 0});
  b.growth.push_back(1);

  for (unsigned depth = 1; depth <= radius && !layer.empty(); ++depth) {
    // Expand the frontier in deterministic chunks; the vertex set and the
    // per-layer sort make the result independent of the worker count.
    const auto ranges = split_ranges(layer.size(), jobs);
    std::vector<std::vector<std::pair<std::string, PointedForest>>> found(
        ranges.size());
    auto expand = [&](std::size_t w) {
      for (std::size_t i = ranges[w].first; i < ranges[w].second; ++i)
        for (Neighbor& n : neighbors(layer[i].second, spec))
          found[w].emplace_back(to_string(n.vertex), std::move(n.vertex));
    };
    if (ranges.size() == 1) {
      expand(0);
    } else {
      std::vector<std::thread> threads;
      for (std::size_t w = 0; w < ranges.size(); ++w)
        threads.emplace_back(expand, w);
      for (std::thread& t : threads) t.join();
    }

    std::vector<std::pair<std::string, PointedForest>> next;
    for (auto& chunk : found)
      for (auto& cand : chunk)
        if (b.index.emplace(cand.first, 0).second) next.push_back(std::move(cand));
    std::sort(next.begin(), next.end(),
              [](const auto& a, const auto& c) { return a.first < c.first; });
    for (const auto& v : next) {  // copy: next stays intact as the frontier
      b.index[v.first] = b.vertices.size();
      b.vertices.push_back({v.second, v.first, depth});
    }
    if (!next.empty()) b.growth.push_back(next.size());
    layer = std::move(next);
  }
  return b;
}

std::vector<BallEdge> Ball::edges() const {
  std::vector<BallEdge> out;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (unsigned gen : {0u, 1u}) {
      const PointedForest q = apply_generator(vertices[i].element, gen);
      auto it = index.find(to_string(q));
      if (it != index.end()) out.push_back({i, it->second, gen});
    }
  }
  return out;
}

Rational make_rational(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  const long long g = std::gcd(num, den);
  return Rational{num / g, den / g};
}

std::string to_string(const Rational& r) {
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

Rational folner_ratio(const std::vector<PointedForest>& s,
                      const GraphSpec& spec) {
  if (s.empty()) throw std::invalid_argument("folner_ratio: empty vertex set");
  std::unordered_set<std::string> members;
  for (const PointedForest& p : s) {
    if (!spec.member(p))
      throw std::invalid_argument("folner_ratio: " + to_string(p) +
                                  " is not in " + spec.label());
    members.insert(to_string(p));
  }
  // Each boundary edge has exactly one endpoint inside s, so enumerating
  // incident edges from the inside counts each exactly once.
  std::size_t boundary = 0;
  for (const PointedForest& p : s)
    for (const Neighbor& n : neighbors(p, spec))
      if (!members.count(to_string(n.vertex))) ++boundary;
  return make_rational(static_cast<long long>(boundary),
                       static_cast<long long>(s.size()));
}

std::string export_dot(const Ball& b) {
  std::ostringstream os;
  os << "digraph ball {\n";
  for (const BallVertex& v : b.vertices)
    os << "  \"" << v.key << "\" [depth=" << v.depth << "];\n";
  for (const BallEdge& e : b.edges())
    os << "  \"" << b.vertices[e.from].key << "\" -> \""
       << b.vertices[e.to].key << "\" [label=\"x" << e.label << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace tgf

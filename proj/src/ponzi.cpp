#include "tgf/ponzi.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace tgf {

namespace {

void require_member(const PointedForest& p, const GammaParams& params,
                    const char* who) {
  if (!in_gamma(p, params))
    throw std::domain_error(std::string(who) + ": " + to_string(p) +
                            " is not in Gamma(k=" + std::to_string(params.k) +
                            ", l=" + std::to_string(params.l) + ")");
}

// Nontrivial trees at positions [from, to).
std::size_t nontrivial_between(const Forest& f, std::size_t from,
                               std::size_t to) {
  std::size_t count = 0;
  const std::size_t hi = std::min(to, f.size());
  for (std::size_t pos = from; pos < hi; ++pos)
    if (!f.trees()[pos].is_leaf()) ++count;
  return count;
}

}  // namespace

std::size_t c_value(const PointedForest& p, const GammaParams& params) {
  require_member(p, params, "c_value");
  const std::size_t minp = min_pointed_position(p.forest, params);
  return nontrivial_between(p.forest, minp, p.pointed_position);
}

long long flow_value(const PointedForest& a, const PointedForest& b,
                     const GammaParams& params) {
  require_member(a, params, "flow_value");
  require_member(b, params, "flow_value");
  auto outgoing = [&](const PointedForest& p,
                      const PointedForest& q) -> std::optional<long long> {
    if (auto r = apply_generator_inverse(p, 0); r && *r == q)
      return static_cast<long long>(c_value(p, params));
    if (auto r = apply_generator_inverse(p, 1); r && *r == q) return 1;
    return std::nullopt;
  };
  if (auto v = outgoing(a, b)) return *v;
  if (auto v = outgoing(b, a)) return -*v;
  return 0;
}

long long divergence(const PointedForest& p, const GammaParams& params) {
  require_member(p, params, "divergence");
  const std::size_t minp = min_pointed_position(p.forest, params);
  const std::size_t pointer = p.pointed_position;
  // inflow along (P x_0, P): always present, Gamma is closed under x_0
  long long div =
      static_cast<long long>(nontrivial_between(p.forest, minp, pointer + 1));
  if (pointer >= 1 && pointer - 1 >= minp)  // P x_0^{-1} member
    div -= static_cast<long long>(nontrivial_between(p.forest, minp, pointer));
  div += 1;  // inflow along (P x_1, P): always present
  if (auto q = apply_generator_inverse(p, 1); q && in_gamma(*q, params))
    div -= 1;
  return div;
}

namespace {

struct LocalReport {
  long long min_divergence = std::numeric_limits<long long>::max();
  long long max_abs_flow = 0;
  long long max_c = 0;
  long long max_right_nontrivial = 0;
  std::vector<Violation> violations;
};

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

void check_vertex(const BallVertex& vertex, const GammaParams& params,
                  std::unordered_map<std::string, std::size_t>& minp_cache,
                  LocalReport& local) {
  const long long bound = static_cast<long long>(params.k) + params.l;
  const Forest& f = vertex.element.forest;
  const std::size_t pointer = vertex.element.pointed_position;

  std::size_t minp;
  const std::string forest_key = to_string(f);
  if (auto it = minp_cache.find(forest_key); it != minp_cache.end()) {
    minp = it->second;
  } else {
    minp = min_pointed_position(f, params);
    minp_cache.emplace(forest_key, minp);
  }

  const long long c_here =
      static_cast<long long>(nontrivial_between(f, minp, pointer));
  const long long c_after_x0 =
      static_cast<long long>(nontrivial_between(f, minp, pointer + 1));

  // Monotonicity guard: a positive c_P must come with P x_0^{-1} in Gamma,
  // re-checked by a direct membership test rather than via minp.
  if (c_here > 0 &&
      !(pointer >= 1 && in_gamma(PointedForest{f, pointer - 1}, params)))
    local.violations.push_back(
        {vertex.key, "c_P > 0 but P x_0^{-1} is not a member"});

  const bool x0_inverse_member = pointer >= 1 && pointer - 1 >= minp;
  const auto x1_inverse = apply_generator_inverse(vertex.element, 1);
  const bool x1_inverse_member = x1_inverse && in_gamma(*x1_inverse, params);

  const long long div = c_after_x0 - (x0_inverse_member ? c_here : 0) + 1 -
                        (x1_inverse_member ? 1 : 0);

  // |flow| over the incident edges: (P x_0, P) carries c_{P x_0}, a present
  // (P, P x_0^{-1}) carries c_P, both x_1-type edges carry 1.
  long long max_flow = std::max(c_after_x0, 1ll);
  if (x0_inverse_member) max_flow = std::max(max_flow, c_here);

  const long long right_nontrivial = static_cast<long long>(
      nontrivial_between(f, minp + 1, f.size()));

  local.min_divergence = std::min(local.min_divergence, div);
  local.max_abs_flow = std::max(local.max_abs_flow, max_flow);
  local.max_c = std::max(local.max_c, c_here);
  local.max_right_nontrivial =
      std::max(local.max_right_nontrivial, right_nontrivial);

  if (div < 1)
    local.violations.push_back(
        {vertex.key, "divergence = " + std::to_string(div) + " < 1"});
  if (max_flow > bound)
    local.violations.push_back(
        {vertex.key, "incident |flow| = " + std::to_string(max_flow) +
                         " exceeds k+l = " + std::to_string(bound)});
  if (c_here > bound)
    local.violations.push_back(
        {vertex.key, "c_P = " + std::to_string(c_here) +
                         " exceeds k+l = " + std::to_string(bound)});
  if (right_nontrivial > bound)
    local.violations.push_back(
        {vertex.key,
         "nontrivial trees right of the minimal pointer = " +
             std::to_string(right_nontrivial) +
             " exceeds k+l = " + std::to_string(bound)});
}

}  // namespace

VerificationReport verify_ball(const GammaParams& params, unsigned radius,
                               unsigned jobs) {
  const Ball b = ball(GraphSpec::gamma_of(params), radius, jobs);

  const auto ranges = split_ranges(b.vertices.size(), jobs);
  std::vector<LocalReport> locals(ranges.size());
  auto work = [&](std::size_t w) {
    std::unordered_map<std::string, std::size_t> minp_cache;
    for (std::size_t i = ranges[w].first; i < ranges[w].second; ++i)
      check_vertex(b.vertices[i], params, minp_cache, locals[w]);
  };
  if (ranges.size() == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < ranges.size(); ++w)
      threads.emplace_back(work, w);
    for (std::thread& t : threads) t.join();
  }

  VerificationReport report;
  report.params = params;
  report.radius = radius;
  report.vertex_count = b.vertices.size();
  report.min_divergence = std::numeric_limits<long long>::max();
  for (LocalReport& local : locals) {
    report.min_divergence = std::min(report.min_divergence, local.min_divergence);
    report.max_abs_flow = std::max(report.max_abs_flow, local.max_abs_flow);
    report.max_c = std::max(report.max_c, local.max_c);
    report.max_right_nontrivial =
        std::max(report.max_right_nontrivial, local.max_right_nontrivial);
    report.violations.insert(report.violations.end(),
                             std::make_move_iterator(local.violations.begin()),
                             std::make_move_iterator(local.violations.end()));
  }
  return report;
}

}  // namespace tgf

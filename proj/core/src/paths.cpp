#include "lpp/paths.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "lpp/dfs.hpp"
#include "lpp/error.hpp"

namespace lpp {

double passage_time(const Path& path, const EdgeWeights& weights) {
  const auto& vs = path.vertices();
  for (Vertex v : vs) {
    if (v > weights.n()) {
      throw PreconditionError("vertex " + std::to_string(v) +
                              " outside [1, " + std::to_string(weights.n()) +
                              "]");
    }
  }
  double total = 0.0;
  for (std::size_t i = 1; i < vs.size(); ++i) total += weights(vs[i - 1], vs[i]);
  return total;
}

Path surgery(const Path& path, int n) {
  if (n < 2) throw PreconditionError("surgery needs n >= 2");
  std::vector<Vertex> out;
  out.reserve(path.vertex_count() + 2);
  out.push_back(1);
  for (Vertex v : path.vertices()) {
    if (v > n) {
      throw PreconditionError("vertex " + std::to_string(v) + " outside [1, " +
                              std::to_string(n) + "]");
    }
    // Runs are separated only by the removed endpoints, so concatenating
    // the surviving vertices in order is exactly 1, pi_1, ..., pi_k, n.
    if (v != 1 && v != n) out.push_back(v);
  }
  out.push_back(n);
  return Path(std::move(out));
}

Path surgery(const Path& path, const EdgeWeights& weights) {
  return surgery(path, weights.n());
}

std::size_t shared_edge_count(const Path& a, const Path& b) {
  const auto ea = a.edges();
  const auto eb = b.edges();
  const std::set<Edge> eb_set(eb.begin(), eb.end());
  return static_cast<std::size_t>(std::count_if(
      ea.begin(), ea.end(), [&](const Edge& e) { return eb_set.count(e) > 0; }));
}

LowerBound threshold_lower_bound(const EdgeWeights& weights, double tau) {
  const SimpleGraph graph = threshold_subgraph(weights, tau);
  Path excursion = longest_dfs_excursion(graph);
  Path path = surgery(excursion, weights.n());
  const double value = passage_time(path, weights);
  return LowerBound{std::move(path), value, std::move(excursion), tau};
}

LowerBound best_threshold_lower_bound(const EdgeWeights& weights,
                                      std::span<const double> taus) {
  if (taus.empty()) throw PreconditionError("empty threshold grid");
  LowerBound best = threshold_lower_bound(weights, taus.front());
  for (std::size_t i = 1; i < taus.size(); ++i) {
    LowerBound candidate = threshold_lower_bound(weights, taus[i]);
    if (candidate.value > best.value) best = std::move(candidate);
  }
  return best;
}

std::vector<double> default_tau_grid(const EdgeWeights& weights) {
  std::vector<double> sorted(weights.values().begin(), weights.values().end());
  std::sort(sorted.begin(), sorted.end());
  const double last = static_cast<double>(sorted.size() - 1);
  std::vector<double> grid;
  for (int step = 1; step <= 19; ++step) {
    const double pos = 0.05 * step * last;
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    grid.push_back(sorted[lo] + frac * (sorted[hi] - sorted[lo]));
  }
  return grid;
}

}  // namespace lpp

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lpp/graph.hpp"
#include "lpp/path.hpp"

namespace lpp {

// Sum of edge weights along the path, accumulated front to back. Throws
// PreconditionError if a vertex id exceeds w.n().
double passage_time(const Path& path, const EdgeWeights& weights);

// Turns any path on [n] into a self-avoiding 1 -> n path: drop 1 and n, keep
// the remaining runs in their original order and orientation, and join
// 1, run_1, ..., run_k, n with connector edges. Every edge of `path` not
// incident to 1 or n survives, so at least length - 4 edges are shared.
Path surgery(const Path& path, int n);
Path surgery(const Path& path, const EdgeWeights& weights);

// |edges(a) ∩ edges(b)| as unordered pairs.
std::size_t shared_edge_count(const Path& a, const Path& b);

struct LowerBound {
  Path path;          // 1 -> n, self-avoiding
  double value;       // passage_time(path)
  Path excursion;     // longest DFS stack in the threshold graph
  double threshold;   // tau that produced this bound
};

// threshold_subgraph -> DFS -> longest stack -> surgery. The value is the
// passage time of an actual 1 -> n path, hence a lower bound on W_n.
LowerBound threshold_lower_bound(const EdgeWeights& weights, double tau);

// Best threshold_lower_bound over the grid (first maximizer on ties).
// Throws PreconditionError on an empty grid.
LowerBound best_threshold_lower_bound(const EdgeWeights& weights,
                                      std::span<const double> taus);

// Empirical quantiles 0.05, 0.10, ..., 0.95 of the weights (linear
// interpolation between order statistics).
std::vector<double> default_tau_grid(const EdgeWeights& weights);

}  // namespace lpp

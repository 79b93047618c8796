#pragma once

#include <vector>

#include "lpp/graph.hpp"
#include "lpp/path.hpp"

namespace lpp {

inline constexpr int kBruteForceMaxN = 10;
inline constexpr int kExactMaxN = 22;

// W_n together with a 1 -> n path attaining it.
struct ExactResult {
  double value;
  Path witness;
};

// Enumerates every self-avoiding 1 -> n path in lexicographic order and keeps
// the first maximizer. n <= 10, otherwise PreconditionError.
ExactResult brute_force_wn(const EdgeWeights& weights);

// Subset dynamic program over the interior vertices {2, ..., n-1}:
// best[A][v] is the heaviest path from 1 through exactly A ending at v.
// n <= 22, otherwise PreconditionError.
ExactResult exact_wn(const EdgeWeights& weights);

// W over the complete graph on the window {m+1, ..., k}, from m+1 to k.
// Requires 0 <= m < k <= n and k - m <= 22. A one-vertex window gives 0.
double exact_wmn(const EdgeWeights& weights, int m, int k);

// Reusable workspace for the subset DP; avoids reallocating the
// 2^(n-2) (n-2) table on every call inside Monte Carlo loops. Not
// thread-safe: use one solver per thread.
class SubsetDpSolver {
 public:
  ExactResult solve(const EdgeWeights& weights, int m, int k);
  double solve_value(const EdgeWeights& weights, int m, int k);

 private:
  // Returns the optimum; leaves the filled table in best_ for backtracking.
  double run(const EdgeWeights& weights, int m, int k, bool track);

  int interior_ = 0;
  std::vector<double> from_source_;
  std::vector<double> to_sink_;
  std::vector<double> inner_;
  std::vector<double> best_;
  unsigned best_mask_ = 0;
  int best_last_ = -1;
};

}  // namespace lpp

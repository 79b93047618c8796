#include "lpp/exact.hpp"

#include <bit>
#include <limits>
#include <string>

#include "lpp/error.hpp"

namespace lpp {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void check_window(const EdgeWeights& weights, int m, int k) {
  if (m < 0 || k <= m || k > weights.n()) {
    throw PreconditionError("window needs 0 <= m < k <= n");
  }
  if (k - m > kExactMaxN) {
    throw PreconditionError("exact solver limited to " +
                            std::to_string(kExactMaxN) + " vertices, got " +
                            std::to_string(k - m));
  }
}

struct BruteForce {
  const EdgeWeights& weights;
  int n;
  std::vector<Vertex> current;
  std::vector<bool> used;
  double best = kNegInf;
  std::vector<Vertex> best_path;

  void extend(double so_far) {
    const Vertex last = current.back();
    // Candidates in ascending order; n is the largest id so closing the path
    // comes after every longer continuation with the same prefix.
    for (Vertex next = 2; next <= n; ++next) {
      if (used[static_cast<std::size_t>(next)]) continue;
      const double total = so_far + weights(last, next);
      current.push_back(next);
      if (next == n) {
        if (total > best) {
          best = total;
          best_path = current;
        }
      } else {
        used[static_cast<std::size_t>(next)] = true;
        extend(total);
        used[static_cast<std::size_t>(next)] = false;
      }
      current.pop_back();
    }
  }
};

}  // namespace

ExactResult brute_force_wn(const EdgeWeights& weights) {
  const int n = weights.n();
  if (n > kBruteForceMaxN) {
    throw PreconditionError("brute force limited to n <= " +
                            std::to_string(kBruteForceMaxN));
  }
  BruteForce search{weights, n, {1}, std::vector<bool>(n + 1, false), kNegInf, {}};
  search.used[1] = true;
  search.extend(0.0);
  return ExactResult{search.best, Path(std::move(search.best_path))};
}

ExactResult exact_wn(const EdgeWeights& weights) {
  SubsetDpSolver solver;
  return solver.solve(weights, 0, weights.n());
}

double exact_wmn(const EdgeWeights& weights, int m, int k) {
  SubsetDpSolver solver;
  return solver.solve_value(weights, m, k);
}

double SubsetDpSolver::run(const EdgeWeights& weights, int m, int k,
                           bool track) {
  const Vertex source = m + 1;
  const Vertex sink = k;
  const int q = k - m - 2;
  interior_ = q;
  best_mask_ = 0;
  best_last_ = -1;
  if (q < 0) return 0.0;
  double answer = weights(source, sink);
  if (q == 0) return answer;

  const auto qz = static_cast<std::size_t>(q);
  from_source_.resize(qz);
  to_sink_.resize(qz);
  inner_.resize(qz * qz);
  for (int a = 0; a < q; ++a) {
    const Vertex va = source + 1 + a;
    from_source_[static_cast<std::size_t>(a)] = weights(source, va);
    to_sink_[static_cast<std::size_t>(a)] = weights(va, sink);
    for (int b = 0; b < q; ++b) {
      inner_[static_cast<std::size_t>(a) * qz + static_cast<std::size_t>(b)] =
          a == b ? 0.0 : weights(va, source + 1 + b);
    }
  }

  const std::size_t masks = std::size_t{1} << qz;
  const unsigned full = static_cast<unsigned>(masks - 1);
  best_.assign(masks * qz, kNegInf);
  for (int v = 0; v < q; ++v) {
    best_[(std::size_t{1} << v) * qz + static_cast<std::size_t>(v)] =
        from_source_[static_cast<std::size_t>(v)];
  }
  for (unsigned mask = 1; mask <= full; ++mask) {
    const double* row = best_.data() + std::size_t{mask} * qz;
    const unsigned outside = full & ~mask;
    for (unsigned in = mask; in != 0; in &= in - 1) {
      const int v = std::countr_zero(in);
      const double value = row[v];
      const double closed = value + to_sink_[static_cast<std::size_t>(v)];
      if (closed > answer) {
        answer = closed;
        if (track) {
          best_mask_ = mask;
          best_last_ = v;
        }
      }
      const double* edges = inner_.data() + static_cast<std::size_t>(v) * qz;
      for (unsigned out = outside; out != 0; out &= out - 1) {
        const int u = std::countr_zero(out);
        double& slot =
            best_[std::size_t{mask | (1U << u)} * qz + static_cast<std::size_t>(u)];
        const double candidate = value + edges[u];
        if (candidate > slot) slot = candidate;
      }
    }
  }
  return answer;
}

ExactResult SubsetDpSolver::solve(const EdgeWeights& weights, int m, int k) {
  check_window(weights, m, k);
  const double value = run(weights, m, k, true);
  const Vertex source = m + 1;
  if (k - m == 1) return ExactResult{value, Path({source})};
  if (best_last_ < 0) return ExactResult{value, Path({source, k})};

  const auto qz = static_cast<std::size_t>(interior_);
  std::vector<Vertex> reversed{k};
  unsigned mask = best_mask_;
  int v = best_last_;
  for (;;) {
    reversed.push_back(source + 1 + v);
    const unsigned prev = mask & ~(1U << v);
    if (prev == 0) break;
    const double target = best_[std::size_t{mask} * qz + static_cast<std::size_t>(v)];
    int pred = -1;
    for (unsigned in = prev; in != 0; in &= in - 1) {
      const int u = std::countr_zero(in);
      if (best_[std::size_t{prev} * qz + static_cast<std::size_t>(u)] +
              inner_[static_cast<std::size_t>(u) * qz + static_cast<std::size_t>(v)] ==
          target) {
        pred = u;
        break;
      }
    }
    if (pred < 0) throw std::logic_error("subset DP backtrack failed");
    mask = prev;
    v = pred;
  }
  reversed.push_back(source);
  return ExactResult{value, Path({reversed.rbegin(), reversed.rend()})};
}

double SubsetDpSolver::solve_value(const EdgeWeights& weights, int m, int k) {
  check_window(weights, m, k);
  return run(weights, m, k, false);
}

}  // namespace lpp

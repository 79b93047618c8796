#include "lpp/dfs.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <ostream>
#include <string>

#include "lpp/error.hpp"

namespace lpp {
namespace {

constexpr int kFullTraceMaxN = 64;

// Pair bookkeeping for the search: which pairs of [n] are already checked.
class PairSet {
 public:
  explicit PairSet(int n)
      : n_(static_cast<std::size_t>(n)), bits_(n_ * n_, false) {}

  bool contains(Vertex a, Vertex b) const { return bits_[slot(a, b)]; }
  void insert(Vertex a, Vertex b) {
    bits_[slot(a, b)] = true;
    bits_[slot(b, a)] = true;
  }

 private:
  std::size_t slot(Vertex a, Vertex b) const {
    return static_cast<std::size_t>(a - 1) * n_ + static_cast<std::size_t>(b - 1);
  }

  std::size_t n_;
  std::vector<bool> bits_;
};

// Incrementally applies steps and snapshots the current (S, U, T, E-hat).
class Replayer {
 public:
  explicit Replayer(int n)
      : n_(n), in_s_(static_cast<std::size_t>(n) + 1, false),
        in_t_(static_cast<std::size_t>(n) + 1, true) {}

  void apply(const DfsStep& s) {
    switch (s.action) {
      case DfsAction::kEpochStart:
        in_t_[static_cast<std::size_t>(s.x)] = false;
        stack_.push_back(s.x);
        break;
      case DfsAction::kDiscover:
        explored_.push_back(make_edge(s.x, s.y));
        in_t_[static_cast<std::size_t>(s.y)] = false;
        stack_.push_back(s.y);
        break;
      case DfsAction::kProbe:
        explored_.push_back(make_edge(s.x, s.y));
        break;
      case DfsAction::kRetire:
        stack_.pop_back();
        in_s_[static_cast<std::size_t>(s.x)] = true;
        break;
    }
    ++step_;
  }

  DfsState snapshot() const {
    DfsState state;
    state.step = step_;
    for (Vertex v = 1; v <= n_; ++v) {
      if (in_s_[static_cast<std::size_t>(v)]) state.completed.push_back(v);
      if (in_t_[static_cast<std::size_t>(v)]) state.unvisited.push_back(v);
    }
    state.stack = stack_;
    state.explored = explored_;
    return state;
  }

 private:
  int n_;
  std::size_t step_ = 0;
  std::vector<bool> in_s_;
  std::vector<bool> in_t_;
  std::vector<Vertex> stack_;
  std::vector<Edge> explored_;
};

double binomial(int n, int k) {
  return std::round(std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                             std::lgamma(n - k + 1.0)));
}

// Advances `idx` (strictly increasing indices into a pool of size m) to the
// next k-combination in lexicographic order.
bool next_combination(std::vector<int>& idx, int m) {
  const int k = static_cast<int>(idx.size());
  int i = k - 1;
  while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - k + i) --i;
  if (i < 0) return false;
  ++idx[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < k; ++j) {
    idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return true;
}

std::string join_vertices(const std::vector<Vertex>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i > 0) out += ';';
    out += std::to_string(vs[i]);
  }
  return out;
}

}  // namespace

DfsState DfsTrace::state(std::size_t t) const {
  if (t > steps_.size()) {
    throw PreconditionError("trace has no state " + std::to_string(t));
  }
  if (has_full_states()) return states_[t];
  Replayer replay(n_);
  for (std::size_t i = 0; i < t; ++i) replay.apply(steps_[i]);
  return replay.snapshot();
}

std::vector<DfsState> DfsTrace::states() const {
  if (has_full_states()) return states_;
  std::vector<DfsState> out;
  out.reserve(steps_.size() + 1);
  Replayer replay(n_);
  out.push_back(replay.snapshot());
  for (const DfsStep& s : steps_) {
    replay.apply(s);
    out.push_back(replay.snapshot());
  }
  return out;
}

DfsTrace run_dfs(const SimpleGraph& graph, TraceMode mode) {
  const int n = graph.n();
  const auto nz = static_cast<std::size_t>(n);
  DfsTrace trace;
  trace.n_ = n;
  trace.steps_.reserve(nz + nz * (nz - 1) / 2 + nz);

  PairSet explored(n);
  std::vector<bool> in_t(nz + 1, true);
  std::vector<Vertex> next_partner(nz + 1, 1);
  std::vector<Vertex> stack;
  std::vector<Vertex> component;
  Vertex smallest_unvisited = 1;
  std::size_t epoch_start = 0;

  for (;;) {
    if (!stack.empty()) {
      const Vertex x = stack.back();
      Vertex y = next_partner[static_cast<std::size_t>(x)];
      while (y <= n && (y == x || explored.contains(x, y))) ++y;
      next_partner[static_cast<std::size_t>(x)] = y;
      if (y <= n) {
        explored.insert(x, y);
        if (in_t[static_cast<std::size_t>(y)] && graph.has_edge(x, y)) {
          in_t[static_cast<std::size_t>(y)] = false;
          stack.push_back(y);
          component.push_back(y);
          trace.steps_.push_back({DfsAction::kDiscover, x, y});
        } else {
          trace.steps_.push_back({DfsAction::kProbe, x, y});
        }
      } else {
        stack.pop_back();
        trace.steps_.push_back({DfsAction::kRetire, x, 0});
        if (stack.empty()) {
          std::sort(component.begin(), component.end());
          trace.epochs_.push_back(
              {epoch_start, trace.steps_.size(), std::move(component)});
          component.clear();
        }
      }
      continue;
    }
    while (smallest_unvisited <= n &&
           !in_t[static_cast<std::size_t>(smallest_unvisited)]) {
      ++smallest_unvisited;
    }
    if (smallest_unvisited > n) break;
    const Vertex root = smallest_unvisited;
    in_t[static_cast<std::size_t>(root)] = false;
    stack.push_back(root);
    component.push_back(root);
    trace.steps_.push_back({DfsAction::kEpochStart, root, 0});
    epoch_start = trace.steps_.size();
  }

  const bool full = mode == TraceMode::kFull ||
                    (mode == TraceMode::kAuto && n <= kFullTraceMaxN);
  if (full) {
    Replayer replay(n);
    trace.states_.reserve(trace.steps_.size() + 1);
    trace.states_.push_back(replay.snapshot());
    for (const DfsStep& s : trace.steps_) {
      replay.apply(s);
      trace.states_.push_back(replay.snapshot());
    }
  }
  return trace;
}

Path longest_u_excursion(const DfsTrace& trace) {
  const auto& steps = trace.steps();
  if (steps.empty()) throw PreconditionError("empty DFS trace");
  std::size_t size = 0;
  std::size_t best_size = 0;
  std::size_t best_step = 0;
  for (std::size_t t = 0; t < steps.size(); ++t) {
    switch (steps[t].action) {
      case DfsAction::kEpochStart:
      case DfsAction::kDiscover:
        ++size;
        break;
      case DfsAction::kRetire:
        --size;
        break;
      case DfsAction::kProbe:
        break;
    }
    if (size > best_size) {
      best_size = size;
      best_step = t + 1;
    }
  }
  std::vector<Vertex> stack;
  for (std::size_t t = 0; t < best_step; ++t) {
    const DfsStep& s = steps[t];
    if (s.action == DfsAction::kEpochStart) stack.push_back(s.x);
    if (s.action == DfsAction::kDiscover) stack.push_back(s.y);
    if (s.action == DfsAction::kRetire) stack.pop_back();
  }
  return Path(std::move(stack));
}

Path longest_dfs_excursion(const SimpleGraph& graph) {
  const int n = graph.n();
  const std::size_t words = graph.words_per_row();
  std::vector<std::uint64_t> unvisited(words, 0);
  for (Vertex v = 1; v <= n; ++v) {
    const auto bit = static_cast<std::size_t>(v - 1);
    unvisited[bit / 64] |= std::uint64_t{1} << (bit % 64);
  }
  // Per-vertex scan position: candidates for v only ever disappear, so the
  // first nonzero word of row(v) & unvisited never moves backwards.
  std::vector<std::size_t> word_cursor(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Vertex> stack;
  std::vector<Vertex> best;
  std::size_t root_word = 0;

  auto take = [&](Vertex v) {
    const auto bit = static_cast<std::size_t>(v - 1);
    unvisited[bit / 64] &= ~(std::uint64_t{1} << (bit % 64));
    stack.push_back(v);
    if (stack.size() > best.size()) best = stack;
  };

  for (;;) {
    while (root_word < words && unvisited[root_word] == 0) ++root_word;
    if (root_word == words) break;
    take(static_cast<Vertex>(root_word * 64 +
                             static_cast<std::size_t>(
                                 std::countr_zero(unvisited[root_word])) +
                             1));
    while (!stack.empty()) {
      const Vertex x = stack.back();
      const auto row = graph.row(x);
      std::size_t& w = word_cursor[static_cast<std::size_t>(x)];
      while (w < words && (row[w] & unvisited[w]) == 0) ++w;
      if (w < words) {
        const auto bit = static_cast<std::size_t>(
            std::countr_zero(row[w] & unvisited[w]));
        take(static_cast<Vertex>(w * 64 + bit + 1));
      } else {
        stack.pop_back();
      }
    }
  }
  return Path(std::move(best));
}

bool check_st_edge_property(const SimpleGraph& graph, int k) {
  const int n = graph.n();
  if (k < 1 || 2 * k > n) {
    throw PreconditionError("check_st_edge_property needs 1 <= k <= n/2");
  }
  if (binomial(n, k) * binomial(n - k, k) > 1e8) {
    throw PreconditionError("check_st_edge_property: enumeration of " +
                            std::to_string(n) + " choose " +
                            std::to_string(k) + " pairs exceeds 1e8");
  }
  const std::size_t words = graph.words_per_row();
  std::vector<int> s_idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) s_idx[static_cast<std::size_t>(i)] = i;
  std::vector<std::uint64_t> reach(words);
  std::vector<Vertex> rest;
  std::vector<int> t_idx(static_cast<std::size_t>(k));
  do {
    std::fill(reach.begin(), reach.end(), 0);
    std::vector<bool> in_s(static_cast<std::size_t>(n) + 1, false);
    for (int i : s_idx) {
      const Vertex v = i + 1;
      in_s[static_cast<std::size_t>(v)] = true;
      const auto row = graph.row(v);
      for (std::size_t w = 0; w < words; ++w) reach[w] |= row[w];
    }
    rest.clear();
    for (Vertex v = 1; v <= n; ++v) {
      if (!in_s[static_cast<std::size_t>(v)]) rest.push_back(v);
    }
    const int m = static_cast<int>(rest.size());
    for (int i = 0; i < k; ++i) t_idx[static_cast<std::size_t>(i)] = i;
    do {
      bool crossing = false;
      for (int i : t_idx) {
        const auto bit =
            static_cast<std::size_t>(rest[static_cast<std::size_t>(i)] - 1);
        if ((reach[bit / 64] >> (bit % 64)) & 1U) {
          crossing = true;
          break;
        }
      }
      if (!crossing) return false;
    } while (next_combination(t_idx, m));
  } while (next_combination(s_idx, n));
  return true;
}

int excursion_guarantee(int n, int k) {
  if (k < 1 || k >= n) throw PreconditionError("excursion_guarantee needs 1 <= k < n");
  return n - 2 * k + 1;
}

void write_trace_csv(std::ostream& out, const DfsTrace& trace) {
  out << "step,S,U,T,Ehat\n";
  for (const DfsState& s : trace.states()) {
    if (s.step == 0) continue;
    std::string explored;
    for (std::size_t i = 0; i < s.explored.size(); ++i) {
      if (i > 0) explored += ';';
      explored += std::to_string(s.explored[i].lo) + "-" +
                  std::to_string(s.explored[i].hi);
    }
    out << s.step << ',' << join_vertices(s.completed) << ','
        << join_vertices(s.stack) << ',' << join_vertices(s.unvisited) << ','
        << explored << '\n';
  }
}

}  // namespace lpp

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "lpp/graph.hpp"
#include "lpp/path.hpp"

namespace lpp {

// Snapshot of the search after `step` transitions.
//   completed  S, ascending
//   stack      U, in insertion order (bottom first)
//   unvisited  T, ascending
//   explored   E-hat, in the order the pairs were checked
struct DfsState {
  std::size_t step = 0;
  std::vector<Vertex> completed;
  std::vector<Vertex> stack;
  std::vector<Vertex> unvisited;
  std::vector<Edge> explored;

  friend bool operator==(const DfsState&, const DfsState&) = default;
};

enum class DfsAction : std::uint8_t {
  kEpochStart,  // smallest unvisited vertex x pushed onto an empty stack
  kDiscover,    // pair <x,y> checked, is an edge, y was unvisited: y pushed
  kProbe,       // pair <x,y> checked, no vertex moves
  kRetire,      // x has no unchecked pair left: popped into S
};

// One transition. `x` is the stack top (or the epoch root); `y` is the other
// endpoint of the checked pair, 0 when no pair is checked.
struct DfsStep {
  DfsAction action;
  Vertex x;
  Vertex y;

  friend bool operator==(const DfsStep&, const DfsStep&) = default;
};

// Steps [start_step, end_step] reveal one connected component; state
// start_step is the first with the root on the stack, state end_step the
// first with the stack empty again.
struct DfsEpoch {
  std::size_t start_step;
  std::size_t end_step;
  std::vector<Vertex> component;  // ascending

  friend bool operator==(const DfsEpoch&, const DfsEpoch&) = default;
};

enum class TraceMode {
  kAuto,     // full states for n <= 64, deltas only above
  kFull,
  kCompact,
};

class DfsTrace {
 public:
  int n() const { return n_; }
  // steps()[t - 1] turns state t - 1 into state t.
  const std::vector<DfsStep>& steps() const { return steps_; }
  // N, the index of the final state.
  std::size_t step_count() const { return steps_.size(); }
  const std::vector<DfsEpoch>& epochs() const { return epochs_; }

  bool has_full_states() const { return !states_.empty(); }
  // State t, 0 <= t <= N. Replays the deltas in compact mode.
  DfsState state(std::size_t t) const;
  // All N + 1 states.
  std::vector<DfsState> states() const;

 private:
  friend DfsTrace run_dfs(const SimpleGraph& graph, TraceMode mode);

  int n_ = 0;
  std::vector<DfsStep> steps_;
  std::vector<DfsEpoch> epochs_;
  std::vector<DfsState> states_;
};

// Runs the three-set depth-first search on `graph`: the stack top probes its
// smallest partner among all vertices whose pair is still unchecked, a
// successful discovery is a single step, an exhausted top retires to S, and
// an empty stack restarts from the smallest unvisited vertex.
DfsTrace run_dfs(const SimpleGraph& graph, TraceMode mode = TraceMode::kAuto);

// Stack contents at the first step where |U| is maximal. The stack spans a
// path of the input graph with max |U| - 1 edges.
Path longest_u_excursion(const DfsTrace& trace);

// Same result as longest_u_excursion(run_dfs(graph)) without materializing a
// trace: O(n^2 / 64) time, O(n) extra memory.
Path longest_dfs_excursion(const SimpleGraph& graph);

// True iff every pair of disjoint k-subsets S, T of [n] has an edge between
// them. Exhaustive enumeration; throws PreconditionError unless
// 1 <= k <= n/2 and C(n,k) C(n-k,k) <= 1e8.
bool check_st_edge_property(const SimpleGraph& graph, int k);

// n - 2k + 1, the path length guaranteed when the k-subset property holds.
int excursion_guarantee(int n, int k);

// CSV "step,S,U,T,Ehat", one row per step 1..N. Sets as ';'-joined
// ascending lists, U in stack order,
// E-hat as ';'-joined "i-j" pairs in exploration order.
void write_trace_csv(std::ostream& out, const DfsTrace& trace);

}  // namespace lpp

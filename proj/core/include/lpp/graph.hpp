#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "lpp/rng.hpp"
#include "lpp/weights.hpp"

namespace lpp {

// Vertices are 1-based throughout: [n] = {1, ..., n}.
using Vertex = int;

struct Edge {
  Vertex lo;
  Vertex hi;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Normalizes an unordered pair to lo < hi.
Edge make_edge(Vertex a, Vertex b);

// Passage times of every edge of K_n in flat triangular storage. Edge <i,j>,
// i < j, lives at index (i-1) n - i(i+1)/2 + j - 1.
class EdgeWeights {
 public:
  // Throws PreconditionError unless n >= 2, values.size() == n(n-1)/2 and
  // every value is finite and strictly positive.
  EdgeWeights(int n, std::vector<double> values);

  static std::size_t edge_count(int n) {
    return static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  }
  static std::size_t index(int n, Vertex i, Vertex j) {
    const auto ii = static_cast<std::size_t>(i);
    return (ii - 1) * static_cast<std::size_t>(n) - ii * (ii + 1) / 2 +
           static_cast<std::size_t>(j) - 1;
  }

  int n() const { return n_; }
  std::span<const double> values() const { return values_; }

  // Symmetric accessor; i != j, both in [1, n]. Unchecked.
  double operator()(Vertex i, Vertex j) const {
    return i < j ? values_[index(n_, i, j)] : values_[index(n_, j, i)];
  }
  // Checked accessor, throws PreconditionError.
  double at(Vertex i, Vertex j) const;

  double max_weight() const;
  double min_weight() const;

  friend bool operator==(const EdgeWeights&, const EdgeWeights&) = default;

 private:
  int n_;
  std::vector<double> values_;
};

// Independent draws in ascending flat-index order.
EdgeWeights sample_weights(int n, const WeightDistribution& dist, Rng& rng);

// CSV "i,j,weight" with 17 significant digits, ascending (i, j). Lines
// starting with '#' are comments and are skipped on read.
void write_weights_csv(std::ostream& out, const EdgeWeights& weights);
EdgeWeights read_weights_csv(std::istream& in);

// Undirected simple graph on [n] stored as an adjacency bit matrix.
class SimpleGraph {
 public:
  explicit SimpleGraph(int n);
  SimpleGraph(int n, std::span<const Edge> edges);

  static SimpleGraph complete(int n);

  int n() const { return n_; }
  std::size_t edge_count() const { return edge_count_; }

  // Throws PreconditionError for self-loops or ids outside [1, n].
  void add_edge(Vertex a, Vertex b);
  bool has_edge(Vertex a, Vertex b) const {
    const auto bit = static_cast<std::size_t>(b - 1);
    return (row(a)[bit / 64] >> (bit % 64)) & 1U;
  }

  // Ascending (lo, hi).
  std::vector<Edge> edges() const;

  // Neighbourhood of v as words; bit (u-1) is set iff <v,u> is an edge.
  std::span<const std::uint64_t> row(Vertex v) const {
    return {bits_.data() + static_cast<std::size_t>(v - 1) * words_,
            words_};
  }
  std::size_t words_per_row() const { return words_; }

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  std::uint64_t* mutable_row(Vertex v) {
    return bits_.data() + static_cast<std::size_t>(v - 1) * words_;
  }

  int n_;
  std::size_t words_;
  std::size_t edge_count_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Edge <i,j> present iff weight(i,j) > tau.
SimpleGraph threshold_subgraph(const EdgeWeights& weights, double tau);

// G(n, p): each pair kept independently with probability p, drawn in
// ascending flat-index order. Throws PreconditionError for p outside [0, 1].
SimpleGraph sample_gnp(int n, double p, Rng& rng);

// Edge list: one "i j" pair per line, 1-based, i < j. '#' starts a comment;
// a "# n=<count>" comment fixes the vertex count, otherwise it is the
// largest id seen (or `n_hint` when positive).
void write_edge_list(std::ostream& out, const SimpleGraph& graph);
SimpleGraph read_edge_list(std::istream& in, int n_hint = 0);

}  // namespace lpp

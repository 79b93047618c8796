#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "lpp/graph.hpp"

namespace lpp {

// Nonempty self-avoiding vertex sequence.
class Path {
 public:
  // Throws PreconditionError if empty, if an id is < 1 or if a vertex repeats.
  explicit Path(std::vector<Vertex> vertices);

  // "1,4,2,7"
  static Path parse(std::string_view text);
  std::string to_string() const;

  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  // Number of edges.
  std::size_t length() const { return vertices_.size() - 1; }
  Vertex front() const { return vertices_.front(); }
  Vertex back() const { return vertices_.back(); }

  std::vector<Edge> edges() const;

  friend bool operator==(const Path&, const Path&) = default;

 private:
  std::vector<Vertex> vertices_;
};

}  // namespace lpp

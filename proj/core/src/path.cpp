#include "lpp/path.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_set>

#include "lpp/error.hpp"

namespace lpp {

Path::Path(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw PreconditionError("path must be nonempty");
  std::unordered_set<Vertex> seen;
  seen.reserve(vertices_.size());
  for (Vertex v : vertices_) {
    if (v < 1) throw PreconditionError("vertex ids start at 1");
    if (!seen.insert(v).second) {
      throw PreconditionError("path revisits vertex " + std::to_string(v));
    }
  }
}

Path Path::parse(std::string_view text) {
  std::vector<Vertex> vertices;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(start, comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    Vertex v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw ParseError("bad vertex '" + std::string(item) + "' in path");
    }
    vertices.push_back(v);
    start = comma + 1;
  }
  try {
    return Path(std::move(vertices));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

std::string Path::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(vertices_[i]);
  }
  return out;
}

std::vector<Edge> Path::edges() const {
  std::vector<Edge> out;
  out.reserve(length());
  for (std::size_t i = 1; i < vertices_.size(); ++i) {
    out.push_back(make_edge(vertices_[i - 1], vertices_[i]));
  }
  return out;
}

}  // namespace lpp

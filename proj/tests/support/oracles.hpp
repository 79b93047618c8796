#pragma once

// Slow, obviously-correct reference computations used only by the tests.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "lpp/graph.hpp"

namespace lpp::oracle {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline std::string strip_comment_lines(const std::string& text) {
  std::istringstream in(text);
  std::string out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.front() == '#') continue;
    out += line;
    out += '\n';
  }
  return out;
}

// Connected components by union-find, each ascending, ordered by smallest
// member.
inline std::vector<std::vector<Vertex>> components(const SimpleGraph& g) {
  const int n = g.n();
  std::vector<int> parent(static_cast<std::size_t>(n) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const Edge& e : g.edges()) parent[find(e.hi)] = find(e.lo);
  std::vector<std::vector<Vertex>> groups(static_cast<std::size_t>(n) + 1);
  for (Vertex v = 1; v <= n; ++v) groups[find(v)].push_back(v);
  std::vector<std::vector<Vertex>> out;
  for (auto& grp : groups) {
    if (!grp.empty()) out.push_back(std::move(grp));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Disjoint k-sets S, T with no S-T edge exist iff some k-set S leaves at
// least k vertices outside S and its neighbourhood. n <= 30.
inline bool st_property_by_counting(const SimpleGraph& g, int k) {
  const int n = g.n();
  std::vector<std::uint32_t> nbr(static_cast<std::size_t>(n), 0);
  for (const Edge& e : g.edges()) {
    nbr[e.lo - 1] |= 1U << (e.hi - 1);
    nbr[e.hi - 1] |= 1U << (e.lo - 1);
  }
  const std::uint32_t all = n == 32 ? ~0U : (1U << n) - 1;
  for (std::uint32_t s = 0; s <= all; ++s) {
    if (std::popcount(s) != k) continue;
    std::uint32_t covered = s;
    for (int v = 0; v < n; ++v) {
      if (s >> v & 1U) covered |= nbr[v];
    }
    if (std::popcount(all & ~covered) >= k) return false;
    if (s == all) break;
  }
  return true;
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

}  // namespace lpp::oracle

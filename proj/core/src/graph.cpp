#include "lpp/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

#include "lpp/error.hpp"

namespace lpp {
namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

template <class T>
T parse_field(std::string_view text, int line_no) {
  text = trim(text);
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                   value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": bad field '" +
                     std::string(text) + "'");
  }
  return value;
}

}  // namespace

Edge make_edge(Vertex a, Vertex b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

EdgeWeights::EdgeWeights(int n, std::vector<double> values)
    : n_(n), values_(std::move(values)) {
  if (n < 2) throw PreconditionError("EdgeWeights needs n >= 2");
  if (values_.size() != edge_count(n)) {
    throw PreconditionError("EdgeWeights needs exactly n(n-1)/2 entries");
  }
  for (double v : values_) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw PreconditionError("edge weights must be finite and positive");
    }
  }
}

double EdgeWeights::at(Vertex i, Vertex j) const {
  if (i < 1 || j < 1 || i > n_ || j > n_ || i == j) {
    throw PreconditionError("edge <" + std::to_string(i) + "," +
                            std::to_string(j) + "> not in K_" +
                            std::to_string(n_));
  }
  return (*this)(i, j);
}

double EdgeWeights::max_weight() const {
  return *std::max_element(values_.begin(), values_.end());
}

double EdgeWeights::min_weight() const {
  return *std::min_element(values_.begin(), values_.end());
}

EdgeWeights sample_weights(int n, const WeightDistribution& dist, Rng& rng) {
  if (n < 2) throw PreconditionError("sample_weights needs n >= 2");
  std::vector<double> values(EdgeWeights::edge_count(n));
  for (double& v : values) v = sample(dist, rng);
  return EdgeWeights(n, std::move(values));
}

void write_weights_csv(std::ostream& out, const EdgeWeights& weights) {
  out << "i,j,weight\n";
  char buf[64];
  const int n = weights.n();
  for (Vertex i = 1; i < n; ++i) {
    for (Vertex j = i + 1; j <= n; ++j) {
      std::snprintf(buf, sizeof(buf), "%d,%d,%.17g\n", i, j, weights(i, j));
      out << buf;
    }
  }
}

EdgeWeights read_weights_csv(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  std::vector<std::pair<Edge, double>> rows;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = trim(line);
    if (view.empty() || view.front() == '#') continue;
    if (!header_seen) {
      if (view != "i,j,weight") {
        throw ParseError("weights csv: expected header 'i,j,weight'");
      }
      header_seen = true;
      continue;
    }
    const auto c1 = view.find(',');
    const auto c2 = view.find(',', c1 == std::string_view::npos ? c1 : c1 + 1);
    if (c1 == std::string_view::npos || c2 == std::string_view::npos) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected i,j,weight");
    }
    const int i = parse_field<int>(view.substr(0, c1), line_no);
    const int j = parse_field<int>(view.substr(c1 + 1, c2 - c1 - 1), line_no);
    const double w = parse_field<double>(view.substr(c2 + 1), line_no);
    if (i < 1 || j <= i) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": need 1 <= i < j");
    }
    rows.push_back({Edge{i, j}, w});
  }
  if (!header_seen) throw ParseError("weights csv: missing header");
  int n = 0;
  for (const auto& [e, w] : rows) n = std::max(n, e.hi);
  if (n < 2 || rows.size() != EdgeWeights::edge_count(n)) {
    throw ParseError("weights csv: expected every edge of K_n exactly once");
  }
  std::vector<double> values(rows.size(), 0.0);
  std::vector<bool> seen(rows.size(), false);
  for (const auto& [e, w] : rows) {
    const auto idx = EdgeWeights::index(n, e.lo, e.hi);
    if (seen[idx]) throw ParseError("weights csv: duplicate edge");
    seen[idx] = true;
    values[idx] = w;
  }
  try {
    return EdgeWeights(n, std::move(values));
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("weights csv: ") + e.what());
  }
}

SimpleGraph::SimpleGraph(int n)
    : n_(n), words_((static_cast<std::size_t>(std::max(n, 1)) + 63) / 64) {
  if (n < 1) throw PreconditionError("SimpleGraph needs n >= 1");
  bits_.assign(words_ * static_cast<std::size_t>(n), 0);
}

SimpleGraph::SimpleGraph(int n, std::span<const Edge> edges) : SimpleGraph(n) {
  for (const Edge& e : edges) add_edge(e.lo, e.hi);
}

SimpleGraph SimpleGraph::complete(int n) {
  SimpleGraph g(n);
  for (Vertex i = 1; i < n; ++i) {
    for (Vertex j = i + 1; j <= n; ++j) g.add_edge(i, j);
  }
  return g;
}

void SimpleGraph::add_edge(Vertex a, Vertex b) {
  if (a == b || a < 1 || b < 1 || a > n_ || b > n_) {
    throw PreconditionError("invalid edge <" + std::to_string(a) + "," +
                            std::to_string(b) + "> on n=" +
                            std::to_string(n_));
  }
  if (has_edge(a, b)) return;
  const auto ba = static_cast<std::size_t>(a - 1);
  const auto bb = static_cast<std::size_t>(b - 1);
  mutable_row(a)[bb / 64] |= std::uint64_t{1} << (bb % 64);
  mutable_row(b)[ba / 64] |= std::uint64_t{1} << (ba % 64);
  ++edge_count_;
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex i = 1; i < n_; ++i) {
    for (Vertex j = i + 1; j <= n_; ++j) {
      if (has_edge(i, j)) out.push_back({i, j});
    }
  }
  return out;
}

SimpleGraph threshold_subgraph(const EdgeWeights& weights, double tau) {
  const int n = weights.n();
  SimpleGraph g(n);
  const auto values = weights.values();
  std::size_t idx = 0;
  for (Vertex i = 1; i < n; ++i) {
    for (Vertex j = i + 1; j <= n; ++j, ++idx) {
      if (values[idx] > tau) g.add_edge(i, j);
    }
  }
  return g;
}

SimpleGraph sample_gnp(int n, double p, Rng& rng) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw PreconditionError("sample_gnp needs 0 <= p <= 1");
  }
  SimpleGraph g(n);
  for (Vertex i = 1; i < n; ++i) {
    for (Vertex j = i + 1; j <= n; ++j) {
      if (uniform_open(rng) < p) g.add_edge(i, j);
    }
  }
  return g;
}

void write_edge_list(std::ostream& out, const SimpleGraph& graph) {
  out << "# n=" << graph.n() << '\n';
  for (const Edge& e : graph.edges()) out << e.lo << ' ' << e.hi << '\n';
}

SimpleGraph read_edge_list(std::istream& in, int n_hint) {
  std::string line;
  int line_no = 0;
  int declared_n = 0;
  int max_id = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = trim(line);
    if (view.empty()) continue;
    if (view.front() == '#') {
      std::string_view body = trim(view.substr(1));
      if (body.substr(0, 2) == "n=") {
        declared_n = parse_field<int>(body.substr(2), line_no);
      }
      continue;
    }
    if (const auto hash = view.find('#'); hash != std::string_view::npos) {
      view = trim(view.substr(0, hash));
    }
    std::istringstream fields{std::string(view)};
    std::string a_text;
    std::string b_text;
    std::string extra;
    if (!(fields >> a_text >> b_text) || (fields >> extra)) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected 'i j'");
    }
    const int a = parse_field<int>(a_text, line_no);
    const int b = parse_field<int>(b_text, line_no);
    if (a < 1 || b <= a) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": need 1 <= i < j");
    }
    max_id = std::max(max_id, b);
    edges.push_back({a, b});
  }
  int n = declared_n > 0 ? declared_n : std::max(n_hint, max_id);
  if (n < 1) throw ParseError("edge list: cannot infer vertex count");
  if (max_id > n) {
    throw ParseError("edge list: vertex " + std::to_string(max_id) +
                     " exceeds n=" + std::to_string(n));
  }
  return SimpleGraph(n, edges);
}

}  // namespace lpp

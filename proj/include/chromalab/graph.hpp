#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "chromalab/errors.hpp"

namespace chromalab {

using Edge = std::pair<int, int>;
using VertexSet = std::vector<int>;  // sorted, duplicate-free vertex ids

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// Finite simple undirected graph over dense integer vertex ids 0..n-1.
/// Immutable after construction.  Adjacency is kept both as sorted neighbor
/// lists and, for n <= kBitsetLimit, as fixed-width bitsets; common-neighbor
/// and containment queries pick the bitset route automatically.
class Graph {
 public:
  static constexpr int kBitsetLimit = 4096;

  Graph() = default;

  Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw DomainError("negative vertex count");
    for (auto& [u, v] : edges) {
      if (u == v) throw DomainError("self-loop " + std::to_string(u));
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw DomainError("vertex id out of range in edge (" + std::to_string(u) + "," +
                          std::to_string(v) + ")");
      if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
      throw DomainError("duplicate edge");
    edges_ = std::move(edges);
    build_adjacency();
  }

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }

  int degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
  }

  bool has_edge(int u, int v) const {
    if (u == v) return false;
    if (has_bitsets()) return bit_test(u, v);
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    int other = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), other);
  }

  bool has_bitsets() const { return !bits_.empty(); }
  int words() const { return words_; }
  /// Row of the adjacency bitset matrix; only valid when has_bitsets().
  const std::uint64_t* row(int v) const { return bits_.data() + static_cast<std::size_t>(v) * words_; }

  int common_neighbor_count(int u, int v) const {
    if (has_bitsets()) {
      const std::uint64_t* a = row(u);
      const std::uint64_t* b = row(v);
      int c = 0;
      for (int w = 0; w < words_; ++w) c += __builtin_popcountll(a[w] & b[w]);
      return c;
    }
    const auto& a = adj_[u];
    const auto& b = adj_[v];
    int c = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] < b[j]) ++i;
      else if (a[i] > b[j]) ++j;
      else { ++c; ++i; ++j; }
    }
    return c;
  }

  /// Number of edges with both endpoints in `s` (s sorted or not).
  int induced_edge_count(const VertexSet& s) const {
    if (has_bitsets()) {
      std::vector<std::uint64_t> mask(words_, 0);
      for (int v : s) mask[v >> 6] |= 1ULL << (v & 63);
      int total = 0;
      for (int v : s) {
        const std::uint64_t* r = row(v);
        for (int w = 0; w < words_; ++w) total += __builtin_popcountll(r[w] & mask[w]);
      }
      return total / 2;
    }
    std::vector<char> in(n_, 0);
    for (int v : s) in[v] = 1;
    int total = 0;
    for (int v : s)
      for (int w : adj_[v])
        if (in[w]) ++total;
    return total / 2;
  }

  /// Subgraph induced on `vertices` (need not be sorted); ids are relabeled
  /// 0..k-1 in the sorted order of `vertices`.
  Graph induced(VertexSet vertices) const {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    std::vector<int> pos(n_, -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) pos[vertices[i]] = static_cast<int>(i);
    std::vector<Edge> es;
    for (const auto& [u, v] : edges_)
      if (pos[u] >= 0 && pos[v] >= 0) es.emplace_back(pos[u], pos[v]);
    return Graph(static_cast<int>(vertices.size()), std::move(es));
  }

  Graph without_edges(const std::vector<Edge>& removed) const {
    std::vector<Edge> norm;
    norm.reserve(removed.size());
    for (const auto& [u, v] : removed) norm.push_back(make_edge(u, v));
    std::sort(norm.begin(), norm.end());
    std::vector<Edge> kept;
    kept.reserve(edges_.size());
    for (const auto& e : edges_)
      if (!std::binary_search(norm.begin(), norm.end(), e)) kept.push_back(e);
    return Graph(n_, std::move(kept));
  }

  Graph with_edges(const std::vector<Edge>& added) const {
    std::vector<Edge> es = edges_;
    for (const auto& [u, v] : added) es.push_back(make_edge(u, v));
    return Graph(n_, std::move(es));
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw DomainError("vertex " + std::to_string(v) + " out of range");
  }

  // ---- factories ----

  static Graph empty(int n) { return Graph(n, {}); }

  static Graph complete(int n) {
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return Graph(n, std::move(es));
  }

  static Graph cycle(int n) {
    if (n < 3) throw DomainError("cycle needs >= 3 vertices");
    std::vector<Edge> es;
    for (int v = 0; v < n; ++v) es.push_back(make_edge(v, (v + 1) % n));
    return Graph(n, std::move(es));
  }

  static Graph path(int n) {
    std::vector<Edge> es;
    for (int v = 0; v + 1 < n; ++v) es.emplace_back(v, v + 1);
    return Graph(n, std::move(es));
  }

  static Graph complete_bipartite(int a, int b) {
    std::vector<Edge> es;
    for (int u = 0; u < a; ++u)
      for (int v = 0; v < b; ++v) es.emplace_back(u, a + v);
    return Graph(a + b, std::move(es));
  }

  static Graph star(int leaves) { return complete_bipartite(1, leaves); }

  static Graph petersen() {
    std::vector<Edge> es;
    for (int v = 0; v < 5; ++v) {
      es.push_back(make_edge(v, (v + 1) % 5));        // outer C5
      es.push_back(make_edge(5 + v, 5 + (v + 2) % 5));  // inner pentagram
      es.emplace_back(v, 5 + v);                        // spokes
    }
    return Graph(10, std::move(es));
  }

  static Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> es = a.edges();
    for (const auto& [u, v] : b.edges()) es.emplace_back(a.n() + u, a.n() + v);
    return Graph(a.n() + b.n(), std::move(es));
  }

 private:
  void build_adjacency() {
    adj_.assign(n_, {});
    for (const auto& [u, v] : edges_) {
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
    if (n_ > 0 && n_ <= kBitsetLimit) {
      words_ = (n_ + 63) / 64;
      bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
      for (const auto& [u, v] : edges_) {
        bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= 1ULL << (v & 63);
        bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= 1ULL << (u & 63);
      }
    }
  }

  bool bit_test(int u, int v) const {
    return bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63) & 1;
  }

  int n_ = 0;
  int words_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::uint64_t> bits_;
};

/// delta(G); domain error on the empty graph.
inline int min_degree(const Graph& g) {
  if (g.n() == 0) throw DomainError("min_degree of empty graph");
  int best = g.n();
  for (int v = 0; v < g.n(); ++v) best = std::min(best, g.degree(v));
  return best;
}

inline int max_degree(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.n(); ++v) best = std::max(best, g.degree(v));
  return best;
}

// ---- edge-list text format ----
//
//   n m
//   u v        (m lines, 0 <= u,v < n, u != v)
//
// UTF-8, LF or CRLF.  Serialization is the identical format with edges
// sorted lexicographically, so parse/serialize round-trips bit-exactly.

inline Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  auto next_line = [&](bool required) -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) return true;
    }
    if (required) throw ParseError(line_no + 1, "unexpected end of input");
    return false;
  };

  next_line(true);
  std::istringstream header(line);
  long long n = -1, m = -1;
  std::string extra;
  if (!(header >> n >> m) || (header >> extra) || n < 0 || m < 0)
    throw ParseError(line_no, "expected header 'n m'");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    next_line(true);
    std::istringstream es(line);
    long long u = -1, v = -1;
    if (!(es >> u >> v) || (es >> extra)) throw ParseError(line_no, "expected edge 'u v'");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError(line_no, "vertex id out of range");
    if (u == v) throw ParseError(line_no, "self-loop");
    edges.push_back(make_edge(static_cast<int>(u), static_cast<int>(v)));
  }
  if (next_line(false)) throw ParseError(line_no, "trailing content after edge list");

  std::vector<Edge> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    // find the offending line for the error message
    std::vector<Edge> seen;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (std::find(seen.begin(), seen.end(), edges[i]) != seen.end())
        throw ParseError(static_cast<int>(i) + 2, "duplicate edge");
      seen.push_back(edges[i]);
    }
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

inline std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << g.n() << ' ' << g.m() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace chromalab

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <vector>

#include "chromalab/errors.hpp"
#include "chromalab/graph.hpp"

namespace chromalab {

/// Shortest cycle through any vertex, found by BFS from every root.  For each
/// root, a non-tree edge (u,w) closes a walk of length dist(u)+dist(w)+1 whose
/// tree paths diverge after their last common vertex z, giving a simple cycle
/// of length dist(u)+dist(w)+1-2*dist(z).  The minimum over all roots is the
/// girth.  `max_len`, when set, prunes BFS depth so only cycles of length
/// <= max_len are looked for.
inline std::optional<std::vector<int>> shortest_cycle(const Graph& g,
                                                      std::optional<int> max_len = std::nullopt) {
  const int n = g.n();
  int best_len = max_len ? *max_len + 1 : n + 1;
  std::vector<int> best_cycle;
  std::vector<int> dist(n), parent(n);
  const int depth_cap_base = max_len ? *max_len / 2 : n;

  for (int root = 0; root < n; ++root) {
    if (g.degree(root) < 2) continue;
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = -1;
    std::queue<int> q;
    q.push(root);
    int depth_cap = std::min(depth_cap_base, (best_len - 1) / 2);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      if (dist[u] > depth_cap) break;
      for (int w : g.neighbors(u)) {
        if (dist[w] == -1) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          q.push(w);
          continue;
        }
        if (w == parent[u] || dist[w] > dist[u]) continue;  // each non-tree edge once
        // reconstruct both tree paths, trim to the last common vertex
        std::vector<int> pu, pw;
        for (int x = u; x != -1; x = parent[x]) pu.push_back(x);
        for (int x = w; x != -1; x = parent[x]) pw.push_back(x);
        while (pu.size() >= 2 && pw.size() >= 2 && pu[pu.size() - 2] == pw[pw.size() - 2]) {
          pu.pop_back();
          pw.pop_back();
        }
        int len = static_cast<int>(pu.size() + pw.size()) - 1;
        if (len < best_len) {
          best_len = len;
          best_cycle.assign(pu.begin(), pu.end());
          best_cycle.insert(best_cycle.end(), pw.rbegin() + 1, pw.rend());
          if (best_len == 3 && (!max_len || 3 <= *max_len)) return best_cycle;
          depth_cap = std::min(depth_cap_base, (best_len - 1) / 2);
        }
      }
    }
  }
  if (best_cycle.empty()) return std::nullopt;
  if (max_len && best_len > *max_len) return std::nullopt;
  return best_cycle;
}

/// Length of the shortest cycle; nullopt for forests.
inline std::optional<int> girth(const Graph& g) {
  auto c = shortest_cycle(g);
  if (!c) return std::nullopt;
  return static_cast<int>(c->size());
}

inline bool is_forest(const Graph& g) {
  // acyclic iff every component is a tree: m = n - #components
  std::vector<int> parent(g.n());
  for (int v = 0; v < g.n(); ++v) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& [u, v] : g.edges()) {
    int a = find(u), b = find(v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

/// Two-coloring by BFS; returns the side of each vertex or nullopt when some
/// component is not bipartite.
inline std::optional<std::vector<int>> bipartition(const Graph& g) {
  std::vector<int> side(g.n(), -1);
  std::queue<int> q;
  for (int s = 0; s < g.n(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : g.neighbors(u)) {
        if (side[w] == -1) {
          side[w] = side[u] ^ 1;
          q.push(w);
        } else if (side[w] == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

inline bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

inline std::vector<int> component_ids(const Graph& g) {
  std::vector<int> comp(g.n(), -1);
  int c = 0;
  std::queue<int> q;
  for (int s = 0; s < g.n(); ++s) {
    if (comp[s] != -1) continue;
    comp[s] = c;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : g.neighbors(u))
        if (comp[w] == -1) {
          comp[w] = c;
          q.push(w);
        }
    }
    ++c;
  }
  return comp;
}

/// True iff g has a simple path with exactly `len` edges from `from` to `to`.
/// Depth-limited DFS pruned by BFS distances from `to`.
inline bool has_path_of_length(const Graph& g, int from, int to, int len) {
  if (len == 0) return from == to;
  std::vector<int> dist_to(g.n(), -1);
  {
    std::queue<int> q;
    dist_to[to] = 0;
    q.push(to);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      if (dist_to[u] >= len) continue;
      for (int w : g.neighbors(u))
        if (dist_to[w] == -1) {
          dist_to[w] = dist_to[u] + 1;
          q.push(w);
        }
    }
  }
  if (dist_to[from] == -1 || dist_to[from] > len) return false;

  std::vector<char> used(g.n(), 0);
  // iterative DFS over (vertex, remaining edges)
  struct Frame { int v; std::size_t next; };
  std::vector<Frame> stack;
  used[from] = 1;
  stack.push_back({from, 0});
  while (!stack.empty()) {
    Frame& f = stack.back();
    int remaining = len - static_cast<int>(stack.size() - 1);
    const auto& nb = g.neighbors(f.v);
    bool descended = false;
    while (f.next < nb.size()) {
      int w = nb[f.next++];
      if (remaining == 1) {
        if (w == to) return true;
        continue;
      }
      if (used[w] || w == to) continue;
      if (dist_to[w] == -1 || dist_to[w] > remaining - 1) continue;
      used[w] = 1;
      stack.push_back({w, 0});
      descended = true;
      break;
    }
    if (!descended) {
      used[f.v] = 0;
      stack.pop_back();
    }
  }
  return false;
}

/// True iff g contains a cycle with exactly `len` vertices.
inline bool contains_cycle_of_length(const Graph& g, int len) {
  if (len < 3) throw DomainError("cycle length must be >= 3");
  for (const auto& [u, v] : g.edges()) {
    Graph without = g.without_edges({{u, v}});
    if (has_path_of_length(without, u, v, len - 1)) return true;
  }
  return false;
}

/// All cycles of g as vertex sets, via DFS rooted at each cycle's smallest
/// vertex; stops with BudgetError after `budget` cycles.  Intended for graphs
/// with <= ~22 vertices.
inline std::vector<std::vector<int>> enumerate_cycles(const Graph& g, std::uint64_t budget = 1000000) {
  std::vector<std::vector<int>> cycles;
  std::vector<int> path;
  std::vector<char> on_path(g.n(), 0);

  // DFS from s over vertices > s; a closing edge back to s yields a cycle in
  // which s is the minimum, and the second vertex is kept below the last to
  // report each cycle once per orientation.
  auto dfs = [&](auto&& self, int s, int v) -> void {
    for (int w : g.neighbors(v)) {
      if (w == s && path.size() >= 3 && path[1] < path.back()) {
        cycles.push_back(path);
        if (cycles.size() > budget) throw BudgetError("cycle enumeration budget exceeded");
        continue;
      }
      if (w <= s || on_path[w]) continue;
      on_path[w] = 1;
      path.push_back(w);
      self(self, s, w);
      path.pop_back();
      on_path[w] = 0;
    }
  };

  for (int s = 0; s < g.n(); ++s) {
    path.assign(1, s);
    on_path.assign(g.n(), 0);
    on_path[s] = 1;
    dfs(dfs, s, s);
  }
  return cycles;
}

inline std::vector<std::vector<int>> enumerate_odd_cycles(const Graph& g,
                                                          std::uint64_t budget = 1000000) {
  std::vector<std::vector<int>> odd;
  for (auto& c : enumerate_cycles(g, budget))
    if (c.size() % 2 == 1) odd.push_back(std::move(c));
  return odd;
}

}  // namespace chromalab

// Copyright 2026 The choicone Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "choicone/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>

#include "choicone/error.hpp"

namespace choicone {

SupportGraph::SupportGraph(std::size_t r, std::vector<Edge> edges)
    : adjacency_(r) {
  for (auto& [u, v] : edges) {
    if (u >= r || v >= r || u == v) {
      throw Error(ErrorCode::kIndex, "invalid edge endpoint");
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  for (const auto& [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

bool SupportGraph::has_edge(std::size_t u, std::size_t v) const {
  if (u >= r() || v >= r()) return false;
  const auto& nb = adjacency_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

SupportGraph support_graph(const SymMatrix& s, double eps_zero) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < s.r(); ++i)
    for (std::size_t j = i + 1; j < s.r(); ++j)
      if (std::abs(s(i, j)) > eps_zero) edges.emplace_back(i, j);
  return SupportGraph(s.r(), std::move(edges));
}

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// Cycle through the BFS tree: u -> ... -> lca -> ... -> v, closed by {u,v}.
std::vector<std::size_t> tree_cycle(std::size_t u, std::size_t v,
                                    const std::vector<std::size_t>& parent,
                                    const std::vector<std::size_t>& depth) {
  std::vector<std::size_t> up_u{u}, up_v{v};
  while (depth[u] > depth[v]) { u = parent[u]; up_u.push_back(u); }
  while (depth[v] > depth[u]) { v = parent[v]; up_v.push_back(v); }
  while (u != v) {
    u = parent[u]; up_u.push_back(u);
    v = parent[v]; up_v.push_back(v);
  }
  up_v.pop_back();  // lca already at the back of up_u
  std::vector<std::size_t> cycle(up_u.rbegin(), up_u.rend());
  cycle.insert(cycle.end(), up_v.begin(), up_v.end());
  // Rotate so the smallest vertex comes first.
  auto it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), it, cycle.end());
  return cycle;
}

}  // namespace

ColoringResult two_coloring(const SupportGraph& g) {
  const std::size_t r = g.r();
  std::vector<std::size_t> parent(r, kNone), depth(r, kNone);
  for (std::size_t root = 0; root < r; ++root) {
    if (depth[root] != kNone) continue;
    depth[root] = 0;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v : g.neighbors(u)) {
        if (depth[v] == kNone) {
          depth[v] = depth[u] + 1;
          parent[v] = u;
          queue.push_back(v);
        } else if (depth[v] % 2 == depth[u] % 2) {
          return {std::nullopt, tree_cycle(u, v, parent, depth)};
        }
      }
    }
  }
  TwoColoring c;
  c.color.reserve(r);
  for (std::size_t v = 0; v < r; ++v)
    c.color.push_back(depth[v] % 2 == 0 ? Side::kLeft : Side::kRight);
  return {std::move(c), {}};
}

std::vector<std::vector<std::size_t>> connected_components(
    const SupportGraph& g) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(g.r(), false);
  for (std::size_t root = 0; root < g.r(); ++root) {
    if (seen[root]) continue;
    std::vector<std::size_t> comp{root};
    seen[root] = true;
    for (std::size_t k = 0; k < comp.size(); ++k) {
      for (std::size_t v : g.neighbors(comp[k])) {
        if (!seen[v]) {
          seen[v] = true;
          comp.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_forest(const SupportGraph& g) {
  // A graph is a forest iff |E| == |V| - #components.
  return g.edges().size() + connected_components(g).size() == g.r();
}

std::string to_dot(const SupportGraph& g,
                   const std::optional<TwoColoring>& coloring) {
  std::ostringstream os;
  os << "graph G {\n";
  if (coloring) {
    for (Side side : {Side::kLeft, Side::kRight}) {
      os << "  { rank=same;";
      for (std::size_t v = 0; v < g.r(); ++v)
        if (coloring->color[v] == side) os << ' ' << v + 1 << ';';
      os << " }\n";
    }
  }
  for (std::size_t v = 0; v < g.r(); ++v) {
    os << "  " << v + 1;
    if (coloring) {
      os << (coloring->color[v] == Side::kLeft ? " [color=blue]"
                                               : " [color=red]");
    }
    os << ";\n";
  }
  for (const auto& [u, v] : g.edges()) os << "  " << u + 1 << " -- " << v + 1 << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace choicone

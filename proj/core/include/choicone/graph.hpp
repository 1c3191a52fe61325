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

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "choicone/matcore.hpp"

namespace choicone {

using Edge = std::pair<std::size_t, std::size_t>;  // first < second

/// Simple undirected graph on vertices 0..r-1. Vertices are printed
/// 1-based in text output.
class SupportGraph {
 public:
  /// Edges may be given in any orientation; duplicates are merged.
  /// Throws kIndex for out-of-range endpoints or self-loops.
  SupportGraph(std::size_t r, std::vector<Edge> edges);

  std::size_t r() const noexcept { return adjacency_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<std::size_t>& neighbors(std::size_t v) const {
    return adjacency_[v];
  }
  bool has_edge(std::size_t u, std::size_t v) const;

 private:
  std::vector<Edge> edges_;                        // sorted
  std::vector<std::vector<std::size_t>> adjacency_;  // sorted per vertex
};

/// Edge {i,j} for each i != j with |S_ij| > eps_zero.
SupportGraph support_graph(const SymMatrix& s, double eps_zero);

enum class Side { kLeft, kRight };

struct TwoColoring {
  std::vector<Side> color;
};

struct ColoringResult {
  std::optional<TwoColoring> coloring;
  /// When not bipartite: vertices of an odd cycle in traversal order.
  std::vector<std::size_t> odd_cycle;

  bool bipartite() const noexcept { return coloring.has_value(); }
};

/// BFS layering per component; the lowest-index vertex of every
/// component is colored Left.
ColoringResult two_coloring(const SupportGraph& g);

/// Maximal connected vertex sets, each sorted, ordered by smallest member.
std::vector<std::vector<std::size_t>> connected_components(const SupportGraph& g);

bool is_forest(const SupportGraph& g);

std::string to_dot(const SupportGraph& g,
                   const std::optional<TwoColoring>& coloring = std::nullopt);

}  // namespace choicone

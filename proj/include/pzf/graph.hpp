// Copyright 2026 The pzf Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PZF_GRAPH_HPP
#define PZF_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pzf {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Sentinel for unreachable vertices and for the diameter of a disconnected graph.
inline constexpr std::size_t kInfinite = std::numeric_limits<std::size_t>::max();

/// Thrown when a precondition on caller-supplied data is broken.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Undirected simple graph stored as compressed sorted adjacency lists.
///
/// Immutable after construction. Every constructor path goes through
/// from_edges(), which sorts and deduplicates neighbours and rejects
/// self-loops and out-of-range endpoints.
class Graph {
 public:
  Graph() = default;

  static Graph from_edges(std::size_t n_vertices, std::span<const Edge> edges);

  std::size_t n_vertices() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t n_edges() const { return neighbors_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex u) const {
    return {neighbors_.data() + offsets_[u], neighbors_.data() + offsets_[u + 1]};
  }
  std::size_t degree(Vertex u) const { return offsets_[u + 1] - offsets_[u]; }
  bool adjacent(Vertex u, Vertex v) const;

  /// Each undirected edge once, as (smaller, larger), in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> neighbors_;
};

/// Membership set over the vertices of one graph.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t n_vertices) : member_(n_vertices, 0) {}
  VertexSet(std::size_t n_vertices, std::span<const Vertex> members);

  std::size_t universe() const { return member_.size(); }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }
  bool full() const { return count_ == member_.size(); }
  bool contains(Vertex v) const { return member_[v] != 0; }

  /// Returns true if v was not already a member.
  bool insert(Vertex v) {
    if (member_[v]) return false;
    member_[v] = 1;
    ++count_;
    return true;
  }
  bool erase(Vertex v) {
    if (!member_[v]) return false;
    member_[v] = 0;
    --count_;
    return true;
  }

  std::vector<Vertex> members() const;
  bool is_subset_of(const VertexSet& other) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<std::uint8_t> member_;
  std::size_t count_ = 0;
};

enum class GraphFamily { path, cycle, star, complete, grid, hypercube, clique_ring, edge_list_file };

/// Names a generator and its integer parameters, e.g. `grid:4,5`.
struct GraphFamilySpec {
  GraphFamily family = GraphFamily::path;
  std::vector<std::size_t> params;
  std::string path;  // only for edge_list_file

  friend bool operator==(const GraphFamilySpec&, const GraphFamilySpec&) = default;
};

/// Parses `family:params` (`grid:4,5`, `hypercube:8`, `cliquering:5,60`, `file:PATH`).
/// Family names are case-insensitive; `clique_ring` is accepted as an alias.
GraphFamilySpec parse_graph_spec(std::string_view text);
std::string to_string(const GraphFamilySpec& spec);
/// Checks parameter count and ranges; throws std::invalid_argument.
void validate(const GraphFamilySpec& spec);

Graph make_named_graph(const GraphFamilySpec& spec);

Graph make_path(std::size_t n);
Graph make_cycle(std::size_t n);
/// Vertex 0 is the centre.
Graph make_star(std::size_t leaves);
Graph make_complete(std::size_t n);
/// Vertex id of coordinate (i, j) is i + m*j.
Graph make_grid(std::size_t m, std::size_t n);
inline constexpr std::size_t kMaxHypercubeDim = 30;
Graph make_hypercube(std::size_t dim);
/// n/(d+1) copies of K_{d+1} closed into a ring. Within copy i (block
/// [i(d+1), (i+1)(d+1))) local vertex 0 loses its edge to local vertex 1 and
/// is joined to local vertex 1 of copy i+1 instead. Result is d-regular.
Graph make_clique_ring(std::size_t d, std::size_t n);

/// Edge-list text: one `u v` pair per line, optional leading `n <count>`,
/// `#` starts a comment. Duplicate edges collapse. Errors name the line.
Graph parse_edge_list(std::string_view text);
Graph load_edge_list(const std::string& path);

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source);
std::size_t eccentricity(const Graph& g, Vertex v);
std::size_t diameter(const Graph& g);
bool is_connected(const Graph& g);
/// Edges with exactly one endpoint in s.
std::size_t edge_boundary(const Graph& g, const VertexSet& s);

}  // namespace pzf

#endif  // PZF_GRAPH_HPP

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

#include "pzf/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <queue>
#include <sstream>

namespace pzf {

Graph Graph::from_edges(std::size_t n_vertices, std::span<const Edge> edges) {
  std::vector<std::vector<Vertex>> adj(n_vertices);
  for (auto [u, v] : edges) {
    if (u >= n_vertices || v >= n_vertices) {
      throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                  ") out of range for " + std::to_string(n_vertices) +
                                  " vertices");
    }
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  Graph g;
  g.offsets_.reserve(n_vertices + 1);
  g.offsets_.push_back(0);
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    g.neighbors_.insert(g.neighbors_.end(), list.begin(), list.end());
    g.offsets_.push_back(g.neighbors_.size());
  }
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(n_edges());
  for (Vertex u = 0; u < n_vertices(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

VertexSet::VertexSet(std::size_t n_vertices, std::span<const Vertex> members) : VertexSet(n_vertices) {
  for (Vertex v : members) {
    if (v >= n_vertices) {
      throw ContractViolation("vertex " + std::to_string(v) + " outside graph of " +
                              std::to_string(n_vertices) + " vertices");
    }
    insert(v);
  }
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(count_);
  for (Vertex v = 0; v < member_.size(); ++v) {
    if (member_[v]) out.push_back(v);
  }
  return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  if (other.universe() != universe()) return false;
  for (std::size_t v = 0; v < member_.size(); ++v) {
    if (member_[v] && !other.member_[v]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Family specs

namespace {

struct FamilyName {
  std::string_view name;
  GraphFamily family;
};

constexpr FamilyName kFamilyNames[] = {
    {"path", GraphFamily::path},           {"cycle", GraphFamily::cycle},
    {"star", GraphFamily::star},           {"complete", GraphFamily::complete},
    {"grid", GraphFamily::grid},           {"hypercube", GraphFamily::hypercube},
    {"cliquering", GraphFamily::clique_ring}, {"file", GraphFamily::edge_list_file},
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::size_t parse_count(std::string_view token, std::string_view what) {
  token = trim(token);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
    throw std::invalid_argument("bad " + std::string(what) + " parameter '" + std::string(token) +
                                "'");
  }
  return value;
}

}  // namespace

GraphFamilySpec parse_graph_spec(std::string_view text) {
  text = trim(text);
  auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("graph spec '" + std::string(text) + "' must look like family:params");
  }
  std::string name;
  for (char c : trim(text.substr(0, colon))) {
    if (c != '_') name.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  auto it = std::find_if(std::begin(kFamilyNames), std::end(kFamilyNames),
                         [&](const FamilyName& f) { return f.name == name; });
  if (it == std::end(kFamilyNames)) {
    throw std::invalid_argument("unknown graph family '" + name + "'");
  }
  GraphFamilySpec spec;
  spec.family = it->family;
  auto rest = text.substr(colon + 1);
  if (spec.family == GraphFamily::edge_list_file) {
    spec.path = std::string(trim(rest));
    if (spec.path.empty()) throw std::invalid_argument("file: needs a path");
  } else {
    while (true) {
      auto comma = rest.find(',');
      spec.params.push_back(parse_count(rest.substr(0, comma), name));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  }
  validate(spec);
  return spec;
}

std::string to_string(const GraphFamilySpec& spec) {
  auto it = std::find_if(std::begin(kFamilyNames), std::end(kFamilyNames),
                         [&](const FamilyName& f) { return f.family == spec.family; });
  std::string out(it->name);
  out += ':';
  if (spec.family == GraphFamily::edge_list_file) return out + spec.path;
  for (std::size_t i = 0; i < spec.params.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(spec.params[i]);
  }
  return out;
}

void validate(const GraphFamilySpec& spec) {
  auto need = [&](std::size_t count, const char* usage) {
    if (spec.params.size() != count) {
      throw std::invalid_argument(std::string("expected ") + usage);
    }
  };
  const auto& p = spec.params;
  switch (spec.family) {
    case GraphFamily::path:
      need(1, "path:N");
      if (p[0] < 1) throw std::invalid_argument("path needs at least 1 vertex");
      break;
    case GraphFamily::cycle:
      need(1, "cycle:N");
      if (p[0] < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
      break;
    case GraphFamily::star:
      need(1, "star:LEAVES");
      if (p[0] < 1) throw std::invalid_argument("star needs at least 1 leaf");
      break;
    case GraphFamily::complete:
      need(1, "complete:N");
      if (p[0] < 1) throw std::invalid_argument("complete graph needs at least 1 vertex");
      break;
    case GraphFamily::grid:
      need(2, "grid:M,N");
      if (p[0] < 1 || p[1] < 1) throw std::invalid_argument("grid dimensions must be >= 1");
      break;
    case GraphFamily::hypercube:
      need(1, "hypercube:DIM");
      if (p[0] < 1 || p[0] > kMaxHypercubeDim) {
        throw std::invalid_argument("hypercube dimension must be in [1, " +
                                    std::to_string(kMaxHypercubeDim) + "]");
      }
      break;
    case GraphFamily::clique_ring:
      need(2, "cliquering:D,N");
      if (p[0] < 5) throw std::invalid_argument("clique ring needs d >= 5");
      if (p[1] % (p[0] + 1) != 0) {
        throw std::invalid_argument("clique ring needs (d+1) | n");
      }
      if (p[1] / (p[0] + 1) < 2) throw std::invalid_argument("clique ring needs at least 2 copies");
      break;
    case GraphFamily::edge_list_file:
      if (spec.path.empty()) throw std::invalid_argument("file: needs a path");
      break;
  }
}

// ---------------------------------------------------------------------------
// Generators

Graph make_named_graph(const GraphFamilySpec& spec) {
  validate(spec);
  const auto& p = spec.params;
  switch (spec.family) {
    case GraphFamily::path: return make_path(p[0]);
    case GraphFamily::cycle: return make_cycle(p[0]);
    case GraphFamily::star: return make_star(p[0]);
    case GraphFamily::complete: return make_complete(p[0]);
    case GraphFamily::grid: return make_grid(p[0], p[1]);
    case GraphFamily::hypercube: return make_hypercube(p[0]);
    case GraphFamily::clique_ring: return make_clique_ring(p[0], p[1]);
    case GraphFamily::edge_list_file: return load_edge_list(spec.path);
  }
  throw std::logic_error("unhandled graph family");
}

Graph make_path(std::size_t n) {
  if (n < 1) throw std::invalid_argument("path needs at least 1 vertex");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

Graph make_cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph::from_edges(n, edges);
}

Graph make_star(std::size_t leaves) {
  if (leaves < 1) throw std::invalid_argument("star needs at least 1 leaf");
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph::from_edges(leaves + 1, edges);
}

Graph make_complete(std::size_t n) {
  if (n < 1) throw std::invalid_argument("complete graph needs at least 1 vertex");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

Graph make_grid(std::size_t m, std::size_t n) {
  if (m < 1 || n < 1) throw std::invalid_argument("grid dimensions must be >= 1");
  auto id = [m](std::size_t i, std::size_t j) { return static_cast<Vertex>(i + m * j); };
  std::vector<Edge> edges;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      if (i + 1 < m) edges.emplace_back(id(i, j), id(i + 1, j));
      if (j + 1 < n) edges.emplace_back(id(i, j), id(i, j + 1));
    }
  }
  return Graph::from_edges(m * n, edges);
}

Graph make_hypercube(std::size_t dim) {
  if (dim < 1 || dim > kMaxHypercubeDim) {
    throw std::invalid_argument("hypercube dimension must be in [1, " +
                                std::to_string(kMaxHypercubeDim) + "]");
  }
  const std::size_t n = std::size_t{1} << dim;
  std::vector<Edge> edges;
  edges.reserve(n / 2 * dim);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t b = 0; b < dim; ++b) {
      std::size_t v = u ^ (std::size_t{1} << b);
      if (u < v) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
  }
  return Graph::from_edges(n, edges);
}

Graph make_clique_ring(std::size_t d, std::size_t n) {
  validate({GraphFamily::clique_ring, {d, n}, {}});
  const std::size_t block = d + 1;
  const std::size_t copies = n / block;
  std::vector<Edge> edges;
  for (std::size_t c = 0; c < copies; ++c) {
    const auto base = static_cast<Vertex>(c * block);
    for (Vertex a = 0; a < block; ++a) {
      for (Vertex b = a + 1; b < block; ++b) {
        if (a == 0 && b == 1) continue;
        edges.emplace_back(base + a, base + b);
      }
    }
    const auto next = static_cast<Vertex>(((c + 1) % copies) * block);
    edges.emplace_back(base, next + 1);
  }
  return Graph::from_edges(n, edges);
}

// ---------------------------------------------------------------------------
// Edge lists

Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  std::size_t declared = 0;
  bool has_declared = false;
  std::size_t max_index = 0;
  bool any_edge = false;
  std::size_t line_no = 0;

  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("edge list line " + std::to_string(line_no) + ": " + why);
  };

  while (!text.empty()) {
    ++line_no;
    auto eol = text.find('\n');
    auto line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    std::istringstream in{std::string(line)};
    std::string a, b, extra;
    in >> a >> b;
    if (b.empty() || (in >> extra)) fail("expected two fields, got '" + std::string(line) + "'");

    if (a == "n") {
      if (has_declared || any_edge) fail("vertex count must be the first entry");
      try {
        declared = parse_count(b, "vertex count");
      } catch (const std::invalid_argument& e) {
        fail(e.what());
      }
      has_declared = true;
      continue;
    }
    long long u = 0, v = 0;
    auto parse_index = [&](const std::string& tok, long long& out) {
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) fail("malformed index '" + tok + "'");
      if (out < 0) fail("negative index " + tok);
      if (out > std::numeric_limits<Vertex>::max() - 1) fail("index too large " + tok);
    };
    parse_index(a, u);
    parse_index(b, v);
    if (u == v) fail("self-loop at vertex " + a);
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    max_index = std::max<std::size_t>(max_index, static_cast<std::size_t>(std::max(u, v)));
    any_edge = true;
  }

  std::size_t n = any_edge ? max_index + 1 : 0;
  if (has_declared) {
    if (any_edge && declared <= max_index) {
      throw std::invalid_argument("edge list declares " + std::to_string(declared) +
                                  " vertices but uses index " + std::to_string(max_index));
    }
    n = declared;
  }
  return Graph::from_edges(n, edges);
}

Graph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open edge list '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_edge_list(buffer.str());
}

// ---------------------------------------------------------------------------
// Distances

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
  if (source >= g.n_vertices()) throw ContractViolation("bfs source out of range");
  std::vector<std::size_t> dist(g.n_vertices(), kInfinite);
  std::queue<Vertex> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop();
    for (Vertex v : g.neighbors(u)) {
      if (dist[v] == kInfinite) {
        dist[v] = dist[u] + 1;
        queue.push(v);
      }
    }
  }
  return dist;
}

std::size_t eccentricity(const Graph& g, Vertex v) {
  auto dist = bfs_distances(g, v);
  return *std::max_element(dist.begin(), dist.end());
}

std::size_t diameter(const Graph& g) {
  std::size_t best = 0;
  for (Vertex v = 0; v < g.n_vertices(); ++v) {
    auto ecc = eccentricity(g, v);
    if (ecc == kInfinite) return kInfinite;
    best = std::max(best, ecc);
  }
  return best;
}

bool is_connected(const Graph& g) {
  if (g.n_vertices() == 0) return true;
  return eccentricity(g, 0) != kInfinite;
}

std::size_t edge_boundary(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.n_vertices()) throw ContractViolation("vertex set over a different graph");
  std::size_t count = 0;
  for (Vertex u = 0; u < g.n_vertices(); ++u) {
    if (!s.contains(u)) continue;
    for (Vertex v : g.neighbors(u)) count += s.contains(v) ? 0 : 1;
  }
  return count;
}

}  // namespace pzf

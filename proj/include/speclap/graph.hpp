#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "speclap/errors.hpp"

namespace speclap {

struct Vertex {
  std::string id;
  int rank = 1; // dimension of the vector space sitting over this vertex
};

// Directed edges come in reversal pairs: op is a fixed-point-free involution
// on edge ids. A geometric loop is one such pair with tail == head, so it
// contributes 2 to the degree of its vertex.
struct DirectedEdge {
  int id = -1;
  int tail = -1; // vertex index
  int head = -1; // vertex index
  int op = -1;   // id of the reversed edge
};

class Graph {
public:
  Graph() = default; // empty graph

  // Builds from undirected edges; pair k becomes directed edges 2k (u -> v)
  // and 2k+1 (v -> u), mutually reversed.
  static Graph make(std::vector<Vertex> vertices,
                    const std::vector<std::pair<int, int>>& undirected);

  // Builds from an explicit directed edge list; validates the reversal map.
  static Graph from_dedges(std::vector<Vertex> vertices, std::vector<DirectedEdge> dedges);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int dedge_count() const { return static_cast<int>(dedges_.size()); }
  const Vertex& vertex(int i) const { return vertices_[i]; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const DirectedEdge& dedge(int id) const { return dedges_[id]; }
  const std::vector<DirectedEdge>& dedges() const { return dedges_; }

  std::optional<int> index_of(const std::string& id) const;
  int require_index(const std::string& id) const; // throws unknown_vertex

  // Number of directed edges whose head is v (loops count twice).
  int degree(int v) const { return degree_[v]; }
  // Number of distinct neighbors other than v itself.
  int simple_degree(int v) const { return simple_degree_[v]; }

  int total_dimension() const { return total_dim_; }
  int block_offset(int v) const { return offsets_[v]; }

  bool has_loop() const;
  bool has_multi_edge() const;
  bool is_simple_loopless() const { return !has_loop() && !has_multi_edge(); }

  // One representative directed-edge id per reversal pair (the smaller id),
  // sorted ascending. This fixes the undirected edge order everywhere.
  const std::vector<int>& undirected_reps() const { return ureps_; }

private:
  void finalize(); // validates invariants, builds caches

  std::vector<Vertex> vertices_;
  std::vector<DirectedEdge> dedges_;
  std::unordered_map<std::string, int> index_;
  std::vector<int> degree_;
  std::vector<int> simple_degree_;
  std::vector<int> offsets_;
  std::vector<int> ureps_;
  int total_dim_ = 0;
};

// A subset of vertices, kept sorted with a membership mask.
struct VertexSubset {
  std::vector<int> members; // sorted vertex indices
  std::vector<char> mask;   // size |V|

  static VertexSubset of(const Graph& g, std::vector<int> indices);
  static VertexSubset from_ids(const Graph& g, const std::vector<std::string>& ids);
  static VertexSubset from_mask(const Graph& g, unsigned long long bits);
  static VertexSubset complement(const Graph& g, const VertexSubset& a);

  bool contains(int v) const { return mask[v] != 0; }
  int size() const { return static_cast<int>(members.size()); }
  bool empty() const { return members.empty(); }
};

// Shortest-path distance over the underlying undirected graph; nullopt when
// v is unreachable from u.
std::optional<int> distance(const Graph& g, int u, int v);

// Largest finite pairwise distance; nullopt when the graph is disconnected
// (or empty).
std::optional<int> diameter(const Graph& g);

// Directed edges with tail in a and head outside a, ordered by edge id.
std::vector<int> boundary(const Graph& g, const VertexSubset& a);

// Per-vertex (degree, distinct-neighbor degree) pairs, indexed like vertices.
std::vector<std::pair<int, int>> degree_profile(const Graph& g);

// Vertex-by-undirected-edge 0/1 incidence matrix; requires a simple loopless
// graph. Satisfies inc * inc^T = diag(degree) + adjacency.
Eigen::MatrixXd incidence(const Graph& g);

// Edge graph: one rank-1 vertex per undirected edge of g, one edge per shared
// endpoint of each pair of distinct edges. Requires g simple and loopless.
// Satisfies inc^T * inc = 2 I + adjacency(dual).
Graph dual(const Graph& g);

// Classical 0/1 (multiplicity-counting) adjacency matrix on vertices.
Eigen::MatrixXd adjacency_counts(const Graph& g);

} // namespace speclap

#include "speclap/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace speclap {

const char* errc_name(errc c) {
  switch (c) {
    case errc::none: return "ok";
    case errc::bad_input: return "BadInput";
    case errc::unknown_vertex: return "UnknownVertex";
    case errc::bad_op_pairing: return "BadOpPairing";
    case errc::bad_rank: return "BadRank";
    case errc::not_simple: return "NotSimple";
    case errc::rank_mismatch: return "RankMismatch";
    case errc::shape_error: return "ShapeError";
    case errc::degree_zero: return "DegreeZero";
    case errc::not_hermitian: return "NotHermitian";
    case errc::no_convergence: return "NoConvergence";
    case errc::too_large: return "TooLarge";
    case errc::bad_param: return "BadParam";
    case errc::zero_volume: return "ZeroVolume";
    case errc::zero_mass: return "ZeroMass";
    case errc::zero_denominator: return "ZeroDenominator";
    case errc::diameter_too_small: return "DiameterTooSmall";
    case errc::undefined_ratio: return "UndefinedM";
    case errc::not_regular: return "NotRegular";
    case errc::not_symmetric: return "NotSymmetric";
    case errc::identity_in_s: return "IdentityInS";
    case errc::not_compatible: return "NotCompatible";
    case errc::not_in_upq: return "NotInUpq";
    case errc::not_stochastic: return "NotStochastic";
    case errc::rank_clash: return "RankClash";
    case errc::internal: return "Internal";
  }
  return "Unknown";
}

Graph Graph::make(std::vector<Vertex> vertices,
                  const std::vector<std::pair<int, int>>& undirected) {
  std::vector<DirectedEdge> dedges;
  dedges.reserve(2 * undirected.size());
  int n = static_cast<int>(vertices.size());
  for (std::size_t k = 0; k < undirected.size(); ++k) {
    int u = undirected[k].first;
    int v = undirected[k].second;
    if (u < 0 || u >= n || v < 0 || v >= n)
      fail(errc::unknown_vertex, "edge endpoint index out of range");
    int a = static_cast<int>(2 * k);
    dedges.push_back({a, u, v, a + 1});
    dedges.push_back({a + 1, v, u, a});
  }
  return from_dedges(std::move(vertices), std::move(dedges));
}

Graph Graph::from_dedges(std::vector<Vertex> vertices, std::vector<DirectedEdge> dedges) {
  Graph g;
  g.vertices_ = std::move(vertices);
  g.dedges_ = std::move(dedges);
  g.finalize();
  return g;
}

void Graph::finalize() {
  int n = vertex_count();
  for (int i = 0; i < n; ++i) {
    const Vertex& v = vertices_[i];
    if (v.rank < 0) fail(errc::bad_rank, "negative rank at vertex '" + v.id + "'");
    if (!index_.emplace(v.id, i).second)
      fail(errc::bad_input, "duplicate vertex id '" + v.id + "'");
  }

  int m = dedge_count();
  for (int e = 0; e < m; ++e) {
    const DirectedEdge& d = dedges_[e];
    if (d.id != e) fail(errc::bad_input, "directed edge ids must be 0..m-1 in order");
    if (d.tail < 0 || d.tail >= n || d.head < 0 || d.head >= n)
      fail(errc::unknown_vertex, "edge endpoint index out of range");
    if (d.op < 0 || d.op >= m || d.op == e)
      fail(errc::bad_op_pairing, "reversal must be a fixed-point-free involution");
    const DirectedEdge& r = dedges_[d.op];
    if (r.op != e || r.tail != d.head || r.head != d.tail)
      fail(errc::bad_op_pairing, "reversed edge must swap tail and head");
  }

  degree_.assign(n, 0);
  for (const DirectedEdge& d : dedges_) degree_[d.head]++;

  simple_degree_.assign(n, 0);
  {
    std::set<std::pair<int, int>> seen;
    for (const DirectedEdge& d : dedges_) {
      if (d.tail == d.head) continue;
      if (seen.insert({d.head, d.tail}).second) simple_degree_[d.head]++;
    }
  }

  offsets_.assign(n, 0);
  total_dim_ = 0;
  for (int i = 0; i < n; ++i) {
    offsets_[i] = total_dim_;
    total_dim_ += vertices_[i].rank;
  }

  ureps_.clear();
  for (const DirectedEdge& d : dedges_)
    if (d.id < d.op) ureps_.push_back(d.id);
}

std::optional<int> Graph::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int Graph::require_index(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) fail(errc::unknown_vertex, "no vertex with id '" + id + "'");
  return it->second;
}

bool Graph::has_loop() const {
  for (const DirectedEdge& d : dedges_)
    if (d.tail == d.head) return true;
  return false;
}

bool Graph::has_multi_edge() const {
  std::set<std::pair<int, int>> seen;
  for (int e : ureps_) {
    const DirectedEdge& d = dedges_[e];
    auto key = std::minmax(d.tail, d.head);
    if (!seen.insert({key.first, key.second}).second) return true;
  }
  return false;
}

VertexSubset VertexSubset::of(const Graph& g, std::vector<int> indices) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  VertexSubset s;
  s.mask.assign(g.vertex_count(), 0);
  for (int v : indices) {
    if (v < 0 || v >= g.vertex_count()) fail(errc::unknown_vertex, "subset index out of range");
    s.mask[v] = 1;
  }
  s.members = std::move(indices);
  return s;
}

VertexSubset VertexSubset::from_ids(const Graph& g, const std::vector<std::string>& ids) {
  std::vector<int> idx;
  idx.reserve(ids.size());
  for (const std::string& id : ids) idx.push_back(g.require_index(id));
  return of(g, std::move(idx));
}

VertexSubset VertexSubset::from_mask(const Graph& g, unsigned long long bits) {
  std::vector<int> idx;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (bits & (1ull << v)) idx.push_back(v);
  return of(g, std::move(idx));
}

VertexSubset VertexSubset::complement(const Graph& g, const VertexSubset& a) {
  std::vector<int> idx;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!a.contains(v)) idx.push_back(v);
  return of(g, std::move(idx));
}

namespace {

std::vector<std::vector<int>> neighbor_lists(const Graph& g) {
  std::vector<std::vector<int>> nbr(g.vertex_count());
  for (const DirectedEdge& d : g.dedges()) nbr[d.tail].push_back(d.head);
  return nbr;
}

std::vector<int> bfs_layers(const Graph& g, int src, const std::vector<std::vector<int>>& nbr) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::deque<int> q{src};
  dist[src] = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int w : nbr[u])
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push_back(w);
      }
  }
  return dist;
}

} // namespace

std::optional<int> distance(const Graph& g, int u, int v) {
  if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
    fail(errc::unknown_vertex, "distance endpoint out of range");
  auto nbr = neighbor_lists(g);
  int d = bfs_layers(g, u, nbr)[v];
  if (d < 0) return std::nullopt;
  return d;
}

std::optional<int> diameter(const Graph& g) {
  if (g.vertex_count() == 0) return std::nullopt;
  auto nbr = neighbor_lists(g);
  int best = 0;
  for (int u = 0; u < g.vertex_count(); ++u) {
    auto dist = bfs_layers(g, u, nbr);
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (dist[v] < 0) return std::nullopt;
      best = std::max(best, dist[v]);
    }
  }
  return best;
}

std::vector<int> boundary(const Graph& g, const VertexSubset& a) {
  std::vector<int> out;
  for (const DirectedEdge& d : g.dedges())
    if (a.contains(d.tail) && !a.contains(d.head)) out.push_back(d.id);
  return out;
}

std::vector<std::pair<int, int>> degree_profile(const Graph& g) {
  std::vector<std::pair<int, int>> out(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) out[v] = {g.degree(v), g.simple_degree(v)};
  return out;
}

Eigen::MatrixXd incidence(const Graph& g) {
  if (!g.is_simple_loopless())
    fail(errc::not_simple, "incidence requires a simple loopless graph");
  const std::vector<int>& reps = g.undirected_reps();
  Eigen::MatrixXd inc = Eigen::MatrixXd::Zero(g.vertex_count(), reps.size());
  for (std::size_t j = 0; j < reps.size(); ++j) {
    const DirectedEdge& d = g.dedge(reps[j]);
    inc(d.tail, j) = 1.0;
    inc(d.head, j) = 1.0;
  }
  return inc;
}

Graph dual(const Graph& g) {
  if (!g.is_simple_loopless())
    fail(errc::not_simple, "dual requires a simple loopless graph");
  const std::vector<int>& reps = g.undirected_reps();
  int m = static_cast<int>(reps.size());
  std::vector<Vertex> verts(m);
  for (int j = 0; j < m; ++j) verts[j] = {"e" + std::to_string(j), 1};
  std::vector<std::pair<int, int>> edges;
  for (int j = 0; j < m; ++j) {
    const DirectedEdge& a = g.dedge(reps[j]);
    for (int k = j + 1; k < m; ++k) {
      const DirectedEdge& b = g.dedge(reps[k]);
      int shared = (a.tail == b.tail) + (a.tail == b.head) + (a.head == b.tail) +
                   (a.head == b.head);
      for (int s = 0; s < shared; ++s) edges.push_back({j, k});
    }
  }
  return Graph::make(std::move(verts), edges);
}

Eigen::MatrixXd adjacency_counts(const Graph& g) {
  // Undirected edge counts; a geometric loop adds 1 to its diagonal entry.
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.vertex_count(), g.vertex_count());
  for (int e : g.undirected_reps()) {
    const DirectedEdge& d = g.dedge(e);
    if (d.tail == d.head) {
      a(d.tail, d.tail) += 1.0;
    } else {
      a(d.tail, d.head) += 1.0;
      a(d.head, d.tail) += 1.0;
    }
  }
  return a;
}

} // namespace speclap

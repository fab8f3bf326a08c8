#include "speclap/surgery.hpp"

#include <algorithm>
#include <numeric>

namespace speclap {

namespace {

// Renumber arbitrary class labels so that classes appear in order of their
// smallest member, and collect members per class.
VertexPartition canonicalize(const Graph& g, const std::vector<int>& raw,
                             const std::vector<std::string>* raw_names) {
  int n = g.vertex_count();
  if (static_cast<int>(raw.size()) != n)
    fail(errc::bad_input, "partition must cover every vertex");

  std::vector<int> first_member; // raw label -> smallest vertex, discovery order
  std::map<int, int> seen;       // raw label -> position in first_member
  for (int v = 0; v < n; ++v) {
    if (raw[v] < 0) fail(errc::bad_input, "negative class label");
    if (seen.emplace(raw[v], static_cast<int>(first_member.size())).second)
      first_member.push_back(v);
  }
  int k = static_cast<int>(first_member.size());

  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return first_member[a] < first_member[b]; });
  std::vector<int> rank(k);
  for (int i = 0; i < k; ++i) rank[order[i]] = i;

  VertexPartition p;
  p.class_of.resize(n);
  p.members.resize(k);
  p.names.resize(k);
  for (int v = 0; v < n; ++v) {
    int c = rank[seen.at(raw[v])];
    p.class_of[v] = c;
    p.members[c].push_back(v);
  }
  for (int c = 0; c < k; ++c)
    p.names[c] = raw_names ? (*raw_names)[seen.at(raw[p.members[c][0]])]
                           : g.vertex(p.members[c][0]).id;
  return p;
}

} // namespace

VertexPartition VertexPartition::from_map(
    const Graph& g, const std::map<std::string, std::string>& vertex_to_class) {
  int n = g.vertex_count();
  std::vector<int> raw(n, -1);
  std::map<std::string, int> label_ids;
  std::vector<std::string> labels;
  for (const auto& [vid, cname] : vertex_to_class) {
    int v = g.require_index(vid);
    auto [it, fresh] = label_ids.emplace(cname, static_cast<int>(labels.size()));
    if (fresh) labels.push_back(cname);
    raw[v] = it->second;
  }
  for (int v = 0; v < n; ++v)
    if (raw[v] < 0) fail(errc::bad_input, "vertex missing from partition: " + g.vertex(v).id);
  return canonicalize(g, raw, &labels);
}

VertexPartition VertexPartition::from_class_of(const Graph& g, const std::vector<int>& class_of) {
  return canonicalize(g, class_of, nullptr);
}

VertexPartition VertexPartition::singletons(const Graph& g) {
  std::vector<int> raw(g.vertex_count());
  std::iota(raw.begin(), raw.end(), 0);
  return canonicalize(g, raw, nullptr);
}

Collapsed collapse(const Graph& g, const TransmissionSystem& ts, const VertexPartition& part) {
  std::vector<Vertex> verts(part.class_count());
  for (int c = 0; c < part.class_count(); ++c) {
    int r = g.vertex(part.members[c][0]).rank;
    for (int v : part.members[c])
      if (g.vertex(v).rank != r)
        fail(errc::rank_clash, "merged vertices must share one rank");
    verts[c] = {part.names[c], r};
  }
  std::vector<DirectedEdge> dedges = g.dedges();
  for (DirectedEdge& d : dedges) {
    d.tail = part.class_of[d.tail];
    d.head = part.class_of[d.head];
  }
  return {Graph::from_dedges(std::move(verts), std::move(dedges)), ts};
}

Pushforward pushforward_collapse(const Graph& g, const TransmissionSystem& ts,
                                 const VertexPartition& part) {
  validate_shapes(g, ts);
  int k = part.class_count();

  std::vector<Vertex> verts(k);
  std::vector<int> summand_offset(g.vertex_count(), 0);
  Pushforward out;
  out.weight.entries.resize(k);
  for (int c = 0; c < k; ++c) {
    int total = 0;
    for (int v : part.members[c]) {
      summand_offset[v] = total;
      total += g.vertex(v).rank;
    }
    verts[c] = {part.names[c], total};
    Eigen::VectorXd w(total);
    for (int v : part.members[c])
      w.segment(summand_offset[v], g.vertex(v).rank).setConstant(double(g.degree(v)));
    out.weight.entries[c] = std::move(w);
  }

  std::vector<DirectedEdge> dedges = g.dedges();
  out.system.mats.resize(g.dedge_count());
  for (DirectedEdge& d : dedges) {
    int ct = part.class_of[d.tail];
    int ch = part.class_of[d.head];
    Matrix p = Matrix::Zero(verts[ch].rank, verts[ct].rank);
    p.block(summand_offset[d.head], summand_offset[d.tail], g.vertex(d.head).rank,
            g.vertex(d.tail).rank) = ts.mats[d.id];
    out.system.mats[d.id] = std::move(p);
    d.tail = ct;
    d.head = ch;
  }
  out.graph = Graph::from_dedges(std::move(verts), std::move(dedges));
  return out;
}

Amalgamated amalgamate(const Graph& g, const TransmissionSystem& ts) {
  validate_shapes(g, ts);
  int n = g.vertex_count();

  // Bucket original directed edges by ordered endpoint pair.
  std::map<std::pair<int, int>, std::vector<int>> by_pair;
  for (const DirectedEdge& d : g.dedges()) by_pair[{d.tail, d.head}].push_back(d.id);

  Amalgamated out;
  std::vector<std::pair<int, int>> edges;
  std::vector<Matrix> fwd, bwd;
  for (int v = 0; v < n; ++v) {
    auto loops = by_pair.find({v, v});
    if (loops != by_pair.end()) {
      int r = g.vertex(v).rank;
      Matrix half = Matrix::Zero(r, r);
      for (int e : loops->second) half += ts.mats[e];
      half *= 0.5;
      edges.push_back({v, v});
      fwd.push_back(half);
      bwd.push_back(half);
    }
    for (int w = v + 1; w < n; ++w) {
      auto f = by_pair.find({v, w});
      auto b = by_pair.find({w, v});
      if (f == by_pair.end() && b == by_pair.end()) continue;
      Matrix pf = Matrix::Zero(g.vertex(w).rank, g.vertex(v).rank);
      Matrix pb = Matrix::Zero(g.vertex(v).rank, g.vertex(w).rank);
      if (f != by_pair.end())
        for (int e : f->second) pf += ts.mats[e];
      if (b != by_pair.end())
        for (int e : b->second) pb += ts.mats[e];
      edges.push_back({v, w});
      fwd.push_back(std::move(pf));
      bwd.push_back(std::move(pb));
    }
  }

  out.graph = Graph::make(g.vertices(), edges);
  out.system.mats.resize(out.graph.dedge_count());
  for (std::size_t kedge = 0; kedge < edges.size(); ++kedge) {
    out.system.mats[2 * kedge] = std::move(fwd[kedge]);
    out.system.mats[2 * kedge + 1] = std::move(bwd[kedge]);
  }
  out.weight.entries.resize(n);
  for (int v = 0; v < n; ++v)
    out.weight.entries[v] = Eigen::VectorXd::Constant(g.vertex(v).rank, double(g.degree(v)));
  return out;
}

} // namespace speclap

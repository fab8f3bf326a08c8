#include "speclap/constructors.hpp"

#include <algorithm>
#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

#include "speclap/rng.hpp"

namespace speclap {

// --------------------------------------------------------------------------
// Associations

Association Association::from_ids(const Graph& g,
                                  const std::map<std::string, std::vector<std::string>>& m) {
  Association a;
  a.sets.assign(g.vertex_count(), {});
  for (const auto& [key, vals] : m) {
    int v = g.require_index(key);
    std::vector<int> idx;
    idx.reserve(vals.size());
    for (const std::string& id : vals) idx.push_back(g.require_index(id));
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    a.sets[v] = std::move(idx);
  }
  return a;
}

namespace {

std::vector<std::vector<int>> distinct_neighbors(const Graph& g) {
  std::vector<std::vector<int>> nbr(g.vertex_count());
  for (int e : g.undirected_reps()) {
    const DirectedEdge& d = g.dedge(e);
    nbr[d.tail].push_back(d.head);
    nbr[d.head].push_back(d.tail);
  }
  for (auto& l : nbr) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
  }
  return nbr;
}

bool set_contains(const std::vector<int>& sorted, int x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

int intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
  int n = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) ++i;
    else if (*j < *i) ++j;
    else { ++n; ++i; ++j; }
  }
  return n;
}

} // namespace

AssociationSystem association_system(const Graph& g, const Association& assoc) {
  if (!g.is_simple_loopless())
    fail(errc::not_simple, "associations need a simple loopless graph");
  if (static_cast<int>(assoc.sets.size()) != g.vertex_count())
    fail(errc::shape_error, "association needs one set per vertex");
  for (const auto& s : assoc.sets) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] < 0 || s[i] >= g.vertex_count())
        fail(errc::unknown_vertex, "association names an unknown vertex");
      if (i > 0 && s[i] <= s[i - 1])
        fail(errc::bad_input, "association sets must be sorted without repeats");
    }
  }

  AssociationSystem as;
  as.basis = assoc.sets;

  std::vector<Vertex> verts = g.vertices();
  for (int v = 0; v < g.vertex_count(); ++v)
    verts[v].rank = static_cast<int>(assoc.sets[v].size());
  as.graph = Graph::from_dedges(std::move(verts), g.dedges());

  as.system.mats.resize(g.dedge_count());
  for (const DirectedEdge& d : g.dedges()) {
    const std::vector<int>& cols = assoc.sets[d.tail];
    const std::vector<int>& rows = assoc.sets[d.head];
    Matrix p = Matrix::Zero(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < cols.size(); ++c)
        if (rows[r] == cols[c]) p(r, c) = 1.0;
    as.system.mats[d.id] = std::move(p);
  }

  auto nbr = distinct_neighbors(g);
  as.counts.resize(g.vertex_count());
  as.weight.entries.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    const std::vector<int>& basis = assoc.sets[v];
    as.counts[v].assign(basis.size(), 0);
    Eigen::VectorXd w(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
      int n = 0;
      for (int b : nbr[v])
        if (set_contains(assoc.sets[b], basis[i])) ++n;
      as.counts[v][i] = n;
      // A zero count decouples the coordinate entirely, so its weight is
      // immaterial; 1 keeps the diagonal positive.
      w(i) = n > 0 ? double(n) : 1.0;
    }
    as.weight.entries[v] = std::move(w);
  }
  return as;
}

Cochain association_phi(const AssociationSystem& as) {
  Cochain phi;
  phi.blocks.resize(as.graph.vertex_count());
  for (int v = 0; v < as.graph.vertex_count(); ++v) {
    Vector b(as.counts[v].size());
    for (std::size_t i = 0; i < as.counts[v].size(); ++i)
      b(i) = std::sqrt(double(as.counts[v][i]));
    phi.blocks[v] = std::move(b);
  }
  return phi;
}

BoundReport cohesion_estimate(const Graph& g, const Association& assoc,
                              const VertexSubset& a, const VertexSubset& b, double tol) {
  if (a.empty() || b.empty()) fail(errc::bad_param, "sets must be nonempty");
  for (int v : a.members)
    if (b.contains(v)) fail(errc::bad_param, "sets must be disjoint");

  AssociationSystem as = association_system(g, assoc);
  Cochain phi = association_phi(as);
  double r = 0.0, s = 0.0;
  for (int v : a.members) r += phi.blocks[v].squaredNorm();
  for (int v : b.members) s += phi.blocks[v].squaredNorm();
  if (r <= 0.0 || s <= 0.0) fail(errc::zero_mass, "a set carries no harmonic mass");

  auto nbr = distinct_neighbors(g);
  double c_ab = 0.0, c_ao = 0.0, c_bo = 0.0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    bool in_a = a.contains(v);
    bool in_b = b.contains(v);
    if (!in_a && !in_b) continue;
    for (int u : nbr[v]) {
      int overlap = intersection_size(assoc.sets[v], assoc.sets[u]);
      if (overlap == 0) continue;
      if (in_a) {
        if (b.contains(u)) c_ab += overlap;
        else if (!a.contains(u)) c_ao += overlap;
      } else {
        if (!a.contains(u) && !b.contains(u)) c_bo += overlap;
      }
    }
  }

  double bound = 2.0 * (1.0 / r + 1.0 / s) * c_ab +
                 (s * s * c_ao + r * r * c_bo) / (r * s * (r + s));

  Spectrum sp = eigen_spectrum(laplacian(as.graph, as.system, &as.weight), true, false);
  double target = sp.values[1].real();

  BoundReport rep;
  rep.name = "cohesion";
  rep.bound = bound;
  rep.target = target;
  rep.margin = bound - target;
  rep.pass = rep.margin >= -tol;
  rep.context = {{"R", r},       {"S", s},       {"crossing", c_ab},
                 {"outside_A", c_ao}, {"outside_B", c_bo}};
  return rep;
}

// --------------------------------------------------------------------------
// Cayley graphs

AbelianGroup::AbelianGroup(std::vector<int> m) : moduli(std::move(m)) {
  if (moduli.empty()) fail(errc::bad_param, "need at least one cyclic factor");
  for (int x : moduli) {
    if (x < 1) fail(errc::bad_param, "moduli must be positive");
    order_ *= x;
    if (order_ > (1 << 20)) fail(errc::too_large, "group order above 2^20");
  }
}

AbelianGroup::Elem AbelianGroup::normalize(Elem e) const {
  if (e.size() != moduli.size()) fail(errc::shape_error, "element arity mismatch");
  for (std::size_t i = 0; i < e.size(); ++i) {
    int m = moduli[i];
    e[i] = ((e[i] % m) + m) % m;
  }
  return e;
}

AbelianGroup::Elem AbelianGroup::mul(const Elem& a, const Elem& b) const {
  Elem c(moduli.size());
  for (std::size_t i = 0; i < moduli.size(); ++i) c[i] = (a[i] + b[i]) % moduli[i];
  return c;
}

AbelianGroup::Elem AbelianGroup::inv(const Elem& a) const {
  Elem c(moduli.size());
  for (std::size_t i = 0; i < moduli.size(); ++i) c[i] = (moduli[i] - a[i]) % moduli[i];
  return c;
}

long long AbelianGroup::index_of(const Elem& e) const {
  long long idx = 0;
  for (std::size_t i = 0; i < moduli.size(); ++i) idx = idx * moduli[i] + e[i];
  return idx;
}

AbelianGroup::Elem AbelianGroup::elem_at(long long i) const {
  Elem e(moduli.size());
  for (std::size_t k = moduli.size(); k-- > 0;) {
    e[k] = int(i % moduli[k]);
    i /= moduli[k];
  }
  return e;
}

cplx AbelianGroup::character(const Elem& a, const Elem& g) const {
  double phase = 0.0;
  for (std::size_t i = 0; i < moduli.size(); ++i)
    phase += double(a[i]) * double(g[i]) / double(moduli[i]);
  return std::polar(1.0, 2.0 * M_PI * phase);
}

std::string AbelianGroup::render(const Elem& e) {
  std::string s = "g";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += '_';
    s += std::to_string(e[i]);
  }
  return s;
}

namespace {

// Canonical sorted multiset; rejects the identity and asymmetric multisets.
std::vector<AbelianGroup::Elem> validate_generators(const AbelianGroup& group,
                                                    std::vector<AbelianGroup::Elem> s) {
  if (s.empty()) fail(errc::bad_param, "generator multiset is empty");
  for (auto& e : s) {
    e = group.normalize(std::move(e));
    if (e == group.identity())
      fail(errc::identity_in_s, "the identity cannot generate an edge pair");
  }
  std::sort(s.begin(), s.end());
  std::map<AbelianGroup::Elem, int> mult;
  for (const auto& e : s) mult[e]++;
  for (const auto& [e, m] : mult)
    if (mult[group.inv(e)] != m)
      fail(errc::not_symmetric, "generator multiset must be closed under inversion");
  return s;
}

EdgeMatrixFamily validate_family(const AbelianGroup& group,
                                 const std::vector<AbelianGroup::Elem>& s,
                                 const EdgeMatrixFamily& f_in) {
  EdgeMatrixFamily f;
  if (f_in.empty()) {
    for (const auto& e : s) f[e] = Matrix::Identity(1, 1);
    return f;
  }
  for (const auto& [e, m] : f_in) f[group.normalize(e)] = m;
  Eigen::Index n = -1;
  for (const auto& e : s) {
    auto it = f.find(e);
    if (it == f.end()) fail(errc::not_compatible, "family misses a generator");
    const Matrix& m = it->second;
    if (m.rows() != m.cols()) fail(errc::not_compatible, "family matrices must be square");
    if (n < 0) n = m.rows();
    if (m.rows() != n) fail(errc::not_compatible, "family matrices must share one size");
  }
  for (const auto& e : s) {
    const Matrix& m = f.at(e);
    const Matrix& w = f.at(group.inv(e));
    if (spectral_norm(w - m.adjoint()) > 1e-12)
      fail(errc::not_compatible, "family must send inverses to adjoints");
  }
  return f;
}

} // namespace

CayleyGraph cayley_graph(const AbelianGroup& group, std::vector<AbelianGroup::Elem> s) {
  CayleyGraph cg{group, validate_generators(group, std::move(s)), Graph(), {}};

  long long n = group.order();
  std::vector<Vertex> verts(n);
  for (long long i = 0; i < n; ++i) verts[i] = {AbelianGroup::render(group.elem_at(i)), 1};

  std::vector<std::pair<int, int>> edges;
  std::vector<AbelianGroup::Elem> egen;
  for (const auto& gen : cg.gens) {
    AbelianGroup::Elem ginv = group.inv(gen);
    if (ginv < gen) continue; // the inverse occurrence owns this pair class
    bool involution = ginv == gen;
    for (long long x = 0; x < n; ++x) {
      AbelianGroup::Elem ex = group.elem_at(x);
      long long y = group.index_of(group.mul(ex, gen));
      if (involution && y < x) continue; // each unordered pair once
      edges.push_back({int(x), int(y)});
      egen.push_back(gen);
      egen.push_back(ginv);
    }
  }
  cg.graph = Graph::make(std::move(verts), edges);
  cg.edge_gen = std::move(egen);
  return cg;
}

CayleySystem cayley_system(const CayleyGraph& cg, const EdgeMatrixFamily& f_in) {
  EdgeMatrixFamily f = validate_family(cg.group, cg.gens, f_in);
  int rank = int(f.begin()->second.rows());

  std::vector<Vertex> verts = cg.graph.vertices();
  for (Vertex& v : verts) v.rank = rank;
  CayleySystem out;
  out.graph = Graph::from_dedges(std::move(verts), cg.graph.dedges());
  out.system.mats.resize(cg.graph.dedge_count());
  for (int e = 0; e < cg.graph.dedge_count(); ++e) out.system.mats[e] = f.at(cg.edge_gen[e]);
  return out;
}

std::vector<cplx> cayley_spectrum(const AbelianGroup& group,
                                  const std::vector<AbelianGroup::Elem>& s_in,
                                  const EdgeMatrixFamily& f_in) {
  std::vector<AbelianGroup::Elem> s = validate_generators(group, s_in);
  EdgeMatrixFamily f = validate_family(group, s, f_in);
  double k = double(s.size());
  Eigen::Index rank = f.begin()->second.rows();

  std::vector<cplx> values;
  values.reserve(std::size_t(group.order()) * std::size_t(rank));
  for (long long a = 0; a < group.order(); ++a) {
    AbelianGroup::Elem chi = group.elem_at(a);
    Matrix m = Matrix::Zero(rank, rank);
    for (const auto& gen : s) m += group.character(chi, gen) * f.at(gen);
    // Closure under inversion makes every character sum self-adjoint.
    Spectrum sp = eigen_spectrum(m, true, false);
    for (const cplx& mu : sp.values) values.push_back(1.0 - mu / k);
  }
  sort_complex(values);
  return values;
}

// --------------------------------------------------------------------------
// Scattering systems

Eigen::MatrixXd upq_form(int p, int q) {
  Eigen::MatrixXd j = Eigen::MatrixXd::Identity(p + q, p + q);
  j.bottomRightCorner(q, q) *= -1.0;
  return j;
}

double upq_deviation(const Matrix& m, int p, int q) {
  if (m.rows() != p + q || m.cols() != p + q)
    fail(errc::shape_error, "matrix size must be p + q");
  Matrix j = upq_form(p, q).cast<cplx>();
  return spectral_norm(m.adjoint() * j * m - j);
}

namespace {

Matrix gaussian_matrix(int rows, int cols, Rng& rng) {
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = rng.cgaussian();
  return m;
}

Matrix random_upq_draw(int p, int q, Rng& rng) {
  Matrix a = gaussian_matrix(p, p, rng);
  Matrix d = gaussian_matrix(q, q, rng);
  Matrix b = gaussian_matrix(p, q, rng);
  Matrix x(p + q, p + q);
  x.topLeftCorner(p, p) = 0.5 * (a - a.adjoint());
  x.bottomRightCorner(q, q) = 0.5 * (d - d.adjoint());
  x.topRightCorner(p, q) = b;
  x.bottomLeftCorner(q, p) = b.adjoint();
  return x.exp();
}

Matrix haar_unitary(int n, Rng& rng) {
  Matrix g = gaussian_matrix(n, n, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix u = qr.householderQ() * Matrix::Identity(n, n);
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i) {
    cplx d = r(i, i);
    double mag = std::abs(d);
    u.col(i) *= mag > 0.0 ? d / mag : cplx(1.0, 0.0);
  }
  return u;
}

} // namespace

Matrix random_upq(int p, int q, std::uint64_t seed) {
  if (p < 1 || q < 1) fail(errc::bad_param, "need p, q >= 1");
  Rng rng(seed);
  return random_upq_draw(p, q, rng);
}

QuantumSystems quantum_system(const Graph& base, int spin,
                              const std::vector<Matrix>& barriers, double tol) {
  if (spin < 0) fail(errc::bad_param, "spin must be nonnegative");
  int half = spin + 1;
  int rank = 2 * half;
  const std::vector<int>& reps = base.undirected_reps();
  if (barriers.size() != reps.size())
    fail(errc::shape_error, "need one barrier per undirected edge");
  for (const Matrix& m : barriers)
    if (upq_deviation(m, half, half) > std::max(tol, 1e-9))
      fail(errc::not_in_upq, "barrier fails indefinite-unitarity membership");

  QuantumSystems qs;
  qs.spin = spin;
  std::vector<Vertex> verts = base.vertices();
  for (Vertex& v : verts) v.rank = rank;
  qs.graph = Graph::from_dedges(std::move(verts), base.dedges());

  Matrix j = upq_form(half, half).cast<cplx>();
  Matrix perm = Matrix::Zero(rank, rank);
  perm.topRightCorner(half, half) = Matrix::Identity(half, half);
  perm.bottomLeftCorner(half, half) = Matrix::Identity(half, half);

  qs.f.mats.resize(base.dedge_count());
  for (std::size_t k = 0; k < reps.size(); ++k) {
    const DirectedEdge& d = base.dedge(reps[k]);
    int fwd = d.tail <= d.head ? d.id : d.op;
    const Matrix& m = barriers[k];
    qs.f.mats[fwd] = perm * m;
    // Membership gives the exact inverse M^(-1) = J M^* J.
    qs.f.mats[base.dedge(fwd).op] = (j * m.adjoint() * j) * perm;
  }
  qs.g.mats.resize(base.dedge_count());
  for (int e = 0; e < base.dedge_count(); ++e)
    qs.g.mats[e] = cplx(0.0, 1.0) * j * qs.f.mats[e];
  return qs;
}

QuantumSystems random_quantum_system(const Graph& base, int spin, std::uint64_t seed,
                                     double tol) {
  if (spin < 0) fail(errc::bad_param, "spin must be nonnegative");
  int half = spin + 1;
  Rng rng(seed);
  std::vector<Matrix> barriers;
  barriers.reserve(base.undirected_reps().size());
  for (std::size_t k = 0; k < base.undirected_reps().size(); ++k)
    barriers.push_back(random_upq_draw(half, half, rng));
  return quantum_system(base, spin, barriers, tol);
}

// --------------------------------------------------------------------------
// Unitary random systems and walks

TransmissionSystem random_unitary_system(const Graph& g, std::uint64_t seed) {
  Rng rng(seed);
  TransmissionSystem ts;
  ts.mats.resize(g.dedge_count());
  for (int e : g.undirected_reps()) {
    const DirectedEdge& d = g.dedge(e);
    if (g.vertex(d.tail).rank != g.vertex(d.head).rank)
      fail(errc::rank_mismatch, "unitary edges need equal ranks");
    Matrix u = haar_unitary(g.vertex(d.tail).rank, rng);
    ts.mats[d.id] = u;
    ts.mats[d.op] = u.adjoint();
  }
  return ts;
}

Graph with_uniform_rank(const Graph& g, int rank) {
  if (rank < 1) fail(errc::bad_rank, "rank must be positive");
  std::vector<Vertex> verts = g.vertices();
  for (Vertex& v : verts) v.rank = rank;
  return Graph::from_dedges(std::move(verts), g.dedges());
}

WalkSystem walk_system(const Eigen::MatrixXd& probs, double tol) {
  int n = int(probs.rows());
  if (probs.cols() != n || n < 1) fail(errc::shape_error, "walk matrix must be square");
  for (int i = 0; i < n; ++i) {
    double col = 0.0;
    for (int j = 0; j < n; ++j) {
      if (probs(j, i) < 0.0) fail(errc::not_stochastic, "negative step probability");
      col += probs(j, i);
    }
    if (std::abs(col - 1.0) > 1e-9)
      fail(errc::not_stochastic, "columns must sum to one");
  }

  std::vector<Vertex> verts(n);
  for (int i = 0; i < n; ++i) verts[i] = {"v" + std::to_string(i), 1};
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    if (probs(i, i) != 0.0) edges.push_back({i, i});
    for (int j = i + 1; j < n; ++j)
      if (probs(j, i) != 0.0 || probs(i, j) != 0.0) edges.push_back({i, j});
  }

  WalkSystem ws;
  ws.graph = Graph::make(std::move(verts), edges);
  ws.system.mats.resize(ws.graph.dedge_count());
  for (int e : ws.graph.undirected_reps()) {
    const DirectedEdge& d = ws.graph.dedge(e);
    if (d.tail == d.head) {
      double q = double(ws.graph.degree(d.tail)) * 0.5 * probs(d.tail, d.tail);
      ws.system.mats[d.id] = Matrix::Constant(1, 1, q);
      ws.system.mats[d.op] = Matrix::Constant(1, 1, q);
    } else {
      ws.system.mats[d.id] =
          Matrix::Constant(1, 1, double(ws.graph.degree(d.head)) * probs(d.head, d.tail));
      ws.system.mats[d.op] =
          Matrix::Constant(1, 1, double(ws.graph.degree(d.tail)) * probs(d.tail, d.head));
    }
  }
  ws.weight = DiagonalWeight::degrees(ws.graph);
  ws.reflexive = true;
  for (int i = 0; i < n && ws.reflexive; ++i)
    for (int j = i + 1; j < n; ++j) {
      double lhs = double(ws.graph.degree(j)) * probs(j, i);
      double rhs = double(ws.graph.degree(i)) * probs(i, j);
      if (std::abs(lhs - rhs) > tol) {
        ws.reflexive = false;
        break;
      }
    }
  return ws;
}

} // namespace speclap

#include "speclap/transmission.hpp"

#include <cmath>

namespace speclap {

Cochain Cochain::zero(const Graph& g) {
  Cochain f;
  f.blocks.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) f.blocks[v] = Vector::Zero(g.vertex(v).rank);
  return f;
}

Vector Cochain::flatten(const Graph& g) const {
  Vector x = Vector::Zero(g.total_dimension());
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (blocks[v].size() != g.vertex(v).rank)
      fail(errc::shape_error, "cochain block length does not match vertex rank");
    x.segment(g.block_offset(v), g.vertex(v).rank) = blocks[v];
  }
  return x;
}

Cochain Cochain::unflatten(const Graph& g, const Vector& x) {
  if (x.size() != g.total_dimension())
    fail(errc::shape_error, "vector length does not match total dimension");
  Cochain f;
  f.blocks.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    f.blocks[v] = x.segment(g.block_offset(v), g.vertex(v).rank);
  return f;
}

double Cochain::norm() const {
  double s = 0.0;
  for (const Vector& b : blocks) s += b.squaredNorm();
  return std::sqrt(s);
}

DiagonalWeight DiagonalWeight::degrees(const Graph& g) {
  DiagonalWeight w;
  w.entries.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0 && g.vertex(v).rank > 0)
      fail(errc::degree_zero, "isolated vertex '" + g.vertex(v).id +
                                  "' needs an explicit weight");
    w.entries[v] = Eigen::VectorXd::Constant(g.vertex(v).rank, double(g.degree(v)));
  }
  return w;
}

Eigen::VectorXd DiagonalWeight::flatten(const Graph& g) const {
  if (static_cast<int>(entries.size()) != g.vertex_count())
    fail(errc::shape_error, "weight has wrong number of vertex blocks");
  Eigen::VectorXd t = Eigen::VectorXd::Zero(g.total_dimension());
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (entries[v].size() != g.vertex(v).rank)
      fail(errc::shape_error, "weight block length does not match vertex rank");
    for (int k = 0; k < entries[v].size(); ++k)
      if (!(entries[v](k) > 0.0))
        fail(errc::bad_param, "weights must be strictly positive");
    t.segment(g.block_offset(v), g.vertex(v).rank) = entries[v];
  }
  return t;
}

TransmissionSystem identity_system(const Graph& g) {
  TransmissionSystem ts;
  ts.mats.resize(g.dedge_count());
  for (const DirectedEdge& d : g.dedges()) {
    int rt = g.vertex(d.tail).rank;
    int rh = g.vertex(d.head).rank;
    if (rt != rh)
      fail(errc::rank_mismatch, "identity system needs equal ranks across each edge");
    ts.mats[d.id] = Matrix::Identity(rh, rt);
  }
  return ts;
}

void validate_shapes(const Graph& g, const TransmissionSystem& ts) {
  if (static_cast<int>(ts.mats.size()) != g.dedge_count())
    fail(errc::shape_error, "system has wrong number of edge matrices");
  for (const DirectedEdge& d : g.dedges()) {
    const Matrix& p = ts.mats[d.id];
    if (p.rows() != g.vertex(d.head).rank || p.cols() != g.vertex(d.tail).rank)
      fail(errc::shape_error, "edge matrix must be rank(head) x rank(tail)");
  }
}

Classification classify(const Graph& g, const TransmissionSystem& ts, double tol) {
  if (!(tol > 0.0)) fail(errc::bad_param, "tolerance must be positive");
  validate_shapes(g, ts);
  Classification c;
  c.hermitian_symmetric = true;
  c.invertible = true;
  for (const DirectedEdge& d : g.dedges()) {
    const Matrix& p = ts.mats[d.id];
    const Matrix& q = ts.mats[d.op];
    c.K = std::max(c.K, spectral_norm(p));
    double dev = spectral_norm(p.adjoint() - q);
    c.asym = std::max(c.asym, dev);
    if (dev > tol) c.hermitian_symmetric = false;
    if (p.rows() != p.cols()) {
      c.invertible = false;
    } else if (p.rows() > 0) {
      Matrix prod = p * q;
      if (spectral_norm(prod - Matrix::Identity(p.rows(), p.rows())) > tol)
        c.invertible = false;
    }
  }
  c.strictly_unitary = c.hermitian_symmetric && c.invertible;
  return c;
}

Matrix block_adjacency(const Graph& g, const TransmissionSystem& ts) {
  validate_shapes(g, ts);
  int n = g.total_dimension();
  Matrix a = Matrix::Zero(n, n);
  for (const DirectedEdge& d : g.dedges())
    a.block(g.block_offset(d.head), g.block_offset(d.tail), g.vertex(d.head).rank,
            g.vertex(d.tail).rank) += ts.mats[d.id];
  return a;
}

namespace {

Eigen::VectorXd effective_weight(const Graph& g, const DiagonalWeight* w) {
  DiagonalWeight dw = w ? *w : DiagonalWeight::degrees(g);
  return dw.flatten(g);
}

} // namespace

Matrix normalized_adjacency(const Graph& g, const TransmissionSystem& ts,
                            const DiagonalWeight* w) {
  Matrix a = block_adjacency(g, ts);
  Eigen::VectorXd t = effective_weight(g, w);
  Eigen::VectorXd s = t.array().rsqrt();
  return s.asDiagonal() * a * s.asDiagonal();
}

Matrix laplacian(const Graph& g, const TransmissionSystem& ts, const DiagonalWeight* w) {
  int n = g.total_dimension();
  return Matrix::Identity(n, n) - normalized_adjacency(g, ts, w);
}

Cochain apply_laplacian(const Graph& g, const TransmissionSystem& ts, const Cochain& f,
                        const DiagonalWeight* w) {
  validate_shapes(g, ts);
  if (static_cast<int>(f.blocks.size()) != g.vertex_count())
    fail(errc::shape_error, "cochain has wrong number of blocks");
  DiagonalWeight dw = w ? *w : DiagonalWeight::degrees(g);
  Eigen::VectorXd t = dw.flatten(g); // validates positivity and shapes

  Cochain out;
  out.blocks.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (f.blocks[v].size() != g.vertex(v).rank)
      fail(errc::shape_error, "cochain block length does not match vertex rank");
    out.blocks[v] = f.blocks[v];
  }
  for (const DirectedEdge& d : g.dedges()) {
    if (g.vertex(d.head).rank == 0 || g.vertex(d.tail).rank == 0) continue;
    Eigen::ArrayXd sh = dw.entries[d.head].array().rsqrt();
    Eigen::ArrayXd st = dw.entries[d.tail].array().rsqrt();
    Vector scaled = (st * f.blocks[d.tail].array()).matrix();
    out.blocks[d.head].array() -= sh * (ts.mats[d.id] * scaled).array();
  }
  return out;
}

} // namespace speclap

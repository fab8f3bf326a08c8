#include "speclap/bounds.hpp"

#include <cmath>
#include <limits>

namespace speclap {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kMassEps = 1e-30;  // squared-norm threshold for "no mass"
constexpr double kBlockEps = 1e-12; // block-norm threshold on a unit cochain

BoundReport finish(std::string name, double bound, double target, double tol,
                   std::map<std::string, double> context) {
  BoundReport r;
  r.name = std::move(name);
  r.bound = bound;
  r.target = target;
  r.margin = bound - target;
  r.pass = r.margin >= -tol;
  r.context = std::move(context);
  return r;
}

void require_proper(const Graph& g, const VertexSubset& a) {
  if (a.empty() || a.size() == g.vertex_count())
    fail(errc::bad_param, "subset must be nonempty and proper");
}

} // namespace

GroundData ground_data(const Graph& g, const TransmissionSystem& ts, double tol) {
  Classification c = classify(g, ts, classification_tol(tol));
  if (!c.hermitian_symmetric)
    fail(errc::not_hermitian, "gap bounds need a Hermitian symmetric system");
  if (g.total_dimension() < 2)
    fail(errc::bad_param, "gap bounds need total dimension at least 2");
  Spectrum s = eigen_spectrum(laplacian(g, ts, nullptr), true, true);
  GroundData gd;
  gd.lambda1 = s.values[0].real();
  gd.lambda2 = s.values[1].real();
  gd.K = c.K;
  gd.f1 = Cochain::unflatten(g, s.vectors->col(0));
  gd.block_norm.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) gd.block_norm[v] = gd.f1.blocks[v].norm();
  return gd;
}

double vol_p(const Cochain& f1, const VertexSubset& a) {
  double s = 0.0;
  for (int v : a.members) s += f1.blocks[v].squaredNorm();
  return s;
}

double boundary_measure_p(const Graph& g, const Cochain& f1, const VertexSubset& a) {
  double s = 0.0;
  for (int e : boundary(g, a)) {
    const DirectedEdge& d = g.dedge(e);
    s += (f1.blocks[d.tail].norm() / std::sqrt(double(g.degree(d.tail)))) *
         (f1.blocks[d.head].norm() / std::sqrt(double(g.degree(d.head))));
  }
  return s;
}

BoundReport cheeger_upper(const Graph& g, const TransmissionSystem& ts,
                          const GroundData& gd, const VertexSubset& a, double tol) {
  (void)ts;
  require_proper(g, a);
  VertexSubset b = VertexSubset::complement(g, a);
  double target = gd.lambda2 - gd.lambda1;
  double r = vol_p(gd.f1, a);
  double s = vol_p(gd.f1, b);
  std::map<std::string, double> ctx{{"K", gd.K}, {"vol_p_A", r}, {"vol_p_B", s}};
  if (r <= kMassEps || s <= kMassEps) {
    ctx["zero_volume"] = 1.0;
    return finish("cheeger_upper", kInf, target, tol, std::move(ctx));
  }
  double bp = boundary_measure_p(g, gd.f1, a);
  ctx["boundary_p"] = bp;
  double bound = gd.K * bp * (1.0 / r + 1.0 / s);
  return finish("cheeger_upper", bound, target, tol, std::move(ctx));
}

BoundReport cheeger_weak(const Graph& g, const TransmissionSystem& ts,
                         const GroundData& gd, const VertexSubset& a, double tol) {
  (void)ts;
  require_proper(g, a);
  VertexSubset b = VertexSubset::complement(g, a);
  double target = gd.lambda2 - gd.lambda1;

  double hi = 0.0, lo = kInf;
  for (int v = 0; v < g.vertex_count(); ++v) {
    double ratio = gd.block_norm[v] / std::sqrt(double(g.degree(v)));
    hi = std::max(hi, ratio);
    if (gd.block_norm[v] > kBlockEps) lo = std::min(lo, ratio);
  }
  std::map<std::string, double> ctx{{"K", gd.K}};
  if (!(lo > 0.0) || !std::isfinite(lo)) {
    ctx["zero_volume"] = 1.0;
    return finish("cheeger_weak", kInf, target, tol, std::move(ctx));
  }
  double l = (hi * hi) / (lo * lo);
  double vol_a = 0.0, vol_b = 0.0;
  for (int v : a.members) vol_a += g.degree(v);
  for (int v : b.members) vol_b += g.degree(v);
  double cut = double(boundary(g, a).size());
  ctx["L"] = l;
  ctx["vol_A"] = vol_a;
  ctx["vol_B"] = vol_b;
  ctx["boundary"] = cut;
  double bound = (vol_a <= 0.0 || vol_b <= 0.0)
                     ? kInf
                     : cut * (1.0 / vol_a + 1.0 / vol_b) * gd.K * l;
  return finish("cheeger_weak", bound, target, tol, std::move(ctx));
}

BoundReport cheeger_sharp(const Graph& g, const TransmissionSystem& ts,
                          const GroundData& gd, const VertexSubset& a, double tol) {
  require_proper(g, a);
  VertexSubset b = VertexSubset::complement(g, a);
  double target = gd.lambda2 - gd.lambda1;
  double r = vol_p(gd.f1, a);
  double s = vol_p(gd.f1, b);
  std::map<std::string, double> ctx{{"vol_p_A", r}, {"vol_p_B", s}};
  if (r <= kMassEps || s <= kMassEps) {
    ctx["zero_volume"] = 1.0;
    return finish("cheeger_sharp", kInf, target, tol, std::move(ctx));
  }
  double cross = 0.0;
  for (int e : boundary(g, a)) {
    const DirectedEdge& d = g.dedge(e);
    cplx pair = gd.f1.blocks[d.head].dot(ts.at(e) * gd.f1.blocks[d.tail]);
    cross += std::abs(pair) /
             std::sqrt(double(g.degree(d.tail)) * double(g.degree(d.head)));
  }
  ctx["crossing"] = cross;
  double bound = cross * (1.0 / r + 1.0 / s);
  return finish("cheeger_sharp", bound, target, tol, std::move(ctx));
}

BoundReport diameter_bound(const Graph& g, const TransmissionSystem& ts,
                           const GroundData& gd, double tol) {
  (void)ts;
  std::optional<int> diam = diameter(g);
  if (!diam)
    fail(errc::diameter_too_small, "requires a connected graph with diameter >= 4");
  if (*diam < 4)
    fail(errc::diameter_too_small, "diameter " + std::to_string(*diam) + " < 4");
  int b = (*diam - 2) / 2;
  int k = 0;
  for (int v = 0; v < g.vertex_count(); ++v) k = std::max(k, g.simple_degree(v));
  double q = double(k - 1);
  double target = gd.lambda2 - gd.lambda1;
  std::map<std::string, double> ctx{{"K", gd.K}, {"q", q}, {"b", double(b)}};

  double m = 0.0;
  for (const DirectedEdge& d : g.dedges()) {
    double nt = gd.block_norm[d.tail];
    double nh = gd.block_norm[d.head];
    if (nt <= kBlockEps) {
      if (nh > kBlockEps) {
        ctx["undefined_m"] = 1.0;
        return finish("diameter_bound", kInf, target, tol, std::move(ctx));
      }
      continue;
    }
    double ratio = (nh / std::sqrt(double(g.degree(d.head)))) /
                   (nt / std::sqrt(double(g.degree(d.tail))));
    m = std::max(m, ratio);
  }
  if (m <= 0.0) {
    ctx["undefined_m"] = 1.0;
    return finish("diameter_bound", kInf, target, tol, std::move(ctx));
  }

  double mass = 0.0, inv_mass = 0.0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    double w = gd.block_norm[v] * gd.block_norm[v];
    mass += w;
    inv_mass += w / double(g.degree(v));
  }
  double ave_d = mass / inv_mass;
  ctx["M"] = m;
  ctx["ave_d"] = ave_d;
  double sq = std::sqrt(q);
  double bound = (1.0 / ave_d) * (gd.K / m) *
                 (1.0 + q * m * m - 2.0 * sq * m + (2.0 * sq * m - 1.0) / double(b));
  return finish("diameter_bound", bound, target, tol, std::move(ctx));
}

double nilli_classical(int k, int b) {
  if (k < 2 || b < 1) fail(errc::bad_param, "need k >= 2 and b >= 1");
  double sq = 2.0 * std::sqrt(double(k - 1));
  return 1.0 - (sq - (sq - 1.0) / double(b)) / double(k);
}

bool is_ramanujan(const Graph& g, double tol) {
  if (g.vertex_count() < 2) fail(errc::bad_param, "need at least two vertices");
  int k = g.degree(0);
  for (int v = 1; v < g.vertex_count(); ++v)
    if (g.degree(v) != k) fail(errc::not_regular, "graph is not regular");
  if (k < 1) fail(errc::degree_zero, "regular of degree zero");

  std::vector<Vertex> verts = g.vertices();
  for (Vertex& v : verts) v.rank = 1;
  Graph flat = Graph::from_dedges(std::move(verts), g.dedges());
  TransmissionSystem ts = identity_system(flat);
  Spectrum s = eigen_spectrum(laplacian(flat, ts, nullptr), true, false);
  double lambda2 = s.values[1].real();
  return double(k) - double(k) * lambda2 <= 2.0 * std::sqrt(double(k - 1)) + tol;
}

double capacity_ratio(const Graph& g, const std::vector<double>& c,
                      const Eigen::MatrixXd& d, const VertexSubset& a) {
  require_proper(g, a);
  if (static_cast<int>(c.size()) != g.dedge_count())
    fail(errc::shape_error, "need one capacity per directed edge");
  if (d.rows() != g.vertex_count() || d.cols() != g.vertex_count())
    fail(errc::shape_error, "demand matrix must be square on the vertices");
  for (double x : c)
    if (x < 0.0) fail(errc::bad_param, "capacities must be nonnegative");
  if ((d.array() < 0.0).any()) fail(errc::bad_param, "demands must be nonnegative");

  double num = 0.0;
  for (const DirectedEdge& e : g.dedges())
    if (a.contains(e.tail) != a.contains(e.head)) num += c[e.id];
  double den = 0.0;
  for (int i = 0; i < g.vertex_count(); ++i)
    for (int j = 0; j < g.vertex_count(); ++j)
      if (a.contains(i) != a.contains(j)) den += d(i, j);
  if (den <= 0.0) fail(errc::zero_denominator, "demand across the cut vanishes");
  return num / den;
}

std::pair<double, VertexSubset> capacity_min(const Graph& g, const std::vector<double>& c,
                                             const Eigen::MatrixXd& d) {
  int n = g.vertex_count();
  if (n < 2) fail(errc::bad_param, "need at least two vertices");
  if (n > 20) fail(errc::too_large, "exhaustive sweep is capped at 20 vertices");
  bool found = false;
  double best = kInf;
  VertexSubset best_set;
  for (unsigned long long bits = 1; bits + 1 < (1ull << n); ++bits) {
    VertexSubset a = VertexSubset::from_mask(g, bits);
    double val;
    try {
      val = capacity_ratio(g, c, d, a);
    } catch (const Error& e) {
      if (e.code() == errc::zero_denominator) continue;
      throw;
    }
    if (!found || val < best - 1e-12) {
      found = true;
      best = val;
      best_set = a;
    } else if (val <= best + 1e-12 && a.members < best_set.members) {
      best_set = a;
    }
  }
  if (!found) fail(errc::zero_denominator, "every subset has zero demand across the cut");
  return {best, best_set};
}

BoundReport cheeger_upper(const Graph& g, const TransmissionSystem& ts,
                          const VertexSubset& a, double tol) {
  return cheeger_upper(g, ts, ground_data(g, ts, tol), a, tol);
}
BoundReport cheeger_weak(const Graph& g, const TransmissionSystem& ts,
                         const VertexSubset& a, double tol) {
  return cheeger_weak(g, ts, ground_data(g, ts, tol), a, tol);
}
BoundReport cheeger_sharp(const Graph& g, const TransmissionSystem& ts,
                          const VertexSubset& a, double tol) {
  return cheeger_sharp(g, ts, ground_data(g, ts, tol), a, tol);
}
BoundReport diameter_bound(const Graph& g, const TransmissionSystem& ts, double tol) {
  return diameter_bound(g, ts, ground_data(g, ts, tol), tol);
}

} // namespace speclap

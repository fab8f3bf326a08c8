#pragma once

#include <map>
#include <string>

#include "speclap/spectra.hpp"

namespace speclap {

struct BoundReport {
  std::string name;
  double bound = 0.0;  // +infinity marks an unavailable / trivially true bound
  double target = 0.0;
  double margin = 0.0; // bound - target
  bool pass = false;
  std::map<std::string, double> context;
};

// Shared per-system data for subset sweeps: smallest two eigenvalues and the
// unit ground-state cochain of the self-adjoint normalized operator.
struct GroundData {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double K = 0.0;
  Cochain f1;
  std::vector<double> block_norm; // ||f1(v)|| per vertex
};

GroundData ground_data(const Graph& g, const TransmissionSystem& ts,
                       double tol = kDefaultTol);

// Ground-state mass carried by a subset: sum over v in a of ||f1(v)||^2.
double vol_p(const Cochain& f1, const VertexSubset& a);

// Boundary mass: sum over boundary edges of
// (||f1(tail)||/sqrt(d_tail)) (||f1(head)||/sqrt(d_head)).
double boundary_measure_p(const Graph& g, const Cochain& f1, const VertexSubset& a);

// Eigenvalue-gap bound K |boundary|_P (1/vol_P(A) + 1/vol_P(B)).
BoundReport cheeger_upper(const Graph& g, const TransmissionSystem& ts,
                          const GroundData& gd, const VertexSubset& a,
                          double tol = kDefaultTol);

// Coarser bound using classical boundary and volume, scaled by the squared
// max/min ratio of ||f1(v)||/sqrt(d_v) over vertices carrying mass.
BoundReport cheeger_weak(const Graph& g, const TransmissionSystem& ts,
                         const GroundData& gd, const VertexSubset& a,
                         double tol = kDefaultTol);

// Tighter mid-derivation bound summing |<f1(head), P(e) f1(tail)>| over the
// crossing edges instead of norm products.
BoundReport cheeger_sharp(const Graph& g, const TransmissionSystem& ts,
                          const GroundData& gd, const VertexSubset& a,
                          double tol = kDefaultTol);

// Eigenvalue-gap bound from the diameter: with k the max distinct-neighbor
// degree, q = k-1, b the largest integer with 2b+2 <= diameter, M the max
// one-step growth ratio of the ground state, and Ave(d) its weighted average
// degree, the gap is at most
// (1/Ave(d)) (K/M) (1 + q M^2 - 2 sqrt(q) M + (2 sqrt(q) M - 1)/b).
BoundReport diameter_bound(const Graph& g, const TransmissionSystem& ts,
                           const GroundData& gd, double tol = kDefaultTol);

// Classical specialization of the diameter bound for k-regular graphs.
double nilli_classical(int k, int b);

// Second-eigenvalue test against 2 sqrt(k-1) for k-regular graphs.
bool is_ramanujan(const Graph& g, double tol = kDefaultTol);

// Capacity functional: edge capacity crossing a against pairwise demand.
// c holds one nonnegative capacity per directed edge; d holds one
// nonnegative demand per ordered vertex pair.
double capacity_ratio(const Graph& g, const std::vector<double>& c,
                      const Eigen::MatrixXd& d, const VertexSubset& a);

// Exhaustive minimizer over nonempty proper subsets with nonzero demand
// denominator; ties broken toward the lexicographically smallest subset.
std::pair<double, VertexSubset> capacity_min(const Graph& g, const std::vector<double>& c,
                                             const Eigen::MatrixXd& d);

// Convenience overloads that compute the ground data internally.
BoundReport cheeger_upper(const Graph& g, const TransmissionSystem& ts,
                          const VertexSubset& a, double tol = kDefaultTol);
BoundReport cheeger_weak(const Graph& g, const TransmissionSystem& ts,
                         const VertexSubset& a, double tol = kDefaultTol);
BoundReport cheeger_sharp(const Graph& g, const TransmissionSystem& ts,
                          const VertexSubset& a, double tol = kDefaultTol);
BoundReport diameter_bound(const Graph& g, const TransmissionSystem& ts,
                           double tol = kDefaultTol);

} // namespace speclap

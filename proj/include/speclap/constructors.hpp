#pragma once

#include <cstdint>
#include <map>

#include "speclap/bounds.hpp"
#include "speclap/spectra.hpp"

namespace speclap {

// ---------------------------------------------------------------------------
// Associations: each vertex names a finite set of vertices; overlap of the
// named sets along edges drives a 0/1 partial-identity system.

struct Association {
  // sets[v] = sorted original-vertex indices named by vertex v (may be empty).
  std::vector<std::vector<int>> sets;

  static Association from_ids(const Graph& g,
                              const std::map<std::string, std::vector<std::string>>& m);
};

struct AssociationSystem {
  Graph graph;              // input topology, vertex ranks |sets[v]|
  TransmissionSystem system;
  DiagonalWeight weight;    // coincidence counts per coordinate (0 lifted to 1)
  std::vector<std::vector<int>> basis;  // per vertex, the sorted named set
  std::vector<std::vector<int>> counts; // counts[v][i] = neighbors of v naming basis[v][i]
};

// Requires a simple loopless graph.
AssociationSystem association_system(const Graph& g, const Association& assoc);

// Harmonic cochain: phi(v)[i] = sqrt(counts[v][i]). Lies in the kernel of the
// weighted normalized operator.
Cochain association_phi(const AssociationSystem& as);

// Gap bound from two disjoint vertex sets carrying ground-state mass. The
// crossing count 2(1/R + 1/S) #{(a,b,x): a in A, b in B adjacent, x named by
// both} is extended by the couplings of A and B to the remaining vertices,
// which the test cochain's Rayleigh quotient picks up whenever A and B do not
// exhaust the graph; without that term the crossing count alone is not an
// upper bound for the gap.
BoundReport cohesion_estimate(const Graph& g, const Association& assoc,
                              const VertexSubset& a, const VertexSubset& b,
                              double tol = kDefaultTol);

// ---------------------------------------------------------------------------
// Cayley graphs of finite abelian groups with matrix edge data.

struct AbelianGroup {
  std::vector<int> moduli; // each >= 1

  using Elem = std::vector<int>;

  explicit AbelianGroup(std::vector<int> m);
  long long order() const { return order_; }
  Elem identity() const { return Elem(moduli.size(), 0); }
  Elem normalize(Elem e) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  long long index_of(const Elem& e) const; // lexicographic, first coord slowest
  Elem elem_at(long long i) const;
  cplx character(const Elem& a, const Elem& g) const;
  static std::string render(const Elem& e); // vertex id "g<i0>_<i1>..."

private:
  long long order_ = 1;
};

struct CayleyGraph {
  AbelianGroup group;
  std::vector<AbelianGroup::Elem> gens;     // canonical sorted multiset
  Graph graph;                              // rank-1 vertices, one per element
  std::vector<AbelianGroup::Elem> edge_gen; // generator used by each directed edge
};

// Generators form a multiset closed under inversion and free of the identity.
CayleyGraph cayley_graph(const AbelianGroup& group, std::vector<AbelianGroup::Elem> s);

using EdgeMatrixFamily = std::map<AbelianGroup::Elem, Matrix>;

// Places F(s) on every edge generated by s; requires F(inv s) = F(s)^* and a
// common square size. An empty family means the scalar 1 on every generator.
// Returns the re-ranked graph together with the system.
struct CayleySystem {
  Graph graph;
  TransmissionSystem system;
};
CayleySystem cayley_system(const CayleyGraph& cg, const EdgeMatrixFamily& f);

// Character route to the same spectrum: eigenvalues of 1 - (1/k) sum over S
// of chi(s) F(s), over all characters chi. Sorted ascending.
std::vector<cplx> cayley_spectrum(const AbelianGroup& group,
                                  const std::vector<AbelianGroup::Elem>& s,
                                  const EdgeMatrixFamily& f);

// ---------------------------------------------------------------------------
// Scattering systems from indefinite-unitary barrier matrices.

// diag(I_p, -I_q).
Eigen::MatrixXd upq_form(int p, int q);

// || M^* J M - J || with J the form above.
double upq_deviation(const Matrix& m, int p, int q);

// Seeded draw from the exponential of the Lie algebra of U(p, q).
Matrix random_upq(int p, int q, std::uint64_t seed);

struct QuantumSystems {
  Graph graph;             // input topology, every rank 2(spin+1)
  TransmissionSystem f;    // invertible one-way family
  TransmissionSystem g;    // Hermitian symmetric family i J F(e)
  int spin = 0;
};

// One barrier matrix per undirected edge, ordered like undirected_reps(),
// each in U(spin+1, spin+1), attached to the smaller-id -> larger-id
// direction. F(forward) = swap * M, F(backward) = F(forward)^(-1),
// G(e) = i J F(e).
QuantumSystems quantum_system(const Graph& base, int spin,
                              const std::vector<Matrix>& barriers,
                              double tol = kDefaultTol);

// Barriers drawn with random_upq, one per undirected edge.
QuantumSystems random_quantum_system(const Graph& base, int spin, std::uint64_t seed,
                                     double tol = kDefaultTol);

// ---------------------------------------------------------------------------
// Unitary random systems and random walks.

// Haar-style unitary per undirected edge (adjoint on the reverse direction);
// all ranks must agree across each edge.
TransmissionSystem random_unitary_system(const Graph& g, std::uint64_t seed);

// Replace every vertex rank (ranks must be positive).
Graph with_uniform_rank(const Graph& g, int rank);

struct WalkSystem {
  Graph graph;            // rank-1 vertices over the support of the walk
  TransmissionSystem system;
  DiagonalWeight weight;  // the graph degrees, made explicit
  bool reflexive = false; // d_j Prob(i,j) == d_i Prob(j,i) for all pairs
};

// probs columns are outgoing distributions: entry (j,i) = Prob(v_i -> v_j).
// The system's normalized operator has spectrum {1 - mu : mu eigenvalue of
// probs}.
WalkSystem walk_system(const Eigen::MatrixXd& probs, double tol = kDefaultTol);

} // namespace speclap

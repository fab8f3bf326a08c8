#pragma once

#include <optional>
#include <vector>

#include "speclap/graph.hpp"
#include "speclap/linalg.hpp"

namespace speclap {

// One matrix per directed edge, indexed by edge id. The matrix on an edge
// v -> w maps the space over v into the space over w, so its shape is
// rank(head) x rank(tail).
struct TransmissionSystem {
  std::vector<Matrix> mats;

  const Matrix& at(int dedge_id) const { return mats[dedge_id]; }
};

struct Classification {
  bool hermitian_symmetric = false; // P(op e) == P(e)^* for every edge
  bool invertible = false;          // P(op e) == P(e)^(-1) for every edge
  bool strictly_unitary = false;    // both of the above
  double K = 0.0;                   // max operator norm over the edges
  double asym = 0.0;                // max ||P(e)^* - P(op e)||
};

// One complex vector per vertex, block k of length rank(k).
struct Cochain {
  std::vector<Vector> blocks;

  static Cochain zero(const Graph& g);
  Vector flatten(const Graph& g) const;
  static Cochain unflatten(const Graph& g, const Vector& x);
  double norm() const;
};

// Positive diagonal normalization, one weight per coordinate of each vertex.
struct DiagonalWeight {
  std::vector<Eigen::VectorXd> entries;

  // Every coordinate of every vertex weighted by the vertex degree.
  static DiagonalWeight degrees(const Graph& g);
  Eigen::VectorXd flatten(const Graph& g) const;
};

inline constexpr int kDenseDimensionCap = 2048;
inline constexpr double kDefaultTol = 1e-9;

// Structural classification needs a positive tolerance; margin checks accept
// any real (nonpositive values make them unsatisfiable on purpose). Callers
// holding a user-supplied margin tolerance clamp it through here before
// classifying.
inline double classification_tol(double tol) { return tol > 0.0 ? tol : kDefaultTol; }

// All edge matrices are identities; requires equal ranks across each edge.
TransmissionSystem identity_system(const Graph& g);

// Throws shape_error unless every matrix is rank(head) x rank(tail).
void validate_shapes(const Graph& g, const TransmissionSystem& ts);

Classification classify(const Graph& g, const TransmissionSystem& ts, double tol = kDefaultTol);

// Block matrix acting by (A f)(w) = sum over edges e with head w of
// P(e) f(tail e); block row = head, block column = tail.
Matrix block_adjacency(const Graph& g, const TransmissionSystem& ts);

// T^(-1/2) A T^(-1/2) with T the diagonal weight (vertex degrees if absent).
Matrix normalized_adjacency(const Graph& g, const TransmissionSystem& ts,
                            const DiagonalWeight* w = nullptr);

// Identity minus the normalized adjacency.
Matrix laplacian(const Graph& g, const TransmissionSystem& ts,
                 const DiagonalWeight* w = nullptr);

// Matrix-free action of the operator above on a cochain.
Cochain apply_laplacian(const Graph& g, const TransmissionSystem& ts, const Cochain& f,
                        const DiagonalWeight* w = nullptr);

} // namespace speclap

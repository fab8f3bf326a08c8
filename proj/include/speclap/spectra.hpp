#pragma once

#include <optional>

#include "speclap/transmission.hpp"

namespace speclap {

struct Spectrum {
  std::vector<cplx> values;        // ascending by (real, imaginary)
  std::optional<Matrix> vectors;   // columns aligned with values
  bool hermitian = false;          // which solver path produced the values
};

struct RangeReport {
  double K = 0.0;
  double asym_half = 0.0;
  double max_center_dev = 0.0; // max |lambda - 1|
  double max_imag = 0.0;       // max |Im lambda|
  double min_real = 0.0;
  double max_real = 0.0;
  bool unitary_checked = false; // the [0,2] window was also enforced
  bool pass = false;
};

// Dense eigensolve; hermitian selects the self-adjoint path, which stores
// exactly-real eigenvalues and orthonormal eigenvectors. Eigenvectors follow
// a fixed phase convention: first nonzero coordinate real and nonnegative.
Spectrum eigen_spectrum(const Matrix& m, bool hermitian, bool want_vectors = false);

// Spectrum of the system's normalized operator; takes the self-adjoint path
// exactly when the system classifies Hermitian symmetric at tol.
Spectrum system_spectrum(const Graph& g, const TransmissionSystem& ts,
                         const DiagonalWeight* w = nullptr, double tol = kDefaultTol,
                         bool want_vectors = false);

// Smallest eigenvalue and its unit eigenvector, reshaped per vertex.
// Requires a Hermitian symmetric system.
struct GroundState {
  double lambda1 = 0.0;
  Cochain f1;
};
GroundState ground_state(const Graph& g, const TransmissionSystem& ts,
                         const DiagonalWeight* w = nullptr, double tol = kDefaultTol);

// Checks every eigenvalue against the disc |lambda - 1| <= K and the strip
// |Im lambda| <= asym/2; strictly unitary systems additionally against the
// window [0, 2].
RangeReport verify_range(const Graph& g, const TransmissionSystem& ts,
                         double tol = kDefaultTol);

} // namespace speclap

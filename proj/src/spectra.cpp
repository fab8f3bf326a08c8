#include "speclap/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>

namespace speclap {

namespace {

void apply_phase_convention(Matrix& vectors) {
  for (int c = 0; c < vectors.cols(); ++c) {
    double top = vectors.col(c).cwiseAbs().maxCoeff();
    if (top <= 0.0) continue;
    for (int r = 0; r < vectors.rows(); ++r) {
      cplx z = vectors(r, c);
      if (std::abs(z) > 1e-12 * top) {
        vectors.col(c) *= std::conj(z) / std::abs(z);
        break;
      }
    }
  }
}

} // namespace

Spectrum eigen_spectrum(const Matrix& m, bool hermitian, bool want_vectors) {
  if (m.rows() != m.cols()) fail(errc::shape_error, "eigensolve needs a square matrix");
  if (m.rows() > kDenseDimensionCap)
    fail(errc::too_large, "dimension exceeds the dense-solver cap of " +
                              std::to_string(kDenseDimensionCap));
  Spectrum s;
  s.hermitian = hermitian;
  if (m.rows() == 0) return s;

  if (hermitian) {
    double dev = spectral_norm(m - m.adjoint());
    if (dev > 1e-8 * (1.0 + spectral_norm(m)))
      fail(errc::not_hermitian, "matrix is not self-adjoint within tolerance");
    Matrix sym = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(
        sym, want_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) fail(errc::no_convergence, "self-adjoint solve failed");
    s.values.resize(m.rows());
    for (int i = 0; i < m.rows(); ++i) s.values[i] = cplx(solver.eigenvalues()(i), 0.0);
    if (want_vectors) {
      Matrix v = solver.eigenvectors();
      apply_phase_convention(v);
      s.vectors = std::move(v);
    }
    return s;
  }

  Eigen::ComplexEigenSolver<Matrix> solver(m, want_vectors);
  if (solver.info() != Eigen::Success) fail(errc::no_convergence, "eigensolve failed");
  std::vector<int> order(m.rows());
  std::iota(order.begin(), order.end(), 0);
  const Vector& ev = solver.eigenvalues();
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return complex_less(ev(a), ev(b)); });
  s.values.resize(m.rows());
  for (int i = 0; i < m.rows(); ++i) s.values[i] = ev(order[i]);
  if (want_vectors) {
    Matrix v(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i) v.col(i) = solver.eigenvectors().col(order[i]);
    apply_phase_convention(v);
    s.vectors = std::move(v);
  }
  return s;
}

Spectrum system_spectrum(const Graph& g, const TransmissionSystem& ts,
                         const DiagonalWeight* w, double tol, bool want_vectors) {
  Classification c = classify(g, ts, classification_tol(tol));
  Matrix l = laplacian(g, ts, w);
  return eigen_spectrum(l, c.hermitian_symmetric, want_vectors);
}

GroundState ground_state(const Graph& g, const TransmissionSystem& ts,
                         const DiagonalWeight* w, double tol) {
  Classification c = classify(g, ts, classification_tol(tol));
  if (!c.hermitian_symmetric)
    fail(errc::not_hermitian, "ground state needs a Hermitian symmetric system");
  if (g.total_dimension() == 0) fail(errc::bad_param, "empty cochain space");
  Spectrum s = eigen_spectrum(laplacian(g, ts, w), true, true);
  GroundState gs;
  gs.lambda1 = s.values.front().real();
  gs.f1 = Cochain::unflatten(g, s.vectors->col(0));
  return gs;
}

RangeReport verify_range(const Graph& g, const TransmissionSystem& ts, double tol) {
  Classification c = classify(g, ts, classification_tol(tol));
  Spectrum s = eigen_spectrum(laplacian(g, ts, nullptr), false, false);
  RangeReport r;
  r.K = c.K;
  r.asym_half = 0.5 * c.asym;
  r.unitary_checked = c.strictly_unitary;
  if (s.values.empty()) {
    r.pass = true;
    return r;
  }
  r.min_real = s.values.front().real();
  r.max_real = r.min_real;
  for (const cplx& z : s.values) {
    r.max_center_dev = std::max(r.max_center_dev, std::abs(z - cplx(1.0, 0.0)));
    r.max_imag = std::max(r.max_imag, std::abs(z.imag()));
    r.min_real = std::min(r.min_real, z.real());
    r.max_real = std::max(r.max_real, z.real());
  }
  r.pass = r.max_center_dev <= r.K + tol && r.max_imag <= r.asym_half + tol;
  if (r.unitary_checked)
    r.pass = r.pass && r.min_real >= -tol && r.max_real <= 2.0 + tol;
  return r;
}

} // namespace speclap

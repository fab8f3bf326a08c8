#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace speclap {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Largest singular value; 0 for empty shapes.
double spectral_norm(const Matrix& m);

// Ascending lexicographic order on (real, imaginary) parts.
bool complex_less(const cplx& a, const cplx& b);

void sort_complex(std::vector<cplx>& values);

// Largest pairwise gap over an explicitly constructed one-to-one matching of
// the two multisets; requires equal sizes. Stable against complex values
// whose real parts agree only to roundoff, where a plain sort can order the
// two sides differently.
double multiset_distance(std::vector<cplx> a, std::vector<cplx> b);

} // namespace speclap

#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "ergo/matrix.hpp"

namespace ergo {

enum class SpectrumMethod { CharPolyRoots, JacobiSymmetric };

/// Eigenvalues sorted by ascending modulus, with a residual diagnostic.
struct Spectrum {
    std::vector<std::complex<double>> eigenvalues;
    double max_residual;
    SpectrumMethod method;
};

/// Monic coefficients of det(xI - A) in ascending powers, coeffs[n] = 1.
/// Computed by the Faddeev-LeVerrier trace recursion; n is capped at 14
/// because the coefficients outgrow double precision beyond that.
std::vector<double> characteristic_polynomial(const Matrix& m);

/// All complex roots by simultaneous Aberth iteration. Coefficients in
/// ascending powers; the leading coefficient must be nonzero.
std::vector<std::complex<double>> polynomial_roots(std::span<const double> coeffs);

/// Symmetric matrices go through Jacobi rotations; everything else through
/// the characteristic polynomial (n <= 14).
Spectrum spectrum(const Matrix& m);

/// Eigenvalues of a symmetric matrix by cyclic Jacobi sweeps, ascending.
std::vector<double> jacobi_eigenvalues(const Matrix& m);

/// Removes the one eigenvalue closest to the trivial eigenvalue and returns
/// the (min, max) modulus of the remaining ones.
std::pair<double, double> nontrivial_extremes(const EMatrix& m);

}  // namespace ergo

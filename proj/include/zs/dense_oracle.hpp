#pragma once

#include <vector>

#include "zs/potential.hpp"

namespace zs {

enum class OracleBc { periodic, antiperiodic, dirichlet_standard, dirichlet_auxiliary };

// Brute-force eigenvalues of the Dirac operator i sigma3 (d/dx - Q) on [0, L]
// with the requested boundary condition, restricted to [z_lo, z_hi].
//   periodic / antiperiodic : Fourier collocation, Hermitian matrix
//   dirichlet_*             : second-order box scheme in the similarity frame
//                             (boundary rows force the first component to 0),
//                             real generalized eigenproblem
// N is the matrix size budget; the discretization uses the largest
// grid/mode count that fits.
std::vector<double> oracle_dense_spectra(const PeriodicPotential& p, int N, OracleBc bc,
                                         double z_lo, double z_hi);

}  // namespace zs

#pragma once

#include <vector>

#include "zs/mat2.hpp"
#include "zs/monodromy.hpp"
#include "zs/potential.hpp"
#include "zs/rhpdata.hpp"

namespace zs {

struct BlochPair {
    cplx z;
    double x;
    Vec2 psi_minus, psi_plus;
    cplx rho;
};

// psi+- = ytilde_1 + (rho^{+-1} - ytilde11(L))/ytilde12(L) ytilde_2, normalized
// to first component 1 at x = 0. Refuses within eps of a Dirichlet eigenvalue
// (zero of ytilde12(L, .)), where the normalization breaks down.
BlochPair bloch_solutions(const PeriodicPotential& p, cplx z, double x, double tol);

// Psi = (psi-, psi+) for Im z > 0, (psi+, psi-) for Im z < 0.
Mat2 bloch_matrix(const PeriodicPotential& p, cplx z, double x, double tol);

// Weyl values psi2-+(0, z) = (rho^{-+1} - ytilde11(L,z)) / ytilde12(L,z).
std::pair<cplx, cplx> weyl_values(const PeriodicPotential& p, cplx z, double tol);

// Phi = Psi B e^{izx sigma3}.
Mat2 phi_matrix(const PeriodicPotential& p, const RhpData& rhp, double x, cplx z, double tol);

struct BlochReconstruction {
    cplx q_hat;
    double residual;   // extrapolation self-consistency estimate
    bool diverging;    // residuals failed to decrease along the R sequence
};

// Potential recovery from i z [sigma3, U^{-1} Psi e^{izx sigma3}] at z = iR,
// Richardson-extrapolated in 1/R (error model a/R + b/R^2).
BlochReconstruction reconstruct_from_bloch(const PeriodicPotential& p, double x,
                                           const std::vector<double>& R_sequence, double tol);

}  // namespace zs

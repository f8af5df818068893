#pragma once

#include <optional>
#include <vector>

#include "zs/mat2.hpp"
#include "zs/ode.hpp"
#include "zs/potential.hpp"

namespace zs {

// Principal solution after one period plus the derived Floquet quantities.
struct MonodromyResult {
    cplx z;
    Mat2 M, M_tilde, M_check;
    cplx delta;      // (M11 + M22)/2
    cplx rho;        // multiplier, |rho| <= 1 branch
    cplx sqrt_disc;  // sqrt(delta^2 - 1) with rho = delta - sqrt_disc
    double det_defect;
    bool branch_ambiguous;  // both roots within 1e-12 of the unit circle
};

// Y(x,z) with Y(0,z) = I; columns integrated in scaled variables
// W1 = e^{izx} y_1, W2 = e^{-izx} y_2 to control exponential growth.
Mat2 principal_solution(const PeriodicPotential& p, cplx z, double x, double tol);

// Scaled monodromy columns: W1(L) = e^{izL} col1(M), W2(L) = e^{-izL} col2(M).
struct ScaledMonodromy {
    cplx z;
    Vec2 W1, W2;
};
ScaledMonodromy scaled_monodromy(const PeriodicPotential& p, cplx z, double tol);

MonodromyResult monodromy(const PeriodicPotential& p, cplx z, double tol);

// Batch sweep; order-independent, results identical to per-point monodromy.
std::vector<cplx> discriminant_grid(const PeriodicPotential& p,
                                    const std::vector<cplx>& z_values, double tol,
                                    int threads = 1);

// 2 Delta(z) e^{+izL} for Im z > 0 (or e^{-izL} for Im z < 0), formed from the
// scaled columns so it stays finite for large |Im z|.
cplx delta_scaled(const PeriodicPotential& p, cplx z, double tol);

// Floquet multiplier evaluated continuous-from-above: z + i 1e-12 (1+|z|).
cplx rho_above(const PeriodicPotential& p, double z, double tol);

// d/dz of Delta by complex-step (Delta is real on the real axis).
double delta_prime(const PeriodicPotential& p, double z, double tol);

// d/dz of ytilde_12(L, .) by 5-point central difference, step 1e-6 (1+|z|).
double ytilde12_prime(const PeriodicPotential& p, double z, double tol);

inline Mat2 to_tilde(const Mat2& m) { return umatrix() * m * umatrix_inv(); }
inline Mat2 to_check(const Mat2& m) { return ucheck() * m * ucheck_inv(); }

}  // namespace zs

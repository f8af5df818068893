#pragma once

#include "zs/mat2.hpp"
#include "zs/potential.hpp"

namespace zs {

// Closed forms for the constant potential q(x) = A e^{i alpha}: discriminant,
// spectra, B matrix, jump matrices and the explicit solvable RHP chain.
struct Genus0Params {
    double A;
    double alpha;
    double L;

    PeriodicPotential potential() const {
        return PeriodicPotential::constant(L, std::polar(A, alpha));
    }
};

// lambda = sqrt(z^2 - A^2), branch cut (-inf,-A] u [A,inf), Im lambda >= 0
// everywhere, continuous from above on the cuts; even in z.
// side matters only for real |z| > A: +1 limit from above, -1 from below.
cplx g0_lambda(const Genus0Params& g, cplx z, int side = +1);

cplx g0_delta(const Genus0Params& g, cplx z);
cplx g0_rho(const Genus0Params& g, cplx z);  // e^{i lambda L}

struct Genus0Spectrum {
    double E_left, E_right;  // single gap (-A, A)
    double mu0;              // -A sin(alpha)
    int sigma0;
    double y22_at_mu;  // e^{-A L cos alpha}
};
Genus0Spectrum g0_exact_spectrum(const Genus0Params& g);

Mat2 g0_Y(const Genus0Params& g, double x, cplx z, int side = +1);
Mat2 g0_Ytilde(const Genus0Params& g, double x, cplx z, int side = +1);

// Bloch solutions and Weyl values from the eigenvector matrix W.
Vec2 g0_psi(const Genus0Params& g, int pm, double x, cplx z);
cplx g0_weyl(const Genus0Params& g, int pm, cplx z);

// B(z) for the sigma0 = -1 normalization: T diag(z-mu, 1) in C+,
// T diag(1, z-mu) in C-; T+ = i e^{i pi/4}/sqrt(2 lambda), T- = e^{i pi/4}/sqrt(2 lambda).
Mat2 g0_B(const Genus0Params& g, cplx z, int side = +1);

// Jump matrix of the genus-zero RHP on the three real segments.
Mat2 g0_V(const Genus0Params& g, double x, double z);

struct Genus0Chain {
    Mat2 Phi, Phi2, Phi3, Phi4;
    cplx q_symbolic;  // exact A e^{i alpha} from the 1/z expansion of Upsilon, Xi
};

// Explicit RHP chain; requires sigma0 = -1 (alpha in (pi/2, 3pi/2) mod 2pi).
Genus0Chain g0_exact_rhp_chain(const Genus0Params& g, double x, cplx z, int side = +1);

// Reconstruction from the finite-z commutator i z [sigma3, Phi2(z)].
cplx g0_q_from_commutator(const Genus0Params& g, cplx z);

cplx g0_upsilon(const Genus0Params& g, cplx z);
cplx g0_xi(const Genus0Params& g, cplx z, int side = +1);

// sqrt((z-A)/(z+A)) with the cut on [-A, A], -> 1 at infinity.
cplx g0_xi_root(const Genus0Params& g, cplx z, int side = +1);

}  // namespace zs

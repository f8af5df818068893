#include "zs/bloch.hpp"

#include <cmath>
#include <stdexcept>

namespace zs {

namespace {
const cplx iu(0.0, 1.0);
}

BlochPair bloch_solutions(const PeriodicPotential& p, cplx z, double x, double tol) {
    const double L = p.period();
    auto m = monodromy(p, z, tol);
    cplx y12 = m.M_tilde.a12;
    if (std::abs(y12) < 1e-8 * (1.0 + m.M_tilde.max_abs()))
        throw std::invalid_argument(
            "bloch_solutions: z within refusal distance of a Dirichlet eigenvalue "
            "(ytilde12(L,z) ~ 0), normalization undefined");
    Mat2 Yx = to_tilde(principal_solution(p, z, x, tol));
    cplx wp = (1.0 / m.rho - m.M_tilde.a11) / y12;  // psi-
    cplx wq = (m.rho - m.M_tilde.a11) / y12;        // psi+
    (void)L;
    BlochPair b;
    b.z = z;
    b.x = x;
    b.rho = m.rho;
    b.psi_minus = Yx.col1() + wp * Yx.col2();
    b.psi_plus = Yx.col1() + wq * Yx.col2();
    return b;
}

Mat2 bloch_matrix(const PeriodicPotential& p, cplx z, double x, double tol) {
    BlochPair b = bloch_solutions(p, z, x, tol);
    if (z.imag() >= 0.0) return Mat2::from_columns(b.psi_minus, b.psi_plus);
    return Mat2::from_columns(b.psi_plus, b.psi_minus);
}

std::pair<cplx, cplx> weyl_values(const PeriodicPotential& p, cplx z, double tol) {
    auto m = monodromy(p, z, tol);
    cplx y12 = m.M_tilde.a12;
    if (std::abs(y12) < 1e-8 * (1.0 + m.M_tilde.max_abs()))
        throw std::invalid_argument("weyl_values: z too close to a Dirichlet eigenvalue");
    return {(1.0 / m.rho - m.M_tilde.a11) / y12, (m.rho - m.M_tilde.a11) / y12};
}

Mat2 phi_matrix(const PeriodicPotential& p, const RhpData& rhp, double x, cplx z, double tol) {
    if (z.imag() == 0.0)
        throw std::invalid_argument("phi_matrix: z must be off the real axis");
    Mat2 psi = bloch_matrix(p, z, x, tol);
    return psi * rhp.B(z) * exp_isigma3(z * x);
}

BlochReconstruction reconstruct_from_bloch(const PeriodicPotential& p, double x,
                                           const std::vector<double>& R_sequence, double tol) {
    if (R_sequence.size() < 2)
        throw std::invalid_argument("reconstruct_from_bloch: need at least two R values");
    std::vector<double> rs = R_sequence;
    std::sort(rs.begin(), rs.end());

    std::vector<cplx> qhat(rs.size());
    for (std::size_t i = 0; i < rs.size(); ++i) {
        cplx z(0.0, rs[i]);
        Mat2 psi = bloch_matrix(p, z, x, tol);
        Mat2 c = commutator(sigma3(), umatrix_inv() * psi * exp_isigma3(z * x));
        qhat[i] = (iu * z * c).a12;
    }

    BlochReconstruction out;
    out.diverging = false;
    for (std::size_t i = 2; i < rs.size(); ++i)
        if (std::abs(qhat[i] - qhat[i - 1]) > std::abs(qhat[i - 1] - qhat[i - 2]))
            out.diverging = true;

    if (rs.size() >= 3) {
        // fit qhat = q + a/R + b/R^2 through the last three values
        std::size_t n = rs.size();
        double r1 = rs[n - 3], r2 = rs[n - 2], r3 = rs[n - 1];
        cplx f1 = qhat[n - 3], f2 = qhat[n - 2], f3 = qhat[n - 1];
        // solve the 3x3 Vandermonde in (q, a, b) with columns (1, 1/R, 1/R^2)
        double x1 = 1.0 / r1, x2 = 1.0 / r2, x3 = 1.0 / r3;
        cplx q = f1 * (x2 * x3) / ((x1 - x2) * (x1 - x3)) +
                 f2 * (x1 * x3) / ((x2 - x1) * (x2 - x3)) +
                 f3 * (x1 * x2) / ((x3 - x1) * (x3 - x2));
        // two-point extrapolation (model a/R only) for the residual estimate
        cplx q2 = (f3 * r3 - f2 * r2) / (r3 - r2);
        out.q_hat = q;
        out.residual = std::abs(q - q2);
    } else {
        cplx q2 = (qhat[1] * rs[1] - qhat[0] * rs[0]) / (rs[1] - rs[0]);
        out.q_hat = q2;
        out.residual = std::abs(q2 - qhat[1]);
    }
    return out;
}

}  // namespace zs

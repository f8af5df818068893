#include "zs/genus0.hpp"

#include <cmath>
#include <stdexcept>

namespace zs {

namespace {

const cplx iu(0.0, 1.0);

// principal sqrt with an explicit side for arguments landing on the cut
cplx psqrt(cplx w, int side) {
    if (w.imag() == 0.0 && w.real() < 0.0)
        w = cplx(w.real(), side >= 0 ? +0.0 : -0.0);
    return std::sqrt(w);
}

}  // namespace

cplx g0_lambda(const Genus0Params& g, cplx z, int side) {
    // i sqrt(A^2 - z^2) with the principal branch realizes the even,
    // upper-half-plane-valued branch; on the cuts the +iy side of z maps to
    // the lower side of A^2 - z^2 for z > A and to the upper side for z < -A.
    cplx w = g.A * g.A - z * z;
    if (z.imag() == 0.0 && w.real() < 0.0) {
        double lower = (z.real() > 0.0) ? (side >= 0) : (side < 0);
        w = cplx(w.real(), lower ? -0.0 : +0.0);
    }
    return iu * std::sqrt(w);
}

cplx g0_delta(const Genus0Params& g, cplx z) { return std::cos(g0_lambda(g, z) * g.L); }

cplx g0_rho(const Genus0Params& g, cplx z) { return std::exp(iu * g0_lambda(g, z) * g.L); }

Genus0Spectrum g0_exact_spectrum(const Genus0Params& g) {
    Genus0Spectrum s;
    s.E_left = -g.A;
    s.E_right = g.A;
    s.mu0 = -g.A * std::sin(g.alpha);
    s.y22_at_mu = std::exp(-g.A * g.L * std::cos(g.alpha));
    // sigma0 = +1 on alpha in ((2n-1/2)pi,(2n+1/2)pi), -1 on the complement,
    // 0 at alpha = (n+1/2)pi
    double c = std::cos(g.alpha);
    s.sigma0 = (c > 0) ? +1 : (c < 0 ? -1 : 0);
    return s;
}

Mat2 g0_Y(const Genus0Params& g, double x, cplx z, int side) {
    cplx lam = g0_lambda(g, z, side);
    cplx q = std::polar(g.A, g.alpha);
    // W = I - i sigma3 Q/(z+lambda)
    cplx d = z + lam;
    Mat2 W{1.0, -iu * q / d, iu * std::conj(q) / d, 1.0};
    Mat2 E = exp_isigma3(-lam * x);
    return W * E * W.inverse();
}

Mat2 g0_Ytilde(const Genus0Params& g, double x, cplx z, int side) {
    return umatrix() * g0_Y(g, x, z, side) * umatrix_inv();
}

Vec2 g0_psi(const Genus0Params& g, int pm, double x, cplx z) {
    Mat2 YL = g0_Ytilde(g, g.L, z);
    Mat2 Yx = g0_Ytilde(g, x, z);
    cplx rho = g0_rho(g, z);
    cplx mult = (pm > 0) ? rho : 1.0 / rho;
    cplx w = (mult - YL.a11) / YL.a12;
    return Yx.col1() + w * Yx.col2();
}

cplx g0_weyl(const Genus0Params& g, int pm, cplx z) {
    // (rho^{+-1} - ytilde11)/ytilde12 = (+-i lambda - A cos alpha)/(z - mu0)
    cplx lam = g0_lambda(g, z);
    double mu = -g.A * std::sin(g.alpha);
    cplx num = (pm > 0 ? iu * lam : -iu * lam) - g.A * std::cos(g.alpha);
    return num / (z - mu);
}

Mat2 g0_B(const Genus0Params& g, cplx z, int side) {
    if (g0_exact_spectrum(g).sigma0 != -1)
        throw std::invalid_argument("g0_B: closed form implemented for the sigma0 = -1 branch");
    double mu = -g.A * std::sin(g.alpha);
    bool upper = z.imag() > 0.0 || (z.imag() == 0.0 && side >= 0);
    cplx lam = g0_lambda(g, z, side);
    cplx t = std::polar(1.0, pi / 4) / psqrt(2.0 * lam, +1);
    if (upper) return (iu * t) * Mat2::diag(z - mu, 1.0);
    return t * Mat2::diag(1.0, z - mu);
}

Mat2 g0_V(const Genus0Params& g, double x, double z) {
    if (g0_exact_spectrum(g).sigma0 != -1)
        throw std::invalid_argument("g0_V: closed form implemented for the sigma0 = -1 branch");
    double mu = -g.A * std::sin(g.alpha);
    if (z < -g.A) return Mat2::diag(z - mu, 1.0 / (z - mu));
    if (z > g.A) return Mat2::diag(-(z - mu), -1.0 / (z - mu));
    cplx e = std::exp(-2.0 * iu * z * x);
    return Mat2{0.0, iu * e, iu / e, 0.0};
}

cplx g0_upsilon(const Genus0Params& g, cplx z) {
    return -iu * g.A * std::cos(g.alpha) / (g.A * std::sin(g.alpha) + z);
}

cplx g0_xi_root(const Genus0Params& g, cplx z, int side) {
    return psqrt((z - g.A) / (z + g.A), side);
}

cplx g0_xi(const Genus0Params& g, cplx z, int side) {
    return g0_xi_root(g, z, side) *
           (g.A * (1.0 - std::sin(g.alpha)) / (g.A * std::sin(g.alpha) + z) + 1.0);
}

Genus0Chain g0_exact_rhp_chain(const Genus0Params& g, double x, cplx z, int side) {
    auto spec = g0_exact_spectrum(g);
    if (spec.sigma0 != -1)
        throw std::invalid_argument("g0_exact_rhp_chain: requires sigma0 = -1");
    Genus0Chain ch;
    const double A = g.A, alpha = g.alpha, mu = spec.mu0;

    // Phi4 = diag(1, sqrt((z-A)/(z+A)))
    cplx root = psqrt((z - A) / (z + A), side);
    ch.Phi4 = Mat2::diag(1.0, root);

    // Phi3 = J^{-1} Phi4 J, J = [[1,1],[-1,1]]
    Mat2 J{1.0, 1.0, -1.0, 1.0};
    Mat2 Jinv = J.inverse();
    ch.Phi3 = Jinv * ch.Phi4 * J;

    // Phi2 = (I + Res/(z-mu) (Phi3^+(mu))^{-1}) Phi3 with
    // Res = [[-iA cos a, 0],[ iA cos a, 0]]
    cplx r = -iu * A * std::cos(alpha);
    Mat2 Res{r, 0.0, -r, 0.0};
    cplx root_mu = psqrt((cplx(mu) - A) / (cplx(mu) + A), +1);  // limit from above
    Mat2 Phi3mu = Jinv * Mat2::diag(1.0, root_mu) * J;
    Mat2 corr = Mat2::identity() + (1.0 / (z - mu)) * (Res * Phi3mu.inverse());
    ch.Phi2 = corr * ch.Phi3;

    // Phi = U Phi2 e^{-i(lambda - z)x sigma3} B(z)
    cplx lam = g0_lambda(g, z, side);
    ch.Phi = umatrix() * ch.Phi2 * exp_isigma3(-(lam - z) * x) * g0_B(g, z, side);

    // 1/z coefficients of Upsilon and Xi give q = i(c_Upsilon - c_Xi) exactly
    cplx c_ups = -iu * A * std::cos(alpha);
    cplx c_xi = -A * std::sin(alpha);
    ch.q_symbolic = iu * (c_ups - c_xi);
    return ch;
}

cplx g0_q_from_commutator(const Genus0Params& g, cplx z) {
    // Phi2 in the Upsilon/Xi closed form; q ~ (i z [sigma3, Phi2])_{12}
    cplx ups = g0_upsilon(g, z), xi = g0_xi(g, z);
    Mat2 phi2 = 0.5 * Mat2{ups + xi + 1.0, ups - xi + 1.0, -ups - xi + 1.0, -ups + xi + 1.0};
    Mat2 c = commutator(sigma3(), phi2);
    return (iu * z * c).a12;
}

}  // namespace zs

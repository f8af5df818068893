#include <doctest.h>

#include <cmath>

#include "zs/bloch.hpp"
#include "zs/genus0.hpp"
#include "zs/verify.hpp"

using namespace zs;

namespace {
const cplx iu(0.0, 1.0);
const double tol = 1e-11;
}  // namespace

TEST_CASE("zero potential Bloch solutions") {
    auto p = PeriodicPotential::zero(1.0);
    cplx z(0.4, 0.8);
    auto b = bloch_solutions(p, z, 0.63, tol);
    cplx em = std::exp(-iu * z * 0.63), ep = 1.0 / em;
    CHECK((b.psi_minus - Vec2{em, -iu * em}).norm() < 1e-10);
    CHECK((b.psi_plus - Vec2{ep, iu * ep}).norm() < 1e-10);
    auto w = weyl_values(p, z, tol);
    CHECK(std::abs(w.first + iu) < 1e-11);
    CHECK(std::abs(w.second - iu) < 1e-11);
    // quasi-periodicity is exact here
    auto b1 = bloch_solutions(p, z, 1.63, tol);
    CHECK((b1.psi_minus - (1.0 / b.rho) * b.psi_minus).norm() < 1e-9);
}

TEST_CASE("refusal near a Dirichlet eigenvalue") {
    auto p = PeriodicPotential::zero(1.0);
    CHECK_THROWS(bloch_solutions(p, cplx(pi, 0.0), 0.3, tol));  // ytilde12(L, pi) = 0
}

TEST_CASE("constant potential against the eigenvector closed form") {
    Genus0Params g{1.0, 2.4, 1.0};
    auto p = g.potential();
    double worst = 0.0;
    for (cplx z : {cplx(0.0, 2.0), cplx(0.0, 3.0), cplx(1.7, 0.6)}) {
        auto b = bloch_solutions(p, z, 0.3, tol);
        worst = std::max(worst, (b.psi_minus - g0_psi(g, -1, 0.3, z)).norm());
        worst = std::max(worst, (b.psi_plus - g0_psi(g, +1, 0.3, z)).norm());
        auto w = weyl_values(p, z, tol);
        worst = std::max(worst, std::abs(w.first - g0_weyl(g, -1, z)));
        worst = std::max(worst, std::abs(w.second - g0_weyl(g, +1, z)));
    }
    CHECK(worst < 1e-8);
}

TEST_CASE("large-z structure of psi- along the imaginary axis") {
    auto p = standard_two_gap();
    double x = 0.4;
    auto resid = [&](double R) {
        cplx z(0.0, R);
        auto b = bloch_solutions(p, z, x, tol);
        cplx phase = std::exp(iu * z * x);
        return (Vec2{b.psi_minus.a * phase, b.psi_minus.b * phase} - Vec2{1.0, -iu}).norm();
    };
    double r = resid(30.0) / resid(60.0);
    CHECK(std::abs(r - 2.0) < 0.6);  // O(1/z)

    // with the stated 1/z coefficients subtracted the decay steepens to 1/z^2
    auto resid2 = [&](double R) {
        cplx z(0.0, R);
        auto b = bloch_solutions(p, z, x, tol);
        cplx phase = std::exp(iu * z * x);
        double Kx = p.l2_accumulant(x);
        cplx qcx = std::conj(p.evaluate(x));
        cplx c1 = -(Kx + qcx) / (2.0 * iu * z);
        cplx c2 = Kx / (2.0 * z) - qcx / (2.0 * z);
        return (Vec2{b.psi_minus.a * phase - 1.0 - c1, b.psi_minus.b * phase + iu - c2}).norm();
    };
    double r2 = resid2(30.0) / resid2(60.0);
    CHECK(std::abs(r2 - 4.0) < 1.3);
}

TEST_CASE("Weyl second-order asymptotics") {
    auto p = standard_two_gap();
    auto resid = [&](double R) {
        cplx z(0.0, R);
        auto w = weyl_values(p, z, tol);
        return std::abs(w.first + iu + std::conj(p.evaluate(0.0)) / z);
    };
    double r = resid(20.0) / resid(40.0);
    CHECK(std::abs(r - 4.0) < 1.0);
}

TEST_CASE("det Psi identity") {
    auto p = standard_two_gap();
    for (cplx z : {cplx(0.9, 0.8), cplx(0.9, -0.8)}) {
        auto m = monodromy(p, z, tol);
        cplx target = (z.imag() > 0 ? -2.0 : 2.0) * m.sqrt_disc / m.M_tilde.a12;
        for (double x : {0.0, 0.37})
            CHECK(std::abs(bloch_matrix(p, z, x, tol).det() - target) < 1e-8);
    }
}

TEST_CASE("Phi matrix: unimodular, normalized, matches the genus-0 chain") {
    SpectraOptions so;
    so.ode_tol = tol;
    auto p = standard_two_gap();
    SpectralData sd = spectral_data(p, -6.0, 6.0, 0.0, so);
    RhpData rhp = build_rhp_data(p, sd, {});
    for (cplx z : {cplx(0.8, 0.9), cplx(-1.2, -1.4)})
        CHECK(std::abs(phi_matrix(p, rhp, 0.3, z, tol).det() - 1.0) < 1e-8);

    auto resid = [&](double R) {
        cplx z(0.0, R);
        Mat2 m = umatrix_inv() * phi_matrix(p, rhp, 0.37, z, tol) * rhp.B(z).inverse();
        return frob_dist(m, Mat2::identity());
    };
    CHECK(std::abs(resid(20.0) / resid(40.0) - 2.0) < 0.7);

    Genus0Params g{1.0, 3.0 * pi / 4.0, 1.0};
    auto gp = g.potential();
    SpectralData gsd = spectral_data(gp, -3.0, 3.0, 0.0, so);
    RhpData grhp = build_rhp_data(gp, gsd, {});
    cplx z(1.0, 1.0);
    CHECK(frob_dist(phi_matrix(gp, grhp, 0.3, z, tol), g0_exact_rhp_chain(g, 0.3, z).Phi) < 1e-7);
    CHECK_THROWS(phi_matrix(gp, grhp, 0.3, cplx(0.5, 0.0), tol));
}

TEST_CASE("potential recovery from the large-z commutator") {
    auto p0 = PeriodicPotential::zero(1.0);
    auto r0 = reconstruct_from_bloch(p0, 0.3, {20.0, 40.0, 80.0}, tol);
    CHECK(std::abs(r0.q_hat) < 1e-10);

    Genus0Params g{1.0, 3.0 * pi / 4.0, 1.0};
    auto rg = reconstruct_from_bloch(g.potential(), 0.2, {20.0, 40.0, 80.0}, tol);
    CHECK(std::abs(rg.q_hat - std::polar(1.0, 3.0 * pi / 4.0)) < 1e-4);
    CHECK_FALSE(rg.diverging);

    auto p = standard_two_gap();
    double worst = 0.0;
    for (double x : {0.0, 0.25, 0.5, 0.75}) {
        auto rr = reconstruct_from_bloch(p, x, {20.0, 40.0, 80.0}, tol);
        worst = std::max(worst, std::abs(rr.q_hat - p.evaluate(x)));
    }
    CHECK(worst < 1e-3);
}

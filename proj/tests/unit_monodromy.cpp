#include <doctest.h>

#include <cmath>

#include "zs/genus0.hpp"
#include "zs/monodromy.hpp"

using namespace zs;

namespace {
const cplx iu(0.0, 1.0);
}

TEST_CASE("zero potential: explicit exponentials") {
    auto p = PeriodicPotential::zero(1.0);
    cplx z(0.7, 0.4);
    Mat2 y = principal_solution(p, z, 0.6, 1e-12);
    CHECK(std::abs(y.a11 - std::exp(-iu * z * 0.6)) < 1e-11);
    CHECK(std::abs(y.a22 - std::exp(iu * z * 0.6)) < 1e-11);
    CHECK(std::abs(y.a12) < 1e-12);
    CHECK(std::abs(y.a21) < 1e-12);

    auto pL = PeriodicPotential::zero(pi);
    auto m = monodromy(pL, cplx(1.0, 0.0), 1e-12);
    CHECK(std::abs(m.delta + 1.0) < 1e-11);
    CHECK(frob_dist(m.M, Mat2::diag(-1.0, -1.0)) < 1e-10);
    CHECK(m.det_defect < 1e-11);

    auto m2 = monodromy(p, cplx(0.0, 2.0), 1e-12);
    CHECK(std::abs(m2.delta - std::cosh(2.0)) < 1e-10);
    CHECK(std::abs(m2.rho - std::exp(-2.0)) < 1e-10);
}

TEST_CASE("constant potential against the eigenvector closed form") {
    Genus0Params g{1.1, 0.7, 1.3};
    auto p = g.potential();
    double worst = 0.0;
    for (cplx z : {cplx(0.4, 0.0), cplx(1.9, 0.8), cplx(-0.3, -1.2), cplx(0.0, 2.5)}) {
        for (double x : {0.5, 1.3}) {
            Mat2 num = principal_solution(p, z, x, 1e-12);
            Mat2 exact = g0_Y(g, x, z);
            worst = std::max(worst, frob_dist(num, exact));
        }
    }
    CHECK(worst < 1e-9);

    double worst_d = 0.0;
    for (double z = -3.0; z <= 3.0; z += 0.37) {
        auto m = monodromy(p, cplx(z, 0.0), 1e-12);
        worst_d = std::max(worst_d, std::abs(m.delta - g0_delta(g, cplx(z, 0.0))));
    }
    CHECK(worst_d < 1e-9);
}

TEST_CASE("self-convergence at a generic point") {
    // q = 0.5 (1 + 0.3 cos 2 pi x), z = 1 + 0.5i, x = 1
    auto p = PeriodicPotential::from_fourier(1.0, {0.075, 0.5, 0.075});
    cplx z(1.0, 0.5);
    Mat2 coarse = principal_solution(p, z, 1.0, 1e-8);
    Mat2 fine = principal_solution(p, z, 1.0, 1e-12);
    CHECK(frob_dist(coarse, fine) < 10.0 * 1e-8);
}

TEST_CASE("discriminant grid") {
    auto p = PeriodicPotential::zero(0.9);
    double L = 0.9;
    std::vector<cplx> zv = {0.0, pi / L, 2.0 * pi / L};
    auto d = discriminant_grid(p, zv, 1e-12, 2);
    CHECK(std::abs(d[0] - 1.0) < 1e-11);
    CHECK(std::abs(d[1] + 1.0) < 1e-11);
    CHECK(std::abs(d[2] - 1.0) < 1e-11);
    // identical to per-point monodromy
    for (std::size_t i = 0; i < zv.size(); ++i)
        CHECK(d[i] == monodromy(p, zv[i], 1e-12).delta);
}

TEST_CASE("Schwarz reflection of the discriminant") {
    auto p = PeriodicPotential::from_fourier(1.0, {cplx(0.1, 0.2), cplx(0.4), cplx(0.0, -0.15)});
    cplx z(1.2, 0.7);
    cplx d1 = monodromy(p, z, 1e-11).delta;
    cplx d2 = monodromy(p, std::conj(z), 1e-11).delta;
    CHECK(std::abs(d2 - std::conj(d1)) < 1e-9);
}

TEST_CASE("branch selection keeps |rho| <= 1 and flags the spectrum") {
    auto p = PeriodicPotential::constant(1.0, cplx(1.0, 0.0));
    auto off = monodromy(p, cplx(0.3, 0.0), 1e-12);  // inside the gap (-1, 1)
    CHECK(std::abs(off.rho) < 1.0);
    CHECK_FALSE(off.branch_ambiguous);
    auto on = monodromy(p, cplx(2.0, 0.0), 1e-12);  // on the spectrum
    CHECK(on.branch_ambiguous);
    // continuous-from-above evaluation resolves it
    cplx r = rho_above(p, 2.0, 1e-12);
    CHECK(std::abs(std::abs(r) - 1.0) < 1e-9);
}

TEST_CASE("scaled discriminant matches the raw one at moderate height") {
    auto p = PeriodicPotential::from_fourier(1.0, {0.1, 0.45, 0.1});
    cplx z(0.0, 6.0);
    cplx lhs = delta_scaled(p, z, 1e-12);
    cplx rhs = 2.0 * monodromy(p, z, 1e-12).delta * std::exp(iu * z * 1.0);
    CHECK(std::abs(lhs - rhs) < 1e-9 * std::abs(lhs));
}

TEST_CASE("ytilde12 derivative against the constant-potential closed form") {
    Genus0Params g{0.8, 0.5, 1.0};
    auto p = g.potential();
    double z = 1.7;
    double h = 1e-5;
    double fd = (g0_Ytilde(g, 1.0, cplx(z + h)).a12.real() -
                 g0_Ytilde(g, 1.0, cplx(z - h)).a12.real()) /
                (2.0 * h);
    CHECK(std::abs(ytilde12_prime(p, z, 1e-11) - fd) < 1e-5);
}

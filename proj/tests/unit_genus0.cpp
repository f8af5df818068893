#include <doctest.h>

#include <cmath>

#include "zs/genus0.hpp"

using namespace zs;

namespace {
const cplx iu(0.0, 1.0);
}

TEST_CASE("lambda branch rules") {
    Genus0Params g{1.0, 0.0, 1.0};
    // inside the gap: positive imaginary
    CHECK(std::abs(g0_lambda(g, cplx(0.0)) - iu) < 1e-15);
    // on the right cut, from above: positive real
    CHECK(std::abs(g0_lambda(g, cplx(2.0), +1) - std::sqrt(3.0)) < 1e-14);
    // on the left cut, from above: negative real
    CHECK(std::abs(g0_lambda(g, cplx(-2.0), +1) + std::sqrt(3.0)) < 1e-14);
    // from below the roles swap
    CHECK(std::abs(g0_lambda(g, cplx(2.0), -1) + std::sqrt(3.0)) < 1e-14);
    // cos(lambda L) is even in the branch: Delta agrees on both sides
    CHECK(std::abs(g0_delta(g, cplx(2.0)) - std::cos(std::sqrt(3.0))) < 1e-14);
    // consistency with continuity off the cut
    CHECK(std::abs(g0_lambda(g, cplx(2.0, 1e-9)) - g0_lambda(g, cplx(2.0), +1)) < 1e-4);
    // |rho| < 1 off the spectrum
    CHECK(std::abs(g0_rho(g, cplx(0.4, 0.0))) < 1.0);
    CHECK(std::abs(g0_rho(g, cplx(1.3, 0.8))) < 1.0);
}

TEST_CASE("exact spectrum rules") {
    {
        auto s = g0_exact_spectrum({1.0, 0.0, 1.0});
        CHECK(s.mu0 == 0.0);
        CHECK(s.sigma0 == +1);
    }
    {
        auto s = g0_exact_spectrum({1.0, 0.5 * pi, 1.0});
        CHECK(std::abs(s.mu0 + 1.0) < 1e-15);
        CHECK(s.sigma0 == 0);
    }
    {
        auto s = g0_exact_spectrum({2.0, pi, 0.5});
        CHECK(std::abs(s.y22_at_mu - std::exp(1.0)) < 1e-12);
        CHECK(s.sigma0 == -1);
    }
}

TEST_CASE("explicit RHP chain") {
    Genus0Params g{1.0, 3.0 * pi / 4.0, 1.0};
    cplx z(0.0, 2.0);
    auto ch = g0_exact_rhp_chain(g, 0.4, z);

    CHECK(std::abs(ch.Phi2.det() - 1.0) < 1e-10);
    CHECK(std::abs(ch.Phi3.det() - 1.0) < 1e-10);

    // Phi2 equals the closed form assembled from Upsilon and Xi
    cplx ups = g0_upsilon(g, z), xi = g0_xi(g, z);
    Mat2 direct = 0.5 * Mat2{ups + xi + 1.0, ups - xi + 1.0, -ups - xi + 1.0, -ups + xi + 1.0};
    CHECK(frob_dist(ch.Phi2, direct) < 1e-12);

    // Phi4 jump across (-A, A) is sigma3
    double zz = 0.33;
    Mat2 p4p = Mat2::diag(1.0, g0_xi_root(g, cplx(zz), +1));
    Mat2 p4m = Mat2::diag(1.0, g0_xi_root(g, cplx(zz), -1));
    CHECK(frob_dist(p4p, p4m * sigma3()) < 1e-13);

    // recovery: exact from the expansion coefficients, approximate from the
    // finite-z commutator
    CHECK(std::abs(ch.q_symbolic - std::polar(1.0, 3.0 * pi / 4.0)) < 1e-14);
    CHECK(std::abs(g0_q_from_commutator(g, cplx(0.0, 100.0)) - std::polar(1.0, 3.0 * pi / 4.0)) <
          1e-3);

    // the chain is only worked out on the sigma0 = -1 branch
    CHECK_THROWS(g0_exact_rhp_chain({1.0, 0.0, 1.0}, 0.3, z));
}

TEST_CASE("square-root identity used to assemble Xi (cos alpha < 0)") {
    for (double al : {1.7, 2.2, 2.8, 3.6, 4.2}) {
        cplx lhs = std::sqrt(cplx(std::sin(al) + 1.0) / cplx(std::sin(al) - 1.0));
        cplx rhs = -iu * std::cos(al) / (1.0 - std::sin(al));
        CHECK(std::abs(lhs - rhs) < 1e-12);
    }
}

TEST_CASE("residue conditions at the Dirichlet eigenvalue") {
    // upper-half-plane residues via (z - mu) Phi2(z) on z = mu + i eps with
    // quadratic extrapolation in eps (Phi2 is sectional, so the limit must be
    // taken from one side)
    Genus0Params g{1.0, 3.0 * pi / 4.0, 1.0};
    double mu = -std::sin(3.0 * pi / 4.0);
    auto probe = [&](double eps) {
        cplx zc(mu, eps);
        cplx ups = g0_upsilon(g, zc), xi = g0_xi(g, zc);
        Mat2 phi2 = 0.5 * Mat2{ups + xi + 1.0, ups - xi + 1.0, -ups - xi + 1.0, -ups + xi + 1.0};
        return phi2 * (zc - mu);
    };
    Mat2 g1 = probe(1e-3), g2 = probe(5e-4), g3 = probe(2.5e-4);
    // Richardson: res = (8 g3 - 6 g2 + g1)/3 kills the eps and eps^2 terms
    Mat2 res = (1.0 / 3.0) * (8.0 * g3 - 6.0 * g2 + g1);
    double target = std::cos(3.0 * pi / 4.0);
    CHECK(std::abs(res.a11 - cplx(0.0, -target)) < 1e-6);
    CHECK(std::abs(res.a12) < 1e-6);
    CHECK(std::abs(res.a11 + res.a21) < 1e-6);
    CHECK(std::abs(res.a22) < 1e-6);
}

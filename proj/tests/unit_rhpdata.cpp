#include <doctest.h>

#include <cmath>

#include "zs/genus0.hpp"
#include "zs/rhpdata.hpp"
#include "zs/verify.hpp"

using namespace zs;

namespace {
const cplx iu(0.0, 1.0);

RhpData synthetic_sigma0(std::vector<std::pair<double, int>> gammas) {
    // minimal RhpData carrying only gap data for the counting function
    RhpData r;
    long k = 0;
    for (auto [gv, sv] : gammas) {
        r.data.gaps.push_back({gv - 0.1, gv + 0.1, k++, gv, sv});
        if (sv == 0 && (!r.has_sigma0 || std::abs(gv) < std::abs(r.gamma_star))) {
            r.gamma_star = gv;
            r.has_sigma0 = true;
        }
    }
    return r;
}

SpectraOptions opts() {
    SpectraOptions s;
    s.ode_tol = 1e-11;
    return s;
}
}  // namespace

TEST_CASE("counting function") {
    SUBCASE("no sigma = 0 eigenvalues") {
        auto r = synthetic_sigma0({{1.0, -1}, {-0.5, +1}});
        CHECK(r.counting_m(0.0) == 0);
        CHECK(r.counting_m(5.0) == 0);
    }
    SUBCASE("single sigma = 0 eigenvalue at 1") {
        auto r = synthetic_sigma0({{1.0, 0}});
        CHECK(r.counting_m(2.0) == 1);
        CHECK(r.counting_m(0.5) == 0);
    }
    SUBCASE("sigma = 0 at -2 and at gamma* = 1") {
        auto r = synthetic_sigma0({{-2.0, 0}, {1.0, 0}});
        CHECK(r.counting_m(0.0) == 0);
        CHECK(r.counting_m(-3.0) == 1);
        // above gamma*: count the sigma=0 eigenvalues in [gamma*, z]
        CHECK(r.counting_m(4.0) == 1);
        // parity flips across every sigma = 0 eigenvalue
        CHECK((r.counting_m(-2.01) - r.counting_m(-1.99)) % 2 != 0);
        CHECK((r.counting_m(0.99) - r.counting_m(1.01)) % 2 != 0);
    }
}

TEST_CASE("genus-0 products and B matrix") {
    Genus0Params g{1.0, 3.0 * pi / 4.0, 1.0};
    auto p = g.potential();
    SpectralData sd = spectral_data(p, -3.0, 3.0, 0.0, opts());
    RhpData rhp = build_rhp_data(p, sd, {});
    double mu = -std::sin(3.0 * pi / 4.0);

    // sigma0 = -1: f- = z - mu, f+ = 1
    cplx z(1.3, 0.4);
    CHECK(std::abs(rhp.f_minus(z) - (z - mu)) < 1e-8);
    CHECK(std::abs(rhp.f_plus(z) - 1.0) < 1e-14);

    // B against the closed form in both half planes
    double worst = 0.0;
    for (cplx zz : {cplx(0.0, 2.0), cplx(1.1, 0.9), cplx(-0.4, -1.3)})
        worst = std::max(worst, frob_dist(rhp.B(zz), g0_B(g, zz)));
    CHECK(worst < 1e-8);

    // det(U B) -> 1
    CHECK(std::abs((umatrix() * rhp.B(cplx(0.0, 30.0))).det() - 1.0) < 2e-2);
    CHECK(std::abs((umatrix() * g0_B(g, cplx(0.0, 30.0))).det() - 1.0) < 2e-2);
}

TEST_CASE("empty products at q = 0") {
    auto p = PeriodicPotential::zero(1.0);
    SpectralData sd = spectral_data(p, -4.2, 4.2, 0.0, opts());
    RhpData rhp = build_rhp_data(p, sd, {});
    cplx z(0.7, 0.5);
    CHECK(std::abs(rhp.f_plus(z) - 1.0) == 0.0);
    CHECK(std::abs(rhp.f_minus(z) - 1.0) == 0.0);
    CHECK(std::abs(rhp.ratio(z) - std::polar(1.0, pi / 4)) < 1e-13);
    auto jm = rhp.jump_V(0.3, 0.77);
    CHECK(jm.segment_kind == SegmentKind::band);
    CHECK(std::abs(jm.value.det() - 1.0) < 1e-12);
}

TEST_CASE("jump matrices on the genus-0 segments") {
    Genus0Params g{1.0, 3.0 * pi / 4.0, 1.0};
    auto p = g.potential();
    SpectralData sd = spectral_data(p, -3.0, 3.0, 0.0, opts());
    RhpData rhp = build_rhp_data(p, sd, {});
    double mu = sd.gaps[0].gamma;

    auto v_right = rhp.jump_V(0.4, 2.0);
    CHECK(v_right.segment_kind == SegmentKind::band);
    CHECK(frob_dist(v_right.value, Mat2::diag(-(2.0 - mu), -1.0 / (2.0 - mu))) < 1e-9);
    CHECK(frob_dist(v_right.value, g0_V(g, 0.4, 2.0)) < 1e-8);

    auto v_left = rhp.jump_V(0.4, -2.0);
    CHECK(frob_dist(v_left.value, g0_V(g, 0.4, -2.0)) < 1e-8);

    auto v_gap = rhp.jump_V(0.4, 0.3);
    CHECK(v_gap.segment_kind == SegmentKind::gap);
    CHECK(frob_dist(v_gap.value, g0_V(g, 0.4, 0.3)) < 1e-8);
    CHECK(std::abs(v_gap.value.det() - 1.0) < 1e-12);

    // time-dependent variant carries the extra quadratic phase
    auto v_t = rhp.jump_V(0.4, 0.3, 0.05);
    cplx phase = std::exp(-2.0 * iu * cplx(0.3) * 0.4 - 4.0 * iu * cplx(0.3) * cplx(0.3) * 0.05);
    CHECK(std::abs(v_t.value.a12 - iu * phase) < 1e-12);
    CHECK(std::abs(v_t.value.det() - 1.0) < 1e-12);

    // refusals
    CHECK_THROWS(rhp.jump_V(0.0, 1.0 + 1e-9));   // at an edge
    CHECK_THROWS(rhp.jump_V(0.0, 5.0));          // outside the window
}

TEST_CASE("jump consistency against the Bloch boundary values") {
    Genus0Params g{1.0, 3.0 * pi / 4.0, 1.0};
    auto p = g.potential();
    SpectralData sd = spectral_data(p, -3.0, 3.0, 0.0, opts());
    RhpData rhp = build_rhp_data(p, sd, {});

    auto gap = jump_consistency_check(p, rhp, 0.3, 0.5);
    CHECK(gap.pass);
    CHECK(gap.jump_residual < 1e-8);
    auto band = jump_consistency_check(p, rhp, 0.3, 2.0);
    CHECK(band.pass);
    CHECK(band.jump_residual < 1e-8);
}

TEST_CASE("two-gap data: product identity and consistency") {
    auto p = standard_two_gap();
    SpectralData sd = spectral_data(p, -6.0, 6.0, 0.0, opts());
    REQUIRE(sd.gaps.size() >= 2);
    RhpData rhp = build_rhp_data(p, sd, {});
    CHECK(rhp.calib.ok);

    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        double z = -5.1 + 10.2 * i / 19.0;
        double y12 = monodromy(p, cplx(z, 0.0), 1e-11).M_tilde.a12.real();
        if (std::abs(y12) < 5e-2) continue;
        cplx prod = rhp.f_zero(z) * rhp.f_plus(z) * rhp.f_minus(z);
        worst = std::max(worst, std::abs(prod / (0.5 * y12) - 1.0));
    }
    CHECK(worst < 1e-3);

    double band_z = 0.5 * (sd.gaps[0].E_right + sd.gaps[1].E_left);
    double gap_z = 0.5 * (sd.gaps[1].E_left + sd.gaps[1].E_right);
    CHECK(jump_consistency_check(p, rhp, 0.27, band_z).pass);
    CHECK(jump_consistency_check(p, rhp, 0.27, gap_z).pass);
}

TEST_CASE("periodicity certificates") {
    auto p = standard_two_gap();
    BandStructure bs = main_spectrum(p, -6.0, 6.0, opts());
    auto good = periodicity_certificate(p, bs, 1.0, CertificateMode::space, 1e-10);
    CHECK(good.pass);
    CHECK(good.jump_residual < 1e-6);

    auto bad = periodicity_certificate(p, bs, 0.7, CertificateMode::space, 1e-10);
    CHECK_FALSE(bad.pass);
    CHECK(bad.jump_residual > 1e-3);

    // a constant potential is periodic with any period
    Genus0Params g{1.0, 0.3, 1.0};
    BandStructure gbs = main_spectrum(g.potential(), -3.0, 3.0, opts());
    auto half = periodicity_certificate(g.potential(), gbs, 0.5, CertificateMode::space, 1e-10);
    CHECK(half.pass);
}

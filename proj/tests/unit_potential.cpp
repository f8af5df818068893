#include <doctest.h>

#include <cmath>

#include "zs/potential.hpp"

using namespace zs;

TEST_CASE("zero and constant potentials") {
    auto p0 = PeriodicPotential::zero(1.0);
    CHECK(std::abs(p0.evaluate(0.37)) == 0.0);
    CHECK(std::abs(p0.evaluate_dx(0.37)) == 0.0);

    auto pc = PeriodicPotential::constant(2.0 * pi, std::polar(0.8, 0.4));
    CHECK(std::abs(pc.evaluate(1.3) - std::polar(0.8, 0.4)) < 1e-15);
    CHECK(std::abs(pc.evaluate_dx(1.3)) < 1e-15);
}

TEST_CASE("single harmonic: value and derivative") {
    double L = 1.7;
    auto p = PeriodicPotential::from_fourier(L, {0.0, 0.0, 1.0});  // e^{2 pi i x / L}
    CHECK(std::abs(p.evaluate(0.0) - 1.0) < 1e-15);
    CHECK(std::abs(p.evaluate_dx(0.0) - cplx(0.0, 2.0 * pi / L)) < 1e-14);
    CHECK(std::abs(p.shifted(L / 2).evaluate(0.0) + 1.0) < 1e-14);
    // exact periodicity
    CHECK(std::abs(p.evaluate(0.3 + L) - p.evaluate(0.3)) < 1e-14);
}

TEST_CASE("grid construction interpolates band-limited data") {
    double L = 2.0, A = 0.9;
    int N = 256;
    std::vector<cplx> samples(N);
    for (int j = 0; j < N; ++j) {
        double x = j * L / N;
        samples[j] = A * (1.0 + 0.3 * std::cos(2.0 * pi * x / L));
    }
    auto p = PeriodicPotential::from_samples(L, samples);
    // at x = L/4 the cosine vanishes
    CHECK(std::abs(p.evaluate(L / 4) - A) < 1e-12);
    // node agreement to machine precision
    double worst = 0.0;
    for (int j = 0; j < N; j += 17) worst = std::max(worst, std::abs(p.evaluate(j * L / N) - samples[j]));
    CHECK(worst < 1e-12);
    // Fourier and grid constructors agree on shared input
    auto pf = PeriodicPotential::from_fourier(L, {0.15 * A, A, 0.15 * A});
    CHECK(std::abs(pf.evaluate(0.77) - p.evaluate(0.77)) < 1e-12);
}

TEST_CASE("shift_base composition and periodic shift") {
    auto p = PeriodicPotential::from_fourier(1.0, {cplx(0.1, -0.2), cplx(0.5), cplx(0.0, 0.3)});
    auto a = p.shifted(0.2).shifted(0.35);
    auto b = p.shifted(0.55);
    double worst = 0.0;
    for (double x : {0.0, 0.31, 0.64, 0.99})
        worst = std::max(worst, std::abs(a.evaluate(x) - b.evaluate(x)));
    CHECK(worst < 1e-12);
    CHECK(std::abs(p.shifted(0.0).evaluate(0.4) - p.evaluate(0.4)) == 0.0);
    CHECK(std::abs(p.shifted(1.0).evaluate(0.4) - p.evaluate(0.4)) < 1e-14);
}

TEST_CASE("l2 accumulant") {
    auto p0 = PeriodicPotential::zero(1.0);
    CHECK(p0.l2_accumulant(0.7) == 0.0);

    double A = 1.3, L = 0.8;
    auto pc = PeriodicPotential::constant(L, std::polar(A, 0.9));
    CHECK(std::abs(pc.l2_accumulant(L) - A * A * L) < 1e-12);

    // sin(2 pi x / L) as a complex-valued potential: integral of sin^2 = L/2
    auto ps = PeriodicPotential::from_fourier(1.0, {cplx(0.0, 0.5), 0.0, cplx(0.0, -0.5)});
    CHECK(std::abs(ps.l2_accumulant(1.0) - 0.5) < 1e-12);

    // monotone
    double prev = 0.0;
    for (int i = 1; i <= 10; ++i) {
        double k = ps.l2_accumulant(i / 10.0);
        CHECK(k >= prev - 1e-14);
        prev = k;
    }
    CHECK_THROWS(ps.l2_accumulant(1.5));
    CHECK_THROWS(ps.l2_accumulant(-0.2));
}

TEST_CASE("derivative converges at second order against centered differences") {
    auto p = PeriodicPotential::from_fourier(1.0, {cplx(0.2, 0.1), cplx(0.5), cplx(-0.1, 0.3)});
    double x = 0.41;
    auto err = [&](double h) {
        return std::abs((p.evaluate(x + h) - p.evaluate(x - h)) / (2.0 * h) - p.evaluate_dx(x));
    };
    double r = err(2e-3) / err(1e-3);
    CHECK(std::abs(r - 4.0) < 1.0);
}

TEST_CASE("construction errors") {
    CHECK_THROWS(PeriodicPotential::from_fourier(-1.0, {cplx(1.0)}));
    CHECK_THROWS(PeriodicPotential::from_fourier(1.0, {}));
    CHECK_THROWS(PeriodicPotential::from_samples(1.0, {}));
    CHECK_THROWS(PeriodicPotential::from_fourier(
        1.0, {cplx(std::numeric_limits<double>::quiet_NaN(), 0.0)}));
}

#include <doctest.h>

#include <cmath>

#include "zs/inverse.hpp"
#include "zs/verify.hpp"

using namespace zs;

namespace {
InverseOptions iopts() {
    InverseOptions o;
    o.spectra.ode_tol = 1e-11;
    return o;
}

std::vector<Genus0Params> family() {
    std::vector<Genus0Params> f;
    for (double A : {0.5, 1.0})
        for (double al : {0.0, pi / 4, 3 * pi / 4}) f.push_back({A, al, 1.0});
    return f;
}
}  // namespace

TEST_CASE("trace convention calibrates uniquely on the constant family") {
    auto conv = calibrate_trace_convention(family(), iopts());
    CHECK(conv.ok);
    CHECK(conv.residual < 1e-8);
    CHECK(conv.second_best_residual > 10.0 * std::max(conv.residual, 1e-12));
    // the pairing that emerges: the standard family drives Im q
    CHECK_FALSE(conv.std_feeds_re);
    CHECK(conv.scale_re == 0.5);
    CHECK(conv.scale_im == 0.5);
}

TEST_CASE("zero potential: both trace sums vanish") {
    auto p0 = PeriodicPotential::zero(1.0);
    auto o = iopts();
    CHECK(std::abs(trace_sum(p0, -4.2, 4.2, 0.0, DirichletVariant::standard, o.spectra)) < 1e-8);
    CHECK(std::abs(trace_sum(p0, -4.2, 4.2, 0.0, DirichletVariant::auxiliary, o.spectra)) < 1e-8);
}

TEST_CASE("constant potential reconstructs at several base points") {
    auto conv = calibrate_trace_convention(family(), iopts());
    Genus0Params g{1.0, 3.0 * pi / 4.0, 1.0};
    std::vector<double> xs;
    for (int i = 0; i < 8; ++i) xs.push_back(i / 8.0);
    auto qh = trace_reconstruct(g.potential(), -3.4, 3.4, xs, conv, iopts().spectra);
    for (auto q : qh) CHECK(std::abs(q - std::polar(1.0, 3.0 * pi / 4.0)) < 1e-6);
}

TEST_CASE("family exchange breaks the genus-0 fit by a wide margin") {
    auto conv = calibrate_trace_convention(family(), iopts());
    TraceConvention swapped = conv;
    swapped.std_feeds_re = !conv.std_feeds_re;
    Genus0Params g{1.0, 0.0, 1.0};  // q = A: Re q = A, Im q = 0
    auto o = iopts();
    auto qh_ok = trace_reconstruct(g.potential(), -3.4, 3.4, {0.0}, conv, o.spectra);
    auto qh_bad = trace_reconstruct(g.potential(), -3.4, 3.4, {0.0}, swapped, o.spectra);
    double e_ok = std::abs(qh_ok[0] - 1.0);
    double e_bad = std::abs(qh_bad[0] - 1.0);
    CHECK(e_bad > 10.0 * std::max(e_ok, 1e-12));
}

TEST_CASE("degenerate gaps contribute nothing") {
    // the open-gap sum for q = 0 is empty, so adding window slack or moving
    // the base point changes nothing
    auto p0 = PeriodicPotential::zero(1.0);
    auto o = iopts();
    double a = trace_sum(p0, -4.2, 4.2, 0.0, DirichletVariant::standard, o.spectra);
    double b = trace_sum(p0, -7.2, 7.2, 0.33, DirichletVariant::standard, o.spectra);
    CHECK(std::abs(a) < 1e-8);
    CHECK(std::abs(b) < 1e-8);
}

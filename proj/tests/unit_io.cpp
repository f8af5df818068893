#include <doctest.h>

#include <cmath>

#include "zs/io.hpp"
#include "zs/spectra.hpp"
#include "zs/verify.hpp"

using namespace zs;

TEST_CASE("potential JSON round trip is bit exact and stable") {
    auto p = PeriodicPotential::from_fourier(
        1.0, {cplx(0.1234567890123456, -0.9), cplx(0.55), cplx(1e-17, 0.2)});
    std::string j1 = potential_to_json(p);
    auto p2 = potential_from_json(j1);
    std::string j2 = potential_to_json(p2);
    CHECK(j1 == j2);
    CHECK(p2.period() == p.period());
    for (int n = -1; n <= 1; ++n) CHECK(p2.coefficient(n) == p.coefficient(n));
}

TEST_CASE("sample-kind potential file") {
    std::string text = R"({"period": 2.0, "kind": "samples",
                           "data": [[1.0,0.0],[0.0,1.0],[-1.0,0.0],[0.0,-1.0]]})";
    auto p = potential_from_json(text);
    CHECK(p.period() == 2.0);
    CHECK(std::abs(p.evaluate(0.0) - 1.0) < 1e-14);
    CHECK(std::abs(p.evaluate(0.5) - cplx(0.0, 1.0)) < 1e-14);
}

TEST_CASE("spectral data and band structure serialization") {
    SpectraOptions so;
    so.ode_tol = 1e-10;
    auto p = PeriodicPotential::constant(1.0, std::polar(1.0, 3.0 * pi / 4.0));
    auto sd = spectral_data(p, -3.0, 3.0, 0.0, so);
    std::string j = spectral_data_to_json(sd);
    CHECK(j.find("\"gaps\"") != std::string::npos);
    CHECK(j.find("\"gamma\"") != std::string::npos);
    CHECK(j == spectral_data_to_json(sd));  // deterministic

    auto bs = main_spectrum(p, -3.0, 3.0, so);
    std::string bj = band_structure_to_json(bs);
    CHECK(bj.find("\"open_gaps\"") != std::string::npos);
}

TEST_CASE("csv and svg emission") {
    std::vector<double> zs = {0.0, 0.5, 1.0};
    std::vector<double> ds = {1.0, 0.2, -1.0};
    std::string csv = delta_csv(zs, ds);
    CHECK(csv.rfind("z,delta\n", 0) == 0);
    CHECK(csv.find("0.5,0.2") != std::string::npos);

    SpectraOptions so;
    auto p = PeriodicPotential::zero(1.0);
    auto bs = main_spectrum(p, -3.0, 3.0, so);
    std::string svg = bands_svg(zs, ds, bs, {0.3});
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);

    std::vector<FlowLogRow> rows = {{0.0, {0.1, -0.2}, {1, -1}, 1e-9}};
    std::string fcsv = flow_log_csv(rows);
    CHECK(fcsv.rfind("t,gamma0,sigma0,gamma1,sigma1,delta_drift\n", 0) == 0);
}

TEST_CASE("format_double keeps full precision") {
    double v = 0.12345678901234567;
    CHECK(std::stod(format_double(v)) == v);
}

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "zs/potential.hpp"

namespace zs {

struct CheckRow {
    std::string suite;
    std::string name;
    double residual;
    double threshold;
    bool pass;
};

struct VerifyOptions {
    double ode_tol = 1e-10;
    double eps_gap = 1e-8;
    double eps_sign = 1e-8;
    double eps_deriv = 1e-6;
    double eps_edge = 1e-6;
    int threads = 1;
    unsigned seed = 20240817;
    int n_random = 20;  // random potentials for the interlacing property
};

// Standard test potentials.
PeriodicPotential standard_two_gap();          // two dominant gaps in [-6, 6]
PeriodicPotential random_smooth(unsigned seed, double amplitude = 0.35);

std::vector<CheckRow> run_verify_suite(const std::string& filter, const VerifyOptions& opts);

std::string render_check_table(const std::vector<CheckRow>& rows);

}  // namespace zs

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zs/monodromy.hpp"
#include "zs/potential.hpp"

namespace zs {

struct SpectraOptions {
    double ode_tol = 1e-10;
    double eps_gap = 1e-8;    // degenerate-gap width threshold, scaled by (1+|E|)
    double eps_sign = 1e-8;   // sigma = 0 threshold on |log|y22||
    double eps_deriv = 1e-6;  // |Delta'| threshold for double-root classification
    double root_xtol = 1e-12;
    int grid_per_pi = 16;  // scan intervals per pi/L
    bool count_check = false;
    int count_check_N = 320;
    int threads = 1;
};

struct ZetaPoint {
    double z;
    int multiplicity;  // 1 simple, 2 double
    int delta_sign;    // Delta(z) = +1 or -1
    long index;        // paper indexing; doubles occupy (index, index+1)
};

struct GapInfo {
    double E_left, E_right;
    long k;  // gap index: E_{2k-1} = left, E_{2k} = right
};

struct CountCheck {
    bool performed = false;
    bool ok = true;
    int found = 0, expected = 0;
};

struct BandStructure {
    std::vector<ZetaPoint> zetas;    // sorted
    std::vector<GapInfo> open_gaps;  // sorted by k
    double z_lo = 0, z_hi = 0;
    double gap_threshold = 0;
    bool zero_in_gap = true;
    long genus_lo = 0, genus_hi = -1;  // k-range of open gaps; empty if lo > hi
    CountCheck count_check;

    // gap pair (E_{2k-1}, E_{2k}) for any in-window k, degenerate or open
    std::optional<std::pair<double, double>> gap_pair(long k) const;
    long k_min() const, k_max() const;
};

enum class DirichletVariant { standard, auxiliary };

struct GapDatum {
    double E_left, E_right;
    long k;
    double gamma;
    int sigma;
};

struct SpectralData {
    std::vector<GapDatum> gaps;  // open gaps with their movable eigenvalue
    std::vector<double> fixed_dirichlet;
    std::vector<double> aux_dirichlet;
    double base_point = 0.0;
    double window_lo = 0, window_hi = 0;
    double L = 0;
};

BandStructure main_spectrum(const PeriodicPotential& p, double lo, double hi,
                            const SpectraOptions& opts);

std::vector<double> dirichlet_spectrum(const PeriodicPotential& p, double lo, double hi,
                                       DirichletVariant variant, const SpectraOptions& opts);

std::vector<int> dirichlet_signs(const PeriodicPotential& p, const std::vector<double>& mus,
                                 DirichletVariant variant, const SpectraOptions& opts);

SpectralData spectral_data(const PeriodicPotential& p, double lo, double hi, double x0,
                           const SpectraOptions& opts);

// ytilde12(L, z) (or ycheck12) as a real-valued function of real z.
double dirichlet_function(const PeriodicPotential& p, double z, DirichletVariant variant,
                          double tol);

}  // namespace zs

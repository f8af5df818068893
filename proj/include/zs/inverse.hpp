#pragma once

#include <vector>

#include "zs/genus0.hpp"
#include "zs/spectra.hpp"

namespace zs {

// Affine convention linking the two Dirichlet-family trace sums to Re q and
// Im q; pinned against closed-form oracle cases before any use.
struct TraceConvention {
    int sign_re = -1, sign_im = +1;
    double scale_re = 0.5, scale_im = 0.5;
    bool std_feeds_re = false;  // which family drives the real part
    bool ok = false;
    double residual = 0.0;
    double second_best_residual = 0.0;
};

struct InverseOptions {
    SpectraOptions spectra;
    double window_lo = -6.0, window_hi = 6.0;
};

// Searches the finite candidate set {signs} x {scales in {1/2, 1, 2}} x
// {family pairings} for the convention reproducing q on the supplied genus-0
// cases; hard error when no candidate fits.
TraceConvention calibrate_trace_convention(const std::vector<Genus0Params>& oracle_cases,
                                           const InverseOptions& opts);

// Sum over open gaps of (E_{2k-1} + E_{2k} - 2 gamma_k(x)) for one family.
double trace_sum(const PeriodicPotential& p, double lo, double hi, double x,
                 DirichletVariant variant, const SpectraOptions& opts);

// q_hat(x) at the sample points from the calibrated two-family trace sums.
std::vector<cplx> trace_reconstruct(const PeriodicPotential& p, double lo, double hi,
                                    const std::vector<double>& xs, const TraceConvention& conv,
                                    const SpectraOptions& opts);

struct RoundtripReport {
    std::vector<double> xs;
    std::vector<cplx> q_true, q_trace, q_bloch;
    double sup_trace = 0.0, sup_bloch = 0.0;
};

RoundtripReport roundtrip_report(const PeriodicPotential& p, double lo, double hi, int n_x,
                                 const TraceConvention& conv, const SpectraOptions& opts);

}  // namespace zs

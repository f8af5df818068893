#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "zs/monodromy.hpp"
#include "zs/potential.hpp"
#include "zs/spectra.hpp"

namespace zs {

struct NlsResult {
    PeriodicPotential q;
    bool aliasing_warning = false;
    double top_third_mass = 0.0;
};

// Strang split-step integrator for i q_t + q_xx - 2|q|^2 q = 0 on n_modes
// uniform points: exact Fourier linear half steps around the exact pointwise
// nonlinear step. Second order in dt.
NlsResult nls_step(const PeriodicPotential& p, double dt, int n_steps, int n_modes);

// c1(z) = -2z^2 - iz(q*(0)-q(0)) - |q(0)|^2 - (q_x(0)+q_x*(0))/2.
cplx c1_coefficient(const PeriodicPotential& p, cplx z);

struct TrackState {
    double gamma;
    int sigma;
    long gap_k;
    double E_left, E_right;
};

struct FlowState {
    double t = 0.0;
    PeriodicPotential q;
    std::vector<TrackState> tracks;
    std::vector<cplx> probes;
    std::vector<cplx> probe_delta0;
};

struct FlowOptions {
    double ode_tol = 1e-10;
    double eps_gap = 1e-8;
    double eps_sign = 1e-8;
    int n_modes = 256;
    double edge_chart_radius = 1e-3;  // switch to the w = rho - 1/rho chart
};

FlowState make_flow_state(const PeriodicPotential& q0, double window_lo, double window_hi,
                          const std::vector<cplx>& probes, const FlowOptions& opts);

// Advances the potential by split-step and each movable Dirichlet eigenvalue by
// RK4 on its evolution ODE, with the local w-chart taking over near gap edges.
FlowState dirichlet_flow(FlowState state, double t_end, double dt, const FlowOptions& opts);

// Right-hand side of the Dirichlet eigenvalue ODE in the z chart.
double dirichlet_ode_rhs(const PeriodicPotential& p, double gamma, int sigma, double tol);

// Apply the second Lax operator (similarity frame, reduced on solutions)
// to a vector at position x.
Vec2 apply_atilde(const PeriodicPotential& p, cplx z, double x, const Vec2& v, double tol);

// alpha+- from the Weyl values; simple poles at the Dirichlet eigenvalues.
std::pair<cplx, cplx> alpha_pm(const PeriodicPotential& p, cplx z, double tol);

// e+-(t,z) = exp(int_0^t alpha+-(tau, z) dtau) by Gauss-Legendre in tau with
// split-step snapshots at the nodes. Refuses when a Dirichlet zero of
// ytilde12(L, tau, .) sweeps through z.
std::pair<cplx, cplx> e_pm(const PeriodicPotential& q0, double t, cplx z, double dt_pde,
                           const FlowOptions& opts);

struct IsospectralityReport {
    double max_drift = 0.0;
    std::vector<double> per_probe;
    double max_gamma_escape = 0.0;  // excursion of tracks beyond their gaps
};

IsospectralityReport isospectrality_report(const PeriodicPotential& q0, double t_end,
                                           double dt, const std::vector<cplx>& probes,
                                           const FlowOptions& opts);

}  // namespace zs

#include "zs/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace zs {

namespace {

const cplx iu(0.0, 1.0);

void fft_inplace(std::vector<cplx>& a, bool inverse) {
    const int n = static_cast<int>(a.size());
    for (int i = 1, j = 0; i < n; i++) {
        int bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (int len = 2; len <= n; len <<= 1) {
        double ang = 2.0 * pi / len * (inverse ? 1.0 : -1.0);
        cplx wlen = std::polar(1.0, ang);
        for (int i = 0; i < n; i += len) {
            cplx w(1.0);
            for (int j = 0; j < len / 2; j++) {
                cplx u = a[i + j], v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
    if (inverse)
        for (auto& x : a) x /= static_cast<double>(n);
}

// 8-point Gauss-Legendre on [-1, 1]
constexpr double gl8_x[4] = {0.1834346424956498, 0.5255324099163290,
                             0.7966664774136267, 0.9602898564975363};
constexpr double gl8_w[4] = {0.3626837833783620, 0.3137066458778873,
                             0.2223810344533745, 0.1012285362903763};

double scale(double z) { return 1.0 + std::abs(z); }

}  // namespace

NlsResult nls_step(const PeriodicPotential& p, double dt, int n_steps, int n_modes) {
    if (n_modes < 64 || (n_modes & (n_modes - 1)) != 0)
        throw std::invalid_argument("nls_step: n_modes must be a power of two >= 64");
    const double L = p.period();
    std::vector<cplx> u(n_modes);
    for (int j = 0; j < n_modes; ++j) u[j] = p.evaluate(j * L / n_modes);

    std::vector<double> k2(n_modes);
    for (int j = 0; j < n_modes; ++j) {
        int m = (j <= n_modes / 2) ? j : j - n_modes;
        double k = 2.0 * pi * m / L;
        k2[j] = k * k;
    }

    auto nonlinear = [&](double tau) {
        for (auto& v : u) v *= std::exp(-2.0 * iu * std::norm(v) * tau);
    };
    auto linear = [&](double tau) {
        fft_inplace(u, false);
        for (int j = 0; j < n_modes; ++j) u[j] *= std::exp(-iu * k2[j] * tau);
        fft_inplace(u, true);
    };

    for (int s = 0; s < n_steps; ++s) {
        nonlinear(0.5 * dt);
        linear(dt);
        nonlinear(0.5 * dt);
    }

    // aliasing diagnostic: relative spectral mass in the top third of modes
    std::vector<cplx> spec = u;
    fft_inplace(spec, false);
    double total = 0.0, top = 0.0;
    for (int j = 0; j < n_modes; ++j) {
        int m = (j <= n_modes / 2) ? j : j - n_modes;
        double e = std::norm(spec[j]);
        total += e;
        if (std::abs(m) >= n_modes / 3) top += e;
    }
    NlsResult out;
    out.top_third_mass = (total > 0.0) ? top / total : 0.0;
    out.aliasing_warning = out.top_third_mass > 1e-10;
    out.q = PeriodicPotential::from_samples(L, u).compressed(1e-14);
    return out;
}

cplx c1_coefficient(const PeriodicPotential& p, cplx z) {
    cplx q0 = p.evaluate(0.0), qx0 = p.evaluate_dx(0.0);
    return -2.0 * z * z - iu * z * (std::conj(q0) - q0) - std::norm(q0) -
           0.5 * (qx0 + std::conj(qx0));
}

namespace {

// signed sqrt(Delta^2 - 1) on a gap: rho = Delta - s with |rho| <= 1
double gap_sqrt_disc(const PeriodicPotential& p, double z, double tol) {
    auto m = monodromy(p, cplx(z, 0.0), tol);
    return m.sqrt_disc.real();
}

struct StagePotentials {
    const PeriodicPotential *s1, *s2, *s4;  // t, t + dt/2, t + dt
};

// z-chart RHS of the Dirichlet eigenvalue ODE
double gamma_rhs(const PeriodicPotential& p, double gamma, int sigma, double tol) {
    if (sigma == 0) return 0.0;
    double s = gap_sqrt_disc(p, gamma, tol);
    double y12p = ytilde12_prime(p, gamma, tol);
    double c1 = c1_coefficient(p, gamma).real();
    return sigma * c1 * (-2.0 * s) / y12p;
}

// w-chart RHS: dw/dt = 4 Delta Delta' c1 / ytilde12' at z(w); sheet-free
double wchart_rhs(const PeriodicPotential& p, double z, double tol) {
    auto m = monodromy(p, cplx(z, 0.0), tol);
    double dp = delta_prime(p, z, tol);
    double y12p = ytilde12_prime(p, z, tol);
    double c1 = c1_coefficient(p, cplx(z, 0.0)).real();
    return 4.0 * m.delta.real() * dp * c1 / y12p;
}

// invert w^2 = 4(Delta^2 - 1) near the edge E, solution inside the gap
double invert_w(const PeriodicPotential& p, double w_target, double E, double into_gap,
                double radius, double tol) {
    double target = 0.25 * w_target * w_target;  // Delta^2 - 1
    auto g = [&](double z) {
        auto m = monodromy(p, cplx(z, 0.0), tol);
        return (m.delta.real() * m.delta.real() - 1.0) - target;
    };
    double a = E, b = E + into_gap * 2.5 * radius;
    double fa = g(a), fb = g(b);
    int grow = 0;
    while (fa * fb > 0.0 && grow++ < 8) {
        b += into_gap * 2.0 * radius;
        fb = g(b);
    }
    if (fa * fb > 0.0) throw std::runtime_error("dirichlet_flow: w-chart inversion lost its bracket");
    // bisection is plenty at this scale
    for (int it = 0; it < 80; ++it) {
        double mid = 0.5 * (a + b), fm = g(mid);
        if (fa * fm <= 0.0) {
            b = mid;
            fb = fm;
        } else {
            a = mid;
            fa = fm;
        }
        if (std::abs(b - a) < 1e-14 * scale(mid)) break;
    }
    return 0.5 * (a + b);
}

}  // namespace

FlowState make_flow_state(const PeriodicPotential& q0, double window_lo, double window_hi,
                          const std::vector<cplx>& probes, const FlowOptions& opts) {
    FlowState st;
    st.t = 0.0;
    st.q = q0;
    SpectraOptions sopts;
    sopts.ode_tol = opts.ode_tol;
    sopts.eps_gap = opts.eps_gap;
    sopts.eps_sign = opts.eps_sign;
    SpectralData sd = spectral_data(q0, window_lo, window_hi, 0.0, sopts);
    for (const auto& g : sd.gaps)
        st.tracks.push_back({g.gamma, g.sigma, g.k, g.E_left, g.E_right});
    st.probes = probes;
    st.probe_delta0.reserve(probes.size());
    for (cplx z : probes) st.probe_delta0.push_back(monodromy(q0, z, opts.ode_tol).delta);
    return st;
}

FlowState dirichlet_flow(FlowState state, double t_end, double dt, const FlowOptions& opts) {
    const double tol = opts.ode_tol;
    while (state.t < t_end - 0.5 * dt) {
        double h = std::min(dt, t_end - state.t);
        PeriodicPotential p0 = state.q;
        PeriodicPotential ph = nls_step(p0, 0.5 * h, 1, opts.n_modes).q;
        PeriodicPotential p1 = nls_step(ph, 0.5 * h, 1, opts.n_modes).q;

        for (auto& tr : state.tracks) {
            double er = opts.edge_chart_radius * scale(tr.E_left);
            double d_edge = std::min(tr.gamma - tr.E_left, tr.E_right - tr.gamma);
            if (d_edge < er) {
                // local coordinate w near the closer edge; sheet glued through w = 0
                bool left = (tr.gamma - tr.E_left) < (tr.E_right - tr.gamma);
                double E = left ? tr.E_left : tr.E_right;
                double into = left ? +1.0 : -1.0;
                double s0 = gap_sqrt_disc(p0, tr.gamma, tol);
                double w = tr.sigma == 0 ? 0.0 : tr.sigma * (-2.0 * s0);
                auto rhs_w = [&](const PeriodicPotential& p, double wv) {
                    double z = invert_w(p, wv, E, into, er, tol);
                    return wchart_rhs(p, z, tol);
                };
                double k1 = rhs_w(p0, w);
                double k2 = rhs_w(ph, w + 0.5 * h * k1);
                double k3 = rhs_w(ph, w + 0.5 * h * k2);
                double k4 = rhs_w(p1, w + h * k3);
                double w_new = w + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
                tr.gamma = invert_w(p1, w_new, E, into, er, tol);
                double s1 = gap_sqrt_disc(p1, tr.gamma, tol);
                if (w_new == 0.0 || s1 == 0.0)
                    tr.sigma = 0;
                else
                    tr.sigma = (w_new * (-2.0 * s1) > 0.0) ? +1 : -1;
            } else {
                double k1 = gamma_rhs(p0, tr.gamma, tr.sigma, tol);
                double k2 = gamma_rhs(ph, tr.gamma + 0.5 * h * k1, tr.sigma, tol);
                double k3 = gamma_rhs(ph, tr.gamma + 0.5 * h * k2, tr.sigma, tol);
                double k4 = gamma_rhs(p1, tr.gamma + h * k3, tr.sigma, tol);
                tr.gamma += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            }

            double slack = opts.eps_gap * (1.0 + std::abs(tr.E_left) + std::abs(tr.E_right));
            if (tr.gamma < tr.E_left - slack || tr.gamma > tr.E_right + slack)
                throw std::runtime_error("dirichlet_flow: track left its gap (isospectrality violated)");

            // refresh sigma from its definition at the accepted point
            auto m = monodromy(p1, cplx(tr.gamma, 0.0), tol);
            double lg = std::log(std::abs(m.M_tilde.a22.real()));
            if (std::abs(lg) < opts.eps_sign)
                tr.sigma = 0;
            else
                tr.sigma = lg > 0 ? -1 : +1;
        }
        state.q = p1;
        state.t += h;
    }
    return state;
}

double dirichlet_ode_rhs(const PeriodicPotential& p, double gamma, int sigma, double tol) {
    return gamma_rhs(p, gamma, sigma, tol);
}

Vec2 apply_atilde(const PeriodicPotential& p, cplx z, double x, const Vec2& v, double tol) {
    (void)tol;
    cplx q = p.evaluate(x), qx = p.evaluate_dx(x);
    Mat2 Q{0.0, q, std::conj(q), 0.0};
    Mat2 Qx{0.0, qx, std::conj(qx), 0.0};
    Mat2 U = umatrix(), Ui = umatrix_inv();
    Mat2 inner = (-2.0 * iu * z * z) * sigma3() + (2.0 * z) * Q -
                 iu * ((Q * Q + Qx) * sigma3());
    return (U * inner * Ui) * v;
}

std::pair<cplx, cplx> alpha_pm(const PeriodicPotential& p, cplx z, double tol) {
    auto wv = weyl_values(p, z, tol);
    cplx q0 = p.evaluate(0.0), qx0 = p.evaluate_dx(0.0);
    cplx base = z * (std::conj(q0) + q0) - 0.5 * iu * (qx0 - std::conj(qx0));
    cplx coef = 2.0 * z * z + iu * z * (std::conj(q0) - q0) + std::norm(q0) +
                0.5 * (qx0 + std::conj(qx0));
    return {base + coef * wv.second, base + coef * wv.first};  // (alpha+, alpha-)
}

std::pair<cplx, cplx> e_pm(const PeriodicPotential& q0, double t, cplx z, double dt_pde,
                           const FlowOptions& opts) {
    if (t == 0.0) return {1.0, 1.0};
    int panels = std::max(2, static_cast<int>(std::ceil(t / 0.005)));
    std::vector<double> taus;
    for (int p = 0; p < panels; ++p) {
        double a = t * p / panels, b = t * (p + 1) / panels;
        double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        for (int i = 3; i >= 0; --i) taus.push_back(mid - half * gl8_x[i]);
        for (int i = 0; i < 4; ++i) taus.push_back(mid + half * gl8_x[i]);
    }

    cplx acc_p(0.0), acc_m(0.0);
    PeriodicPotential q = q0;
    double t_cur = 0.0;
    std::size_t idx = 0;
    for (int p = 0; p < panels; ++p) {
        double a = t * p / panels, b = t * (p + 1) / panels;
        double half = 0.5 * (b - a);
        for (int i = 0; i < 8; ++i, ++idx) {
            double tau = taus[idx];
            double step = tau - t_cur;
            if (step > 0.0) {
                int ns = std::max(1, static_cast<int>(std::ceil(step / dt_pde)));
                q = nls_step(q, step / ns, ns, opts.n_modes).q;
                t_cur = tau;
            }
            auto m = monodromy(q, z, opts.ode_tol);
            if (std::abs(m.M_tilde.a12) < 1e-8 * (1.0 + m.M_tilde.max_abs()))
                throw std::invalid_argument(
                    "e_pm: a Dirichlet eigenvalue sweeps through z during [0, t]");
            auto al = alpha_pm(q, z, opts.ode_tol);
            double w = half * gl8_w[i < 4 ? 3 - i : i - 4];
            acc_p += w * al.first;
            acc_m += w * al.second;
        }
    }
    return {std::exp(acc_p), std::exp(acc_m)};
}

IsospectralityReport isospectrality_report(const PeriodicPotential& q0, double t_end,
                                           double dt, const std::vector<cplx>& probes,
                                           const FlowOptions& opts) {
    IsospectralityReport rep;
    std::vector<cplx> d0(probes.size());
    for (std::size_t i = 0; i < probes.size(); ++i)
        d0[i] = monodromy(q0, probes[i], opts.ode_tol).delta;
    int ns = std::max(1, static_cast<int>(std::llround(t_end / dt)));
    PeriodicPotential qt = nls_step(q0, t_end / ns, ns, opts.n_modes).q;
    rep.per_probe.resize(probes.size());
    for (std::size_t i = 0; i < probes.size(); ++i) {
        cplx d1 = monodromy(qt, probes[i], opts.ode_tol).delta;
        rep.per_probe[i] = std::abs(d1 - d0[i]);
        rep.max_drift = std::max(rep.max_drift, rep.per_probe[i]);
    }
    return rep;
}

}  // namespace zs

#include "zs/monodromy.hpp"

#include <cmath>

#include "zs/parallel.hpp"

namespace zs {

namespace {

// Scaled column system on [0, x]:
//   W1' = [[0, q e^{2izs}], [q* , 2iz]] ... written out directly below.
// With W1 = e^{izs} y_col1 and W2 = e^{-izs} y_col2 one has
//   W1' = [[0, q],[q*, 2iz]] W1,   W2' = [[-2iz, q],[q*, 0]] W2.
// State packs both columns: (W1a, W1b, W2a, W2b).
struct ZsRhs {
    const PeriodicPotential& p;
    cplx two_iz;

    void operator()(double x, const std::array<cplx, 4>& y, std::array<cplx, 4>& dy) const {
        cplx q = p.evaluate(x);
        cplx qc = std::conj(q);
        dy[0] = q * y[1];
        dy[1] = qc * y[0] + two_iz * y[1];
        dy[2] = -two_iz * y[2] + q * y[3];
        dy[3] = qc * y[2];
    }
};

std::array<cplx, 4> integrate_columns(const PeriodicPotential& p, cplx z, double x,
                                      double tol) {
    ZsRhs rhs{p, cplx(0, 2) * z};
    OdeOptions opt;
    opt.rtol = tol;
    opt.atol = tol;
    // oscillation-aware step bound
    opt.max_steps = 20000 + 200 * static_cast<long>(std::ceil(std::abs(z) * std::abs(x)));
    std::array<cplx, 4> y0{1.0, 0.0, 0.0, 1.0};
    return Dopri5<4>::integrate([&rhs](double s, const std::array<cplx, 4>& y,
                                       std::array<cplx, 4>& dy) { rhs(s, y, dy); },
                                y0, 0.0, x, opt, z);
}

}  // namespace

Mat2 principal_solution(const PeriodicPotential& p, cplx z, double x, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("principal_solution: tol must be positive");
    auto w = integrate_columns(p, z, x, tol);
    cplx em = std::exp(-cplx(0, 1) * z * x);  // e^{-izx}
    cplx ep = 1.0 / em;
    return Mat2{w[0] * em, w[2] * ep, w[1] * em, w[3] * ep};
}

ScaledMonodromy scaled_monodromy(const PeriodicPotential& p, cplx z, double tol) {
    auto w = integrate_columns(p, z, p.period(), tol);
    return {z, Vec2{w[0], w[1]}, Vec2{w[2], w[3]}};
}

MonodromyResult monodromy(const PeriodicPotential& p, cplx z, double tol) {
    MonodromyResult r;
    r.z = z;
    r.M = principal_solution(p, z, p.period(), tol);
    r.M_tilde = to_tilde(r.M);
    r.M_check = to_check(r.M);
    r.delta = 0.5 * (r.M.a11 + r.M.a22);
    r.det_defect = std::abs(r.M.det() - 1.0);

    cplx s = std::sqrt(r.delta * r.delta - 1.0);
    // pick the root rho = delta -/+ s with |rho| <= 1
    if (std::abs(r.delta - s) > std::abs(r.delta + s)) s = -s;
    r.rho = r.delta - s;
    r.sqrt_disc = s;
    r.branch_ambiguous = std::abs(std::abs(r.rho) - 1.0) < 1e-12;
    return r;
}

std::vector<cplx> discriminant_grid(const PeriodicPotential& p,
                                    const std::vector<cplx>& z_values, double tol,
                                    int threads) {
    std::vector<cplx> out(z_values.size());
    parallel_for(z_values.size(), threads, [&](std::size_t i) {
        out[i] = monodromy(p, z_values[i], tol).delta;
    });
    return out;
}

cplx delta_scaled(const PeriodicPotential& p, cplx z, double tol) {
    auto sm = scaled_monodromy(p, z, tol);
    double L = p.period();
    if (z.imag() >= 0.0) {
        // 2 Delta e^{izL} = W1_11 + W2_22 e^{2izL}
        return sm.W1.a + sm.W2.b * std::exp(cplx(0, 2) * z * L);
    }
    return sm.W2.b + sm.W1.a * std::exp(-cplx(0, 2) * z * L);
}

cplx rho_above(const PeriodicPotential& p, double z, double tol) {
    cplx zq(z, 1e-12 * (1.0 + std::abs(z)));
    return monodromy(p, zq, tol).rho;
}

double delta_prime(const PeriodicPotential& p, double z, double tol) {
    // complex step: Delta real on the real axis, so Delta'(z) = Im Delta(z+ih)/h + O(h^2)
    double h = std::max(1e-5, std::cbrt(tol) * 10.0) * (1.0 + std::abs(z));
    cplx d = monodromy(p, cplx(z, h), tol).delta;
    return d.imag() / h;
}

double ytilde12_prime(const PeriodicPotential& p, double z, double tol) {
    double h = 1e-6 * (1.0 + std::abs(z));
    auto y12 = [&](double zz) {
        return monodromy(p, cplx(zz, 0.0), tol).M_tilde.a12.real();
    };
    double fp1 = y12(z + h), fm1 = y12(z - h), fp2 = y12(z + 2 * h), fm2 = y12(z - 2 * h);
    return (8.0 * (fp1 - fm1) - (fp2 - fm2)) / (12.0 * h);
}

}  // namespace zs

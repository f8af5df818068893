#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "zs/mat2.hpp"

namespace zs {

struct IntegratorError : std::runtime_error {
    cplx z;
    IntegratorError(const std::string& what, cplx z_) : std::runtime_error(what), z(z_) {}
};

struct OdeOptions {
    double rtol = 1e-10;
    double atol = 1e-12;
    long max_steps = 2000000;
};

// Dormand-Prince 5(4) for a fixed-size complex state. Adaptive step with
// PI-free elementary control; throws IntegratorError on step-size underflow.
template <int N>
class Dopri5 {
  public:
    using State = std::array<cplx, N>;
    using Rhs = std::function<void(double, const State&, State&)>;

    static State integrate(const Rhs& f, State y, double x0, double x1,
                           const OdeOptions& opt, cplx z_tag = cplx(0.0)) {
        if (x1 == x0) return y;
        const double dir = (x1 > x0) ? 1.0 : -1.0;
        const double span = std::abs(x1 - x0);
        double h = dir * std::min(span, std::max(span / 100.0, 1e-4 * span));
        const double hmin = span * 1e-14;

        State k1, k2, k3, k4, k5, k6, k7, yt, y5, y4;
        double x = x0;
        f(x, y, k1);
        long steps = 0;
        while (dir * (x1 - x) > 0.0) {
            if (++steps > opt.max_steps)
                throw IntegratorError("ode: max step count exceeded", z_tag);
            if (dir * (x + h) > dir * x1) h = x1 - x;

            stage(yt, y, h, {a21 * k1[0]}, k1, a21);
            axpy1(yt, y, h, k1, a21);
            f(x + c2 * h, yt, k2);
            axpy2(yt, y, h, k1, a31, k2, a32);
            f(x + c3 * h, yt, k3);
            axpy3(yt, y, h, k1, a41, k2, a42, k3, a43);
            f(x + c4 * h, yt, k4);
            axpy4(yt, y, h, k1, a51, k2, a52, k3, a53, k4, a54);
            f(x + c5 * h, yt, k5);
            axpy5(yt, y, h, k1, a61, k2, a62, k3, a63, k4, a64, k5, a65);
            f(x + h, yt, k6);
            for (int i = 0; i < N; ++i)
                y5[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
            f(x + h, y5, k7);
            for (int i = 0; i < N; ++i)
                y4[i] = y[i] + h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] + d6 * k6[i] + d7 * k7[i]);

            double err = 0.0;
            for (int i = 0; i < N; ++i) {
                double sc = opt.atol + opt.rtol * std::max(std::abs(y[i]), std::abs(y5[i]));
                double e = std::abs(y5[i] - y4[i]) / sc;
                err += e * e;
            }
            err = std::sqrt(err / N);

            if (err <= 1.0) {
                x += h;
                y = y5;
                k1 = k7;  // FSAL
            }
            double fac = 0.9 * std::pow(std::max(err, 1e-12), -0.2);
            h *= std::clamp(fac, 0.2, 5.0);
            if (std::abs(h) < hmin)
                throw IntegratorError("ode: step-size underflow", z_tag);
        }
        return y;
    }

  private:
    // helpers expanding y + h * sum a_j k_j
    static void stage(State&, const State&, double, std::initializer_list<cplx>, const State&, double) {}
    static void axpy1(State& o, const State& y, double h, const State& k1, double a1) {
        for (int i = 0; i < N; ++i) o[i] = y[i] + h * (a1 * k1[i]);
    }
    static void axpy2(State& o, const State& y, double h, const State& k1, double a1,
                      const State& k2, double a2) {
        for (int i = 0; i < N; ++i) o[i] = y[i] + h * (a1 * k1[i] + a2 * k2[i]);
    }
    static void axpy3(State& o, const State& y, double h, const State& k1, double a1,
                      const State& k2, double a2, const State& k3, double a3) {
        for (int i = 0; i < N; ++i) o[i] = y[i] + h * (a1 * k1[i] + a2 * k2[i] + a3 * k3[i]);
    }
    static void axpy4(State& o, const State& y, double h, const State& k1, double a1,
                      const State& k2, double a2, const State& k3, double a3,
                      const State& k4, double a4) {
        for (int i = 0; i < N; ++i)
            o[i] = y[i] + h * (a1 * k1[i] + a2 * k2[i] + a3 * k3[i] + a4 * k4[i]);
    }
    static void axpy5(State& o, const State& y, double h, const State& k1, double a1,
                      const State& k2, double a2, const State& k3, double a3,
                      const State& k4, double a4, const State& k5, double a5) {
        for (int i = 0; i < N; ++i)
            o[i] = y[i] + h * (a1 * k1[i] + a2 * k2[i] + a3 * k3[i] + a4 * k4[i] + a5 * k5[i]);
    }

    // Dormand-Prince coefficients
    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                            a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                            a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                            b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static constexpr double d1 = 5179.0 / 57600, d3 = 7571.0 / 16695, d4 = 393.0 / 640,
                            d5 = -92097.0 / 339200, d6 = 187.0 / 2100, d7 = 1.0 / 40;
};

}  // namespace zs

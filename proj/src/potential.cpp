#include "zs/potential.hpp"

#include <algorithm>
#include <cmath>

namespace zs {

namespace {

bool finite(cplx c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

// 16-point Gauss-Legendre nodes/weights on [-1,1].
constexpr double gl16_x[8] = {
    0.0950125098376374401853193, 0.2816035507792589132304605,
    0.4580167776572273863424194, 0.6178762444026437484466718,
    0.7554044083550030338951012, 0.8656312023878317438804679,
    0.9445750230732325760779884, 0.9894009349916499325961542};
constexpr double gl16_w[8] = {
    0.1894506104550684962853967, 0.1826034150449235888667637,
    0.1691565193950025381893121, 0.1495959888165767320815017,
    0.1246289712555338720524763, 0.0951585116824927848099251,
    0.0622535239386478928628438, 0.0271524594117540948517806};

}  // namespace

PeriodicPotential PeriodicPotential::from_fourier(double period, std::vector<cplx> coeffs) {
    if (!(period > 0.0)) throw std::invalid_argument("potential: period must be positive");
    if (coeffs.empty()) throw std::invalid_argument("potential: empty coefficient set");
    if (coeffs.size() % 2 == 0)
        throw std::invalid_argument("potential: coefficient list must have odd length (n = -N..N)");
    for (cplx c : coeffs)
        if (!finite(c)) throw std::invalid_argument("potential: non-finite coefficient");
    PeriodicPotential p;
    p.period_ = period;
    p.nmax_ = static_cast<int>(coeffs.size() / 2);
    p.coeff_ = std::move(coeffs);
    return p;
}

PeriodicPotential PeriodicPotential::from_samples(double period, const std::vector<cplx>& samples) {
    if (!(period > 0.0)) throw std::invalid_argument("potential: period must be positive");
    if (samples.empty()) throw std::invalid_argument("potential: empty sample set");
    for (cplx s : samples)
        if (!finite(s)) throw std::invalid_argument("potential: non-finite sample");

    const int n = static_cast<int>(samples.size());
    const int nmax = n / 2;  // modes -nmax..nmax; Nyquist split if n even
    std::vector<cplx> coeffs(2 * nmax + 1, cplx(0.0));
    for (int m = -nmax; m <= nmax; ++m) {
        cplx acc(0.0);
        for (int j = 0; j < n; ++j) {
            double phase = -2.0 * pi * m * j / n;
            acc += samples[j] * std::polar(1.0, phase);
        }
        acc /= static_cast<double>(n);
        if (n % 2 == 0 && std::abs(m) == nmax) acc *= 0.5;  // split the Nyquist mode
        coeffs[m + nmax] = acc;
    }
    return from_fourier(period, std::move(coeffs));
}

cplx PeriodicPotential::coefficient(int n) const {
    if (std::abs(n) > nmax_) return cplx(0.0);
    return coeff_[n + nmax_];
}

cplx PeriodicPotential::evaluate(double x) const {
    // sum c_n w^n with w = exp(2 pi i x / L), by recurrence from n = -N.
    const cplx w = std::polar(1.0, 2.0 * pi * x / period_);
    cplx wn = std::polar(1.0, -2.0 * pi * nmax_ * x / period_);
    cplx acc(0.0);
    for (int k = 0; k < static_cast<int>(coeff_.size()); ++k) {
        acc += coeff_[k] * wn;
        wn *= w;
    }
    return acc;
}

cplx PeriodicPotential::evaluate_dx(double x) const {
    const cplx w = std::polar(1.0, 2.0 * pi * x / period_);
    cplx wn = std::polar(1.0, -2.0 * pi * nmax_ * x / period_);
    cplx acc(0.0);
    for (int k = 0; k < static_cast<int>(coeff_.size()); ++k) {
        int n = k - nmax_;
        acc += coeff_[k] * wn * cplx(0.0, 2.0 * pi * n / period_);
        wn *= w;
    }
    return acc;
}

PeriodicPotential PeriodicPotential::shifted(double x0) const {
    std::vector<cplx> coeffs(coeff_.size());
    for (int k = 0; k < static_cast<int>(coeff_.size()); ++k) {
        int n = k - nmax_;
        coeffs[k] = coeff_[k] * std::polar(1.0, 2.0 * pi * n * x0 / period_);
    }
    return from_fourier(period_, std::move(coeffs));
}

double PeriodicPotential::l2_accumulant(double x) const {
    if (x < -1e-14 || x > period_ * (1.0 + 1e-14))
        throw std::invalid_argument("l2_accumulant: x outside [0, L]");
    x = std::clamp(x, 0.0, period_);
    if (x == 0.0) return 0.0;
    // >= 64 Gauss nodes per period
    int panels = std::max(2, static_cast<int>(std::ceil(4.0 * x / period_)));
    double acc = 0.0;
    for (int p = 0; p < panels; ++p) {
        double a = x * p / panels, b = x * (p + 1) / panels;
        double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        for (int i = 0; i < 8; ++i) {
            double xp = mid + half * gl16_x[i], xm = mid - half * gl16_x[i];
            acc += half * gl16_w[i] * (std::norm(evaluate(xp)) + std::norm(evaluate(xm)));
        }
    }
    return acc;
}

PeriodicPotential PeriodicPotential::compressed(double rel_tol) const {
    double cut = rel_tol * max_abs_coefficient();
    int keep = 0;
    for (int k = 0; k < static_cast<int>(coeff_.size()); ++k)
        if (std::abs(coeff_[k]) > cut) keep = std::max(keep, std::abs(k - nmax_));
    std::vector<cplx> coeffs(2 * keep + 1);
    for (int n = -keep; n <= keep; ++n) coeffs[n + keep] = coefficient(n);
    return from_fourier(period_, std::move(coeffs));
}

double PeriodicPotential::max_abs_coefficient() const {
    double m = 0.0;
    for (cplx c : coeff_) m = std::max(m, std::abs(c));
    return m;
}

bool PeriodicPotential::is_identically_zero() const {
    return max_abs_coefficient() == 0.0;
}

}  // namespace zs

#include "zs/rootfind.hpp"

#include <cmath>
#include <stdexcept>

namespace zs {

double brent(const std::function<double(double)>& f, double a, double b, double fa,
             double fb, double xtol, int max_iter) {
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (fa * fb > 0.0) throw std::invalid_argument("brent: not a bracket");
    double c = a, fc = fa, d = b - a, e = d;
    for (int it = 0; it < max_iter; ++it) {
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        double tol1 = 2.0 * 1e-16 * std::abs(b) + 0.5 * xtol;
        double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol1 || fb == 0.0) return b;
        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            double s = fb / fa, p, q;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                double r = fb / fc;
                q = fa / fc;
                p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0));
                q = (q - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += (std::abs(d) > tol1) ? d : (xm > 0 ? tol1 : -tol1);
        fb = f(b);
        if ((fb > 0) == (fc > 0)) {
            c = a; fc = fa;
            d = b - a; e = d;
        }
    }
    return b;
}

std::vector<double> sample_uniform(const std::function<double(double)>& f, double lo,
                                   double hi, int n, std::vector<double>& xs) {
    xs.resize(n + 1);
    std::vector<double> vals(n + 1);
    for (int i = 0; i <= n; ++i) {
        xs[i] = lo + (hi - lo) * i / n;
        vals[i] = f(xs[i]);
    }
    return vals;
}

std::vector<double> scan_roots(const std::function<double(double)>& f, double lo,
                               double hi, int n, double xtol) {
    std::vector<double> xs;
    auto vals = sample_uniform(f, lo, hi, n, xs);
    std::vector<double> roots;
    for (int i = 0; i < n; ++i) {
        if (vals[i] == 0.0) roots.push_back(xs[i]);
        if (vals[i] * vals[i + 1] < 0.0)
            roots.push_back(brent(f, xs[i], xs[i + 1], vals[i], vals[i + 1], xtol));
    }
    if (!vals.empty() && vals[n] == 0.0) roots.push_back(xs[n]);
    return roots;
}

}  // namespace zs

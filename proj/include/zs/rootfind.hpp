#pragma once

#include <functional>
#include <vector>

namespace zs {

// Brent-style safeguarded root solve on a sign-change bracket [a, b].
double brent(const std::function<double(double)>& f, double a, double b, double fa,
             double fb, double xtol, int max_iter = 200);

// Scans [lo, hi] at n+1 uniform points; returns the sampled values.
std::vector<double> sample_uniform(const std::function<double(double)>& f, double lo,
                                   double hi, int n, std::vector<double>& xs);

// All sign-change roots of f on [lo, hi] from a uniform scan of n intervals.
std::vector<double> scan_roots(const std::function<double(double)>& f, double lo,
                               double hi, int n, double xtol);

}  // namespace zs

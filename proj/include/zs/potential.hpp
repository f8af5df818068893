#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "zs/mat2.hpp"

namespace zs {

// L-periodic complex potential q(x), stored as truncated Fourier series
//   q(x) = sum_{n=-N..N} c_n exp(2 pi i n x / L).
// Grid-sample input is converted to this canonical form at construction, so
// evaluation is exactly periodic and band limited.
class PeriodicPotential {
  public:
    PeriodicPotential() = default;

    // coeffs holds c_n for n = -N..N (length 2N+1).
    static PeriodicPotential from_fourier(double period, std::vector<cplx> coeffs);

    // Uniform samples q(x_i), x_i = i L / N, i = 0..N-1.
    static PeriodicPotential from_samples(double period, const std::vector<cplx>& samples);

    static PeriodicPotential zero(double period) {
        return from_fourier(period, {cplx(0.0)});
    }
    static PeriodicPotential constant(double period, cplx value) {
        return from_fourier(period, {value});
    }

    double period() const { return period_; }
    int max_mode() const { return nmax_; }
    cplx coefficient(int n) const;
    const std::vector<cplx>& coefficients() const { return coeff_; }

    cplx operator()(double x) const { return evaluate(x); }
    cplx evaluate(double x) const;
    cplx evaluate_dx(double x) const;

    // q(. + x0); period preserved, exact in the Fourier representation.
    PeriodicPotential shifted(double x0) const;

    // K(x) = int_0^x |q|^2 dx', 0 <= x <= L, composite Gauss-Legendre.
    double l2_accumulant(double x) const;
    double l2_mass() const { return l2_accumulant(period_); }

    // Drops coefficients below rel_tol * max|c_n|.
    PeriodicPotential compressed(double rel_tol) const;

    double max_abs_coefficient() const;
    bool is_identically_zero() const;

  private:
    double period_ = 1.0;
    int nmax_ = 0;
    std::vector<cplx> coeff_;  // c_n at index n + nmax_
};

}  // namespace zs

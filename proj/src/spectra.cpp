#include "zs/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "zs/dense_oracle.hpp"
#include "zs/rootfind.hpp"

namespace zs {

namespace {

struct RawRoot {
    double z;
    int multiplicity;
    int delta_sign;
};

double scale(double z) { return 1.0 + std::abs(z); }

}  // namespace

std::optional<std::pair<double, double>> BandStructure::gap_pair(long k) const {
    double left = 0, right = 0;
    bool found_left = false, found_right = false;
    for (const auto& zp : zetas) {
        if (zp.index == 2 * k - 1 || (zp.multiplicity == 2 && zp.index + 1 == 2 * k - 1)) {
            left = zp.z;
            found_left = true;
        }
        if (zp.index == 2 * k || (zp.multiplicity == 2 && zp.index + 1 == 2 * k)) {
            right = zp.z;
            found_right = true;
        }
    }
    if (found_left && found_right) return std::make_pair(left, right);
    return std::nullopt;
}

long BandStructure::k_min() const {
    long k = 0;
    bool first = true;
    for (const auto& zp : zetas) {
        long lo_idx = zp.index;
        long kk = (lo_idx % 2 == 0) ? lo_idx / 2 : (lo_idx + 1) / 2;
        if (first || kk < k) k = kk, first = false;
    }
    return k;
}

long BandStructure::k_max() const {
    long k = 0;
    bool first = true;
    for (const auto& zp : zetas) {
        long hi_idx = zp.index + zp.multiplicity - 1;
        long kk = (hi_idx % 2 == 0) ? hi_idx / 2 : (hi_idx + 1) / 2;
        if (first || kk > k) k = kk, first = false;
    }
    return k;
}

BandStructure main_spectrum(const PeriodicPotential& p, double lo, double hi,
                            const SpectraOptions& opts) {
    if (!(std::isfinite(lo) && std::isfinite(hi) && lo < hi))
        throw std::invalid_argument("main_spectrum: bad window");
    const double L = p.period();
    const double tol = opts.ode_tol;

    auto delta = [&](double z) { return monodromy(p, cplx(z, 0.0), tol).delta.real(); };
    auto dprime = [&](double z) { return delta_prime(p, z, tol); };

    // uniform scan; brackets of width <= pi/(grid_per_pi L) around pi j / L seeds
    int n = std::max(16, static_cast<int>(std::ceil((hi - lo) * L * opts.grid_per_pi / pi)));
    std::vector<double> xs(n + 1), dv(n + 1), dpv(n + 1);
    for (int i = 0; i <= n; ++i) xs[i] = lo + (hi - lo) * i / n;
    parallel_for(n + 1, opts.threads, [&](std::size_t i) {
        dv[i] = delta(xs[i]);
        dpv[i] = dprime(xs[i]);
    });

    std::vector<RawRoot> roots;
    auto add_root = [&](double z, int mult, int sgn) {
        for (auto& r : roots)
            if (std::abs(r.z - z) < 1e-10 * scale(z)) {
                r.multiplicity = std::max(r.multiplicity, mult);
                return;
            }
        roots.push_back({z, mult, sgn});
    };

    // simple roots: sign changes of Delta -/+ 1
    for (int sgn : {+1, -1}) {
        auto f = [&](double z) { return delta(z) - sgn; };
        for (int i = 0; i < n; ++i) {
            double fa = dv[i] - sgn, fb = dv[i + 1] - sgn;
            if (fa == 0.0) add_root(xs[i], 1, sgn);
            if (fa * fb < 0.0) {
                double r = brent(f, xs[i], xs[i + 1], fa, fb, opts.root_xtol * scale(xs[i]));
                add_root(r, 1, sgn);
            }
        }
    }

    // extrema of Delta: catch double roots (tangency to +-1) and close pairs
    for (int i = 0; i < n; ++i) {
        if (dpv[i] == 0.0 || dpv[i] * dpv[i + 1] >= 0.0) continue;
        double zstar = brent(dprime, xs[i], xs[i + 1], dpv[i], dpv[i + 1],
                             opts.root_xtol * scale(xs[i]));
        double dstar = delta(zstar);
        int sgn = dstar >= 0 ? +1 : -1;
        double d = std::abs(dstar) - 1.0;
        double eps_double = std::max(1e-9, 50.0 * tol) * scale(zstar);
        if (std::abs(d) <= eps_double) {
            add_root(zstar, 2, sgn);
        } else if (d > 0.0) {
            // open gap straddling the extremum: two simple roots
            auto f = [&](double z) { return delta(z) - sgn; };
            double fs = dstar - sgn;
            for (int side = 0; side < 2; ++side) {
                double a = side == 0 ? xs[i] : zstar;
                double b = side == 0 ? zstar : xs[i + 1];
                double fa = side == 0 ? dv[i] - sgn : fs;
                double fb = side == 0 ? fs : dv[i + 1] - sgn;
                if (fa * fb < 0.0)
                    add_root(brent(f, a, b, fa, fb, opts.root_xtol * scale(zstar)), 1, sgn);
            }
        }
    }

    std::sort(roots.begin(), roots.end(), [](const RawRoot& a, const RawRoot& b) { return a.z < b.z; });

    // reclassify: simple roots closer than the gap threshold collapse to a double
    for (auto& r : roots) {
        if (r.multiplicity == 1 && std::abs(dprime(r.z)) < opts.eps_deriv) r.multiplicity = 2;
    }

    BandStructure bs;
    bs.z_lo = lo;
    bs.z_hi = hi;
    bs.gap_threshold = opts.eps_gap;
    if (roots.empty()) return bs;

    // locate z = 0 relative to the band/gap pattern
    int ip = 0;
    while (ip < static_cast<int>(roots.size()) && roots[ip].z < 0.0) ++ip;
    bool zero_in_window = (lo < 0.0 && hi > 0.0) && ip > 0 && ip < static_cast<int>(roots.size());
    bool in_gap;
    double eps_anchor = opts.eps_gap * 1.0;
    if (ip < static_cast<int>(roots.size()) && roots[ip].multiplicity == 2 &&
        std::abs(roots[ip].z) <= eps_anchor) {
        in_gap = true;  // degenerate gap at the origin
    } else if (zero_in_window) {
        double m = 0.5 * (roots[ip - 1].z + roots[ip].z);
        in_gap = std::abs(delta(m)) > 1.0;
    } else {
        in_gap = std::abs(delta(0.0)) > 1.0;
        if (ip == static_cast<int>(roots.size())) ip = static_cast<int>(roots.size()) - 1;
    }
    bs.zero_in_gap = in_gap;

    // anchor: gap pair (-1, 0) either contains 0 (in_gap) or starts at the
    // first root >= 0 (band case)
    // walk the sorted roots pairing them into gap pairs (2k-1, 2k)
    std::vector<long> index_of(roots.size(), 0);
    int anchor;  // roots[anchor] carries index -1 (or the pair (-1,0) if double)
    if (in_gap) {
        if (roots[ip].multiplicity == 2 && std::abs(roots[ip].z) <= eps_anchor)
            anchor = ip;
        else
            anchor = ip - 1;
    } else {
        anchor = ip;
    }
    if (anchor < 0) anchor = 0;

    auto pair_walk_up = [&](int start, long first_odd) {
        int i = start;
        long odd = first_odd;
        while (i < static_cast<int>(roots.size())) {
            index_of[i] = odd;
            if (roots[i].multiplicity == 2) {
                ++i;
            } else {
                if (i + 1 >= static_cast<int>(roots.size())) {
                    index_of[i] = odd;  // unpaired at window edge
                    ++i;
                    break;
                }
                index_of[i + 1] = odd + 1;
                i += 2;
            }
            odd += 2;
        }
    };
    auto pair_walk_down = [&](int start, long first_even) {
        int i = start;
        long even = first_even;
        while (i >= 0) {
            if (roots[i].multiplicity == 2) {
                index_of[i] = even - 1;
                --i;
            } else {
                index_of[i] = even;
                if (i - 1 < 0) break;
                index_of[i - 1] = even - 1;
                i -= 2;
            }
            even -= 2;
        }
    };

    if (roots[anchor].multiplicity == 2) {
        pair_walk_up(anchor, -1);
        pair_walk_down(anchor - 1, -2);
    } else {
        // roots[anchor] = zeta_{-1}; its partner above is zeta_0
        pair_walk_up(anchor, -1);
        pair_walk_down(anchor - 1, -2);
    }

    for (std::size_t i = 0; i < roots.size(); ++i)
        bs.zetas.push_back({roots[i].z, roots[i].multiplicity, roots[i].delta_sign, index_of[i]});

    // collect gap pairs and classify widths
    bs.genus_lo = 1;
    bs.genus_hi = 0;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        long idx = index_of[i];
        if (roots[i].multiplicity == 2) continue;  // degenerate gap, never open
        if (idx % 2 == 0) continue;                // handled from the left edge
        if (i + 1 >= roots.size() || index_of[i + 1] != idx + 1) continue;
        double a = roots[i].z, b = roots[i + 1].z;
        long k = (idx + 1) / 2;
        if (b - a >= opts.eps_gap * (1.0 + std::abs(a) + std::abs(b))) {
            bs.open_gaps.push_back({a, b, k});
            if (bs.genus_lo > bs.genus_hi) {
                bs.genus_lo = bs.genus_hi = k;
            } else {
                bs.genus_lo = std::min(bs.genus_lo, k);
                bs.genus_hi = std::max(bs.genus_hi, k);
            }
        }
    }

    if (opts.count_check) {
        // compare against the dense periodic/antiperiodic oracle away from the
        // window edges
        double shrink = 0.02 * (hi - lo);
        auto per = oracle_dense_spectra(p, opts.count_check_N, OracleBc::periodic, lo + shrink, hi - shrink);
        auto anti = oracle_dense_spectra(p, opts.count_check_N, OracleBc::antiperiodic, lo + shrink, hi - shrink);
        int expect = static_cast<int>(per.size() + anti.size());
        int got = 0;
        for (const auto& zp : bs.zetas)
            if (zp.z > lo + shrink && zp.z < hi - shrink) got += zp.multiplicity;
        bs.count_check.performed = true;
        bs.count_check.found = got;
        bs.count_check.expected = expect;
        bs.count_check.ok = (got == expect);
    }
    return bs;
}

double dirichlet_function(const PeriodicPotential& p, double z, DirichletVariant variant,
                          double tol) {
    auto m = monodromy(p, cplx(z, 0.0), tol);
    cplx v = (variant == DirichletVariant::standard) ? m.M_tilde.a12 : m.M_check.a12;
    return v.real();
}

std::vector<double> dirichlet_spectrum(const PeriodicPotential& p, double lo, double hi,
                                       DirichletVariant variant, const SpectraOptions& opts) {
    if (!(std::isfinite(lo) && std::isfinite(hi) && lo < hi))
        throw std::invalid_argument("dirichlet_spectrum: bad window");
    const double L = p.period();
    auto f = [&](double z) { return dirichlet_function(p, z, variant, opts.ode_tol); };

    int n = std::max(16, static_cast<int>(std::ceil((hi - lo) * L * opts.grid_per_pi / pi)));
    std::vector<double> xs(n + 1), fv(n + 1);
    for (int i = 0; i <= n; ++i) xs[i] = lo + (hi - lo) * i / n;
    parallel_for(n + 1, opts.threads, [&](std::size_t i) { fv[i] = f(xs[i]); });

    std::vector<double> mus;
    for (int i = 0; i < n; ++i) {
        if (fv[i] == 0.0) mus.push_back(xs[i]);
        if (fv[i] * fv[i + 1] < 0.0)
            mus.push_back(brent(f, xs[i], xs[i + 1], fv[i], fv[i + 1],
                                opts.root_xtol * scale(xs[i])));
    }
    std::sort(mus.begin(), mus.end());
    mus.erase(std::unique(mus.begin(), mus.end(),
                          [](double a, double b) { return std::abs(a - b) < 1e-11 * scale(a); }),
              mus.end());
    return mus;
}

std::vector<int> dirichlet_signs(const PeriodicPotential& p, const std::vector<double>& mus,
                                 DirichletVariant variant, const SpectraOptions& opts) {
    std::vector<int> sigmas(mus.size());
    for (std::size_t i = 0; i < mus.size(); ++i) {
        auto m = monodromy(p, cplx(mus[i], 0.0), opts.ode_tol);
        const Mat2& Y = (variant == DirichletVariant::standard) ? m.M_tilde : m.M_check;
        double y22 = Y.a22.real(), y11 = Y.a11.real();
        if (std::abs(y22 - 1.0 / y11) > 1e-8 * (1.0 + std::abs(y22)))
            throw std::runtime_error("dirichlet_signs: reciprocal relation y22 = 1/y11 violated; "
                                     "not a Dirichlet eigenvalue?");
        double lg = std::log(std::abs(y22));
        sigmas[i] = (std::abs(lg) < opts.eps_sign) ? 0 : (lg > 0 ? -1 : +1);
    }
    return sigmas;
}

SpectralData spectral_data(const PeriodicPotential& p, double lo, double hi, double x0,
                           const SpectraOptions& opts) {
    SpectralData sd;
    sd.base_point = x0;
    sd.window_lo = lo;
    sd.window_hi = hi;
    sd.L = p.period();

    BandStructure bs = main_spectrum(p, lo, hi, opts);
    PeriodicPotential ps = p.shifted(x0);
    std::vector<double> mus = dirichlet_spectrum(ps, lo, hi, DirichletVariant::standard, opts);
    std::vector<int> sig = dirichlet_signs(ps, mus, DirichletVariant::standard, opts);
    sd.aux_dirichlet = dirichlet_spectrum(ps, lo, hi, DirichletVariant::auxiliary, opts);

    std::vector<bool> used(mus.size(), false);
    for (const auto& g : bs.open_gaps) {
        double tol_pair = 10.0 * opts.eps_gap * (1.0 + std::abs(g.E_left) + std::abs(g.E_right));
        int hit = -1, count = 0;
        for (std::size_t i = 0; i < mus.size(); ++i) {
            if (mus[i] >= g.E_left - tol_pair && mus[i] <= g.E_right + tol_pair) {
                hit = static_cast<int>(i);
                ++count;
            }
        }
        if (count != 1)
            throw std::runtime_error(
                "spectral_data: open gap [" + std::to_string(g.E_left) + ", " +
                std::to_string(g.E_right) + "] holds " + std::to_string(count) +
                " Dirichlet eigenvalues; exactly one movable eigenvalue per gap expected");
        used[hit] = true;
        sd.gaps.push_back({g.E_left, g.E_right, g.k, mus[hit], sig[hit]});
    }
    for (std::size_t i = 0; i < mus.size(); ++i)
        if (!used[i]) sd.fixed_dirichlet.push_back(mus[i]);
    return sd;
}

}  // namespace zs

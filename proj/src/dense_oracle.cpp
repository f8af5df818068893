#include "zs/dense_oracle.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace zs {

namespace {

// Fourier collocation for periodic (Delta = 1) / antiperiodic (Delta = -1)
// eigenfunctions. Assembled in Fourier space where the operator is Hermitian.
std::vector<double> fourier_collocation(const PeriodicPotential& p, int N, bool antiperiodic,
                                        double z_lo, double z_hi) {
    const double L = p.period();
    int modes = N / 2;
    if (modes < 3) throw std::invalid_argument("oracle: N too small");
    std::vector<double> theta(modes);
    if (!antiperiodic) {
        int K = (modes - 1) / 2;
        modes = 2 * K + 1;
        for (int k = -K; k <= K; ++k) theta[k + K] = 2.0 * pi * k / L;
    } else {
        int K = modes / 2;
        modes = 2 * K;
        for (int k = -K; k < K; ++k) theta[k + K] = (2.0 * k + 1.0) * pi / L;
    }
    theta.resize(modes);

    Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(2 * modes, 2 * modes);
    const cplx iu(0.0, 1.0);
    for (int r = 0; r < modes; ++r) {
        H(r, r) = -theta[r];
        H(modes + r, modes + r) = theta[r];
        for (int c = 0; c < modes; ++c) {
            // frequency difference is an integer multiple of 2 pi / L for both
            // families
            int dn = static_cast<int>(std::lround((theta[r] - theta[c]) * L / (2.0 * pi)));
            cplx qhat = p.coefficient(dn);
            H(r, modes + c) = -iu * qhat;
            H(modes + c, r) = std::conj(-iu * qhat);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("oracle: Hermitian eigensolver failed to converge");
    std::vector<double> out;
    for (int i = 0; i < es.eigenvalues().size(); ++i) {
        double ev = es.eigenvalues()[i];
        if (ev >= z_lo && ev <= z_hi) out.push_back(ev);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Box-scheme Dirichlet oracle in the similarity-transformed frame, where the
// system is real for real z and the boundary condition is u1 = 0 at both ends.
std::vector<double> box_dirichlet(const PeriodicPotential& p, int N, bool auxiliary,
                                  double z_lo, double z_hi) {
    const double L = p.period();
    int np = N / 2 - 1;
    if (np < 8) throw std::invalid_argument("oracle: N too small");
    const double h = L / np;
    const int dim = 2 * (np + 1);

    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(dim, dim);
    Eigen::MatrixXd B = Eigen::MatrixXd::Zero(dim, dim);

    auto m0 = [&](double x, double& m11, double& m12, double& m21, double& m22) {
        cplx q = p.evaluate(x);
        if (auxiliary) q *= cplx(0.0, -1.0);  // second family = first with q -> -iq
        m11 = q.real();
        m12 = q.imag();
        m21 = q.imag();
        m22 = -q.real();
    };

    for (int i = 0; i < np; ++i) {
        double m11, m12, m21, m22;
        m0((i + 0.5) * h, m11, m12, m21, m22);
        int r = 2 * i;
        int ci = 2 * i, cj = 2 * (i + 1);
        // (u_{i+1} - u_i)/h - M0 (u_i + u_{i+1})/2 = z J (u_i + u_{i+1})/2
        A(r, ci) += -1.0 / h - 0.5 * m11;
        A(r, ci + 1) += -0.5 * m12;
        A(r, cj) += 1.0 / h - 0.5 * m11;
        A(r, cj + 1) += -0.5 * m12;
        A(r + 1, ci) += -0.5 * m21;
        A(r + 1, ci + 1) += -1.0 / h - 0.5 * m22;
        A(r + 1, cj) += -0.5 * m21;
        A(r + 1, cj + 1) += 1.0 / h - 0.5 * m22;
        // J = [[0,1],[-1,0]]
        B(r, ci + 1) += 0.5;
        B(r, cj + 1) += 0.5;
        B(r + 1, ci) += -0.5;
        B(r + 1, cj) += -0.5;
    }
    // boundary rows: u1(0) = 0, u1(L) = 0
    A(dim - 2, 0) = 1.0;
    A(dim - 1, 2 * np) = 1.0;

    Eigen::GeneralizedEigenSolver<Eigen::MatrixXd> ges;
    ges.compute(A, B, false);
    if (ges.info() != Eigen::Success)
        throw std::runtime_error("oracle: generalized eigensolver failed to converge");

    std::vector<double> out;
    auto alphas = ges.alphas();
    auto betas = ges.betas();
    for (int i = 0; i < alphas.size(); ++i) {
        if (std::abs(betas[i]) < 1e-10) continue;  // infinite eigenvalue (constraint rows)
        cplx ev = alphas[i] / betas[i];
        if (std::abs(ev.imag()) > 1e-6 * (1.0 + std::abs(ev.real()))) continue;
        double z = ev.real();
        if (z >= z_lo && z <= z_hi) out.push_back(z);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<double> oracle_dense_spectra(const PeriodicPotential& p, int N, OracleBc bc,
                                         double z_lo, double z_hi) {
    if (N < 64) throw std::invalid_argument("oracle_dense_spectra: N >= 64 required");
    switch (bc) {
        case OracleBc::periodic:
            return fourier_collocation(p, N, false, z_lo, z_hi);
        case OracleBc::antiperiodic:
            return fourier_collocation(p, N, true, z_lo, z_hi);
        case OracleBc::dirichlet_standard:
            return box_dirichlet(p, N, false, z_lo, z_hi);
        case OracleBc::dirichlet_auxiliary:
            return box_dirichlet(p, N, true, z_lo, z_hi);
    }
    throw std::logic_error("oracle_dense_spectra: unknown bc");
}

}  // namespace zs

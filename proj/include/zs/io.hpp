#pragma once

#include <string>
#include <vector>

#include "zs/potential.hpp"
#include "zs/rhpdata.hpp"
#include "zs/spectra.hpp"

namespace zs {

// Potential file: { "period": L, "kind": "fourier"|"samples", "data": [[re,im],...] }
// For kind = fourier, data[k] is c_n with n = k - (len-1)/2.
std::string potential_to_json(const PeriodicPotential& p);
PeriodicPotential potential_from_json(const std::string& text);
PeriodicPotential load_potential(const std::string& path);
void save_text(const std::string& path, const std::string& text);

std::string spectral_data_to_json(const SpectralData& sd);
std::string band_structure_to_json(const BandStructure& bs);

// RHP export: segments with kind and endpoints plus sampled V tables.
struct RhpExportNode {
    double x, z;
    bool has_t = false;
    double t = 0.0;
};
std::string rhp_export_json(const RhpData& rhp, const BandStructure& bs,
                            const std::vector<RhpExportNode>& nodes);

std::string delta_csv(const std::vector<double>& zs, const std::vector<double>& deltas);
std::string reconstruction_csv(const std::vector<double>& xs, const std::vector<cplx>& q_true,
                               const std::vector<cplx>& q_hat);

struct FlowLogRow {
    double t;
    std::vector<double> gammas;
    std::vector<int> sigmas;
    double drift;
};
std::string flow_log_csv(const std::vector<FlowLogRow>& rows);

// Hand-written SVG of Delta over the window with bands shaded and the gap
// edges / Dirichlet eigenvalues marked.
std::string bands_svg(const std::vector<double>& zs, const std::vector<double>& deltas,
                      const BandStructure& bs, const std::vector<double>& dirichlet);

std::string format_double(double v);  // 17 significant digits, locale-free

}  // namespace zs

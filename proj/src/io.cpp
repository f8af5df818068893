#include "zs/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace zs {

using nlohmann::json;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string potential_to_json(const PeriodicPotential& p) {
    json j;
    j["period"] = p.period();
    j["kind"] = "fourier";
    json data = json::array();
    for (int n = -p.max_mode(); n <= p.max_mode(); ++n) {
        cplx c = p.coefficient(n);
        data.push_back({c.real(), c.imag()});
    }
    j["data"] = data;
    return j.dump(2) + "\n";
}

PeriodicPotential potential_from_json(const std::string& text) {
    json j = json::parse(text);
    double L = j.at("period").get<double>();
    std::string kind = j.at("kind").get<std::string>();
    std::vector<cplx> data;
    for (const auto& e : j.at("data"))
        data.emplace_back(e.at(0).get<double>(), e.at(1).get<double>());
    if (kind == "fourier") return PeriodicPotential::from_fourier(L, std::move(data));
    if (kind == "samples") return PeriodicPotential::from_samples(L, data);
    throw std::invalid_argument("potential_from_json: kind must be 'fourier' or 'samples'");
}

PeriodicPotential load_potential(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open potential file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return potential_from_json(ss.str());
}

void save_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << text;
}

std::string spectral_data_to_json(const SpectralData& sd) {
    json j;
    j["window"] = {sd.window_lo, sd.window_hi};
    j["L"] = sd.L;
    j["base_point"] = sd.base_point;
    json gaps = json::array();
    for (const auto& g : sd.gaps) {
        json e;
        e["E"] = {g.E_left, g.E_right};
        e["gamma"] = g.gamma;
        e["sigma"] = g.sigma;
        e["k"] = g.k;
        gaps.push_back(e);
    }
    j["gaps"] = gaps;
    j["fixed"] = sd.fixed_dirichlet;
    j["aux"] = sd.aux_dirichlet;
    return j.dump(2) + "\n";
}

std::string band_structure_to_json(const BandStructure& bs) {
    json j;
    j["window"] = {bs.z_lo, bs.z_hi};
    j["gap_threshold"] = bs.gap_threshold;
    j["zero_in_gap"] = bs.zero_in_gap;
    json zs_arr = json::array();
    for (const auto& z : bs.zetas) {
        json e;
        e["z"] = z.z;
        e["multiplicity"] = z.multiplicity;
        e["delta_sign"] = z.delta_sign;
        e["index"] = z.index;
        zs_arr.push_back(e);
    }
    j["zetas"] = zs_arr;
    json gaps = json::array();
    for (const auto& g : bs.open_gaps) {
        json e;
        e["E"] = {g.E_left, g.E_right};
        e["k"] = g.k;
        gaps.push_back(e);
    }
    j["open_gaps"] = gaps;
    if (bs.count_check.performed) {
        j["count_check"] = {{"ok", bs.count_check.ok},
                            {"found", bs.count_check.found},
                            {"expected", bs.count_check.expected}};
    }
    return j.dump(2) + "\n";
}

std::string rhp_export_json(const RhpData& rhp, const BandStructure& bs,
                            const std::vector<RhpExportNode>& nodes) {
    json j;
    j["window"] = {rhp.data.window_lo, rhp.data.window_hi};
    j["disk_radius"] = rhp.disk_radius;
    j["disk_centers"] = rhp.disk_centers;
    json segs = json::array();
    // real-axis partition induced by the open gap edges
    std::vector<double> cuts = {rhp.data.window_lo};
    for (const auto& g : rhp.data.gaps) {
        cuts.push_back(g.E_left);
        cuts.push_back(g.E_right);
    }
    cuts.push_back(rhp.data.window_hi);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        json s;
        s["endpoints"] = {cuts[i], cuts[i + 1]};
        double mid = 0.5 * (cuts[i] + cuts[i + 1]);
        s["kind"] = rhp.open_gap_at(mid) ? "gap" : "band";
        segs.push_back(s);
    }
    j["segments"] = segs;
    (void)bs;
    json table = json::array();
    for (const auto& n : nodes) {
        json e;
        e["x"] = n.x;
        e["z"] = n.z;
        if (n.has_t) e["t"] = n.t;
        auto v = rhp.jump_V(n.x, n.z, n.has_t ? std::optional<double>(n.t) : std::nullopt);
        e["kind"] = v.segment_kind == SegmentKind::gap ? "gap" : "band";
        e["V"] = {{v.value.a11.real(), v.value.a11.imag()},
                  {v.value.a12.real(), v.value.a12.imag()},
                  {v.value.a21.real(), v.value.a21.imag()},
                  {v.value.a22.real(), v.value.a22.imag()}};
        table.push_back(e);
    }
    j["jump_samples"] = table;
    return j.dump(2) + "\n";
}

std::string delta_csv(const std::vector<double>& zs, const std::vector<double>& deltas) {
    std::string out = "z,delta\n";
    for (std::size_t i = 0; i < zs.size(); ++i)
        out += format_double(zs[i]) + "," + format_double(deltas[i]) + "\n";
    return out;
}

std::string reconstruction_csv(const std::vector<double>& xs, const std::vector<cplx>& q_true,
                               const std::vector<cplx>& q_hat) {
    std::string out = "x,re_qhat,im_qhat,re_q,im_q,abs_error\n";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        out += format_double(xs[i]) + "," + format_double(q_hat[i].real()) + "," +
               format_double(q_hat[i].imag()) + "," + format_double(q_true[i].real()) + "," +
               format_double(q_true[i].imag()) + "," +
               format_double(std::abs(q_hat[i] - q_true[i])) + "\n";
    }
    return out;
}

std::string flow_log_csv(const std::vector<FlowLogRow>& rows) {
    std::string out = "t";
    if (!rows.empty()) {
        for (std::size_t k = 0; k < rows[0].gammas.size(); ++k)
            out += ",gamma" + std::to_string(k) + ",sigma" + std::to_string(k);
    }
    out += ",delta_drift\n";
    for (const auto& r : rows) {
        out += format_double(r.t);
        for (std::size_t k = 0; k < r.gammas.size(); ++k)
            out += "," + format_double(r.gammas[k]) + "," + std::to_string(r.sigmas[k]);
        out += "," + format_double(r.drift) + "\n";
    }
    return out;
}

std::string bands_svg(const std::vector<double>& zs, const std::vector<double>& deltas,
                      const BandStructure& bs, const std::vector<double>& dirichlet) {
    const double W = 900, H = 420, mx = 50, my = 30;
    double zlo = bs.z_lo, zhi = bs.z_hi;
    double dmax = 2.5;
    for (double d : deltas) dmax = std::max(dmax, std::min(std::abs(d), 6.0));
    auto X = [&](double z) { return mx + (z - zlo) / (zhi - zlo) * (W - 2 * mx); };
    auto Y = [&](double d) {
        d = std::clamp(d, -dmax, dmax);
        return my + (dmax - d) / (2 * dmax) * (H - 2 * my);
    };
    std::ostringstream s;
    s << "<svg xmlns='http://www.w3.org/2000/svg' width='" << W << "' height='" << H << "'>\n";
    s << "<rect width='100%' height='100%' fill='white'/>\n";
    // shade spectral bands: |Delta| <= 1 regions from the sampled curve
    bool in_band = false;
    double band_start = 0;
    for (std::size_t i = 0; i < zs.size(); ++i) {
        bool inb = std::abs(deltas[i]) <= 1.0;
        if (inb && !in_band) {
            in_band = true;
            band_start = zs[i];
        }
        if ((!inb || i + 1 == zs.size()) && in_band) {
            in_band = false;
            s << "<rect x='" << X(band_start) << "' y='" << my << "' width='"
              << (X(zs[i]) - X(band_start)) << "' height='" << (H - 2 * my)
              << "' fill='#fbdada'/>\n";
        }
    }
    // guides at Delta = +-1, 0
    for (double g : {-1.0, 0.0, 1.0})
        s << "<line x1='" << mx << "' y1='" << Y(g) << "' x2='" << (W - mx) << "' y2='" << Y(g)
          << "' stroke='#999' stroke-dasharray='4 3'/>\n";
    // Delta curve
    s << "<path d='";
    for (std::size_t i = 0; i < zs.size(); ++i)
        s << (i ? "L" : "M") << X(zs[i]) << " " << Y(deltas[i]) << " ";
    s << "' fill='none' stroke='#1040a0' stroke-width='1.5'/>\n";
    // gap edges
    for (const auto& g : bs.open_gaps)
        for (double e : {g.E_left, g.E_right})
            s << "<line x1='" << X(e) << "' y1='" << my << "' x2='" << X(e) << "' y2='"
              << (H - my) << "' stroke='#207020' stroke-width='1'/>\n";
    // Dirichlet eigenvalues
    for (double mu : dirichlet)
        if (mu >= zlo && mu <= zhi)
            s << "<circle cx='" << X(mu) << "' cy='" << Y(0.0) << "' r='3.5' fill='#2050d0'/>\n";
    s << "<text x='" << (W / 2 - 20) << "' y='" << (H - 6) << "' font-size='13'>z</text>\n";
    s << "<text x='8' y='" << (my + 10) << "' font-size='13'>&#916;(z)</text>\n";
    s << "</svg>\n";
    return s.str();
}

}  // namespace zs

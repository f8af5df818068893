#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "zs/bloch.hpp"
#include "zs/dense_oracle.hpp"
#include "zs/evolution.hpp"
#include "zs/inverse.hpp"
#include "zs/io.hpp"
#include "zs/monodromy.hpp"
#include "zs/parallel.hpp"
#include "zs/rhpdata.hpp"
#include "zs/spectra.hpp"
#include "zs/verify.hpp"

using nlohmann::json;
using namespace zs;

namespace {

struct RunConfig {
    std::string input;
    std::string out = "zs_out";
    double window_lo = -6.0, window_hi = 6.0;
    double ode_tol = 1e-10;
    double eps_gap = 1e-8, eps_sign = 1e-8, eps_deriv = 1e-6, eps_edge = 1e-6;
    double x0 = 0.0;
    double dt = 1e-4, t_end = 0.1;
    int n_modes = 256;
    int nx = 16;
    int n_z = 800;
    int threads = 0;  // 0 = ZS_THREADS or hardware
    unsigned seed = 20240817;
    std::string method = "trace";
    std::string suite = "all";
    std::vector<std::array<double, 3>> rhp_nodes;  // x, z, t (t = nan if absent)
    bool with_time = false;
    double t_probe = 0.0;

    SpectraOptions spectra() const {
        SpectraOptions s;
        s.ode_tol = ode_tol;
        s.eps_gap = eps_gap;
        s.eps_sign = eps_sign;
        s.eps_deriv = eps_deriv;
        s.threads = effective_threads();
        return s;
    }
    int effective_threads() const { return threads > 0 ? threads : default_threads(); }
};

void apply_config_file(RunConfig& rc, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    json j;
    in >> j;
    if (j.contains("input")) rc.input = j["input"].get<std::string>();
    if (j.contains("out")) rc.out = j["out"].get<std::string>();
    if (j.contains("window")) {
        rc.window_lo = j["window"][0].get<double>();
        rc.window_hi = j["window"][1].get<double>();
    }
    if (j.contains("ode_tol")) rc.ode_tol = j["ode_tol"].get<double>();
    if (j.contains("eps_gap")) rc.eps_gap = j["eps_gap"].get<double>();
    if (j.contains("eps_sign")) rc.eps_sign = j["eps_sign"].get<double>();
    if (j.contains("eps_deriv")) rc.eps_deriv = j["eps_deriv"].get<double>();
    if (j.contains("eps_edge")) rc.eps_edge = j["eps_edge"].get<double>();
    if (j.contains("x0")) rc.x0 = j["x0"].get<double>();
    if (j.contains("dt")) rc.dt = j["dt"].get<double>();
    if (j.contains("t_end")) rc.t_end = j["t_end"].get<double>();
    if (j.contains("n_modes")) rc.n_modes = j["n_modes"].get<int>();
    if (j.contains("nx")) rc.nx = j["nx"].get<int>();
    if (j.contains("n_z")) rc.n_z = j["n_z"].get<int>();
    if (j.contains("threads")) rc.threads = j["threads"].get<int>();
    if (j.contains("seed")) rc.seed = j["seed"].get<unsigned>();
    if (j.contains("method")) rc.method = j["method"].get<std::string>();
    if (j.contains("suite")) rc.suite = j["suite"].get<std::string>();
    if (j.contains("rhp_nodes"))
        for (const auto& n : j["rhp_nodes"]) {
            std::array<double, 3> node{n[0].get<double>(), n[1].get<double>(),
                                       std::numeric_limits<double>::quiet_NaN()};
            if (n.size() > 2) node[2] = n[2].get<double>();
            rc.rhp_nodes.push_back(node);
        }
}

int cmd_bands(const RunConfig& rc) {
    PeriodicPotential p = load_potential(rc.input);
    SpectraOptions sopts = rc.spectra();
    BandStructure bs = main_spectrum(p, rc.window_lo, rc.window_hi, sopts);
    auto mus = dirichlet_spectrum(p, rc.window_lo, rc.window_hi, DirichletVariant::standard, sopts);

    std::vector<cplx> grid;
    std::vector<double> zr;
    for (int i = 0; i <= rc.n_z; ++i) {
        double z = rc.window_lo + (rc.window_hi - rc.window_lo) * i / rc.n_z;
        zr.push_back(z);
        grid.push_back(cplx(z, 0.0));
    }
    auto dl = discriminant_grid(p, grid, rc.ode_tol, rc.effective_threads());
    std::vector<double> dr(dl.size());
    for (std::size_t i = 0; i < dl.size(); ++i) dr[i] = dl[i].real();

    save_text(rc.out + "_bands.json", band_structure_to_json(bs));
    save_text(rc.out + "_delta.csv", delta_csv(zr, dr));
    save_text(rc.out + "_bands.svg", bands_svg(zr, dr, bs, mus));
    std::printf("bands: %zu main-spectrum points, %zu open gaps -> %s_bands.{json,svg}\n",
                bs.zetas.size(), bs.open_gaps.size(), rc.out.c_str());
    return 0;
}

int cmd_spectral_data(const RunConfig& rc) {
    PeriodicPotential p = load_potential(rc.input);
    SpectralData sd = spectral_data(p, rc.window_lo, rc.window_hi, rc.x0, rc.spectra());
    save_text(rc.out + "_spectral_data.json", spectral_data_to_json(sd));
    std::printf("spectral-data: %zu open gaps, %zu fixed eigenvalues -> %s_spectral_data.json\n",
                sd.gaps.size(), sd.fixed_dirichlet.size(), rc.out.c_str());
    return 0;
}

int cmd_rhp_export(const RunConfig& rc) {
    PeriodicPotential p = load_potential(rc.input);
    SpectraOptions sopts = rc.spectra();
    BandStructure bs = main_spectrum(p, rc.window_lo, rc.window_hi, sopts);
    SpectralData sd = spectral_data(p, rc.window_lo, rc.window_hi, rc.x0, sopts);
    RhpOptions ropts;
    ropts.ode_tol = rc.ode_tol;
    ropts.eps_edge = rc.eps_edge;
    RhpData rhp = build_rhp_data(p, sd, ropts);

    std::vector<RhpExportNode> nodes;
    if (!rc.rhp_nodes.empty()) {
        for (const auto& n : rc.rhp_nodes) {
            RhpExportNode e;
            e.x = n[0];
            e.z = n[1];
            if (!std::isnan(n[2])) {
                e.has_t = true;
                e.t = n[2];
            }
            nodes.push_back(e);
        }
    } else {
        // default sampling: interior points of every segment at a few x
        std::vector<double> cuts = {rc.window_lo};
        for (const auto& g : sd.gaps) {
            cuts.push_back(g.E_left);
            cuts.push_back(g.E_right);
        }
        cuts.push_back(rc.window_hi);
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
            for (double f : {0.25, 0.5, 0.75})
                for (double x : {0.0, p.period() / 3.0}) {
                    RhpExportNode e;
                    e.x = x;
                    e.z = cuts[i] + f * (cuts[i + 1] - cuts[i]);
                    if (rc.with_time) {
                        e.has_t = true;
                        e.t = rc.t_probe;
                    }
                    nodes.push_back(e);
                }
    }
    save_text(rc.out + "_rhp.json", rhp_export_json(rhp, bs, nodes));
    std::printf("rhp-export: %zu jump samples -> %s_rhp.json\n", nodes.size(), rc.out.c_str());
    return 0;
}

int cmd_reconstruct(const RunConfig& rc) {
    PeriodicPotential p = load_potential(rc.input);
    SpectraOptions sopts = rc.spectra();
    std::vector<double> xs;
    for (int i = 0; i < rc.nx; ++i) xs.push_back(p.period() * i / rc.nx);
    std::vector<cplx> q_true(xs.size()), q_hat(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) q_true[i] = p.evaluate(xs[i]);

    if (rc.method == "bloch") {
        for (std::size_t i = 0; i < xs.size(); ++i)
            q_hat[i] = reconstruct_from_bloch(p, xs[i], {20.0, 40.0, 80.0}, rc.ode_tol).q_hat;
    } else {
        std::vector<Genus0Params> family;
        for (double A : {0.5, 1.0})
            for (double al : {0.0, pi / 4, 3 * pi / 4}) family.push_back({A, al, 1.0});
        InverseOptions iopts;
        iopts.spectra = sopts;
        TraceConvention conv = calibrate_trace_convention(family, iopts);
        q_hat = trace_reconstruct(p, rc.window_lo, rc.window_hi, xs, conv, sopts);
    }
    save_text(rc.out + "_reconstruct.csv", reconstruction_csv(xs, q_true, q_hat));
    double sup = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i)
        sup = std::max(sup, std::abs(q_hat[i] - q_true[i]));
    std::printf("reconstruct (%s): sup error %.3e -> %s_reconstruct.csv\n", rc.method.c_str(),
                sup, rc.out.c_str());
    return 0;
}

int cmd_evolve(const RunConfig& rc) {
    PeriodicPotential p = load_potential(rc.input);
    FlowOptions fopts;
    fopts.ode_tol = rc.ode_tol;
    fopts.eps_gap = rc.eps_gap;
    fopts.eps_sign = rc.eps_sign;
    fopts.n_modes = rc.n_modes;

    std::vector<cplx> probes;
    for (int i = 0; i < 20; ++i)
        probes.push_back(cplx(rc.window_lo + (rc.window_hi - rc.window_lo) * (i + 0.5) / 20.0,
                              0.35 + 0.05 * (i % 3)));
    FlowState st = make_flow_state(p, rc.window_lo, rc.window_hi, probes, fopts);

    std::vector<FlowLogRow> rows;
    int n_steps = std::max(1, static_cast<int>(std::llround(rc.t_end / rc.dt)));
    int log_every = std::max(1, n_steps / 100);
    auto log_row = [&](const FlowState& s) {
        FlowLogRow row;
        row.t = s.t;
        double drift = 0.0;
        for (std::size_t i = 0; i < s.probes.size(); ++i) {
            cplx d = monodromy(s.q, s.probes[i], rc.ode_tol).delta;
            drift = std::max(drift, std::abs(d - s.probe_delta0[i]));
        }
        row.drift = drift;
        for (const auto& tr : s.tracks) {
            row.gammas.push_back(tr.gamma);
            row.sigmas.push_back(tr.sigma);
        }
        rows.push_back(row);
    };
    log_row(st);
    for (int k = 0; k < n_steps; k += log_every) {
        double t_target = std::min(rc.t_end, (k + log_every) * rc.dt);
        st = dirichlet_flow(st, t_target, rc.dt, fopts);
        log_row(st);
    }
    save_text(rc.out + "_flow.csv", flow_log_csv(rows));
    std::printf("evolve: t = %.4f, final drift %.3e -> %s_flow.csv\n", st.t, rows.back().drift,
                rc.out.c_str());
    return 0;
}

int cmd_verify(const RunConfig& rc) {
    VerifyOptions vo;
    vo.ode_tol = rc.ode_tol;
    vo.eps_gap = rc.eps_gap;
    vo.eps_sign = rc.eps_sign;
    vo.eps_deriv = rc.eps_deriv;
    vo.eps_edge = rc.eps_edge;
    vo.threads = rc.effective_threads();
    vo.seed = rc.seed;
    auto rows = run_verify_suite(rc.suite, vo);
    std::string table = render_check_table(rows);
    std::fputs(table.c_str(), stdout);
    for (const auto& r : rows)
        if (!r.pass) return 3;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Periodic Zakharov-Shabat spectral toolkit"};
    app.require_subcommand(1);

    RunConfig rc;
    // config file first, flags override
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--config") {
            try {
                apply_config_file(rc, argv[i + 1]);
            } catch (const std::exception& e) {
                std::fprintf(stderr, "error: %s\n", e.what());
                return 1;
            }
        }
    std::string config_path;
    app.add_option("--config", config_path, "JSON config file (flags override)");

    auto add_common = [&](CLI::App* c, bool needs_input) {
        if (needs_input)
            c->add_option("--input", rc.input, "potential JSON file")->required(rc.input.empty());
        c->add_option("--out", rc.out, "output path prefix");
        c->add_option("--window", [&rc](const std::vector<std::string>& vals) {
             if (vals.size() != 2) return false;
             rc.window_lo = std::stod(vals[0]);
             rc.window_hi = std::stod(vals[1]);
             return true;
         }, "spectral window: lo hi")->expected(2);
        c->add_option("--ode-tol", rc.ode_tol, "integrator tolerance");
        c->add_option("--eps-gap", rc.eps_gap, "degenerate-gap threshold");
        c->add_option("--eps-sign", rc.eps_sign, "sigma = 0 threshold");
        c->add_option("--eps-deriv", rc.eps_deriv, "double-root derivative threshold");
        c->add_option("--eps-edge", rc.eps_edge, "edge refusal radius");
        c->add_option("--threads", rc.threads, "worker threads (0 = ZS_THREADS or hardware)");
        c->add_option("--seed", rc.seed, "seed for randomized suites");
    };

    auto* bands = app.add_subcommand("bands", "discriminant, band structure, plot");
    add_common(bands, true);
    bands->add_option("--n-z", rc.n_z, "plot grid size");
    bands->add_option("--x0", rc.x0, "Dirichlet base point");

    auto* specd = app.add_subcommand("spectral-data", "gaps, Dirichlet eigenvalues, signs");
    add_common(specd, true);
    specd->add_option("--x0", rc.x0, "Dirichlet base point");

    auto* rhp = app.add_subcommand("rhp-export", "jump matrix tables for downstream solvers");
    add_common(rhp, true);
    rhp->add_option("--x0", rc.x0, "Dirichlet base point");
    rhp->add_flag("--with-time", rc.with_time, "emit the time-dependent jump");
    rhp->add_option("--t", rc.t_probe, "time for the time-dependent jump");

    auto* rec = app.add_subcommand("reconstruct", "recover q from spectral data");
    add_common(rec, true);
    rec->add_option("--nx", rc.nx, "number of x samples");
    rec->add_option("--method", rc.method, "trace | bloch");

    auto* evo = app.add_subcommand("evolve", "defocusing NLS flow with Dirichlet tracks");
    add_common(evo, true);
    evo->add_option("--dt", rc.dt, "time step");
    evo->add_option("--t-end", rc.t_end, "final time");
    evo->add_option("--n-modes", rc.n_modes, "split-step modes (power of two)");

    auto* ver = app.add_subcommand("verify", "run the invariant suites");
    add_common(ver, false);
    ver->add_option("--suite", rc.suite,
                    "potential|monodromy|spectra|oracle|rhpdata|bloch|evolution|genus0|inverse|all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;  // usage errors map to exit code 1
    }

    try {
        if (bands->parsed()) return cmd_bands(rc);
        if (specd->parsed()) return cmd_spectral_data(rc);
        if (rhp->parsed()) return cmd_rhp_export(rc);
        if (rec->parsed()) return cmd_reconstruct(rc);
        if (evo->parsed()) return cmd_evolve(rc);
        if (ver->parsed()) return cmd_verify(rc);
    } catch (const IntegratorError& e) {
        std::fprintf(stderr, "numerical failure at z = %.17g%+.17gi: %s\n", e.z.real(),
                     e.z.imag(), e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return 2;
    }
    return 1;
}

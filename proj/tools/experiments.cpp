// SPDX-License-Identifier: Apache-2.0
//
// pass-sim: performance models and simulation for uplink pinching-antenna
// systems (PASS)
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "experiments.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <stdexcept>

#include "passim/analytic_rates.hpp"
#include "passim/montecarlo.hpp"
#include "passim/placement.hpp"

namespace passim::cli {

namespace {

ScenarioKind parse_kind(const std::string& s)
{
    if (s == "mpsu")
        return ScenarioKind::mpsu;
    if (s == "spsu")
        return ScenarioKind::spsu;
    if (s == "spmu")
        return ScenarioKind::spmu;
    if (s == "siso")
        return ScenarioKind::siso;
    throw std::invalid_argument("unknown scenario '" + s + "' (mpsu|spsu|spmu|siso)");
}

MpsuPlacement parse_placement(const std::string& s)
{
    if (s == "lemma1")
        return MpsuPlacement::lemma1;
    if (s == "fz")
        return MpsuPlacement::fz;
    throw std::invalid_argument("unknown placement '" + s + "' (lemma1|fz)");
}

SpmuPaMode parse_pa_mode(const std::string& s)
{
    if (s == "center")
        return SpmuPaMode::center;
    if (s == "optimized")
        return SpmuPaMode::optimized;
    throw std::invalid_argument("unknown spmu-pa mode '" + s + "' (center|optimized)");
}

NoiseModel parse_noise(const std::string& s)
{
    if (s == "per-pa")
        return NoiseModel::per_pa;
    if (s == "single")
        return NoiseModel::single;
    throw std::invalid_argument("unknown noise model '" + s + "' (per-pa|single)");
}

// Methods that make sense per scenario.
const std::map<std::string, std::set<std::string>> method_matrix = {
    {"mpsu", {"theorem", "highsnr", "mc"}},
    {"spsu", {"theorem", "highsnr", "maclaurin", "mc"}},
    {"spmu", {"quadrature", "approx", "mc"}},
    {"siso", {"mc"}},
};

double mpsu_gain(int n_half)
{
    return n_half == 0 ? 1.0 : 2.0 * n_half;
}

// Compact numeric tag for file names: 20 -> "20", 2.5 -> "2p5".
std::string num_label(double v)
{
    if (v == std::floor(v) && std::abs(v) < 1e9)
        return std::to_string(static_cast<long long>(v));
    std::string s = format_sig9(v);
    std::replace(s.begin(), s.end(), '.', 'p');
    std::replace(s.begin(), s.end(), '-', 'm');
    return s;
}

// Disjoint RandomSource stream blocks per (curve, sweep point); each
// estimate consumes at most 2^20 blocks.
std::uint64_t stream_base(unsigned curve, unsigned point)
{
    return (static_cast<std::uint64_t>(curve) << 40u) |
           (static_cast<std::uint64_t>(point) << 20u);
}

struct FigureContext {
    double fc_hz = 2.4e9;
    double bw_hz = 1e6;
    int users = 2;
    std::uint64_t seed = 1;
    long long samples = 1000000;
    unsigned threads = 1;
    std::vector<double> powers_dbm;
};

double get_set(const std::map<std::string, double>& set, const std::string& key,
               double fallback)
{
    const auto it = set.find(key);
    return it == set.end() ? fallback : it->second;
}

FigureContext make_context(const FigureRequest& req, double p_start, double p_stop,
                           double p_step)
{
    FigureContext ctx;
    ctx.fc_hz = get_set(req.set, "fc_hz", 2.4e9);
    ctx.bw_hz = get_set(req.set, "bw_hz", 1e6);
    ctx.users = static_cast<int>(get_set(req.set, "users", 2));
    ctx.seed = req.seed;
    ctx.samples = req.samples;
    ctx.threads = req.threads;

    const double start = get_set(req.set, "power_start", p_start);
    const double stop = get_set(req.set, "power_stop", p_stop);
    const double step = get_set(req.set, "power_step", p_step);
    if (!(step > 0.0) || stop < start)
        throw std::invalid_argument("figure: power grid must be increasing");
    for (double p = start; p <= stop + 1e-9; p += step)
        ctx.powers_dbm.push_back(p);
    return ctx;
}

enum class CurveEval { theorem, highsnr, maclaurin, quadrature, approx, mc, mc_sum, quadrature_sum };

struct CurveDef {
    std::string file;     // without extension
    std::string method;   // CSV method tag
    ScenarioKind kind = ScenarioKind::spsu;
    CurveEval eval = CurveEval::theorem;
    double height = 20.0;
    double extent = 10.0;
    int n_half = 0;
    MpsuPlacement placement = MpsuPlacement::lemma1;
    SpmuPaMode pa_mode = SpmuPaMode::center;
};

double analytic_value(const CurveDef& c, const SystemParams& params, const RoomGeometry& room)
{
    switch (c.eval) {
    case CurveEval::theorem:
        return c.kind == ScenarioKind::mpsu ? rate_mpsu(params, room, c.n_half)
                                            : rate_spsu(params, room);
    case CurveEval::highsnr:
        return rate_highsnr(params, room,
                            c.kind == ScenarioKind::mpsu ? mpsu_gain(c.n_half) : 1.0);
    case CurveEval::maclaurin:
        return rate_spsu_maclaurin(params, room);
    case CurveEval::quadrature:
        return rate_spmu_quadrature(params, room);
    case CurveEval::approx:
        return rate_spmu_approx(params, room);
    case CurveEval::quadrature_sum:
        return params.num_users * rate_spmu_quadrature(params, room);
    default:
        throw std::logic_error("analytic_value: not an analytic curve");
    }
}

FigureOutput eval_curve(const CurveDef& c, const FigureContext& ctx, unsigned curve_idx,
                        std::ostream& log)
{
    FigureOutput out;
    out.file_name = c.file + ".csv";
    const RoomGeometry room{c.extent, c.height};

    if (c.eval == CurveEval::maclaurin && !(c.height > c.extent)) {
        log << "note: skipping " << out.file_name
            << " (Maclaurin form needs h > D; h = " << c.height << ", D = " << c.extent
            << ")\n";
        out.file_name.clear();
        return out;
    }

    for (std::size_t i = 0; i < ctx.powers_dbm.size(); ++i) {
        const double p_dbm = ctx.powers_dbm[i];
        const SystemParams params = make_params(ctx.fc_hz, ctx.bw_hz, p_dbm, ctx.users);
        CsvRow row;
        row.x = p_dbm;
        row.method = c.method;
        row.scenario = to_string(c.kind);
        row.seed = ctx.seed;

        if (c.eval == CurveEval::mc || c.eval == CurveEval::mc_sum) {
            ScenarioConfig cfg;
            cfg.kind = c.kind;
            cfg.n_half = c.n_half;
            cfg.placement = c.placement;
            cfg.spmu_pa = c.pa_mode;
            cfg.room = room;
            cfg.params = params;
            RandomSource rng(ctx.seed, stream_base(curve_idx, static_cast<unsigned>(i)));
            const RateEstimate est =
                c.eval == CurveEval::mc
                    ? estimate_rate(cfg, ctx.samples, rng, ctx.threads)
                    : estimate_sum_rate(cfg, ctx.samples, rng, ctx.threads);
            row.value = est.mean;
            row.ci_half_width = est.ci_half_width;
            row.n_samples = est.n_samples;
            if (est.nz_fallbacks > 0)
                log << "note: " << out.file_name << " P=" << p_dbm << " dBm: "
                    << est.nz_fallbacks << " draws fell back to far-zone placement\n";
        } else {
            row.value = analytic_value(c, params, room);
        }
        out.rows.push_back(row);
    }
    return out;
}

// ---------------------------------------------------------------------
// Presets. Where the reference description underspecifies per-curve
// parameters the values below are our documented reading:
//   fig3  spacing vs element index, N = 10; near-zone anchor distance
//         d0 = 2 m, far-zone d0 = 20 m, wavelength as benchmark.
//   fig4  MPSU rate vs power, h = 20, D = 10, N in {4, 10, 20}.
//   fig5  MPSU near/far-zone comparison: (h, D) in {(20,10), (5,1), (2,2)}.
//   fig6  MPSU (N in {5, 10}) vs SPSU for (h, D) in {(20,10), (2,2)}.
//   fig7  SPSU analytic/high-SNR/Maclaurin for (h, D) in {(20,10), (10,5), (5,2)}.
//   fig8  SPMU quadrature vs approximation, h = 20, D in {5, 10, 15}.
//   fig9  SPSU minus SPMU rate difference for (h, D) in {(20,10), (10,10), (5,10)}.
//   fig10 ergodic sum rate: optimized SPMU / center SPMU / SISO, h = 20, D = 10.
// Power grids default to 0..60 dBm step 5 (0..30 for fig8/fig9).
// ---------------------------------------------------------------------

std::vector<FigureOutput> run_fig3(const FigureRequest& req, std::ostream& log)
{
    const FigureContext ctx = make_context(req, 0, 0, 5); // powers unused
    const int n_half = static_cast<int>(get_set(req.set, "n", 10));
    const double d0_nz = get_set(req.set, "d0_nz", 2.0);
    const double d0_fz = get_set(req.set, "d0_fz", 20.0);
    const SystemParams params = make_params(ctx.fc_hz, ctx.bw_hz, 30.0, ctx.users);

    auto spacing_curve = [&](const std::string& file, double d0) {
        FigureOutput out;
        out.file_name = file;
        const auto profile = spacing_profile(lemma1_positions(d0, params, n_half));
        for (const auto& e : profile)
            out.rows.push_back({static_cast<double>(e.index), e.spacing, "lemma1", "mpsu",
                                0.0, 0, ctx.seed});
        return out;
    };

    std::vector<FigureOutput> outputs;
    outputs.push_back(spacing_curve("fig3_spacing_nz_d0_" + num_label(d0_nz) + ".csv", d0_nz));
    outputs.push_back(spacing_curve("fig3_spacing_fz_d0_" + num_label(d0_fz) + ".csv", d0_fz));

    FigureOutput wl;
    wl.file_name = "fig3_wavelength.csv";
    for (int n = -n_half; n < n_half; ++n)
        wl.rows.push_back({static_cast<double>(n), params.wavelength, "wavelength", "mpsu",
                           0.0, 0, ctx.seed});
    outputs.push_back(std::move(wl));

    log << "fig3: N = " << n_half << ", d0 near-zone = " << d0_nz
        << " m, far-zone = " << d0_fz << " m\n";
    return outputs;
}

std::vector<FigureOutput> run_rate_curves(std::ostream& log, const FigureContext& ctx,
                                          const std::vector<CurveDef>& curves)
{
    std::vector<FigureOutput> outputs;
    for (std::size_t i = 0; i < curves.size(); ++i) {
        FigureOutput out = eval_curve(curves[i], ctx, static_cast<unsigned>(i), log);
        if (!out.file_name.empty())
            outputs.push_back(std::move(out));
    }
    return outputs;
}

std::vector<std::pair<double, double>> hd_combos(const FigureRequest& req,
                                                 std::vector<std::pair<double, double>> defaults)
{
    const bool has_h = req.set.count("h") != 0;
    const bool has_d = req.set.count("d") != 0;
    if (!has_h && !has_d)
        return defaults;
    std::vector<std::pair<double, double>> combos;
    for (auto [h, d] : defaults) {
        combos.emplace_back(has_h ? req.set.at("h") : h, has_d ? req.set.at("d") : d);
    }
    // Overriding h/d collapses duplicate combos.
    std::sort(combos.begin(), combos.end());
    combos.erase(std::unique(combos.begin(), combos.end()), combos.end());
    return combos;
}

std::vector<int> n_list(const FigureRequest& req, std::vector<int> defaults)
{
    if (req.set.count("n"))
        return {static_cast<int>(req.set.at("n"))};
    return defaults;
}

std::vector<FigureOutput> run_fig4(const FigureRequest& req, std::ostream& log)
{
    const FigureContext ctx = make_context(req, 0, 60, 5);
    const double h = get_set(req.set, "h", 20.0);
    const double d = get_set(req.set, "d", 10.0);
    std::vector<CurveDef> curves;
    for (int n : n_list(req, {4, 10, 20})) {
        const std::string tag = "_n" + std::to_string(n);
        curves.push_back({"fig4_theorem" + tag, "theorem", ScenarioKind::mpsu,
                          CurveEval::theorem, h, d, n});
        curves.push_back({"fig4_highsnr" + tag, "high_snr", ScenarioKind::mpsu,
                          CurveEval::highsnr, h, d, n});
        curves.push_back({"fig4_mc" + tag, "mc", ScenarioKind::mpsu, CurveEval::mc, h, d, n});
    }
    return run_rate_curves(log, ctx, curves);
}

std::vector<FigureOutput> run_fig5(const FigureRequest& req, std::ostream& log)
{
    const FigureContext ctx = make_context(req, 0, 60, 5);
    const int n = n_list(req, {10}).front();
    std::vector<CurveDef> curves;
    for (auto [h, d] : hd_combos(req, {{20, 10}, {5, 1}, {2, 2}})) {
        const std::string tag = "_h" + num_label(h) + "_d" + num_label(d);
        curves.push_back({"fig5_theorem" + tag, "theorem", ScenarioKind::mpsu,
                          CurveEval::theorem, h, d, n});
        curves.push_back({"fig5_mc" + tag, "mc", ScenarioKind::mpsu, CurveEval::mc, h, d, n});
    }
    return run_rate_curves(log, ctx, curves);
}

std::vector<FigureOutput> run_fig6(const FigureRequest& req, std::ostream& log)
{
    const FigureContext ctx = make_context(req, 0, 60, 5);
    std::vector<CurveDef> curves;
    for (auto [h, d] : hd_combos(req, {{20, 10}, {2, 2}})) {
        const std::string tag = "_h" + num_label(h) + "_d" + num_label(d);
        for (int n : n_list(req, {10, 5})) {
            const std::string ntag = tag + "_n" + std::to_string(n);
            curves.push_back({"fig6_mpsu_theorem" + ntag, "theorem", ScenarioKind::mpsu,
                              CurveEval::theorem, h, d, n});
            curves.push_back({"fig6_mpsu_mc" + ntag, "mc", ScenarioKind::mpsu,
                              CurveEval::mc, h, d, n});
        }
        curves.push_back({"fig6_spsu_theorem" + tag, "theorem", ScenarioKind::spsu,
                          CurveEval::theorem, h, d, 0});
        curves.push_back({"fig6_spsu_mc" + tag, "mc", ScenarioKind::spsu, CurveEval::mc,
                          h, d, 0});
    }
    return run_rate_curves(log, ctx, curves);
}

std::vector<FigureOutput> run_fig7(const FigureRequest& req, std::ostream& log)
{
    const FigureContext ctx = make_context(req, 0, 60, 5);
    std::vector<CurveDef> curves;
    for (auto [h, d] : hd_combos(req, {{20, 10}, {10, 5}, {5, 2}})) {
        const std::string tag = "_h" + num_label(h) + "_d" + num_label(d);
        curves.push_back({"fig7_theorem" + tag, "theorem", ScenarioKind::spsu,
                          CurveEval::theorem, h, d, 0});
        curves.push_back({"fig7_highsnr" + tag, "high_snr", ScenarioKind::spsu,
                          CurveEval::highsnr, h, d, 0});
        curves.push_back({"fig7_maclaurin" + tag, "maclaurin", ScenarioKind::spsu,
                          CurveEval::maclaurin, h, d, 0});
        curves.push_back({"fig7_mc" + tag, "mc", ScenarioKind::spsu, CurveEval::mc, h, d, 0});
    }
    return run_rate_curves(log, ctx, curves);
}

std::vector<FigureOutput> run_fig8(const FigureRequest& req, std::ostream& log)
{
    const FigureContext ctx = make_context(req, 0, 30, 5);
    const double h = get_set(req.set, "h", 20.0);
    std::vector<double> extents = req.set.count("d")
                                      ? std::vector<double>{req.set.at("d")}
                                      : std::vector<double>{5, 10, 15};
    std::vector<CurveDef> curves;
    for (double d : extents) {
        const std::string tag = "_d" + num_label(d);
        curves.push_back({"fig8_quadrature" + tag, "quadrature", ScenarioKind::spmu,
                          CurveEval::quadrature, h, d, 0});
        curves.push_back({"fig8_approx" + tag, "approx", ScenarioKind::spmu,
                          CurveEval::approx, h, d, 0});
        curves.push_back({"fig8_mc" + tag, "mc", ScenarioKind::spmu, CurveEval::mc, h, d, 0});
    }
    return run_rate_curves(log, ctx, curves);
}

std::vector<FigureOutput> run_fig9(const FigureRequest& req, std::ostream& log)
{
    const FigureContext ctx = make_context(req, 0, 30, 5);
    std::vector<FigureOutput> outputs;
    unsigned curve_idx = 0;
    for (auto [h, d] : hd_combos(req, {{20, 10}, {10, 10}, {5, 10}})) {
        const std::string tag = "_h" + num_label(h) + "_d" + num_label(d);
        const RoomGeometry room{d, h};

        FigureOutput theo;
        theo.file_name = "fig9_diff_theorem" + tag + ".csv";
        FigureOutput mc;
        mc.file_name = "fig9_diff_mc" + tag + ".csv";
        for (std::size_t i = 0; i < ctx.powers_dbm.size(); ++i) {
            const double p_dbm = ctx.powers_dbm[i];
            const SystemParams params = make_params(ctx.fc_hz, ctx.bw_hz, p_dbm, ctx.users);
            theo.rows.push_back({p_dbm, rate_spsu(params, room) - rate_spmu_quadrature(params, room),
                                 "theorem", "spsu-spmu", 0.0, 0, ctx.seed});

            ScenarioConfig cfg;
            cfg.room = room;
            cfg.params = params;
            cfg.kind = ScenarioKind::spsu;
            const RateEstimate a = estimate_rate(
                cfg, ctx.samples,
                RandomSource(ctx.seed, stream_base(curve_idx, static_cast<unsigned>(i))),
                ctx.threads);
            cfg.kind = ScenarioKind::spmu;
            const RateEstimate b = estimate_rate(
                cfg, ctx.samples,
                RandomSource(ctx.seed, stream_base(curve_idx + 1, static_cast<unsigned>(i))),
                ctx.threads);
            mc.rows.push_back({p_dbm, a.mean - b.mean, "mc", "spsu-spmu",
                               std::sqrt(a.ci_half_width * a.ci_half_width +
                                         b.ci_half_width * b.ci_half_width),
                               ctx.samples, ctx.seed});
        }
        outputs.push_back(std::move(theo));
        outputs.push_back(std::move(mc));
        curve_idx += 2;
    }
    (void)log;
    return outputs;
}

std::vector<FigureOutput> run_fig10(const FigureRequest& req, std::ostream& log)
{
    const FigureContext ctx = make_context(req, 0, 60, 5);
    const double h = get_set(req.set, "h", 20.0);
    const double d = get_set(req.set, "d", 10.0);
    std::vector<CurveDef> curves;
    CurveDef opt{"fig10_spmu_optimized_mc", "mc", ScenarioKind::spmu, CurveEval::mc_sum,
                 h, d, 0};
    opt.pa_mode = SpmuPaMode::optimized;
    curves.push_back(opt);
    curves.push_back({"fig10_spmu_center_mc", "mc", ScenarioKind::spmu, CurveEval::mc_sum,
                      h, d, 0});
    curves.push_back({"fig10_siso_mc", "mc", ScenarioKind::siso, CurveEval::mc_sum, h, d, 0});
    curves.push_back({"fig10_spmu_center_quadrature", "quadrature", ScenarioKind::spmu,
                      CurveEval::quadrature_sum, h, d, 0});
    return run_rate_curves(log, ctx, curves);
}

} // namespace

double run_rate(const RateRequest& req, std::ostream& warn)
{
    const ScenarioKind kind = parse_kind(req.scenario);
    const auto allowed = method_matrix.find(req.scenario);
    if (allowed == method_matrix.end() || allowed->second.count(req.method) == 0)
        throw std::invalid_argument("method '" + req.method +
                                    "' is not available for scenario '" + req.scenario + "'");

    const SystemParams params = make_params(req.fc_hz, req.bw_hz, req.power_dbm, req.users);
    const RoomGeometry room{req.extent_m, req.height_m};
    if (!(room.extent > 0.0) || !(room.height > 0.0))
        throw std::domain_error("room dimensions must be > 0");

    if (req.method == "theorem")
        return kind == ScenarioKind::mpsu ? rate_mpsu(params, room, req.n_pas)
                                          : rate_spsu(params, room);
    if (req.method == "highsnr")
        return rate_highsnr(params, room,
                            kind == ScenarioKind::mpsu ? mpsu_gain(req.n_pas) : 1.0);
    if (req.method == "maclaurin")
        return rate_spsu_maclaurin(params, room);
    if (req.method == "quadrature")
        return rate_spmu_quadrature(params, room);
    if (req.method == "approx") {
        if (!(room.height > room.extent))
            warn << "warning: SPMU approximation assumes h > D (h = " << room.height
                 << ", D = " << room.extent << "); value may be inaccurate\n";
        return rate_spmu_approx(params, room);
    }

    // Monte Carlo
    ScenarioConfig cfg;
    cfg.kind = kind;
    cfg.n_half = req.n_pas;
    cfg.placement = parse_placement(req.mpsu_placement);
    cfg.spmu_pa = parse_pa_mode(req.spmu_pa);
    cfg.noise_model = parse_noise(req.noise_model);
    cfg.room = room;
    cfg.params = params;
    const RateEstimate est =
        estimate_rate(cfg, req.samples, RandomSource(req.seed, 0), req.threads);
    if (est.nz_fallbacks > 0)
        warn << "note: " << est.nz_fallbacks
             << " draws fell back to far-zone placement (d0 <= N lambda)\n";
    return est.mean;
}

std::vector<FigureOutput> run_figure(const FigureRequest& req, std::ostream& log)
{
    static const std::set<std::string> known_keys = {
        "h", "d", "n", "users", "fc_hz", "bw_hz", "power_start", "power_stop",
        "power_step", "d0_nz", "d0_fz"};
    for (const auto& [key, value] : req.set)
        if (known_keys.count(key) == 0)
            throw std::invalid_argument("unknown --set key '" + key + "'");

    if (req.name == "fig3")
        return run_fig3(req, log);
    if (req.name == "fig4")
        return run_fig4(req, log);
    if (req.name == "fig5")
        return run_fig5(req, log);
    if (req.name == "fig6")
        return run_fig6(req, log);
    if (req.name == "fig7")
        return run_fig7(req, log);
    if (req.name == "fig8")
        return run_fig8(req, log);
    if (req.name == "fig9")
        return run_fig9(req, log);
    if (req.name == "fig10")
        return run_fig10(req, log);
    throw std::invalid_argument("unknown figure preset '" + req.name + "' (fig3..fig10)");
}

void write_figure_outputs(const std::string& out_dir,
                          const std::vector<FigureOutput>& outputs)
{
    std::filesystem::create_directories(out_dir);
    for (const auto& out : outputs) {
        const auto path = std::filesystem::path(out_dir) / out.file_name;
        std::ofstream file(path, std::ios::binary);
        if (!file)
            throw std::runtime_error("cannot write " + path.string());
        file << to_csv_text(out.rows);
    }
}

TomlDoc dump_config(const RateRequest& req)
{
    TomlDoc doc;
    doc.set("system", "carrier_frequency_hz", TomlValue::of(req.fc_hz));
    doc.set("system", "bandwidth_hz", TomlValue::of(req.bw_hz));
    doc.set("system", "tx_power_dbm", TomlValue::of(req.power_dbm));
    doc.set("system", "num_users", TomlValue::of(static_cast<long long>(req.users)));
    doc.set("room", "extent_m", TomlValue::of(req.extent_m));
    doc.set("room", "height_m", TomlValue::of(req.height_m));
    doc.set("scenario", "kind", TomlValue::of(req.scenario));
    doc.set("scenario", "n_pas", TomlValue::of(static_cast<long long>(req.n_pas)));
    doc.set("scenario", "mpsu_placement", TomlValue::of(req.mpsu_placement));
    doc.set("scenario", "spmu_pa", TomlValue::of(req.spmu_pa));
    doc.set("scenario", "noise_model", TomlValue::of(req.noise_model));
    doc.set("sweep", "command", TomlValue::of(std::string("rate")));
    doc.set("sweep", "method", TomlValue::of(req.method));
    doc.set("sweep", "seed", TomlValue::of(static_cast<long long>(req.seed)));
    doc.set("sweep", "samples", TomlValue::of(req.samples));
    doc.set("sweep", "threads", TomlValue::of(static_cast<long long>(req.threads)));
    return doc;
}

TomlDoc dump_config(const FigureRequest& req)
{
    TomlDoc doc;
    doc.set("system", "carrier_frequency_hz",
            TomlValue::of(get_set(req.set, "fc_hz", 2.4e9)));
    doc.set("system", "bandwidth_hz", TomlValue::of(get_set(req.set, "bw_hz", 1e6)));
    doc.set("system", "num_users",
            TomlValue::of(static_cast<long long>(get_set(req.set, "users", 2))));
    if (req.set.count("d"))
        doc.set("room", "extent_m", TomlValue::of(req.set.at("d")));
    if (req.set.count("h"))
        doc.set("room", "height_m", TomlValue::of(req.set.at("h")));
    if (req.set.count("n"))
        doc.set("scenario", "n_pas",
                TomlValue::of(static_cast<long long>(req.set.at("n"))));
    doc.set("sweep", "command", TomlValue::of(std::string("figure")));
    doc.set("sweep", "figure", TomlValue::of(req.name));
    doc.set("sweep", "seed", TomlValue::of(static_cast<long long>(req.seed)));
    doc.set("sweep", "samples", TomlValue::of(req.samples));
    doc.set("sweep", "out_dir", TomlValue::of(req.out_dir));
    doc.set("sweep", "threads", TomlValue::of(static_cast<long long>(req.threads)));
    const std::pair<const char*, const char*> sweep_keys[] = {
        {"power_start", "power_start_dbm"}, {"power_stop", "power_stop_dbm"},
        {"power_step", "power_step_dbm"},   {"d0_nz", "d0_nz_m"},
        {"d0_fz", "d0_fz_m"},
    };
    for (const auto& [set_key, file_key] : sweep_keys)
        if (req.set.count(set_key))
            doc.set("sweep", file_key, TomlValue::of(req.set.at(set_key)));
    return doc;
}

RateRequest rate_request_from_config(const TomlDoc& doc)
{
    if (doc.get_string("sweep", "command", "rate") != "rate")
        throw std::invalid_argument("config: [sweep] command must be \"rate\"");
    RateRequest req;
    req.fc_hz = doc.get_double("system", "carrier_frequency_hz", req.fc_hz);
    req.bw_hz = doc.get_double("system", "bandwidth_hz", req.bw_hz);
    req.power_dbm = doc.get_double("system", "tx_power_dbm", req.power_dbm);
    req.users = static_cast<int>(doc.get_int("system", "num_users", req.users));
    req.extent_m = doc.get_double("room", "extent_m", req.extent_m);
    req.height_m = doc.get_double("room", "height_m", req.height_m);
    req.scenario = doc.get_string("scenario", "kind", req.scenario);
    req.n_pas = static_cast<int>(doc.get_int("scenario", "n_pas", req.n_pas));
    req.mpsu_placement = doc.get_string("scenario", "mpsu_placement", req.mpsu_placement);
    req.spmu_pa = doc.get_string("scenario", "spmu_pa", req.spmu_pa);
    req.noise_model = doc.get_string("scenario", "noise_model", req.noise_model);
    req.method = doc.get_string("sweep", "method", req.method);
    req.seed = static_cast<std::uint64_t>(doc.get_int("sweep", "seed",
                                                      static_cast<long long>(req.seed)));
    req.samples = doc.get_int("sweep", "samples", req.samples);
    req.threads = static_cast<unsigned>(doc.get_int("sweep", "threads", req.threads));
    return req;
}

FigureRequest figure_request_from_config(const TomlDoc& doc)
{
    if (doc.get_string("sweep", "command", "figure") != "figure")
        throw std::invalid_argument("config: [sweep] command must be \"figure\"");
    FigureRequest req;
    req.name = doc.get_string("sweep", "figure", "");
    if (req.name.empty())
        throw std::invalid_argument("config: [sweep] figure is required");
    req.seed = static_cast<std::uint64_t>(doc.get_int("sweep", "seed",
                                                      static_cast<long long>(req.seed)));
    req.samples = doc.get_int("sweep", "samples", req.samples);
    req.out_dir = doc.get_string("sweep", "out_dir", req.out_dir);
    req.threads = static_cast<unsigned>(doc.get_int("sweep", "threads", req.threads));

    req.set["fc_hz"] = doc.get_double("system", "carrier_frequency_hz", 2.4e9);
    req.set["bw_hz"] = doc.get_double("system", "bandwidth_hz", 1e6);
    req.set["users"] = static_cast<double>(doc.get_int("system", "num_users", 2));
    if (doc.has("room", "extent_m"))
        req.set["d"] = doc.get_double("room", "extent_m", 0);
    if (doc.has("room", "height_m"))
        req.set["h"] = doc.get_double("room", "height_m", 0);
    if (doc.has("scenario", "n_pas"))
        req.set["n"] = static_cast<double>(doc.get_int("scenario", "n_pas", 0));
    const std::pair<const char*, const char*> sweep_keys[] = {
        {"power_start_dbm", "power_start"}, {"power_stop_dbm", "power_stop"},
        {"power_step_dbm", "power_step"},   {"d0_nz_m", "d0_nz"},
        {"d0_fz_m", "d0_fz"},
    };
    for (const auto& [file_key, set_key] : sweep_keys)
        if (doc.has("sweep", file_key))
            req.set[set_key] = doc.get_double("sweep", file_key, 0);
    return req;
}

} // namespace passim::cli

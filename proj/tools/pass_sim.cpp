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

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "experiments.hpp"
#include "passim/csv.hpp"
#include "passim/errors.hpp"
#include "passim/placement.hpp"
#include "passim/system_model.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 2;
constexpr int exit_numerical = 3;

std::map<std::string, double> parse_set_entries(const std::vector<std::string>& entries)
{
    std::map<std::string, double> set;
    for (const auto& entry : entries) {
        const auto eq = entry.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == entry.size())
            throw std::invalid_argument("--set expects key=value, got '" + entry + "'");
        const std::string key = entry.substr(0, eq);
        char* end = nullptr;
        const double value = std::strtod(entry.c_str() + eq + 1, &end);
        if (end == nullptr || *end != '\0')
            throw std::invalid_argument("--set " + key + ": cannot parse numeric value");
        set[key] = value;
    }
    return set;
}

int run_figure_command(passim::cli::FigureRequest req, bool dump_only)
{
    if (dump_only) {
        std::cout << passim::cli::dump_config(req).dump();
        return exit_ok;
    }
    const auto outputs = passim::cli::run_figure(req, std::cerr);
    passim::cli::write_figure_outputs(req.out_dir, outputs);
    for (const auto& out : outputs)
        std::cerr << "wrote " << req.out_dir << "/" << out.file_name << "\n";
    return exit_ok;
}

int run_rate_command(const passim::cli::RateRequest& req, bool dump_only)
{
    if (dump_only) {
        std::cout << passim::cli::dump_config(req).dump();
        return exit_ok;
    }
    const double value = passim::cli::run_rate(req, std::cerr);
    std::cout << passim::format_sig9(value) << "\n";
    return exit_ok;
}

int run_place_command(double d0, int n_half, bool fz, double fc_hz,
                      const std::string& out_path)
{
    const passim::SystemParams params = passim::make_params(fc_hz, 1e6, 0.0, 1);
    const std::vector<double> offsets = fz ? passim::fz_positions(params, n_half)
                                           : passim::lemma1_positions(d0, params, n_half);
    std::vector<passim::CsvRow> rows;
    for (int i = 0; i < static_cast<int>(offsets.size()); ++i)
        rows.push_back({static_cast<double>(i - n_half), offsets[static_cast<std::size_t>(i)],
                        fz ? "fz" : "lemma1", "mpsu", 0.0, 0, 0});
    const std::string text = passim::to_csv_text(rows);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file)
            throw std::runtime_error("cannot write " + out_path);
        file << text;
    }
    return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"pass-sim: uplink pinching-antenna system performance toolkit"};
    app.require_subcommand(1);
    // --h is a model flag (waveguide height), so help stays long-form only.
    app.set_help_flag("--help", "Print help and exit");

    // --- figure ---
    auto* fig = app.add_subcommand("figure", "Reproduce a result-figure preset as CSV files");
    std::string fig_name;
    passim::cli::FigureRequest fig_req;
    std::vector<std::string> fig_sets;
    std::string fig_config;
    bool fig_dump = false;
    fig->add_option("name", fig_name, "Preset name (fig3..fig10)");
    auto* fig_seed = fig->add_option("--seed", fig_req.seed, "Random seed");
    auto* fig_samples = fig->add_option("--samples", fig_req.samples, "Monte Carlo draws per point");
    auto* fig_out = fig->add_option("--out", fig_req.out_dir, "Output directory");
    auto* fig_threads = fig->add_option("--threads", fig_req.threads, "Worker threads");
    fig->add_option("--set", fig_sets,
                    "Override key=value (h, d, n, users, fc_hz, bw_hz, power_start, "
                    "power_stop, power_step, d0_nz, d0_fz)");
    fig->add_option("--config", fig_config, "Load a TOML run configuration");
    fig->add_flag("--dump-config", fig_dump, "Print the effective TOML config and exit");

    // --- rate ---
    auto* rate = app.add_subcommand("rate", "Print a single ergodic-rate value");
    rate->set_help_flag("--help", "Print help and exit");
    passim::cli::RateRequest rate_req;
    std::string rate_config;
    bool rate_dump = false;
    auto* r_scenario = rate->add_option("--scenario", rate_req.scenario, "mpsu|spsu|spmu|siso");
    auto* r_method = rate->add_option("--method", rate_req.method,
                                      "theorem|highsnr|maclaurin|quadrature|approx|mc");
    auto* r_h = rate->add_option("--h", rate_req.height_m, "Waveguide height (m)");
    auto* r_d = rate->add_option("--d", rate_req.extent_m, "Room extent (m)");
    auto* r_p = rate->add_option("--power-dbm", rate_req.power_dbm, "Per-user transmit power (dBm)");
    auto* r_users = rate->add_option("--users", rate_req.users, "Number of users I");
    auto* r_n = rate->add_option("--n-pas", rate_req.n_pas, "MPSU N (2N+1 elements)");
    auto* r_fc = rate->add_option("--fc-hz", rate_req.fc_hz, "Carrier frequency (Hz)");
    auto* r_bw = rate->add_option("--bw-hz", rate_req.bw_hz, "Bandwidth (Hz)");
    auto* r_place = rate->add_option("--placement", rate_req.mpsu_placement, "MPSU placement: lemma1|fz");
    auto* r_pa = rate->add_option("--spmu-pa", rate_req.spmu_pa, "SPMU PA mode: center|optimized");
    auto* r_noise = rate->add_option("--noise-model", rate_req.noise_model,
                                     "MPSU combining noise: per-pa|single");
    auto* r_samples = rate->add_option("--samples", rate_req.samples, "Monte Carlo draws");
    auto* r_seed = rate->add_option("--seed", rate_req.seed, "Random seed");
    auto* r_threads = rate->add_option("--threads", rate_req.threads, "Worker threads");
    rate->add_option("--config", rate_config, "Load a TOML run configuration");
    rate->add_flag("--dump-config", rate_dump, "Print the effective TOML config and exit");

    // --- place ---
    auto* place = app.add_subcommand("place", "Emit optimized PA offsets as CSV");
    double place_d0 = 0.0;
    int place_n = 0;
    bool place_fz = false;
    double place_fc = 2.4e9;
    std::string place_out;
    place->add_option("--d0", place_d0, "Minimum PA-user distance (m)");
    place->add_option("--n", place_n, "N (2N+1 elements)")->required();
    place->add_flag("--fz", place_fz, "Use the far-zone uniform grid");
    place->add_option("--fc-hz", place_fc, "Carrier frequency (Hz)");
    place->add_option("--out", place_out, "Output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (app.got_subcommand(fig)) {
            if (!fig_config.empty()) {
                const auto doc = passim::cli::TomlDoc::parse_file(fig_config);
                passim::cli::FigureRequest loaded = passim::cli::figure_request_from_config(doc);
                // Explicit CLI flags override config values.
                if (!fig_name.empty())
                    loaded.name = fig_name;
                if (fig_seed->count())
                    loaded.seed = fig_req.seed;
                if (fig_samples->count())
                    loaded.samples = fig_req.samples;
                if (fig_out->count())
                    loaded.out_dir = fig_req.out_dir;
                if (fig_threads->count())
                    loaded.threads = fig_req.threads;
                for (const auto& [k, v] : parse_set_entries(fig_sets))
                    loaded.set[k] = v;
                return run_figure_command(loaded, fig_dump);
            }
            if (fig_name.empty())
                throw std::invalid_argument("figure: preset name required (fig3..fig10)");
            fig_req.name = fig_name;
            fig_req.set = parse_set_entries(fig_sets);
            return run_figure_command(fig_req, fig_dump);
        }

        if (app.got_subcommand(rate)) {
            passim::cli::RateRequest req = rate_req;
            if (!rate_config.empty()) {
                const auto doc = passim::cli::TomlDoc::parse_file(rate_config);
                req = passim::cli::rate_request_from_config(doc);
                if (r_scenario->count()) req.scenario = rate_req.scenario;
                if (r_method->count()) req.method = rate_req.method;
                if (r_h->count()) req.height_m = rate_req.height_m;
                if (r_d->count()) req.extent_m = rate_req.extent_m;
                if (r_p->count()) req.power_dbm = rate_req.power_dbm;
                if (r_users->count()) req.users = rate_req.users;
                if (r_n->count()) req.n_pas = rate_req.n_pas;
                if (r_fc->count()) req.fc_hz = rate_req.fc_hz;
                if (r_bw->count()) req.bw_hz = rate_req.bw_hz;
                if (r_place->count()) req.mpsu_placement = rate_req.mpsu_placement;
                if (r_pa->count()) req.spmu_pa = rate_req.spmu_pa;
                if (r_noise->count()) req.noise_model = rate_req.noise_model;
                if (r_samples->count()) req.samples = rate_req.samples;
                if (r_seed->count()) req.seed = rate_req.seed;
                if (r_threads->count()) req.threads = rate_req.threads;
            }
            return run_rate_command(req, rate_dump);
        }

        if (app.got_subcommand(place)) {
            if (!place_fz && !(place_d0 > 0.0))
                throw std::invalid_argument("place: --d0 is required unless --fz is given");
            return run_place_command(place_d0, place_n, place_fz, place_fc, place_out);
        }
    } catch (const passim::numerical_error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return exit_numerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_ok;
}

// Command-line front end: optimization, sweeps, tradeoff curves, BER
// evaluation, Monte Carlo runs and the oracle validation suite.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "uavrelay/harness.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitValidation = 3;

struct CommonOpts {
    std::string config_path;
    std::string out_path;
    std::string q_model = "as-printed";
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> samples;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--config", o.config_path, "JSON experiment configuration");
    cmd->add_option("--out", o.out_path, "Output file or directory");
    cmd->add_option("--q-model", o.q_model, "Per-bit-time route")
        ->check(CLI::IsMember({"as-printed", "symmetric"}));
    cmd->add_option("--seed", o.seed, "Override the Monte Carlo seed");
    cmd->add_option("--samples", o.samples, "Override the Monte Carlo sample count");
}

uavrelay::ExperimentConfig make_config(const CommonOpts& o) {
    uavrelay::ExperimentConfig cfg;
    if (!o.config_path.empty()) cfg = uavrelay::load_config(o.config_path);
    cfg.q_model = o.q_model == "symmetric" ? uavrelay::QModel::Symmetric
                                           : uavrelay::QModel::AsPrinted;
    if (o.seed) cfg.mc.seed = *o.seed;
    if (o.samples) cfg.mc.samples = *o.samples;
    if (!o.out_path.empty()) cfg.output = o.out_path;
    return cfg;
}

std::ostream& open_sink(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path, std::ios::binary);
    if (!file) throw uavrelay::ConfigError("cannot open output file: " + path);
    return file;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace uavrelay;
    CLI::App app{"Two-way UAV relay link: energy/delay optimization and BER"};
    app.require_subcommand(1);

    CommonOpts opt;
    double cli_d = 400.0, cli_r = 50.0, cli_phi = M_PI / 6;
    double cli_power = 2.0, cli_wr = 0.5;
    double ber_alpha_r = -1.0;  // <0: optimize per point
    bool mc_los = false;

    auto* c_opt = app.add_subcommand("optimize", "Solve one weighted instance");
    add_common(c_opt, opt);
    c_opt->add_option("--d", cli_d, "Half user separation, m");
    c_opt->add_option("--r", cli_r, "Orbit radius, m");
    c_opt->add_option("--phi", cli_phi, "Orbit elevation, rad");
    c_opt->add_option("--power", cli_power, "Total power budget, W");
    c_opt->add_option("--wr", cli_wr, "Delay weight w_r in (0,1)");

    auto* c_sweep = app.add_subcommand("sweep", "Full PA/SN sweeps and figure CSVs");
    add_common(c_sweep, opt);

    auto* c_trade = app.add_subcommand("tradeoff", "Energy-delay tradeoff over the weight grid");
    add_common(c_trade, opt);
    c_trade->add_option("--d", cli_d, "Half user separation, m");
    c_trade->add_option("--r", cli_r, "Orbit radius, m");
    c_trade->add_option("--phi", cli_phi, "Orbit elevation, rad");
    c_trade->add_option("--power", cli_power, "Total power budget, W");

    auto* c_ber = app.add_subcommand("ber", "Analytic + Monte Carlo BER over the power sweep");
    add_common(c_ber, opt);
    c_ber->add_option("--d", cli_d, "Half user separation, m");
    c_ber->add_option("--alpha-r", ber_alpha_r,
                      "Fixed relay factor (remainder split evenly); omit to optimize");
    c_ber->add_option("--wr", cli_wr, "Delay weight used when optimizing");

    auto* c_mc = app.add_subcommand("mc", "Monte Carlo at one operating point");
    add_common(c_mc, opt);
    c_mc->add_option("--d", cli_d, "Half user separation, m");
    c_mc->add_option("--power", cli_power, "Total power budget, W");
    c_mc->add_flag("--los", mc_los, "Include the direct line-of-sight term");

    auto* c_val = app.add_subcommand("validate", "Run the oracle suite");
    add_common(c_val, opt);

    CLI11_PARSE(app, argc, argv);

    try {
        ExperimentConfig cfg = make_config(opt);

        if (c_opt->parsed()) {
            const LinkGeometry link = hop_distances(cli_d, {cli_r, 0.0, cli_phi});
            const HopGains hg = effective_gains(cfg.channel, link);
            if (!(cli_wr > 0.0 && cli_wr < 1.0))
                throw ConfigError("--wr must lie in (0,1)");
            const WeightVector w{0.5 * (1.0 - cli_wr), 0.5 * (1.0 - cli_wr), cli_wr};
            const OptimalAllocation oa =
                closed_form_allocation(w, hg, cli_power, 2.0, cfg.q_model);
            std::ofstream file;
            std::ostream& os = open_sink(file, cfg.output == "out" ? "" : cfg.output);
            os << "alpha_a,alpha_b,alpha_r,q_star,e_star,f_value,root_branch,converged\n"
               << format_value(oa.alloc.alpha_a) << ',' << format_value(oa.alloc.alpha_b)
               << ',' << format_value(oa.alloc.alpha_r) << ',' << format_value(oa.q_star)
               << ',' << format_value(oa.e_star) << ',' << format_value(oa.f_value) << ','
               << oa.root_branch << ',' << (oa.converged ? 1 : 0) << '\n';
            return oa.converged ? kExitOk : kExitInfeasible;
        }

        if (c_sweep->parsed()) {
            std::vector<ResultRow> rows;
            if (cfg.scheme_pa)
                for (auto& r : run_pa(cfg)) rows.push_back(std::move(r));
            if (cfg.scheme_sn)
                for (auto& r : run_sn(cfg)) rows.push_back(std::move(r));
            sort_rows(rows);
            const bool any_feasible =
                std::any_of(rows.begin(), rows.end(),
                            [](const ResultRow& r) { return r.feasible; });
            std::filesystem::create_directories(cfg.output);
            std::vector<std::string> lines;
            lines.reserve(rows.size());
            for (const ResultRow& r : rows) lines.push_back(to_csv(r));
            write_csv(std::filesystem::path(cfg.output) / "rows.csv", csv_header(),
                      lines);
            figure_datasets(rows, cfg.output, cfg);
            std::cout << "wrote " << rows.size() << " rows to " << cfg.output
                      << "/rows.csv\n";
            return any_feasible ? kExitOk : kExitInfeasible;
        }

        if (c_trade->parsed()) {
            const LinkGeometry link = hop_distances(cli_d, {cli_r, 0.0, cli_phi});
            const HopGains hg = effective_gains(cfg.channel, link);
            const auto ws = cfg.weight_grid();
            const auto pts = tradeoff_sweep(ws, hg, cli_power, cfg.q_model);
            std::ofstream file;
            std::ostream& os = open_sink(file, cfg.output == "out" ? "" : cfg.output);
            os << "weight_index,w_r,alpha_a,alpha_b,alpha_r,q_star,e_star,"
                  "f_value,snr_star,ber,root_branch,converged,pareto\n";
            bool any = false;
            for (const TradeoffPoint& p : pts) {
                any = any || p.converged;
                os << p.weight_index << ',' << format_value(p.weights.w_r) << ','
                   << format_value(p.alloc.alpha_a) << ',' << format_value(p.alloc.alpha_b)
                   << ',' << format_value(p.alloc.alpha_r) << ',' << format_value(p.q_star)
                   << ',' << format_value(p.e_star) << ',' << format_value(p.f_value)
                   << ',' << format_value(p.snr_star) << ',' << format_value(p.ber) << ','
                   << p.root_branch << ',' << (p.converged ? 1 : 0) << ','
                   << (p.pareto ? 1 : 0) << '\n';
            }
            return any ? kExitOk : kExitInfeasible;
        }

        if (c_ber->parsed()) {
            const LinkGeometry link =
                hop_distances(cli_d, {cfg.geometry.orbit_r, 0.0, cfg.geometry.orbit_phi});
            const HopGains hg = effective_gains(cfg.channel, link);
            std::ofstream file;
            std::ostream& os = open_sink(file, cfg.output == "out" ? "" : cfg.output);
            os << "p_dbm,alpha_a,alpha_b,alpha_r,snr_star_db,ber_analytic,"
                  "ber_mc,mc_ci,low_snr\n";
            bool any = false;
            for (double dbm : cfg.power_values_dbm()) {
                const double p = dbm_to_watts(dbm);
                AllocationFactors a;
                if (ber_alpha_r >= 0.0) {
                    if (ber_alpha_r > 1.0) throw ConfigError("--alpha-r must be <= 1");
                    a = {0.5 * (1.0 - ber_alpha_r), 0.5 * (1.0 - ber_alpha_r),
                         ber_alpha_r};
                } else {
                    const WeightVector w{0.5 * (1.0 - cli_wr), 0.5 * (1.0 - cli_wr),
                                         cli_wr};
                    a = closed_form_allocation(w, hg, p, 2.0, cfg.q_model).alloc;
                }
                if (!(a.alpha_r > 0.0)) continue;
                any = true;
                const BerResult br = optimal_ber(a, hg, p);
                ChannelParams mc_params = cfg.channel;
                mc_params.total_power = p;
                TrialConfig tc;
                tc.samples = cfg.mc.samples;
                tc.seed = cfg.mc.seed;
                const EmpiricalResult er = simulate_two_hop(tc, a, link, mc_params);
                os << format_value(dbm) << ',' << format_value(a.alpha_a) << ','
                   << format_value(a.alpha_b) << ',' << format_value(a.alpha_r) << ','
                   << format_value(to_db(br.snr_star)) << ',' << format_value(br.value)
                   << ',' << format_value(0.5 * (er.ber_a + er.ber_b)) << ','
                   << format_value(er.ci_halfwidth()) << ',' << (br.low_snr ? 1 : 0)
                   << '\n';
            }
            return any ? kExitOk : kExitInfeasible;
        }

        if (c_mc->parsed()) {
            const LinkGeometry link =
                hop_distances(cli_d, {cfg.geometry.orbit_r, 0.0, cfg.geometry.orbit_phi});
            ChannelParams params = cfg.channel;
            params.total_power = cli_power;
            TrialConfig tc;
            tc.samples = cfg.mc.samples;
            tc.seed = cfg.mc.seed;
            tc.mode = mc_los ? TrialConfig::Mode::LOS : TrialConfig::Mode::NLOS;
            const EmpiricalResult er =
                simulate_two_hop(tc, equal_split(), link, params);
            std::ofstream file;
            std::ostream& os = open_sink(file, cfg.output == "out" ? "" : cfg.output);
            os << "ber_a,ber_b,mean_snr_a,mean_snr_b,ci_a,ci_b\n"
               << format_value(er.ber_a) << ',' << format_value(er.ber_b) << ','
               << format_value(er.mean_snr_a) << ',' << format_value(er.mean_snr_b)
               << ',' << format_value(er.ci_halfwidth_a) << ','
               << format_value(er.ci_halfwidth_b) << '\n';
            return kExitOk;
        }

        if (c_val->parsed()) {
            const ValidationReport rep = run_validation(cfg);
            for (const std::string& l : rep.lines) std::cout << l << '\n';
            std::cout << (rep.ok() ? "validation: all checks passed\n"
                                   : "validation: FAILURES present\n");
            return rep.ok() ? kExitOk : kExitValidation;
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    }
    return kExitOk;
}

// SPDX-License-Identifier: Apache-2.0
//
// mimosec command line front end: Monte Carlo sweeps, distribution
// validation runs and single-realization reports for the multiuser massive
// MIMO wiretap setting.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mimosec/channel.hpp"
#include "mimosec/experiments.hpp"
#include "mimosec/parallel.hpp"

namespace {

using namespace mimosec;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitIo = 2;
constexpr int kExitGating = 3;

Aggregation aggregation_from_flag(const std::string& s) {
    if (s == "ratio-of-means")
        return Aggregation::RatioOfMeans;
    if (s == "mean-of-ratios")
        return Aggregation::MeanOfRatios;
    throw ConfigError("--aggregation must be ratio-of-means or mean-of-ratios");
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw IoError("cannot open '" + path + "' for writing");
    f.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!f)
        throw IoError("write failed for '" + path + "'");
}

void write_sweep_outputs(const std::vector<SweepResult>& results, const std::string& out_path) {
    // Curves are concatenated into one CSV; the sidecar records the exact
    // configs along with the zero-main-rate event count.
    std::string csv;
    nlohmann::json meta;
    meta["configs"] = nlohmann::json::array();
    std::size_t zero_events = 0;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const std::string part = to_csv(results[i]);
        if (i == 0)
            csv = part;
        else
            csv += part.substr(part.find('\n') + 1); // drop repeated header
        meta["configs"].push_back(nlohmann::json::parse(config_json(results[i].config)));
        zero_events += results[i].zero_rate_events;
    }
    meta["zero_rate_events"] = zero_events;
    write_text(out_path, csv);
    write_text(out_path + ".meta.json", meta.dump(2) + "\n");
    std::cout << "wrote " << out_path << " and " << out_path << ".meta.json\n";
}

void apply_overrides(ExperimentConfig& cfg, const std::optional<std::uint64_t>& seed,
                     const std::optional<std::size_t>& trials,
                     const std::optional<std::string>& aggregation) {
    if (seed)
        cfg.master_seed = *seed;
    if (trials)
        cfg.trials = *trials;
    if (aggregation)
        cfg.aggregation = aggregation_from_flag(*aggregation);
}

int run_single(std::size_t M, const std::string& L_text, std::size_t K, double rho_m_dB,
               double rho_e_dB, double beta, double beta_eve, const std::string& precoder,
               const std::string& selection, std::uint64_t seed) {
    ExperimentConfig cfg; // reuse the config checks for a single realization
    cfg.M_values = {M};
    cfg.K = K;
    cfg.rho_m_dB = rho_m_dB;
    cfg.rho_e_dB = rho_e_dB;
    cfg.beta_users.assign(K, beta);
    cfg.beta_eve = beta_eve;
    cfg.precoder = precoder == "ZF" ? PrecoderScheme::ZF : PrecoderScheme::MRT;
    if (precoder != "ZF" && precoder != "MRT")
        throw ConfigError("--precoder must be MRT or ZF");
    if (selection == "full") {
        cfg.selection = SelectionStrategy::Full;
    } else {
        cfg.selection = selection == "random" ? SelectionStrategy::Random : SelectionStrategy::Strongest;
        if (selection != "random" && selection != "strongest")
            throw ConfigError("--selection must be strongest, random or full");
        if (L_text == "full")
            throw ConfigError("--L must be numeric for strongest/random selection");
    }
    if (L_text != "full") {
        std::size_t L = 0;
        try {
            L = static_cast<std::size_t>(std::stoull(L_text));
        } catch (const std::exception&) {
            throw ConfigError("--L must be an integer or 'full'");
        }
        if (cfg.selection == SelectionStrategy::Full)
            throw ConfigError("--selection full requires --L full");
        cfg.L = L;
    }
    cfg.trials = 1;
    cfg.master_seed = seed;
    validate_config(cfg);

    const LinkBudget budget{std::pow(10.0, rho_m_dB / 10.0), std::pow(10.0, rho_e_dB / 10.0)};
    LargeScaleProfile profile;
    profile.beta_users = cfg.beta_users;
    profile.beta_eve = cfg.beta_eve;
    SelectionSpec spec{cfg.selection, cfg.L.value_or(M), std::nullopt};

    RngStream rng(seed, 0);
    const ChannelRealization r = draw_realization(M, K, profile, rng);
    const RateReport rep = evaluate_realization(r, spec, cfg.precoder, budget, rng);

    std::printf("M=%zu L=%zu K=%zu selection=%s precoder=%s rho_m=%.3g dB rho_e=%.3g dB seed=%llu\n",
                M, cfg.L.value_or(M), K, selection.c_str(), precoder.c_str(), rho_m_dB, rho_e_dB,
                static_cast<unsigned long long>(seed));
    std::printf("%-5s %-12s %-12s %-12s %-12s %-12s %-10s\n", "user", "sinr_m", "snr_e",
                "rate_main", "rate_eve", "rate_secrecy", "cost");
    for (std::size_t k = 0; k < rep.user.size(); ++k) {
        const UserRate& u = rep.user[k];
        std::printf("%-5zu %-12.6g %-12.6g %-12.6g %-12.6g %-12.6g %-10.6g\n", k + 1, u.sinr_m,
                    u.snr_e, u.rate_main, u.rate_eve, u.rate_secrecy, u.cost);
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monte Carlo secrecy-rate simulator for multiuser massive MIMO wiretap channels"};
    app.require_subcommand(1);

    unsigned threads = 0; // 0 = hardware concurrency
    app.add_option("--threads", threads, "Worker threads (affects speed only, never results)");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Run a configured Monte Carlo sweep and emit CSV");
    sweep->fallthrough();
    std::string sweep_config;
    std::string sweep_out = "sweep.csv";
    std::optional<std::uint64_t> sweep_seed;
    std::optional<std::size_t> sweep_trials;
    std::optional<std::string> sweep_aggregation;
    sweep->add_option("--config", sweep_config, "JSON experiment config")->required();
    sweep->add_option("--out", sweep_out, "Output CSV path");
    sweep->add_option("--seed", sweep_seed, "Override master seed");
    sweep->add_option("--trials", sweep_trials, "Override trial count");
    sweep->add_option("--aggregation", sweep_aggregation, "ratio-of-means | mean-of-ratios");

    // validate
    auto* validate = app.add_subcommand("validate", "Distribution checks against the closed-form laws");
    validate->fallthrough();
    std::size_t val_M = 4096, val_L = 4, val_trials = 100000;
    std::uint64_t val_seed = 1;
    double val_rho_e_dB = 0.0, val_beta_e = 1.0;
    std::string val_out;
    validate->add_option("--M", val_M, "Total transmit antennas")->required();
    validate->add_option("--L", val_L, "Selected antennas")->required();
    validate->add_option("--trials", val_trials, "Monte Carlo trials (>= 100)");
    validate->add_option("--seed", val_seed, "Master seed");
    validate->add_option("--rho-e-db", val_rho_e_dB, "Eavesdropper SNR in dB");
    validate->add_option("--beta-e", val_beta_e, "Eavesdropper large-scale gain (linear)");
    validate->add_option("--out", val_out, "Write the JSON report here (default: stdout)");

    // single
    auto* single = app.add_subcommand("single", "Evaluate one realization and print the rate report");
    single->fallthrough();
    std::size_t sg_M = 64, sg_K = 1;
    std::string sg_L = "full";
    double sg_rho_m = 0.0, sg_rho_e = -10.0, sg_beta = 1.0, sg_beta_e = 1.0;
    std::string sg_precoder = "MRT", sg_selection = "full";
    std::uint64_t sg_seed = 1;
    single->add_option("--M", sg_M, "Total transmit antennas");
    single->add_option("--L", sg_L, "Selected antennas or 'full'");
    single->add_option("--K", sg_K, "Number of legitimate users");
    single->add_option("--rho-m-db", sg_rho_m, "Legitimate SNR in dB");
    single->add_option("--rho-e-db", sg_rho_e, "Eavesdropper SNR in dB");
    single->add_option("--beta", sg_beta, "Per-user large-scale gain (linear)");
    single->add_option("--beta-e", sg_beta_e, "Eavesdropper large-scale gain (linear)");
    single->add_option("--precoder", sg_precoder, "MRT | ZF");
    single->add_option("--selection", sg_selection, "strongest | random | full");
    single->add_option("--seed", sg_seed, "Master seed");

    // preset
    auto* preset = app.add_subcommand("preset", "Run a built-in sweep preset");
    preset->fallthrough();
    std::string preset_name;
    std::string preset_out = "preset.csv";
    std::optional<std::uint64_t> preset_seed;
    std::optional<std::size_t> preset_trials;
    std::optional<std::string> preset_aggregation;
    preset->add_option("name", preset_name, "fig1 | fig2")->required();
    preset->add_option("--out", preset_out, "Output CSV path");
    preset->add_option("--seed", preset_seed, "Override master seed");
    preset->add_option("--trials", preset_trials, "Override trial count");
    preset->add_option("--aggregation", preset_aggregation, "ratio-of-means | mean-of-ratios");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (*sweep) {
            ExperimentConfig cfg = load_config(sweep_config);
            apply_overrides(cfg, sweep_seed, sweep_trials, sweep_aggregation);
            write_sweep_outputs({run_sweep(cfg, threads)}, sweep_out);
            return kExitOk;
        }
        if (*validate) {
            ValidationSettings settings;
            settings.M = val_M;
            settings.L = val_L;
            settings.trials = val_trials;
            settings.master_seed = val_seed;
            settings.rho_e = std::pow(10.0, val_rho_e_dB / 10.0);
            settings.beta_e = val_beta_e;
            const ValidationReport report = run_validation(settings, threads);
            const std::string text = validation_report_json(report);
            if (val_out.empty())
                std::cout << text;
            else
                write_text(val_out, text);
            if (!report.pass) {
                std::cerr << "validation: gating check failed\n";
                return kExitGating;
            }
            return kExitOk;
        }
        if (*single) {
            return run_single(sg_M, sg_L, sg_K, sg_rho_m, sg_rho_e, sg_beta, sg_beta_e,
                              sg_precoder, sg_selection, sg_seed);
        }
        if (*preset) {
            std::vector<ExperimentConfig> configs;
            if (preset_name == "fig1")
                configs = {preset_fig1()};
            else if (preset_name == "fig2")
                configs = preset_fig2();
            else
                throw ConfigError("preset: name must be fig1 or fig2");
            std::vector<SweepResult> results;
            results.reserve(configs.size());
            for (ExperimentConfig& cfg : configs) {
                apply_overrides(cfg, preset_seed, preset_trials, preset_aggregation);
                results.push_back(run_sweep(cfg, threads));
            }
            write_sweep_outputs(results, preset_out);
            return kExitOk;
        }
    } catch (const IoError& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kExitIo;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitOk;
}

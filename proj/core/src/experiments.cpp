// SPDX-License-Identifier: Apache-2.0

#include "mimosec/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "mimosec/channel.hpp"
#include "mimosec/parallel.hpp"
#include "mimosec/special.hpp"

namespace mimosec {

namespace {

constexpr double kZ95 = 1.959964; // two-sided 95% normal quantile

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

struct TrialAggregate {
    double rate_main = 0.0;    // user-averaged
    double rate_secrecy = 0.0;
    double rate_eve = 0.0;
    double cost = 0.0;         // user-averaged per-realization cost
    std::size_t zero_rate = 0; // users with rate_main = 0 in this trial
};

double ci_halfwidth(const std::vector<double>& per_trial, double mean) {
    const std::size_t n = per_trial.size();
    if (n < 2)
        return 0.0;
    double acc = 0.0;
    for (double v : per_trial)
        acc += (v - mean) * (v - mean);
    const double sd = std::sqrt(acc / static_cast<double>(n - 1));
    return kZ95 * sd / std::sqrt(static_cast<double>(n));
}

} // namespace

void validate_config(const ExperimentConfig& config) {
    if (config.M_values.empty())
        throw ConfigError("config: M_values must be nonempty");
    for (std::size_t m : config.M_values)
        if (m == 0)
            throw ConfigError("config: antenna counts must be >= 1");
    if (config.K == 0)
        throw ConfigError("config: K must be >= 1");
    if (config.beta_users.size() != config.K)
        throw ConfigError("config: beta_users length must equal K");
    for (double b : config.beta_users)
        if (!(b > 0.0) || !std::isfinite(b))
            throw ConfigError("config: beta_users entries must be positive and finite");
    if (!(config.beta_eve > 0.0) || !std::isfinite(config.beta_eve))
        throw ConfigError("config: beta_eve must be positive and finite");
    if (!std::isfinite(config.rho_m_dB) || !std::isfinite(config.rho_e_dB))
        throw ConfigError("config: SNR values must be finite");
    if (config.trials == 0)
        throw ConfigError("config: trials must be >= 1");

    const std::size_t min_M = *std::min_element(config.M_values.begin(), config.M_values.end());
    const bool full = config.selection == SelectionStrategy::Full;
    if (full && config.L.has_value())
        throw ConfigError("config: L must be \"full\" when selection is full");
    if (!full) {
        if (!config.L.has_value())
            throw ConfigError("config: strongest/random selection requires a numeric L");
        if (*config.L == 0 || *config.L > min_M)
            throw ConfigError("config: require 1 <= L <= min(M_values)");
    }
    const std::size_t min_active = full ? min_M : *config.L;
    if (config.precoder == PrecoderScheme::ZF && config.K > min_active)
        throw ConfigError("config: zero forcing requires K <= active antennas");
}

SweepResult run_sweep(const ExperimentConfig& config, unsigned threads) {
    validate_config(config);

    const LinkBudget budget{db_to_linear(config.rho_m_dB), db_to_linear(config.rho_e_dB)};
    LargeScaleProfile profile;
    profile.beta_users = config.beta_users;
    profile.beta_eve = config.beta_eve;

    SweepResult result;
    result.config = config;
    result.points.reserve(config.M_values.size());

    for (std::size_t M : config.M_values) {
        SelectionSpec spec;
        spec.strategy = config.selection;
        spec.L = config.L.value_or(M);

        std::vector<TrialAggregate> trials(config.trials);
        parallel_for(config.trials, threads, [&](std::size_t t) {
            RngStream rng(config.master_seed, static_cast<std::uint64_t>(t));
            const ChannelRealization r = draw_realization(M, config.K, profile, rng);
            const RateReport rep = evaluate_realization(r, spec, config.precoder, budget, rng);
            TrialAggregate agg;
            for (const UserRate& u : rep.user) {
                agg.rate_main += u.rate_main;
                agg.rate_secrecy += u.rate_secrecy;
                agg.rate_eve += u.rate_eve;
                agg.cost += u.cost;
                if (u.rate_main == 0.0)
                    ++agg.zero_rate;
            }
            const double inv_k = 1.0 / static_cast<double>(config.K);
            agg.rate_main *= inv_k;
            agg.rate_secrecy *= inv_k;
            agg.rate_eve *= inv_k;
            agg.cost *= inv_k;
            trials[t] = agg;
        });

        // Ordered reduction: identical bytes for any thread count.
        std::vector<double> rm(config.trials), rs(config.trials), re(config.trials);
        double sum_rm = 0.0, sum_rs = 0.0, sum_re = 0.0, sum_cost = 0.0;
        for (std::size_t t = 0; t < config.trials; ++t) {
            rm[t] = trials[t].rate_main;
            rs[t] = trials[t].rate_secrecy;
            re[t] = trials[t].rate_eve;
            sum_rm += rm[t];
            sum_rs += rs[t];
            sum_re += re[t];
            sum_cost += trials[t].cost;
            result.zero_rate_events += trials[t].zero_rate;
        }
        const double n = static_cast<double>(config.trials);

        SweepPoint p;
        p.M = M;
        p.L = spec.strategy == SelectionStrategy::Full ? M : spec.L;
        p.K = config.K;
        p.trials_used = config.trials;
        p.mean_rate_main = sum_rm / n;
        p.mean_rate_secrecy = sum_rs / n;
        p.mean_rate_eve = sum_re / n;
        if (config.aggregation == Aggregation::RatioOfMeans)
            p.cost = sum_rm == 0.0 ? 0.0 : 1.0 - sum_rs / sum_rm;
        else
            p.cost = sum_cost / n;
        p.ci_main = ci_halfwidth(rm, p.mean_rate_main);
        p.ci_secrecy = ci_halfwidth(rs, p.mean_rate_secrecy);
        p.ci_eve = ci_halfwidth(re, p.mean_rate_eve);
        result.points.push_back(p);
    }
    return result;
}

std::string to_csv(const SweepResult& result) {
    std::string out =
        "M,L,K,mean_rate_main,mean_rate_secrecy,mean_rate_eve,cost,ci_main,ci_secrecy,ci_eve,trials\n";
    for (const SweepPoint& p : result.points) {
        out += std::to_string(p.M);
        out += ',';
        out += std::to_string(p.L);
        out += ',';
        out += std::to_string(p.K);
        out += ',';
        out += format_double(p.mean_rate_main);
        out += ',';
        out += format_double(p.mean_rate_secrecy);
        out += ',';
        out += format_double(p.mean_rate_eve);
        out += ',';
        out += format_double(p.cost);
        out += ',';
        out += format_double(p.ci_main);
        out += ',';
        out += format_double(p.ci_secrecy);
        out += ',';
        out += format_double(p.ci_eve);
        out += ',';
        out += std::to_string(p.trials_used);
        out += '\n';
    }
    return out;
}

void emit_csv(const SweepResult& result, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw IoError("emit_csv: cannot open '" + path + "' for writing");
    const std::string text = to_csv(result);
    f.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!f)
        throw IoError("emit_csv: write failed for '" + path + "'");
}

std::vector<std::vector<double>> parse_csv_rows(const std::string& text) {
    std::vector<std::vector<double>> rows;
    std::istringstream in(text);
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (header) {
            header = false;
            continue;
        }
        if (line.empty())
            continue;
        std::vector<double> row;
        std::size_t pos = 0;
        while (pos <= line.size()) {
            std::size_t comma = line.find(',', pos);
            if (comma == std::string::npos)
                comma = line.size();
            double v = 0.0;
            const auto res = std::from_chars(line.data() + pos, line.data() + comma, v);
            if (res.ec != std::errc())
                throw IoError("parse_csv_rows: malformed numeric field");
            row.push_back(v);
            pos = comma + 1;
            if (comma == line.size())
                break;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

// ---- validation runs ---------------------------------------------------

ValidationReport run_validation(const ValidationSettings& settings, unsigned threads) {
    if (settings.trials < 100)
        throw ConfigError("run_validation: need at least 100 trials");
    if (settings.M == 0 || settings.L == 0 || settings.L > settings.M)
        throw ConfigError("run_validation: require 1 <= L <= M");
    if (!(settings.rho_e > 0.0) || !(settings.beta_e > 0.0))
        throw ConfigError("run_validation: rho_e and beta_e must be positive");

    const std::size_t n = settings.trials;
    const std::size_t L = settings.L;
    const std::size_t M = settings.M;
    const bool has_angle = L >= 2;

    EmpiricalSample xi(n), eve_norm2(n), cos2(has_angle ? n : 0), snr(n);
    LargeScaleProfile profile = uniform_profile(1, 1.0, settings.beta_e);
    const LinkBudget budget{1.0, settings.rho_e};

    parallel_for(n, threads, [&](std::size_t t) {
        RngStream rng(settings.master_seed, static_cast<std::uint64_t>(t));
        const ChannelRealization r = draw_realization(M, 1, profile, rng);
        const SelectionResult sel = select_strongest(r, L, 0);

        const ComplexVector g1 = sel.H_eff.col(0); // beta_1 = 1, so this is the reduced fading
        const ComplexVector ge = reduce_vector(r.g_eve, sel.active_indices);
        xi[t] = squared_norm(g1);
        eve_norm2[t] = squared_norm(ge);
        if (has_angle)
            cos2[t] = hermitian_angle_cos2(g1, ge);

        const PrecodingMatrix pm = mrt_precoder(sel);
        snr[t] = snr_eavesdropper(sel, pm, 0, budget);
    });

    ValidationReport report;
    report.settings = settings;

    const auto add = [&report](ValidationCheck c) {
        if (c.gating && !c.pass)
            report.pass = false;
        report.checks.push_back(std::move(c));
    };

    // Trimmed sum: CDF check plus a mean check. At the M = L boundary the
    // sum is untrimmed and exactly Erlang(L), so the CDF check gates there.
    // Away from the boundary the Gaussian limit carries a constant absolute
    // centering offset, so its CDF check is reported but never gates; the
    // relative mean check gates at M >= 4096 where the 3% tolerance holds.
    {
        const TrimmedSumLaw law = trimmed_sum_law(M, L);
        const bool boundary = M == L;
        const ValidationRecord rec =
            validate_distribution(xi, boundary ? DistributionLaw::erlang_norm(L)
                                               : DistributionLaw::trimmed_sum(M, L));
        ValidationCheck c;
        c.name = "trimmed_sum_ks";
        c.statistic = rec.ks;
        c.threshold = rec.threshold;
        c.gating = boundary;
        c.pass = rec.pass;
        c.details["exact_erlang_reference"] = boundary ? 1.0 : 0.0;
        c.details["mean_predicted"] = law.mean;
        c.details["mean_empirical"] = sample_mean(xi);
        c.details["variance_predicted"] = law.variance;
        c.details["variance_empirical"] = sample_variance(xi);
        add(std::move(c));

        ValidationCheck m;
        m.name = "trimmed_sum_mean";
        m.statistic = std::fabs(sample_mean(xi) - law.mean) / law.mean;
        m.threshold = 0.03;
        m.gating = boundary || M >= 4096;
        m.pass = m.statistic < m.threshold;
        m.details["mean_predicted"] = law.mean;
        m.details["mean_empirical"] = sample_mean(xi);
        add(std::move(m));
    }

    // Reduced eavesdropper norm: exact Erlang(L) law at any M.
    {
        const ValidationRecord rec = validate_distribution(eve_norm2, DistributionLaw::erlang_norm(L));
        ValidationCheck c;
        c.name = "erlang_norm_ks";
        c.statistic = rec.ks;
        c.threshold = rec.threshold;
        c.gating = true;
        c.pass = rec.pass;
        add(std::move(c));
    }

    if (has_angle) {
        const ValidationRecord rec = validate_distribution(cos2, DistributionLaw::beta_cos2(L));
        ValidationCheck c;
        c.name = "beta_cos2_ks";
        c.statistic = rec.ks;
        c.threshold = rec.threshold;
        c.gating = M >= 256;
        c.pass = rec.pass;
        add(std::move(c));

        ValidationCheck ind;
        ind.name = "cos2_norm_independence";
        ind.statistic = std::fabs(independence_check(cos2, eve_norm2));
        ind.threshold = 3.0 / std::sqrt(static_cast<double>(n));
        ind.gating = true;
        ind.pass = ind.statistic < ind.threshold;
        ind.details["pearson_r"] = independence_check(cos2, eve_norm2);
        add(std::move(ind));
    } else {
        // L = 1: the cosine is identically 1 and the SNR law collapses to a
        // scaled exponential; check that law instead.
        EmpiricalSample scaled(n);
        const double scale = settings.rho_e * settings.beta_e;
        for (std::size_t t = 0; t < n; ++t)
            scaled[t] = snr[t] / scale;
        const ValidationRecord rec = validate_distribution(scaled, DistributionLaw::erlang_norm(1));
        ValidationCheck c;
        c.name = "eve_snr_exponential_ks";
        c.statistic = rec.ks;
        c.threshold = rec.threshold;
        c.gating = true;
        c.pass = rec.pass;
        add(std::move(c));
    }

    // Eavesdropper SNR moments; tolerances are calibrated for 1e5 trials,
    // smaller runs report them as advisory.
    {
        const auto [mean_pred, var_pred] = eve_snr_moments(settings.rho_e, settings.beta_e);
        const double mean_emp = sample_mean(snr);
        const double var_emp = sample_variance(snr);
        const bool gate = n >= 100000;

        ValidationCheck cm;
        cm.name = "eve_snr_mean";
        cm.statistic = std::fabs(mean_emp - mean_pred) / mean_pred;
        cm.threshold = 0.02;
        cm.gating = gate;
        cm.pass = cm.statistic < cm.threshold;
        cm.details["mean_predicted"] = mean_pred;
        cm.details["mean_empirical"] = mean_emp;
        add(std::move(cm));

        ValidationCheck cv;
        cv.name = "eve_snr_variance";
        cv.statistic = std::fabs(var_emp - var_pred) / var_pred;
        cv.threshold = 0.08;
        cv.gating = gate;
        cv.pass = cv.statistic < cv.threshold;
        cv.details["variance_predicted"] = var_pred;
        cv.details["variance_empirical"] = var_emp;
        add(std::move(cv));
    }

    return report;
}

// ---- presets ------------------------------------------------------------

namespace {

std::vector<std::size_t> pow2_grid(std::size_t from, std::size_t to) {
    std::vector<std::size_t> g;
    for (std::size_t m = from; m <= to; m *= 2)
        g.push_back(m);
    return g;
}

} // namespace

ExperimentConfig preset_fig1() {
    ExperimentConfig c;
    c.M_values = pow2_grid(16, 1024);
    c.L.reset();
    c.K = 4;
    c.rho_m_dB = 0.0;
    c.rho_e_dB = -10.0;
    c.beta_users.assign(4, 1.0);
    c.beta_eve = 1.0;
    c.precoder = PrecoderScheme::MRT;
    c.selection = SelectionStrategy::Full;
    c.trials = 10000;
    c.master_seed = 1;
    c.aggregation = Aggregation::RatioOfMeans;
    return c;
}

std::vector<ExperimentConfig> preset_fig2() {
    ExperimentConfig base;
    base.K = 1;
    base.rho_m_dB = 0.0;
    base.rho_e_dB = -15.0;
    base.beta_users.assign(1, 1.0);
    base.beta_eve = 1.0;
    base.precoder = PrecoderScheme::MRT;
    base.trials = 10000;
    base.master_seed = 1;
    base.aggregation = Aggregation::RatioOfMeans;

    ExperimentConfig l1 = base;
    l1.selection = SelectionStrategy::Strongest;
    l1.L = 1;
    l1.M_values = pow2_grid(1, 1024); // selection curves start at M = L

    ExperimentConfig l4 = base;
    l4.selection = SelectionStrategy::Strongest;
    l4.L = 4;
    l4.M_values = pow2_grid(4, 1024);

    ExperimentConfig full = base;
    full.selection = SelectionStrategy::Full;
    full.L.reset();
    full.M_values = pow2_grid(16, 1024);

    return {l1, l4, full};
}

} // namespace mimosec

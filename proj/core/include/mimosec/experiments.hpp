// SPDX-License-Identifier: Apache-2.0
//
// mimosec -- Monte Carlo link-level simulator for secrecy rates in multiuser
// massive MIMO wiretap channels under linear precoding and antenna selection.

#ifndef MIMOSEC_EXPERIMENTS_HPP
#define MIMOSEC_EXPERIMENTS_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mimosec/asymptotics.hpp"
#include "mimosec/rates.hpp"

namespace mimosec {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Aggregation { RatioOfMeans, MeanOfRatios };

// One Monte Carlo sweep over a grid of antenna counts. Powers are given in
// dB and converted to linear (rho = 10^(dB/10)) when the sweep runs;
// large-scale gains are linear already.
struct ExperimentConfig {
    std::vector<std::size_t> M_values;
    std::optional<std::size_t> L{};   // nullopt = full transmit complexity
    std::size_t K = 1;
    double rho_m_dB = 0.0;
    double rho_e_dB = -10.0;
    std::vector<double> beta_users;   // linear, length K
    double beta_eve = 1.0;
    PrecoderScheme precoder = PrecoderScheme::MRT;
    SelectionStrategy selection = SelectionStrategy::Full;
    std::size_t trials = 10000;
    std::uint64_t master_seed = 1;
    Aggregation aggregation = Aggregation::RatioOfMeans;
};

// Throws ConfigError on any invariant violation, before any computation.
void validate_config(const ExperimentConfig& config);

// Aggregated statistics for one (M, L) grid point. Rates are averaged over
// trials and users; ci_* are 95% normal-approximation halfwidths over the
// per-trial (user-averaged) values.
struct SweepPoint {
    std::size_t M = 0;
    std::size_t L = 0; // effective active count (M under full complexity)
    std::size_t K = 0;
    double mean_rate_main = 0.0;
    double mean_rate_secrecy = 0.0;
    double mean_rate_eve = 0.0;
    double cost = 0.0;
    double ci_main = 0.0;
    double ci_secrecy = 0.0;
    double ci_eve = 0.0;
    std::size_t trials_used = 0;
};

struct SweepResult {
    std::vector<SweepPoint> points;
    ExperimentConfig config;
    std::size_t zero_rate_events = 0; // realizations hitting the rate_main = 0 convention
};

// Runs the sweep. Trial t always uses stream id t of the master seed and the
// reduction is performed in trial order, so the result is bit-identical for
// any thread count. threads = 0 picks the hardware concurrency.
SweepResult run_sweep(const ExperimentConfig& config, unsigned threads = 1);

// CSV with header
//   M,L,K,mean_rate_main,mean_rate_secrecy,mean_rate_eve,cost,ci_main,ci_secrecy,ci_eve,trials
// one row per grid point, '.' decimal separator, LF newlines, shortest
// round-trip float formatting.
std::string to_csv(const SweepResult& result);

// Writes to_csv(result) to path. Throws IoError on failure.
void emit_csv(const SweepResult& result, const std::string& path);

// Parses a CSV produced by to_csv back into rows of doubles (header
// skipped). Used by round-trip checks and downstream tooling.
std::vector<std::vector<double>> parse_csv_rows(const std::string& text);

// ---- distribution validation runs ------------------------------------

struct ValidationCheck {
    std::string name;      // stable identifier, see docs
    double statistic = 0.0;
    double threshold = 0.0;
    bool gating = false;   // advisory when false
    bool pass = false;
    std::map<std::string, double> details;
};

struct ValidationSettings {
    std::size_t M = 0;
    std::size_t L = 0;
    std::size_t trials = 0;
    std::uint64_t master_seed = 1;
    double rho_e = 1.0;
    double beta_e = 1.0;
};

struct ValidationReport {
    ValidationSettings settings;
    std::vector<ValidationCheck> checks;
    bool pass = true; // all gating checks passed
};

// Draws `trials` single-user realizations under strongest-L selection and
// checks the closed-form laws for the trimmed sum, the reduced eavesdropper
// norm, the squared Hermitian cosine, their independence, and the
// eavesdropper SNR moments. Requires trials >= 100. Checks outside their
// validity regime are reported as advisory (gating = false); see
// docs/validation.md for the regime table.
ValidationReport run_validation(const ValidationSettings& settings, unsigned threads = 1);

// JSON rendering of the report (stable field names).
std::string validation_report_json(const ValidationReport& report);

// ---- config file I/O and presets --------------------------------------

// Flat JSON mirror of ExperimentConfig field names. Unknown keys are
// rejected. "L" accepts an integer or "full"; enums use the CLI spellings
// ("MRT"/"ZF", "strongest"/"random"/"full", "ratio-of-means"/"mean-of-ratios").
ExperimentConfig parse_config_json(const std::string& text);
ExperimentConfig load_config(const std::string& path);
std::string config_json(const ExperimentConfig& config);

// Sweep presets matching the two reference setups: fig1 is the full
// complexity multiuser run (K = 4, rho_m = 0 dB, rho_e = -10 dB); fig2 is
// the single-user selection comparison (L = 1, L = 4 and full complexity at
// rho_e = -15 dB). Grids are powers of two up to 1024; selection curves
// start at M = L.
ExperimentConfig preset_fig1();
std::vector<ExperimentConfig> preset_fig2();

} // namespace mimosec

#endif

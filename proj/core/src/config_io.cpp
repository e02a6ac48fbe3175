// SPDX-License-Identifier: Apache-2.0

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "mimosec/experiments.hpp"

namespace mimosec {

namespace {

using nlohmann::json;

PrecoderScheme parse_precoder(const std::string& s) {
    if (s == "MRT")
        return PrecoderScheme::MRT;
    if (s == "ZF")
        return PrecoderScheme::ZF;
    throw ConfigError("config: precoder must be \"MRT\" or \"ZF\", got \"" + s + "\"");
}

SelectionStrategy parse_selection(const std::string& s) {
    if (s == "strongest")
        return SelectionStrategy::Strongest;
    if (s == "random")
        return SelectionStrategy::Random;
    if (s == "full")
        return SelectionStrategy::Full;
    throw ConfigError("config: selection must be \"strongest\", \"random\" or \"full\", got \"" + s + "\"");
}

Aggregation parse_aggregation(const std::string& s) {
    if (s == "ratio-of-means")
        return Aggregation::RatioOfMeans;
    if (s == "mean-of-ratios")
        return Aggregation::MeanOfRatios;
    throw ConfigError("config: aggregation must be \"ratio-of-means\" or \"mean-of-ratios\", got \"" + s + "\"");
}

const char* selection_name(SelectionStrategy s) {
    switch (s) {
        case SelectionStrategy::Strongest: return "strongest";
        case SelectionStrategy::Random: return "random";
        case SelectionStrategy::Full: return "full";
    }
    return "full";
}

} // namespace

ExperimentConfig parse_config_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config: JSON parse error: ") + e.what());
    }
    if (!j.is_object())
        throw ConfigError("config: top-level JSON value must be an object");

    static const std::set<std::string> known = {
        "M_values", "L", "K", "rho_m_dB", "rho_e_dB", "beta_users", "beta_eve",
        "precoder", "selection", "trials", "master_seed", "aggregation"};
    for (const auto& item : j.items())
        if (!known.count(item.key()))
            throw ConfigError("config: unknown key \"" + item.key() + "\"");

    ExperimentConfig c;
    try {
        if (j.contains("M_values"))
            c.M_values = j.at("M_values").get<std::vector<std::size_t>>();
        if (j.contains("L")) {
            const json& l = j.at("L");
            if (l.is_string()) {
                if (l.get<std::string>() != "full")
                    throw ConfigError("config: L must be an integer or \"full\"");
                c.L.reset();
            } else {
                c.L = l.get<std::size_t>();
            }
        }
        if (j.contains("K"))
            c.K = j.at("K").get<std::size_t>();
        if (j.contains("rho_m_dB"))
            c.rho_m_dB = j.at("rho_m_dB").get<double>();
        if (j.contains("rho_e_dB"))
            c.rho_e_dB = j.at("rho_e_dB").get<double>();
        if (j.contains("beta_users"))
            c.beta_users = j.at("beta_users").get<std::vector<double>>();
        if (j.contains("beta_eve"))
            c.beta_eve = j.at("beta_eve").get<double>();
        if (j.contains("precoder"))
            c.precoder = parse_precoder(j.at("precoder").get<std::string>());
        if (j.contains("selection"))
            c.selection = parse_selection(j.at("selection").get<std::string>());
        if (j.contains("trials"))
            c.trials = j.at("trials").get<std::size_t>();
        if (j.contains("master_seed"))
            c.master_seed = j.at("master_seed").get<std::uint64_t>();
        if (j.contains("aggregation"))
            c.aggregation = parse_aggregation(j.at("aggregation").get<std::string>());
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    if (c.beta_users.empty())
        c.beta_users.assign(c.K, 1.0); // default: unit gains
    return c;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw IoError("load_config: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_config_json(buf.str());
}

std::string config_json(const ExperimentConfig& c) {
    json j;
    j["M_values"] = c.M_values;
    if (c.L.has_value())
        j["L"] = *c.L;
    else
        j["L"] = "full";
    j["K"] = c.K;
    j["rho_m_dB"] = c.rho_m_dB;
    j["rho_e_dB"] = c.rho_e_dB;
    j["beta_users"] = c.beta_users;
    j["beta_eve"] = c.beta_eve;
    j["precoder"] = c.precoder == PrecoderScheme::MRT ? "MRT" : "ZF";
    j["selection"] = selection_name(c.selection);
    j["trials"] = c.trials;
    j["master_seed"] = c.master_seed;
    j["aggregation"] = c.aggregation == Aggregation::RatioOfMeans ? "ratio-of-means" : "mean-of-ratios";
    return j.dump(2) + "\n";
}

std::string validation_report_json(const ValidationReport& report) {
    json j;
    j["settings"] = {
        {"M", report.settings.M},
        {"L", report.settings.L},
        {"trials", report.settings.trials},
        {"master_seed", report.settings.master_seed},
        {"rho_e", report.settings.rho_e},
        {"beta_e", report.settings.beta_e},
    };
    j["checks"] = json::array();
    for (const ValidationCheck& c : report.checks) {
        json jc;
        jc["name"] = c.name;
        jc["statistic"] = c.statistic;
        jc["threshold"] = c.threshold;
        jc["gating"] = c.gating;
        jc["pass"] = c.pass;
        if (!c.details.empty())
            jc["details"] = c.details;
        j["checks"].push_back(std::move(jc));
    }
    j["pass"] = report.pass;
    return j.dump(2) + "\n";
}

} // namespace mimosec

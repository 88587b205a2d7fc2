// Command-line front end: Monte Carlo BER runs, noise-threshold searches,
// BDD-step complexity sweeps and channel capacity tables for product and
// staircase codes over the ternary-quantized AWGN channel.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eae/config.hpp"
#include "eae/runner.hpp"
#include "eae/version.hpp"

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

// "--code nu,t[,ew][,shorten]" -> code.* keys
void apply_code_flag(eae::ParsedConfig& cfg, const std::string& value) {
    const auto parts = split(value, ',');
    if (parts.size() < 2) throw CLI::ValidationError("--code", "expected nu,t[,ew][,shorten]");
    cfg.set("code.nu", parts[0]);
    cfg.set("code.t", parts[1]);
    cfg.set("code.even_weight", "false");
    cfg.set("code.shortening", "0");
    for (size_t i = 2; i < parts.size(); ++i) {
        if (parts[i] == "ew") cfg.set("code.even_weight", "true");
        else cfg.set("code.shortening", parts[i]);
    }
}

void apply_structure_flag(eae::ParsedConfig& cfg, const std::string& value) {
    if (value == "pc") {
        cfg.set("structure", "pc");
        return;
    }
    if (value.rfind("scc", 0) == 0) {
        cfg.set("structure", "scc");
        const size_t colon = value.find(':');
        if (colon != std::string::npos) cfg.set("scc.chain_length", value.substr(colon + 1));
        return;
    }
    throw CLI::ValidationError("--structure", "expected pc or scc:<chain length>");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string(eae::kVersion) +
                 " - error-and-erasure decoding of product and staircase codes"};
    app.require_subcommand(0, 1);

    std::string config_path, out_dir = "out";
    std::string code_flag, structure_flag, es_n0_flag, threshold_flag, scheme_flag,
        component_flag, seed_flag, threads_flag, half_iter_flag, target_ber_flag, bracket_flag,
        precision_flag, stop_flag, tie_flag;
    bool quiet = false;

    app.add_option("--config,-c", config_path, "config file (key = value lines)");
    app.add_option("--out,-o", out_dir, "output directory")->capture_default_str();
    app.add_option("--seed", seed_flag, "master seed (u64)");
    app.add_option("--threads", threads_flag, "worker threads (0 = all cores)");
    app.add_option("--es-n0-db", es_n0_flag, "Es/N0 grid in dB, comma separated");
    app.add_option("--erasure-threshold", threshold_flag, "quantizer threshold T, or 'auto'");
    app.add_option("--scheme", scheme_flag, "imp | emp | lcea | hlcea");
    app.add_option("--component", component_flag, "bdd | eaed | eaedplus");
    app.add_option("--code", code_flag, "component code: nu,t[,ew][,shorten]");
    app.add_option("--structure", structure_flag, "pc | scc:<chain length>");
    app.add_option("--half-iterations", half_iter_flag, "product-code half-iterations");
    app.add_option("--target-ber", target_ber_flag, "threshold search target BER");
    app.add_option("--bracket", bracket_flag, "threshold bracket lo,hi in dB");
    app.add_option("--precision-db", precision_flag, "threshold bisection precision");
    app.add_option("--stop", stop_flag, "stop rule: min_word_errors,max_words");
    app.add_option("--tie", tie_flag, "tie rule: random | first");
    app.add_flag("--quiet,-q", quiet, "suppress progress output");

    for (const char* name : {"capacity", "ber", "threshold", "complexity", "selftest"})
        app.add_subcommand(name)->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        eae::ParsedConfig cfg;
        if (!config_path.empty()) cfg = eae::parse_config_file(config_path);
        for (const CLI::App* sub : app.get_subcommands()) cfg.set("command", sub->get_name());

        if (!seed_flag.empty()) cfg.set("seed", seed_flag);
        if (!threads_flag.empty()) cfg.set("threads", threads_flag);
        if (!es_n0_flag.empty()) cfg.set("channel.es_n0_db", es_n0_flag);
        if (!threshold_flag.empty()) cfg.set("channel.erasure_threshold", threshold_flag);
        if (!scheme_flag.empty()) cfg.set("decoder.scheme", scheme_flag);
        if (!component_flag.empty()) cfg.set("decoder.component", component_flag);
        if (!half_iter_flag.empty()) cfg.set("decoder.half_iterations", half_iter_flag);
        if (!code_flag.empty()) apply_code_flag(cfg, code_flag);
        if (!structure_flag.empty()) apply_structure_flag(cfg, structure_flag);
        if (!target_ber_flag.empty()) cfg.set("threshold.target_ber", target_ber_flag);
        if (!precision_flag.empty()) cfg.set("threshold.precision_db", precision_flag);
        if (!tie_flag.empty()) cfg.set("decoder.tie", tie_flag);
        if (!bracket_flag.empty()) {
            const auto parts = split(bracket_flag, ',');
            if (parts.size() != 2)
                throw CLI::ValidationError("--bracket", "expected lo,hi in dB");
            cfg.set("threshold.bracket_low_db", parts[0]);
            cfg.set("threshold.bracket_high_db", parts[1]);
        }
        if (!stop_flag.empty()) {
            const auto parts = split(stop_flag, ',');
            if (parts.size() != 2)
                throw CLI::ValidationError("--stop", "expected min_word_errors,max_words");
            cfg.set("stop.min_word_errors", parts[0]);
            cfg.set("stop.max_words", parts[1]);
        }

        const eae::Setup setup = eae::resolve_setup(cfg);
        const eae::RunArtifacts art =
            eae::run_config(setup, out_dir, quiet ? nullptr : &std::cerr);
        std::cout << art.csv_path << "\n" << art.meta_path << "\n";
        return 0;
    } catch (const eae::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

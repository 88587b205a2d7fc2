#include "eae/config.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace eae {

namespace {

std::string trim(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

const std::set<std::string>& known_keys() {
    static const std::set<std::string> keys = {
        "command", "seed", "threads", "batch_size",
        "code.nu", "code.t", "code.even_weight", "code.shortening",
        "structure", "scc.chain_length",
        "decoder.scheme", "decoder.component", "decoder.half_iterations",
        "decoder.window_length", "decoder.window_iterations", "decoder.tie",
        "channel.es_n0_db", "channel.es_n0_db_min", "channel.es_n0_db_max",
        "channel.es_n0_db_step", "channel.erasure_threshold",
        "stop.min_word_errors", "stop.max_words",
        "threshold.target_ber", "threshold.bracket_low_db", "threshold.bracket_high_db",
        "threshold.precision_db", "threshold.optimize_t",
        "threshold.probe_min_errors", "threshold.probe_max_words",
        "threshold.scan_min_errors", "threshold.scan_max_words",
        "threshold.t_grid_max", "threshold.t_grid_step",
    };
    return keys;
}

}  // namespace

void ParsedConfig::set(const std::string& key, const std::string& value, int line) {
    for (Entry& e : entries) {
        if (e.key == key) {
            e.value = value;
            e.line = line;
            return;
        }
    }
    entries.push_back({key, value, line});
}

std::optional<std::string> ParsedConfig::get(const std::string& key) const {
    for (const Entry& e : entries) {
        if (e.key == key) return e.value;
    }
    return std::nullopt;
}

int ParsedConfig::line_of(const std::string& key) const {
    for (const Entry& e : entries) {
        if (e.key == key) return e.line;
    }
    return 0;
}

ParsedConfig parse_config_text(const std::string& text, const std::string& source_name) {
    ParsedConfig cfg;
    cfg.source = source_name;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;
        const size_t eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ConfigError("expected key = value", source_name, lineno);
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty()) throw ConfigError("empty key", source_name, lineno);
        if (value.empty()) throw ConfigError("empty value for key '" + key + "'", source_name, lineno);
        cfg.set(key, value, lineno);
    }
    return cfg;
}

ParsedConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file", path, 0);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), path);
}

std::string command_name(Command c) {
    switch (c) {
        case Command::capacity: return "capacity";
        case Command::ber: return "ber";
        case Command::threshold: return "threshold";
        case Command::complexity: return "complexity";
        case Command::selftest: return "selftest";
    }
    return "?";
}

namespace {

struct Resolver {
    const ParsedConfig& cfg;

    [[noreturn]] void fail(const std::string& key, const std::string& msg) const {
        throw ConfigError("key '" + key + "': " + msg, cfg.source, cfg.line_of(key));
    }

    template <typename F>
    auto number(const std::string& key, F&& parse) const {
        const auto raw = cfg.get(key);
        return raw ? std::optional(parse(key, *raw)) : std::nullopt;
    }

    std::optional<long long> integer(const std::string& key) const {
        return number(key, [&](const std::string& k, const std::string& v) {
            try {
                size_t used = 0;
                const long long out = std::stoll(v, &used);
                if (used != v.size()) throw std::invalid_argument("");
                return out;
            } catch (...) {
                fail(k, "expected an integer, got '" + v + "'");
            }
        });
    }

    std::optional<double> real(const std::string& key) const {
        return number(key, [&](const std::string& k, const std::string& v) {
            try {
                size_t used = 0;
                const double out = std::stod(v, &used);
                if (used != v.size()) throw std::invalid_argument("");
                return out;
            } catch (...) {
                fail(k, "expected a number, got '" + v + "'");
            }
        });
    }

    std::optional<bool> boolean(const std::string& key) const {
        const auto raw = cfg.get(key);
        if (!raw) return std::nullopt;
        if (*raw == "true" || *raw == "1") return true;
        if (*raw == "false" || *raw == "0") return false;
        fail(key, "expected true/false, got '" + *raw + "'");
    }
};

std::vector<double> parse_double_list(const Resolver& r, const std::string& key,
                                      const std::string& value) {
    std::vector<double> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            const std::string t = item;
            const double v = std::stod(t, &used);
            while (used < t.size() && std::isspace(static_cast<unsigned char>(t[used]))) ++used;
            if (used != t.size()) throw std::invalid_argument("");
            out.push_back(v);
        } catch (...) {
            r.fail(key, "expected a comma-separated list of numbers");
        }
    }
    if (out.empty()) r.fail(key, "empty list");
    return out;
}

std::string fmt_full(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

Setup resolve_setup(const ParsedConfig& cfg) {
    for (const auto& e : cfg.entries) {
        if (!known_keys().count(e.key))
            throw ConfigError("unknown key '" + e.key + "'", cfg.source, e.line);
    }
    const Resolver r{cfg};
    Setup s;

    const auto cmd = cfg.get("command");
    if (!cmd) throw ConfigError("missing required key 'command'", cfg.source, 0);
    if (*cmd == "capacity") s.command = Command::capacity;
    else if (*cmd == "ber") s.command = Command::ber;
    else if (*cmd == "threshold") s.command = Command::threshold;
    else if (*cmd == "complexity") s.command = Command::complexity;
    else if (*cmd == "selftest") s.command = Command::selftest;
    else r.fail("command", "expected capacity|ber|threshold|complexity|selftest");

    if (auto v = r.integer("seed")) s.sim.seed = static_cast<uint64_t>(*v);
    if (auto v = r.integer("threads")) s.sim.threads = static_cast<int>(*v);
    if (auto v = r.integer("batch_size")) s.sim.batch_size = static_cast<int>(*v);

    if (auto v = r.integer("code.nu")) s.sim.code.nu = static_cast<int>(*v);
    if (auto v = r.integer("code.t")) s.sim.code.t = static_cast<int>(*v);
    if (auto v = r.boolean("code.even_weight")) s.sim.code.even_weight = *v;
    if (auto v = r.integer("code.shortening")) s.sim.code.shortening = static_cast<int>(*v);

    if (auto v = cfg.get("structure")) {
        if (*v == "pc") s.sim.structure = Structure::pc;
        else if (*v == "scc") s.sim.structure = Structure::scc;
        else r.fail("structure", "expected pc|scc");
    }
    if (auto v = r.integer("scc.chain_length")) s.sim.chain_length = static_cast<int>(*v);

    if (auto v = cfg.get("decoder.scheme")) {
        if (*v == "imp") s.sim.decoder.rule = Rule::imp;
        else if (*v == "emp") s.sim.decoder.rule = Rule::emp_naive;
        else if (*v == "lcea") s.sim.decoder.rule = Rule::lcea;
        else if (*v == "hlcea") s.sim.decoder.rule = Rule::hlcea;
        else r.fail("decoder.scheme", "expected imp|emp|lcea|hlcea");
    }
    if (auto v = cfg.get("decoder.component")) {
        if (*v == "bdd") s.sim.decoder.component = ComponentDecoder::bdd;
        else if (*v == "eaed") s.sim.decoder.component = ComponentDecoder::eaed;
        else if (*v == "eaedplus") s.sim.decoder.component = ComponentDecoder::eaed_plus;
        else r.fail("decoder.component", "expected bdd|eaed|eaedplus");
    }
    if (auto v = r.integer("decoder.half_iterations"))
        s.sim.decoder.half_iterations = static_cast<int>(*v);
    if (auto v = r.integer("decoder.window_length"))
        s.sim.decoder.window_length = static_cast<int>(*v);
    if (auto v = r.integer("decoder.window_iterations"))
        s.sim.decoder.window_iterations = static_cast<int>(*v);
    if (auto v = cfg.get("decoder.tie")) {
        if (*v == "random") s.sim.decoder.tie = TieRule::random;
        else if (*v == "first") s.sim.decoder.tie = TieRule::prefer_first;
        else r.fail("decoder.tie", "expected random|first");
    }

    if (auto v = cfg.get("channel.es_n0_db")) {
        s.es_n0_db_grid = parse_double_list(r, "channel.es_n0_db", *v);
    } else if (cfg.get("channel.es_n0_db_min")) {
        const double lo = r.real("channel.es_n0_db_min").value();
        const auto hi = r.real("channel.es_n0_db_max");
        const auto step = r.real("channel.es_n0_db_step");
        if (!hi || !step) {
            throw ConfigError("grid needs channel.es_n0_db_min, _max and _step", cfg.source,
                              cfg.line_of("channel.es_n0_db_min"));
        }
        if (*step <= 0.0) r.fail("channel.es_n0_db_step", "step must be positive");
        for (double v2 = lo; v2 <= *hi + 1e-9; v2 += *step) s.es_n0_db_grid.push_back(v2);
    }
    if (auto v = cfg.get("channel.erasure_threshold")) {
        if (*v == "auto") {
            s.auto_erasure_threshold = true;
        } else {
            const double t = r.real("channel.erasure_threshold").value();
            if (t < 0.0) r.fail("channel.erasure_threshold", "must be >= 0 (or auto)");
            s.sim.channel.erasure_threshold = t;
        }
    }

    if (auto v = r.integer("stop.min_word_errors"))
        s.sim.stop.min_word_errors = static_cast<uint64_t>(*v);
    if (auto v = r.integer("stop.max_words")) s.sim.stop.max_words = static_cast<uint64_t>(*v);

    if (auto v = r.real("threshold.target_ber")) s.threshold.target_ber = *v;
    if (auto v = r.real("threshold.bracket_low_db")) s.threshold.bracket_low_db = *v;
    if (auto v = r.real("threshold.bracket_high_db")) s.threshold.bracket_high_db = *v;
    if (auto v = r.real("threshold.precision_db")) s.threshold.precision_db = *v;
    if (auto v = r.boolean("threshold.optimize_t")) s.threshold.optimize_threshold = *v;
    if (auto v = r.integer("threshold.probe_min_errors"))
        s.threshold.probe_stop.min_word_errors = static_cast<uint64_t>(*v);
    if (auto v = r.integer("threshold.probe_max_words"))
        s.threshold.probe_stop.max_words = static_cast<uint64_t>(*v);
    if (auto v = r.integer("threshold.scan_min_errors"))
        s.threshold.scan_stop.min_word_errors = static_cast<uint64_t>(*v);
    if (auto v = r.integer("threshold.scan_max_words"))
        s.threshold.scan_stop.max_words = static_cast<uint64_t>(*v);
    if (auto v = r.real("threshold.t_grid_max")) s.threshold.t_grid_max = *v;
    if (auto v = r.real("threshold.t_grid_step")) s.threshold.t_grid_step = *v;

    const bool needs_grid = s.command == Command::capacity || s.command == Command::ber ||
                            s.command == Command::complexity;
    if (needs_grid && s.es_n0_db_grid.empty())
        throw ConfigError("command '" + command_name(s.command) +
                              "' needs channel.es_n0_db (or a min/max/step grid)",
                          cfg.source, 0);
    if (s.command != Command::selftest && s.command != Command::capacity) {
        SimConfig check = s.sim;
        check.channel.es_n0 = 1.0;  // placeholder; per-point values are set at run time
        if (s.auto_erasure_threshold) check.channel.erasure_threshold = 0.0;
        try {
            validate(check);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what(), cfg.source, 0);
        }
        if (s.sim.decoder.component == ComponentDecoder::bdd && s.auto_erasure_threshold)
            throw ConfigError("channel.erasure_threshold = auto is incompatible with bdd",
                              cfg.source, cfg.line_of("channel.erasure_threshold"));
    }
    return s;
}

std::string serialize_setup(const Setup& s) {
    std::ostringstream out;
    out << "command = " << command_name(s.command) << "\n";
    out << "seed = " << s.sim.seed << "\n";
    out << "threads = " << s.sim.threads << "\n";
    out << "batch_size = " << s.sim.batch_size << "\n";
    out << "code.nu = " << s.sim.code.nu << "\n";
    out << "code.t = " << s.sim.code.t << "\n";
    out << "code.even_weight = " << (s.sim.code.even_weight ? "true" : "false") << "\n";
    out << "code.shortening = " << s.sim.code.shortening << "\n";
    out << "structure = " << (s.sim.structure == Structure::pc ? "pc" : "scc") << "\n";
    out << "scc.chain_length = " << s.sim.chain_length << "\n";
    out << "decoder.scheme = " << rule_name(s.sim.decoder.rule) << "\n";
    out << "decoder.component = " << component_name(s.sim.decoder.component) << "\n";
    out << "decoder.half_iterations = " << s.sim.decoder.half_iterations << "\n";
    out << "decoder.window_length = " << s.sim.decoder.window_length << "\n";
    out << "decoder.window_iterations = " << s.sim.decoder.window_iterations << "\n";
    out << "decoder.tie = " << (s.sim.decoder.tie == TieRule::random ? "random" : "first") << "\n";
    if (!s.es_n0_db_grid.empty()) {
        out << "channel.es_n0_db = ";
        for (size_t i = 0; i < s.es_n0_db_grid.size(); ++i) {
            if (i) out << ",";
            out << fmt_full(s.es_n0_db_grid[i]);
        }
        out << "\n";
    }
    out << "channel.erasure_threshold = "
        << (s.auto_erasure_threshold ? std::string("auto")
                                     : fmt_full(s.sim.channel.erasure_threshold))
        << "\n";
    out << "stop.min_word_errors = " << s.sim.stop.min_word_errors << "\n";
    out << "stop.max_words = " << s.sim.stop.max_words << "\n";
    out << "threshold.target_ber = " << fmt_full(s.threshold.target_ber) << "\n";
    out << "threshold.bracket_low_db = " << fmt_full(s.threshold.bracket_low_db) << "\n";
    out << "threshold.bracket_high_db = " << fmt_full(s.threshold.bracket_high_db) << "\n";
    out << "threshold.precision_db = " << fmt_full(s.threshold.precision_db) << "\n";
    out << "threshold.optimize_t = " << (s.threshold.optimize_threshold ? "true" : "false") << "\n";
    out << "threshold.probe_min_errors = " << s.threshold.probe_stop.min_word_errors << "\n";
    out << "threshold.probe_max_words = " << s.threshold.probe_stop.max_words << "\n";
    out << "threshold.scan_min_errors = " << s.threshold.scan_stop.min_word_errors << "\n";
    out << "threshold.scan_max_words = " << s.threshold.scan_stop.max_words << "\n";
    out << "threshold.t_grid_max = " << fmt_full(s.threshold.t_grid_max) << "\n";
    out << "threshold.t_grid_step = " << fmt_full(s.threshold.t_grid_step) << "\n";
    return out.str();
}

}  // namespace eae

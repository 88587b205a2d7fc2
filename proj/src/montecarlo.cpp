#include "eae/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <thread>

#include "eae/product_code.hpp"
#include "eae/staircase.hpp"

namespace eae {

void RunStats::merge(const RunStats& other) {
    bits_sent += other.bits_sent;
    bit_errors += other.bit_errors;
    words_sent += other.words_sent;
    word_errors += other.word_errors;
    bdd_steps += other.bdd_steps;
    redecodes += other.redecodes;
    cn_updates += other.cn_updates;
    channel_flips += other.channel_flips;
    channel_erasures += other.channel_erasures;
}

std::string rule_name(Rule r) {
    switch (r) {
        case Rule::imp: return "imp";
        case Rule::emp_naive: return "emp";
        case Rule::lcea: return "lcea";
        case Rule::hlcea: return "hlcea";
    }
    return "?";
}

std::string component_name(ComponentDecoder c) {
    switch (c) {
        case ComponentDecoder::bdd: return "bdd";
        case ComponentDecoder::eaed: return "eaed";
        case ComponentDecoder::eaed_plus: return "eaedplus";
    }
    return "?";
}

void validate(const SimConfig& cfg) {
    const ComponentCode code(cfg.code.nu, cfg.code.t, cfg.code.even_weight, cfg.code.shortening);
    if (cfg.decoder.component == ComponentDecoder::bdd && cfg.channel.erasure_threshold != 0.0)
        throw std::invalid_argument("plain BDD message passing requires erasure threshold T = 0");
    if (cfg.channel.es_n0 <= 0.0) throw std::invalid_argument("Es/N0 must be positive");
    if (cfg.decoder.half_iterations < 1) throw std::invalid_argument("need at least one half-iteration");
    if (cfg.stop.max_words < 1) throw std::invalid_argument("stop rule allows no words");
    if (cfg.batch_size < 1) throw std::invalid_argument("batch size must be >= 1");
    if (cfg.structure == Structure::scc) {
        StaircaseCode scc(code, cfg.chain_length);  // validates evenness and k > n/2
        if (cfg.chain_length < cfg.decoder.window_length)
            throw std::invalid_argument("staircase chain shorter than the decoding window");
        if (cfg.decoder.window_length < 2)
            throw std::invalid_argument("window length must be >= 2");
        if (cfg.decoder.window_iterations < 1)
            throw std::invalid_argument("window iterations must be >= 1");
    }
}

namespace {

struct TrialContext {
    const SimConfig& cfg;
    const ComponentCode code;
    std::unique_ptr<ProductCode> pc;
    std::unique_ptr<StaircaseCode> scc;

    explicit TrialContext(const SimConfig& c)
        : cfg(c), code(c.code.nu, c.code.t, c.code.even_weight, c.code.shortening) {
        if (c.structure == Structure::pc) {
            pc = std::make_unique<ProductCode>(code);
        } else {
            scc = std::make_unique<StaircaseCode>(code, c.chain_length);
        }
    }

    int info_bits() const { return pc ? pc->info_bits() : scc->info_bits(); }

    RunStats run_trial(uint64_t trial) const {
        RngStream info_rng = RngStream::keyed(cfg.seed, {rng_tag::info, trial});
        RngStream chan_rng = RngStream::keyed(cfg.seed, {rng_tag::channel, trial});
        const uint64_t decode_seed = derive_key(cfg.seed, {rng_tag::decode, trial});

        BinaryWord info(info_bits());
        for (auto& b : info) b = static_cast<uint8_t>(info_rng.next_bit());
        const std::vector<uint8_t> sent = pc ? pc->encode(info) : scc->encode(info);

        TernaryWord received;
        transmit(sent, cfg.channel, chan_rng, received);

        RunStats s;
        s.words_sent = 1;
        s.bits_sent = sent.size();
        for (size_t i = 0; i < sent.size(); ++i) {
            if (is_erased(received[i])) ++s.channel_erasures;
            else if (bit_of(received[i]) != sent[i]) ++s.channel_flips;
        }

        const DecodeResult res = pc ? pc->decode(received, cfg.decoder, decode_seed)
                                    : scc->window_decode(received, cfg.decoder, decode_seed);
        for (size_t i = 0; i < sent.size(); ++i) s.bit_errors += res.bits[i] != sent[i];
        s.word_errors = s.bit_errors > 0 ? 1 : 0;
        s.bdd_steps = res.stats.bdd_steps;
        s.redecodes = res.stats.redecodes;
        s.cn_updates = res.stats.cn_updates;
        return s;
    }
};

}  // namespace

RunStats estimate_ber(const SimConfig& cfg) {
    validate(cfg);
    const TrialContext ctx(cfg);
    const int threads = cfg.threads > 0
                            ? cfg.threads
                            : std::max(1u, std::thread::hardware_concurrency());

    RunStats total;
    uint64_t next_trial = 0;
    while (total.words_sent < cfg.stop.max_words &&
           total.word_errors < cfg.stop.min_word_errors) {
        const uint64_t batch =
            std::min<uint64_t>(cfg.batch_size, cfg.stop.max_words - total.words_sent);
        const uint64_t first = next_trial;
        if (threads == 1 || batch == 1) {
            for (uint64_t i = 0; i < batch; ++i) total.merge(ctx.run_trial(first + i));
        } else {
            std::atomic<uint64_t> cursor{0};
            std::vector<RunStats> partial(threads);
            std::vector<std::thread> pool;
            pool.reserve(threads);
            for (int w = 0; w < threads; ++w) {
                pool.emplace_back([&, w] {
                    for (;;) {
                        const uint64_t i = cursor.fetch_add(1);
                        if (i >= batch) break;
                        partial[w].merge(ctx.run_trial(first + i));
                    }
                });
            }
            for (auto& th : pool) th.join();
            for (const RunStats& p : partial) total.merge(p);
        }
        next_trial += batch;
    }
    return total;
}

namespace {

struct ProbeRunner {
    const SimConfig& base;
    const ThresholdOptions& opt;
    std::vector<ThresholdProbe>* probes;
    int counter = 0;

    RunStats measure(double es_n0_db, double t, const StopRule& stop, bool is_scan) {
        SimConfig cfg = base;
        cfg.channel.es_n0 = db_to_linear(es_n0_db);
        cfg.channel.erasure_threshold = t;
        cfg.stop = stop;
        cfg.seed = derive_key(base.seed, {rng_tag::probe, static_cast<uint64_t>(counter)});
        const RunStats stats = estimate_ber(cfg);
        ThresholdProbe record;
        record.index = counter++;
        record.es_n0_db = es_n0_db;
        record.erasure_threshold = t;
        record.stats = stats;
        record.below_target = stats.ber() <= opt.target_ber;
        record.is_scan = is_scan;
        probes->push_back(record);
        return stats;
    }

    // Probe one Es/N0 point, optionally optimizing the erasure threshold:
    // coarse grid with a light stop rule, one refinement around the best
    // point, then a full-quality estimate at the winner.
    std::pair<RunStats, double> probe(double es_n0_db) {
        if (!opt.optimize_threshold || base.decoder.component == ComponentDecoder::bdd) {
            const double t = base.channel.erasure_threshold;
            return {measure(es_n0_db, t, opt.probe_stop, false), t};
        }
        double best_t = 0.0;
        double best_ber = 2.0;
        for (double t = 0.0; t <= opt.t_grid_max + 1e-12; t += opt.t_grid_step) {
            const double b = measure(es_n0_db, t, opt.scan_stop, true).ber();
            if (b < best_ber) {
                best_ber = b;
                best_t = t;
            }
        }
        for (double t : {best_t - 0.5 * opt.t_grid_step, best_t + 0.5 * opt.t_grid_step}) {
            if (t < 0.0 || t > opt.t_grid_max) continue;
            const double b = measure(es_n0_db, t, opt.scan_stop, true).ber();
            if (b < best_ber) {
                best_ber = b;
                best_t = t;
            }
        }
        return {measure(es_n0_db, best_t, opt.probe_stop, false), best_t};
    }
};

}  // namespace

ThresholdResult find_threshold(const SimConfig& base, const ThresholdOptions& opt) {
    ThresholdResult result;
    result.target_ber = opt.target_ber;
    result.precision_db = opt.precision_db;
    ProbeRunner runner{base, opt, &result.probes};

    double low = opt.bracket_low_db;
    double high = opt.bracket_high_db;
    auto [low_stats, low_t] = runner.probe(low);
    if (low_stats.ber() <= opt.target_ber)
        throw std::invalid_argument("threshold bracket: BER at the low edge is already below target");
    auto [high_stats, high_t] = runner.probe(high);
    if (high_stats.ber() > opt.target_ber)
        throw std::invalid_argument("threshold bracket: BER at the high edge is above target");
    double t_at_high = high_t;

    while (high - low > opt.precision_db + 1e-12) {
        const double mid = 0.5 * (low + high);
        auto [stats, t_used] = runner.probe(mid);
        if (stats.ber() > opt.target_ber) {
            low = mid;
        } else {
            high = mid;
            t_at_high = t_used;
        }
    }
    result.threshold_db = high;
    result.t_opt = t_at_high;
    return result;
}

std::vector<ComplexityPoint> sweep_complexity(const SimConfig& base,
                                              const std::vector<double>& es_n0_db_grid,
                                              const StopRule& stop) {
    struct Variant {
        Rule rule;
        ComponentDecoder component;
        bool capacity_opt_threshold;
    };
    const Variant variants[] = {
        {Rule::lcea, ComponentDecoder::bdd, false},  // T = 0 hard-decision baseline
        {Rule::lcea, ComponentDecoder::eaed, true},
        {Rule::hlcea, ComponentDecoder::eaed, true},
        {Rule::lcea, ComponentDecoder::eaed_plus, true},
    };
    std::vector<ComplexityPoint> out;
    int counter = 0;
    for (double db : es_n0_db_grid) {
        const double es_n0 = db_to_linear(db);
        const double t_opt = optimize_erasure_threshold(es_n0).t_opt;
        for (const Variant& v : variants) {
            SimConfig cfg = base;
            cfg.decoder.rule = v.rule;
            cfg.decoder.component = v.component;
            cfg.channel.es_n0 = es_n0;
            cfg.channel.erasure_threshold = v.capacity_opt_threshold ? t_opt : 0.0;
            cfg.stop = stop;
            cfg.seed = derive_key(base.seed, {rng_tag::probe, static_cast<uint64_t>(counter++)});
            ComplexityPoint point;
            point.es_n0_db = db;
            point.rule = v.rule;
            point.component = v.component;
            point.erasure_threshold = cfg.channel.erasure_threshold;
            point.stats = estimate_ber(cfg);
            out.push_back(point);
        }
    }
    return out;
}

}  // namespace eae

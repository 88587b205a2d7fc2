#include "eae/runner.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "eae/csv.hpp"
#include "eae/product_code.hpp"
#include "eae/version.hpp"

namespace eae {

namespace {

void write_capacity(const Setup& s, std::ostream& out) {
    csv_row(out, {"es_n0_db", "T", "delta", "epsilon", "capacity"});
    for (double db : s.es_n0_db_grid) {
        const double es_n0 = db_to_linear(db);
        double t = s.sim.channel.erasure_threshold;
        if (s.auto_erasure_threshold) t = optimize_erasure_threshold(es_n0).t_opt;
        const ChannelParams p{es_n0, t};
        const EaeChannelStats st = eae_probabilities(p);
        csv_row(out, {fmt_double(db), fmt_double(t), fmt_double(st.error_prob),
                      fmt_double(st.erasure_prob), fmt_double(eae_capacity(p))});
    }
}

void write_ber(const Setup& s, std::ostream& out, std::ostream* log) {
    csv_row(out, {"es_n0_db", "T", "words", "word_errors", "wer", "bits", "bit_errors", "ber",
                  "raw_ber", "ber_rse", "bdd_steps", "steps_per_bit", "redecodes"});
    int index = 0;
    for (double db : s.es_n0_db_grid) {
        SimConfig cfg = s.sim;
        cfg.channel.es_n0 = db_to_linear(db);
        if (s.auto_erasure_threshold)
            cfg.channel.erasure_threshold = optimize_erasure_threshold(cfg.channel.es_n0).t_opt;
        cfg.seed = derive_key(s.sim.seed, {rng_tag::probe, static_cast<uint64_t>(index++)});
        const RunStats st = estimate_ber(cfg);
        const double rse = st.word_errors ? 1.0 / std::sqrt(static_cast<double>(st.word_errors)) : 1.0;
        csv_row(out, {fmt_double(db), fmt_double(cfg.channel.erasure_threshold),
                      fmt_u64(st.words_sent), fmt_u64(st.word_errors), fmt_double(st.wer()),
                      fmt_u64(st.bits_sent), fmt_u64(st.bit_errors), fmt_double(st.ber()),
                      fmt_double(st.raw_ber()), fmt_double(rse), fmt_u64(st.bdd_steps),
                      fmt_double(st.bits_sent ? static_cast<double>(st.bdd_steps) / st.bits_sent
                                              : 0.0),
                      fmt_u64(st.redecodes)});
        if (log)
            *log << "ber: " << db << " dB  T=" << cfg.channel.erasure_threshold
                 << "  ber=" << st.ber() << " (" << st.word_errors << "/" << st.words_sent
                 << " word errors)\n";
    }
}

void write_threshold(const Setup& s, std::ostream& out, std::ostream* log) {
    const ThresholdResult res = find_threshold(s.sim, s.threshold);
    csv_row(out, {"kind", "index", "es_n0_db", "erasure_threshold", "words", "word_errors", "ber",
                  "below_target"});
    for (const ThresholdProbe& p : res.probes) {
        csv_row(out, {p.is_scan ? "scan" : "probe", fmt_int(p.index), fmt_double(p.es_n0_db),
                      fmt_double(p.erasure_threshold), fmt_u64(p.stats.words_sent),
                      fmt_u64(p.stats.word_errors), fmt_double(p.stats.ber()),
                      p.below_target ? "1" : "0"});
    }
    csv_row(out, {"threshold", "", fmt_double(res.threshold_db), fmt_double(res.t_opt), "", "",
                  fmt_double(res.target_ber), ""});
    if (log)
        *log << "threshold: " << res.threshold_db << " dB (T_opt=" << res.t_opt << ") at BER "
             << res.target_ber << "\n";
}

void write_complexity(const Setup& s, std::ostream& out, std::ostream* log) {
    const auto points = sweep_complexity(s.sim, s.es_n0_db_grid, s.sim.stop);
    csv_row(out, {"es_n0_db", "scheme", "component", "T", "words", "bits", "bdd_steps",
                  "steps_per_bit", "ber"});
    for (const ComplexityPoint& p : points) {
        csv_row(out, {fmt_double(p.es_n0_db), rule_name(p.rule), component_name(p.component),
                      fmt_double(p.erasure_threshold), fmt_u64(p.stats.words_sent),
                      fmt_u64(p.stats.bits_sent), fmt_u64(p.stats.bdd_steps),
                      fmt_double(p.steps_per_bit()), fmt_double(p.stats.ber())});
        if (log)
            *log << "complexity: " << p.es_n0_db << " dB " << rule_name(p.rule) << "/"
                 << component_name(p.component) << "  steps/bit=" << p.steps_per_bit() << "\n";
    }
}

void write_selftest(const Setup& s, std::ostream& out, std::ostream* log) {
    csv_row(out, {"check", "status"});
    int failures = 0;
    auto report = [&](const std::string& name, bool ok) {
        csv_row(out, {name, ok ? "pass" : "FAIL"});
        if (log) *log << (ok ? "  pass  " : "  FAIL  ") << name << "\n";
        failures += ok ? 0 : 1;
    };

    const ComponentCode code(4, 2);
    report("generator polynomial (15,7,2)",
           code.generator() == std::vector<uint8_t>{1, 0, 0, 0, 1, 0, 1, 1, 1});

    // bounded-distance decoding round trip with random error patterns
    {
        RngStream rng = RngStream::keyed(s.sim.seed, {rng_tag::test, 1});
        bool ok = true;
        for (int i = 0; i < 2000 && ok; ++i) {
            BinaryWord info(7);
            for (auto& b : info) b = static_cast<uint8_t>(rng.next_bit());
            BinaryWord w = code.encode(info);
            const int flips = static_cast<int>(rng.next_below(3));
            for (int f = 0; f < flips; ++f) w[rng.next_below(15)] ^= 1;
            const BddOutcome o = code.bdd(w);
            ok = o.success && code.is_codeword(o.word);
        }
        report("bdd corrects up to t errors", ok);
    }

    // low-complexity updates against the per-position oracle
    {
        RngStream rng = RngStream::keyed(s.sim.seed, {rng_tag::test, 2});
        bool ok_eaed = true, ok_plus = true, ok_bsc = true;
        for (int i = 0; i < 300; ++i) {
            BinaryWord info(7);
            for (auto& b : info) b = static_cast<uint8_t>(rng.next_bit());
            const BinaryWord cw = code.encode(info);
            TernaryWord r(15), y(15);
            for (int j = 0; j < 15; ++j) {
                const double u = rng.next_double();
                r[j] = u < 0.15 ? Trit::erased : trit_of(cw[j] ^ (u < 0.35));
                if (is_erased(r[j]))
                    y[j] = rng.next_double() < 0.5 ? Trit::erased
                                                   : trit_of(static_cast<uint8_t>(rng.next_bit()));
                else
                    y[j] = trit_of(bit_of(r[j]) ^ (rng.next_double() < 0.2));
            }
            FillPlan plan;
            plan.base.resize(15);
            for (auto& b : plan.base) b = static_cast<uint8_t>(rng.next_bit());
            const CnInput in{y, r, code, plan};
            ok_eaed = ok_eaed && lcea_eaed_cn_update(in, LceaMode::exact).extrinsic ==
                                     naive_emp_cn_update(in, ComponentDecoder::eaed).extrinsic;
            ok_plus = ok_plus && lcea_eaed_plus_cn_update(in).extrinsic ==
                                     naive_emp_cn_update(in, ComponentDecoder::eaed_plus).extrinsic;
            TernaryWord yb(15), rb(15);
            for (int j = 0; j < 15; ++j) {
                rb[j] = trit_of(cw[j] ^ (rng.next_double() < 0.2));
                yb[j] = trit_of(bit_of(rb[j]) ^ (rng.next_double() < 0.2));
            }
            const CnInput inb{yb, rb, code, plan};
            ok_bsc = ok_bsc && lcea_bsc_cn_update(inb).extrinsic ==
                                   naive_emp_cn_update(inb, ComponentDecoder::bdd).extrinsic;
        }
        report("lcea(eaed) matches the extrinsic oracle", ok_eaed);
        report("lcea(eaed+) matches the extrinsic oracle", ok_plus);
        report("lcea(bsc) matches the extrinsic oracle", ok_bsc);
    }

    // channel math
    {
        bool ok = true;
        for (double db : {-1.0, 1.0, 3.0}) {
            const ChannelParams p{db_to_linear(db), 0.0};
            const EaeChannelStats st = eae_probabilities(p);
            ok = ok && st.erasure_prob == 0.0;
            const double h2 = -st.error_prob * std::log2(st.error_prob) -
                              (1 - st.error_prob) * std::log2(1 - st.error_prob);
            ok = ok && std::abs(eae_capacity(p) - (1.0 - h2)) < 1e-12;
        }
        report("capacity reduces to the binary symmetric case at T = 0", ok);
    }

    // noiseless product-code fixed point
    {
        const ProductCode pc(code);
        RngStream rng = RngStream::keyed(s.sim.seed, {rng_tag::test, 3});
        BinaryWord info(pc.info_bits());
        for (auto& b : info) b = static_cast<uint8_t>(rng.next_bit());
        const auto sent = pc.encode(info);
        TernaryWord rx(sent.size());
        for (size_t i = 0; i < sent.size(); ++i) rx[i] = trit_of(sent[i]);
        DecoderConfig dc;
        const DecodeResult res = pc.decode(rx, dc, 7);
        report("noiseless product codeword is a fixed point",
               res.converged && res.bits == sent && res.stats.bdd_steps == 0);
    }

    csv_row(out, {"total_failures", fmt_int(failures)});
}

}  // namespace

RunArtifacts run_config(const Setup& setup, const std::string& out_dir, std::ostream* log) {
    std::filesystem::create_directories(out_dir);
    const std::string name = command_name(setup.command);
    RunArtifacts art;
    art.csv_path = out_dir + "/" + name + ".csv";
    art.meta_path = out_dir + "/" + name + ".meta";

    std::ostringstream csv;
    switch (setup.command) {
        case Command::capacity: write_capacity(setup, csv); break;
        case Command::ber: write_ber(setup, csv, log); break;
        case Command::threshold: write_threshold(setup, csv, log); break;
        case Command::complexity: write_complexity(setup, csv, log); break;
        case Command::selftest: write_selftest(setup, csv, log); break;
    }

    std::ofstream csv_file(art.csv_path, std::ios::binary);
    if (!csv_file) throw std::runtime_error("cannot write " + art.csv_path);
    csv_file << csv.str();

    const ComponentCode code(setup.sim.code.nu, setup.sim.code.t, setup.sim.code.even_weight,
                             setup.sim.code.shortening);
    std::ofstream meta(art.meta_path, std::ios::binary);
    if (!meta) throw std::runtime_error("cannot write " + art.meta_path);
    meta << "# " << kVersion << " metadata; replay with --config " << name << ".meta\n";
    meta << "# component code: (" << code.spec().n << "," << code.spec().k << ","
         << code.spec().t << ")" << (code.spec().even_weight ? " even-weight" : "")
         << (code.spec().shortening ? " shortened" : "") << ", d_des = " << code.spec().d_des
         << "\n";
    meta << serialize_setup(setup);
    return art;
}

}  // namespace eae

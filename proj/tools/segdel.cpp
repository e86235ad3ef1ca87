// Command line front end: build / verify / simulate / report / certify.
#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>

#include "segdel/redundancy.hpp"
#include "segdel/rng.hpp"
#include "segdel/serial.hpp"
#include "segdel/verify.hpp"

namespace {

using namespace segdel;

struct CliConfig {
    json raw;  // config-file echo
    std::optional<ChannelParams> params;
    std::optional<LabelingScheme> scheme;
    bool density = false;
    std::vector<std::uint32_t> forbidden;
    std::uint64_t seed = 0;
    std::uint64_t trials = 1000;
    double burst_probability = 0.5;
    std::string mode = "exhaustive";
    std::uint64_t max_universe = 1ull << 22;
    Budgets budgets;
    std::string certify_domain = "exhaustive";
    std::uint64_t certify_samples = 10000;
    std::vector<unsigned> table_b = {8, 16, 32};
    unsigned t1 = 1, t2 = 1;
};

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void load_config(CliConfig& cfg, const std::string& path) {
    cfg.raw = read_json(path);
    const json& j = cfg.raw;
    if (j.contains("params")) cfg.params = params_from_json(j.at("params"));
    if (j.contains("scheme")) cfg.scheme = scheme_from_json(j.at("scheme"));
    cfg.density = j.value("density", cfg.density);
    if (j.contains("forbidden_positions"))
        cfg.forbidden = j.at("forbidden_positions").get<std::vector<std::uint32_t>>();
    cfg.seed = j.value("seed", cfg.seed);
    cfg.trials = j.value("trials", cfg.trials);
    cfg.burst_probability = j.value("burst_probability", cfg.burst_probability);
    cfg.mode = j.value("mode", cfg.mode);
    if (cfg.mode.rfind("verify-", 0) == 0) cfg.mode = cfg.mode.substr(7);
    if (cfg.mode == "montecarlo") cfg.mode = "mc";
    if (j.contains("budget")) {
        const json& budget = j.at("budget");
        cfg.max_universe = budget.value("max_universe", cfg.max_universe);
        cfg.budgets.max_codewords = budget.value("max_codewords", cfg.budgets.max_codewords);
        cfg.budgets.max_patterns = budget.value("max_patterns", cfg.budgets.max_patterns);
    }
    cfg.certify_domain = j.value("certify_domain", cfg.certify_domain);
    cfg.certify_samples = j.value("certify_samples", cfg.certify_samples);
    if (j.contains("table_b")) cfg.table_b = j.at("table_b").get<std::vector<unsigned>>();
    cfg.t1 = j.value("table_t1", cfg.t1);
    cfg.t2 = j.value("table_t2", cfg.t2);
}

ChannelParams require_params(const CliConfig& cfg) {
    if (!cfg.params) throw std::runtime_error("config must provide params (q, b, t, gamma)");
    return *cfg.params;
}

LabelingScheme effective_scheme(const CliConfig& cfg, const ChannelParams& params) {
    if (cfg.scheme) return *cfg.scheme;
    LabelingScheme s = LabelingScheme::recommended(params.q, params.b, params.t);
    if (params.digest_symbols > s.digest_symbols) s.digest_symbols = params.digest_symbols;
    return s;
}

Codebook load_book(const std::string& path) { return codebook_from_json(read_json(path)); }

int cmd_build(const CliConfig& cfg, const std::string& out) {
    const ChannelParams params = require_params(cfg);
    const LabelingScheme scheme = effective_scheme(cfg, params);
    BuildOptions options;
    options.enforce_density = cfg.density;
    options.forbidden_positions = cfg.forbidden;
    options.max_universe = cfg.max_universe;
    const auto started = std::chrono::steady_clock::now();
    const Codebook book = build_codebook(params, scheme, options);
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - started)
                          .count();
    emit(to_json(book), "json", out);
    std::cerr << "built codebook: M=" << book.common_size
              << " rate=" << rate_bits_per_symbol(book) << " bits/symbol ("
              << ms << " ms) -> " << out << "\n";
    return 0;
}

int cmd_verify(const std::string& book_path, const std::string& mode, std::uint64_t trials,
               std::uint64_t seed, double burst_probability, const CliConfig& cfg,
               const std::string& out) {
    const Codebook book = load_book(book_path);
    VerificationReport rep;
    if (mode == "exhaustive") {
        rep = verify_exhaustive(book, cfg.budgets);
    } else if (mode == "mc" || mode == "montecarlo") {
        rep = verify_montecarlo(book, trials, seed, burst_probability);
    } else {
        throw std::runtime_error("verify: mode must be 'exhaustive' or 'mc'");
    }
    if (!out.empty()) emit(to_json(rep), "json", out);
    std::cerr << "verify " << rep.mode << ": " << (rep.pass() ? "pass" : "fail")
              << " (codewords=" << rep.codewords << ", patterns=" << rep.patterns_checked
              << ", failures=" << rep.failures.size() << ", " << rep.wall_ms << " ms)\n";
    return rep.pass() ? 0 : 1;
}

int cmd_simulate(const std::string& book_path, std::uint64_t trials, std::uint64_t seed,
                 double burst_probability, const std::string& out) {
    const Codebook book = load_book(book_path);
    const ChannelParams& params = book.params;
    SplitMix64 root(seed);
    json runs = json::array();
    bool all_ok = true;
    for (std::uint64_t k = 0; k < trials; ++k) {
        SplitMix64 rng = root.split(k);
        std::vector<std::size_t> msg(params.gamma);
        for (auto& m : msg) m = rng.bounded(book.common_size);
        const Word x = encode(msg, book);
        const auto [y, pattern] = apply_channel_random(x, params, burst_probability, rng.next());
        const DecodeResult dec = decode(y, book);
        const bool ok = dec.status == ChainDecodeStatus::ok && dec.messages == msg;
        all_ok = all_ok && ok;
        json run;
        run["message"] = msg;
        run["codeword"] = to_json(x);
        run["pattern"] = to_json(pattern);
        run["received"] = to_json(y);
        if (dec.status == ChainDecodeStatus::ok) {
            run["decoded"] = dec.messages;
        } else {
            run["error"] = dec.detail;
        }
        run["verdict"] = ok ? "ok" : "fail";
        runs.push_back(run);
    }
    json doc;
    doc["book"] = json{{"params", to_json(params)}, {"M", book.common_size}};
    doc["seed"] = seed;
    doc["burst_probability"] = burst_probability;
    doc["trials"] = runs;
    doc["verdict"] = all_ok ? "pass" : "fail";
    if (!out.empty())
        emit(doc, "json", out);
    else
        std::cout << stable_dump(doc);
    return all_ok ? 0 : 1;
}

int cmd_report(const CliConfig& cfg, const std::string& book_path, const std::string& out) {
    const ChannelParams params = require_params(cfg);
    std::optional<Codebook> book;
    if (!book_path.empty()) book = load_book(book_path);
    if (out.size() > 4 && out.substr(out.size() - 4) == ".csv") {
        // one row per formula per requested b
        std::vector<ComparisonRow> rows;
        for (unsigned b : cfg.table_b) {
            const auto at_b = comparison_table(b, params.q, cfg.t1, cfg.t2);
            rows.insert(rows.end(), at_b.begin(), at_b.end());
        }
        emit(comparison_csv(rows), "csv", out);
    } else {
        const RedundancyReport rep =
            redundancy_report(params, book ? &*book : nullptr, cfg.t1, cfg.t2);
        emit(to_json(rep), "json", out);
    }
    std::cerr << "report -> " << out << "\n";
    return 0;
}

int cmd_certify(const CliConfig& cfg, const std::string& out) {
    const ChannelParams params = require_params(cfg);
    const LabelingScheme scheme = effective_scheme(cfg, params);
    CertificationDomain domain = cfg.certify_domain == "exhaustive"
                                     ? CertificationDomain::all()
                                     : CertificationDomain::sampled(cfg.certify_samples, cfg.seed);
    const CertificationReport rep = certify(scheme, params, domain, cfg.max_universe);
    if (!out.empty()) emit(to_json(rep), "json", out);
    std::cerr << "certify: " << (rep.certified() ? "certified" : "FAILED") << " (words="
              << rep.words_tested << ", receptions=" << rep.receptions_tested << ", failures="
              << rep.failures.size() << ")";
    for (const auto& w : rep.warnings) std::cerr << " [" << w << "]";
    std::cerr << "\n";
    return rep.certified() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"segmented burst-deletion code toolkit"};
    app.require_subcommand(1);

    CliConfig cfg;
    std::string config_path, out_path, book_path, mode;
    std::uint64_t trials = 0;
    double burst_probability = -1.0;
    std::uint64_t seed = 0;
    bool seed_set = false, trials_set = false, prob_set = false;

    // overrides shared by every subcommand; mirror the config keys
    unsigned q = 0, b = 0, t = 0, gamma = 0;
    std::uint64_t delta = 0, rho = 0;
    unsigned digest_symbols = 0;
    std::uint64_t p1 = 0, p2 = 0, beta = 0;
    unsigned scheme_n = 0;
    int density_flag = -1;
    std::vector<std::uint32_t> forbidden_override;
    std::uint64_t max_universe_override = 0, max_codewords_override = 0, max_patterns_override = 0;
    std::string certify_domain_override;
    std::uint64_t certify_samples_override = 0;
    std::vector<unsigned> table_b_override;
    unsigned t1_override = 0, t2_override = 0;

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON configuration file");
        sub->add_option("--q", q, "alphabet size");
        sub->add_option("--b", b, "segment length");
        sub->add_option("--t", t, "burst length");
        sub->add_option("--gamma", gamma, "segment count");
        sub->add_option("--delta", delta, "density window");
        sub->add_option("--rho", rho, "window stride");
        sub->add_option("--digest-symbols", digest_symbols, "digest length N");
        sub->add_option("--scheme-p1", p1, "labeling modulus P1");
        sub->add_option("--scheme-p2", p2, "labeling modulus P2");
        sub->add_option("--scheme-beta", beta, "labeling evaluation point");
        sub->add_option("--scheme-n", scheme_n, "labeling digest symbols N");
        sub->add_flag("--density,!--no-density",
                      [&density_flag](std::int64_t v) { density_flag = v > 0 ? 1 : 0; },
                      "enforce density");
        sub->add_option("--seed", seed, "PRNG seed")->each([&](const std::string&) { seed_set = true; });
        sub->add_option("--trials", trials, "trial count")->each([&](const std::string&) { trials_set = true; });
        sub->add_option("--burst-probability", burst_probability, "per-segment burst probability")
            ->each([&](const std::string&) { prob_set = true; });
        sub->add_option("--forbidden-positions", forbidden_override, "q-ary forbidden positions");
        sub->add_option("--max-universe", max_universe_override, "enumeration budget");
        sub->add_option("--max-codewords", max_codewords_override, "verification codeword budget");
        sub->add_option("--max-patterns", max_patterns_override, "verification pattern budget");
        sub->add_option("--certify-domain", certify_domain_override, "exhaustive | sampled");
        sub->add_option("--certify-samples", certify_samples_override, "sample count for certification");
        sub->add_option("--table-b", table_b_override, "segment lengths for comparison tables");
        sub->add_option("--table-t1", t1_override, "burst-indel deletion budget");
        sub->add_option("--table-t2", t2_override, "burst-indel insertion budget");
    };

    CLI::App* cmd_build_app = app.add_subcommand("build", "construct a codebook");
    add_common(cmd_build_app);
    cmd_build_app->add_option("--out", out_path, "codebook output path")->required();

    CLI::App* cmd_verify_app = app.add_subcommand("verify", "verify a codebook");
    add_common(cmd_verify_app);
    cmd_verify_app->add_option("--book", book_path, "codebook file")->required();
    cmd_verify_app->add_option("--mode", mode, "exhaustive | mc");
    cmd_verify_app->add_option("--out", out_path, "report output path");

    CLI::App* cmd_sim_app = app.add_subcommand("simulate", "encode / channel / decode runs");
    add_common(cmd_sim_app);
    cmd_sim_app->add_option("--book", book_path, "codebook file")->required();
    cmd_sim_app->add_option("--out", out_path, "replay output path");

    CLI::App* cmd_report_app = app.add_subcommand("report", "redundancy and comparison tables");
    add_common(cmd_report_app);
    cmd_report_app->add_option("--book", book_path, "optional codebook for achieved redundancy");
    cmd_report_app->add_option("--out", out_path, "output path (.csv or .json)")->required();

    CLI::App* cmd_cert_app = app.add_subcommand("certify", "certify a labeling scheme");
    add_common(cmd_cert_app);
    cmd_cert_app->add_option("--out", out_path, "report output path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!config_path.empty()) load_config(cfg, config_path);
        // flag overrides
        if (q || b || t || gamma) {
            ChannelParams base = cfg.params.value_or(ChannelParams{});
            if (q) base.q = q;
            if (b) base.b = b;
            if (t) base.t = t;
            if (gamma) base.gamma = gamma;
            ChannelParams defaults =
                ChannelParams::with_defaults(base.q, base.b, base.t, base.gamma);
            if (delta) base.delta = delta;
            if (!base.delta) base.delta = defaults.delta;
            if (rho) base.rho = rho;
            if (!base.rho) base.rho = defaults.rho;
            if (digest_symbols) base.digest_symbols = digest_symbols;
            if (!base.digest_symbols) base.digest_symbols = defaults.digest_symbols;
            cfg.params = base;
        } else if (cfg.params) {
            if (delta) cfg.params->delta = delta;
            if (rho) cfg.params->rho = rho;
            if (digest_symbols) cfg.params->digest_symbols = digest_symbols;
        }
        if (p1 || p2 || beta || scheme_n) {
            LabelingScheme s = cfg.scheme.value_or(LabelingScheme{});
            if (p1) s.p1 = p1;
            if (p2) s.p2 = p2;
            if (beta) s.beta = beta;
            if (scheme_n) s.digest_symbols = scheme_n;
            cfg.scheme = s;
        }
        if (density_flag >= 0) cfg.density = density_flag == 1;
        if (seed_set) cfg.seed = seed;
        if (trials_set) cfg.trials = trials;
        if (prob_set) cfg.burst_probability = burst_probability;
        if (!forbidden_override.empty()) cfg.forbidden = forbidden_override;
        if (max_universe_override) cfg.max_universe = max_universe_override;
        if (max_codewords_override) cfg.budgets.max_codewords = max_codewords_override;
        if (max_patterns_override) cfg.budgets.max_patterns = max_patterns_override;
        if (!certify_domain_override.empty()) cfg.certify_domain = certify_domain_override;
        if (certify_samples_override) cfg.certify_samples = certify_samples_override;
        if (!table_b_override.empty()) cfg.table_b = table_b_override;
        if (t1_override) cfg.t1 = t1_override;
        if (t2_override) cfg.t2 = t2_override;

        if (!mode.empty()) cfg.mode = mode;

        if (app.got_subcommand(cmd_build_app)) return cmd_build(cfg, out_path);
        if (app.got_subcommand(cmd_verify_app))
            return cmd_verify(book_path, cfg.mode, cfg.trials, cfg.seed, cfg.burst_probability,
                              cfg, out_path);
        if (app.got_subcommand(cmd_sim_app))
            return cmd_simulate(book_path, cfg.trials, cfg.seed, cfg.burst_probability, out_path);
        if (app.got_subcommand(cmd_report_app)) return cmd_report(cfg, book_path, out_path);
        if (app.got_subcommand(cmd_cert_app)) return cmd_certify(cfg, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

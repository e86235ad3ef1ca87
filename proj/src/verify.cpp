#include "segdel/verify.hpp"

#include <chrono>
#include <cmath>
#include <unordered_map>

#include "segdel/redundancy.hpp"
#include "segdel/rng.hpp"

namespace segdel {

namespace {

json book_echo(const Codebook& book) {
    json j;
    j["params"] = to_json(book.params);
    j["scheme"] = to_json(book.scheme);
    j["density_flag"] = book.density_enforced;
    j["forbidden_positions"] = book.forbidden_positions;
    j["M"] = book.common_size;
    return j;
}

std::vector<std::vector<std::size_t>> all_messages(std::size_t m, unsigned gamma) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur(gamma, 0);
    while (true) {
        out.push_back(cur);
        unsigned i = gamma;
        while (i-- > 0) {
            if (++cur[i] < m) break;
            cur[i] = 0;
            if (i == 0) return out;
        }
    }
}

void fill_common(VerificationReport& rep, const Codebook& book) {
    rep.config_echo = book_echo(book);
    rep.rate_bits_per_symbol = rate_bits_per_symbol(book);
    rep.achieved_redundancy_bits =
        double(book.params.b) * std::log2(double(book.params.q)) -
        std::log2(double(book.common_size));
    rep.class_size_bound = class_size_bound(book.params, book.scheme.digest_symbols);
    rep.confusable_bound = confusable_bound(book.params);
}

}  // namespace

json to_json(const VerificationReport& rep) {
    json j;
    j["mode"] = rep.mode;
    j["config"] = rep.config_echo;
    j["counts"] = json{{"codewords", rep.codewords},
                       {"pairs_checked", rep.pairs_checked},
                       {"patterns_checked", rep.patterns_checked},
                       {"trials", rep.trials}};
    j["seed"] = rep.seed;
    j["complete"] = rep.complete;
    j["failures"] = rep.failures;
    j["bounds"] = json{{"class_size_bound", rep.class_size_bound},
                       {"confusable_bound", rep.confusable_bound}};
    j["rate"] = json{{"bits_per_symbol", rep.rate_bits_per_symbol},
                     {"achieved_redundancy_bits", rep.achieved_redundancy_bits}};
    j["verdict"] = rep.pass() ? "pass" : "fail";
    return j;
}

VerificationReport verify_exhaustive(const Codebook& book, const Budgets& budgets) {
    // No up-front validate(): verification must be able to indict a broken
    // book instead of refusing to look at it. File loading validates.
    const auto started = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.mode = "exhaustive";
    fill_common(rep, book);

    const ChannelParams& pr = book.params;
    // budget both sweeps before enumerating anything
    const double codeword_count = std::pow(double(book.common_size), double(pr.gamma));
    const double pattern_count = std::pow(double(pr.b - pr.t + 2), double(pr.gamma));
    if (codeword_count > double(budgets.max_codewords)) {
        rep.complete = false;
        rep.failures.push_back(json{{"kind", "budget_exceeded"},
                                    {"detail", "codeword space exceeds max_codewords"}});
        return rep;
    }
    if (codeword_count * pattern_count > double(budgets.max_patterns)) {
        rep.complete = false;
        rep.failures.push_back(json{{"kind", "budget_exceeded"},
                                    {"detail", "decode sweep exceeds max_patterns"}});
        return rep;
    }

    std::vector<std::pair<std::vector<std::size_t>, Word>> code;
    for (const auto& msg : all_messages(book.common_size, pr.gamma))
        code.emplace_back(msg, encode(msg, book));
    rep.codewords = code.size();

    // (a) ball disjointness via element ownership
    std::unordered_map<Word, std::size_t, WordHash> owner;
    for (std::size_t k = 0; k < code.size(); ++k) {
        for (const Word& e : segmented_ball(code[k].second, pr)) {
            const auto [it, fresh] = owner.try_emplace(e, k);
            if (!fresh && it->second != k) {
                rep.failures.push_back(json{{"kind", "ball_overlap"},
                                            {"codeword_a", to_json(code[it->second].second)},
                                            {"codeword_b", to_json(code[k].second)},
                                            {"shared", to_json(e)}});
            }
        }
    }
    rep.pairs_checked = code.size() * (code.size() - 1) / 2;

    // (b)+(c) decode sweep over every error pattern
    const auto patterns = all_error_patterns(pr);
    for (const auto& [msg, x] : code) {
        for (const ErrorPattern& pat : patterns) {
            ++rep.patterns_checked;
            const Word y = apply_channel(x, pr, pat);
            DecodeResult dec;
            try {
                dec = decode(y, book);
            } catch (const std::exception& e) {
                rep.failures.push_back(json{{"kind", "decode_error"},
                                            {"codeword", to_json(x)},
                                            {"pattern", to_json(pat)},
                                            {"detail", e.what()}});
                continue;
            }
            if (dec.status != ChainDecodeStatus::ok || dec.messages != msg || dec.word != x) {
                rep.failures.push_back(json{{"kind", "decode_mismatch"},
                                            {"codeword", to_json(x)},
                                            {"pattern", to_json(pat)},
                                            {"detail", dec.detail},
                                            {"failed_segment", dec.failed_segment}});
                continue;
            }
            // intact verdicts must coincide with burst-free segments at the
            // true boundary
            std::size_t truth = 0;
            for (unsigned i = 0; i < pr.gamma; ++i) {
                const bool intact =
                    dec.trace.verdicts[i] == DecoderTrace::Verdict::intact;
                if (intact && (pat.bursts[i].has_value() || dec.trace.cursors[i] != truth)) {
                    rep.failures.push_back(json{{"kind", "window_property"},
                                                {"codeword", to_json(x)},
                                                {"pattern", to_json(pat)},
                                                {"segment", i + 1}});
                }
                truth += pat.bursts[i] ? pr.b - pr.t : pr.b;
            }
        }
    }
    rep.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - started)
                      .count();
    return rep;
}

VerificationReport verify_montecarlo(const Codebook& book, std::uint64_t trials,
                                     std::uint64_t seed, double burst_probability) {
    const auto started = std::chrono::steady_clock::now();
    if (trials < 1) throw std::invalid_argument("verify_montecarlo: trials must be >= 1");
    book.validate();
    VerificationReport rep;
    rep.mode = "montecarlo";
    fill_common(rep, book);
    rep.seed = seed;
    rep.trials = trials;
    rep.codewords = book.common_size;
    rep.config_echo["burst_probability"] = burst_probability;
    rep.config_echo["trials"] = trials;

    const ChannelParams& pr = book.params;
    SplitMix64 root(seed);
    for (std::uint64_t k = 0; k < trials; ++k) {
        SplitMix64 rng = root.split(k);
        std::vector<std::size_t> msg(pr.gamma);
        for (auto& m : msg) m = rng.bounded(book.common_size);
        const Word x = encode(msg, book);
        const auto [y, pat] = apply_channel_random(x, pr, burst_probability, rng.next());
        ++rep.patterns_checked;
        const DecodeResult dec = decode(y, book);
        if (dec.status != ChainDecodeStatus::ok || dec.messages != msg || dec.word != x) {
            rep.failures.push_back(json{{"kind", "decode_mismatch"},
                                        {"trial", k},
                                        {"codeword", to_json(x)},
                                        {"pattern", to_json(pat)},
                                        {"detail", dec.detail}});
        }
    }
    rep.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - started)
                      .count();
    return rep;
}

}  // namespace segdel

#include "segdel/channel.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "segdel/rng.hpp"

namespace segdel {

void ErrorPattern::validate(const ChannelParams& params) const {
    params.validate_channel();
    if (bursts.size() != params.gamma)
        throw std::invalid_argument("ErrorPattern: expected one entry per segment");
    for (const auto& e : bursts) {
        if (e && (*e < 1 || *e > params.b - params.t + 1))
            throw std::invalid_argument("ErrorPattern: burst start outside [1, b-t+1]");
    }
}

std::vector<Word> burst_ball(const Word& x, unsigned t) {
    if (t >= x.size()) throw std::invalid_argument("burst_ball: t must be < |x|");
    std::vector<Word> out;
    out.reserve(x.size() - t + 1);
    for (std::size_t pos = 1; pos + t - 1 <= x.size(); ++pos) out.push_back(x.without_run(pos, t));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Word> segmented_ball(const Word& x, const ChannelParams& params) {
    params.validate_channel();
    if (x.size() != params.n()) throw std::invalid_argument("segmented_ball: word length differs from n");
    std::vector<Word> outs{Word({}, x.alphabet())};
    for (unsigned i = 1; i <= params.gamma; ++i) {
        const Word seg = segment(x, params, i);
        std::vector<Word> opts{seg};
        for (std::size_t a = 1; a + params.t - 1 <= params.b; ++a)
            opts.push_back(seg.without_run(a, params.t));
        std::vector<Word> next;
        next.reserve(outs.size() * opts.size());
        for (const Word& prefix : outs)
            for (const Word& opt : opts) {
                Word w = prefix;
                w.append(opt);
                next.push_back(std::move(w));
            }
        outs = std::move(next);
    }
    std::sort(outs.begin(), outs.end());
    outs.erase(std::unique(outs.begin(), outs.end()), outs.end());
    return outs;
}

Word apply_channel(const Word& x, const ChannelParams& params, const ErrorPattern& pattern) {
    pattern.validate(params);
    if (x.size() != params.n()) throw std::invalid_argument("apply_channel: word length differs from n");
    Word out({}, x.alphabet());
    for (unsigned i = 1; i <= params.gamma; ++i) {
        Word seg = segment(x, params, i);
        if (pattern.bursts[i - 1]) seg = seg.without_run(*pattern.bursts[i - 1], params.t);
        out.append(seg);
    }
    return out;
}

std::pair<Word, ErrorPattern> apply_channel_random(const Word& x, const ChannelParams& params,
                                                   double burst_probability, std::uint64_t seed) {
    params.validate_channel();
    if (burst_probability < 0.0 || burst_probability > 1.0)
        throw std::invalid_argument("apply_channel_random: probability outside [0,1]");
    SplitMix64 rng(seed);
    ErrorPattern pattern;
    pattern.bursts.resize(params.gamma);
    const std::uint32_t span = params.b - params.t + 1;
    for (unsigned i = 0; i < params.gamma; ++i) {
        if (rng.unit_real() < burst_probability)
            pattern.bursts[i] = 1 + static_cast<std::uint32_t>(rng.bounded(span));
    }
    return {apply_channel(x, params, pattern), pattern};
}

std::vector<ErrorPattern> all_error_patterns(const ChannelParams& params) {
    params.validate_channel();
    const std::uint32_t options = params.b - params.t + 2;  // none + every start
    std::vector<ErrorPattern> out;
    out.reserve(checked_pow(options, params.gamma));
    ErrorPattern cur;
    cur.bursts.assign(params.gamma, std::nullopt);
    std::vector<std::uint32_t> odo(params.gamma, 0);  // 0 = none, k>0 = start k
    while (true) {
        for (unsigned i = 0; i < params.gamma; ++i)
            cur.bursts[i] = odo[i] ? std::optional<std::uint32_t>(odo[i]) : std::nullopt;
        out.push_back(cur);
        unsigned i = params.gamma;
        while (true) {
            if (i-- == 0) return out;
            if (++odo[i] < options) break;
            odo[i] = 0;
        }
    }
}

std::vector<Word> confusable_neighbors(const Word& x, const ChannelParams& params,
                                       std::span<const Word> universe) {
    const std::vector<Word> own = segmented_ball(x, params);
    std::unordered_set<Word, WordHash> own_set(own.begin(), own.end());
    std::vector<Word> out;
    for (const Word& other : universe) {
        if (other == x) continue;
        if (other.size() != params.n())
            throw std::invalid_argument("confusable_neighbors: universe word length differs from n");
        for (const Word& e : segmented_ball(other, params)) {
            if (own_set.count(e)) {
                out.push_back(other);
                break;
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

double confusable_bound(const ChannelParams& params) {
    return std::pow(double(params.b), 2.0 * params.gamma) *
           std::pow(double(params.q), double(params.gamma) * params.t);
}

}  // namespace segdel

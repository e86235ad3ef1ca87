#include "segdel/syndrome.hpp"

#include <algorithm>

namespace segdel {

WindowLayout window_layout(std::size_t n, std::uint64_t rho) {
    if (rho < 1) throw std::invalid_argument("window_layout: rho must be >= 1");
    if (n < 1) throw std::invalid_argument("window_layout: n must be >= 1");
    WindowLayout layout;
    layout.rho = rho;
    const std::uint64_t m = (n + rho - 1) / rho;  // ceil(n/rho)
    if (m <= 2) {
        layout.windows.emplace_back(1, n);
        return layout;
    }
    for (std::uint64_t j = 1; j + 2 <= m; ++j)
        layout.windows.emplace_back((j - 1) * rho + 1, (j + 1) * rho);
    layout.windows.emplace_back((m - 2) * rho + 1, n);
    return layout;
}

std::pair<std::uint32_t, std::uint64_t> a_syndromes(const Word& x, const Pattern& p, std::size_t n) {
    if (n < 1) throw std::invalid_argument("a_syndromes: n must be >= 1");
    std::uint64_t count = 0, possum = 0;
    for (std::size_t pos : occurrence_starts(x, p)) {
        ++count;
        possum += pos;
    }
    return {static_cast<std::uint32_t>(count % 4), possum % (2 * std::uint64_t(n))};
}

WindowEncoder digest_window_encoder(const LabelingScheme& scheme, unsigned q, unsigned N) {
    if (!digest_fits(scheme, q, N))
        throw ConfigError("digest_window_encoder: scheme encoding does not fit below q^N");
    return [scheme, q, N](const Word& w) { return encode_digest(label(w, scheme), scheme, q, N); };
}

std::pair<std::uint64_t, std::uint64_t> window_parities(const Word& x, const WindowLayout& layout,
                                                        const WindowEncoder& encoder,
                                                        std::uint64_t q_pow_n) {
    if (layout.windows.empty() || layout.windows.back().second != x.size())
        throw std::invalid_argument("window_parities: layout does not match word length");
    std::uint64_t eta = 0, zeta = 0;
    for (std::size_t idx = 0; idx < layout.windows.size(); ++idx) {
        const auto [lo, hi] = layout.windows[idx];
        const std::uint64_t digest = encoder(x.slice(lo, hi));
        if (digest >= q_pow_n) throw ConfigError("window_parities: window digest exceeds q^N");
        const std::uint64_t j = idx + 1;
        auto& acc = (j % 2 == 0) ? eta : zeta;
        acc = (acc + digest) % q_pow_n;
    }
    return {eta, zeta};
}

std::pair<std::uint64_t, std::uint64_t> window_parities(const Word& x, const WindowLayout& layout,
                                                        const LabelingScheme& scheme, unsigned q) {
    return window_parities(x, layout, digest_window_encoder(scheme, q, scheme.digest_symbols),
                           checked_pow(q, scheme.digest_symbols));
}

SyndromeTuple f_syndrome(const Word& x, const ChannelParams& params, const WindowEncoder& encoder,
                         std::uint64_t q_pow_n, bool enforce_density) {
    const Pattern p = Pattern::canonical(params.t, params.q);
    if (enforce_density && !is_dense(x, p, params.delta))
        throw std::domain_error("f_syndrome: word is not dense at the configured delta");
    SyndromeTuple f;
    const auto [a0, a1] = a_syndromes(x, p, x.size());
    f.alpha = a0;
    f.beta = a1;
    const WindowLayout layout = window_layout(x.size(), params.rho);
    const auto [eta, zeta] = window_parities(x, layout, encoder, q_pow_n);
    f.eta = eta;
    f.zeta = zeta;
    return f;
}

SyndromeTuple f_syndrome(const Word& x, const ChannelParams& params, const LabelingScheme& scheme,
                         bool enforce_density) {
    return f_syndrome(x, params, digest_window_encoder(scheme, params.q, scheme.digest_symbols),
                      checked_pow(params.q, scheme.digest_symbols), enforce_density);
}

OneBurstResult decode_one_burst(const Word& y, const SyndromeTuple& expected, std::size_t n,
                                unsigned t, const ChannelParams& params,
                                const LabelingScheme& scheme, bool enforce_density,
                                const std::function<bool(const Word&)>& extra_filter) {
    if (y.size() + t != n)
        throw std::invalid_argument("decode_one_burst: |y| must equal n - t");
    std::vector<Word> candidates;
    if (t == 0) {
        candidates.push_back(y);
    } else {
        const auto blocks = all_words(params.q, t);
        for (std::size_t pos = 1; pos <= y.size() + 1; ++pos)
            for (const Word& block : blocks) candidates.push_back(y.with_run(pos, block));
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    }
    const Pattern p = Pattern::canonical(params.t, params.q);
    const WindowEncoder encoder =
        digest_window_encoder(scheme, params.q, scheme.digest_symbols);
    const std::uint64_t q_pow_n = checked_pow(params.q, scheme.digest_symbols);
    OneBurstResult res;
    for (const Word& c : candidates) {
        if (enforce_density && !is_dense(c, p, params.delta)) continue;
        if (f_syndrome(c, params, encoder, q_pow_n, false) != expected) continue;
        if (extra_filter && !extra_filter(c)) continue;
        ++res.survivors;
        if (res.survivors == 1) res.word = c;
    }
    if (res.survivors == 1) {
        res.status = OneBurstStatus::ok;
    } else {
        res.status = res.survivors == 0 ? OneBurstStatus::no_candidate : OneBurstStatus::ambiguous;
        res.word = Word();
    }
    return res;
}

}  // namespace segdel

#include "segdel/labeling.hpp"

#include <algorithm>
#include <limits>

#include "segdel/channel.hpp"
#include "segdel/rng.hpp"

namespace segdel {

namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t next_prime_above(std::uint64_t n) {
    std::uint64_t c = n + 1;
    while (!is_prime(c)) ++c;
    return c;
}

}  // namespace

LabelingScheme LabelingScheme::recommended(unsigned q, std::size_t max_len, unsigned t) {
    LabelingScheme s;
    s.p1 = next_prime_above(2 * std::uint64_t(max_len));
    const std::uint64_t base = std::uint64_t(max_len) * checked_pow(q, t);
    s.p2 = next_prime_above(base * base);
    s.beta = q;
    unsigned n = 0;
    const std::uint64_t emax = (s.p1 - 1) * checked_pow(q, digit_width(q, s.p2)) + (s.p2 - 1);
    while (checked_pow(q, n) <= emax) ++n;
    s.digest_symbols = n;
    return s;
}

Digest label(const Word& x, const LabelingScheme& scheme) {
    scheme.validate();
    Digest d;
    d.length = x.size();
    std::uint64_t power = 1 % scheme.p2;
    for (std::size_t i = 0; i < x.size(); ++i) {
        d.weighted_sum = (d.weighted_sum + (i + 1) * std::uint64_t(x[i])) % scheme.p1;
        d.poly_eval = (d.poly_eval + std::uint64_t(x[i]) * power) % scheme.p2;
        power = (power * scheme.beta) % scheme.p2;
    }
    return d;
}

unsigned digit_width(unsigned q, std::uint64_t modulus) {
    unsigned d = 0;
    std::uint64_t reach = 1;
    while (reach < modulus) {
        reach *= q;
        ++d;
    }
    return d;
}

bool digest_fits(const LabelingScheme& scheme, unsigned q, unsigned N) {
    const unsigned w2 = digit_width(q, scheme.p2);
    unsigned __int128 emax = scheme.p1 - 1;
    emax = emax * checked_pow(q, w2) + (scheme.p2 - 1);
    unsigned __int128 qn = 1;
    for (unsigned i = 0; i < N; ++i) qn *= q;
    return emax < qn;
}

std::uint64_t encode_digest(const Digest& d, const LabelingScheme& scheme, unsigned q, unsigned N) {
    if (!digest_fits(scheme, q, N))
        throw ConfigError("encode_digest: digest does not fit below q^N");
    unsigned __int128 v = d.weighted_sum;
    v = v * checked_pow(q, digit_width(q, scheme.p2)) + d.poly_eval;
    if (v > std::numeric_limits<std::uint64_t>::max())
        throw ConfigError("encode_digest: encoded digest exceeds 64 bits");
    return static_cast<std::uint64_t>(v);
}

RecoverResult recover_from_burst(const Digest& d, const Word& y, unsigned t,
                                 const LabelingScheme& scheme) {
    if (y.size() + t != d.length)
        throw std::invalid_argument("recover_from_burst: |y| must equal digest length - t");
    std::vector<Word> candidates;
    if (t == 0) {
        candidates.push_back(y);
    } else {
        const auto blocks = all_words(y.alphabet(), t);
        for (std::size_t pos = 1; pos <= y.size() + 1; ++pos)
            for (const Word& block : blocks) candidates.push_back(y.with_run(pos, block));
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    }
    RecoverResult res;
    for (const Word& c : candidates)
        if (label(c, scheme) == d) res.candidates.push_back(c);
    if (res.candidates.size() == 1) {
        res.status = RecoverStatus::ok;
        res.word = res.candidates.front();
    } else {
        res.status = res.candidates.empty() ? RecoverStatus::no_candidate : RecoverStatus::ambiguous;
    }
    return res;
}

CertificationReport certify(const LabelingScheme& scheme, const ChannelParams& params,
                            const CertificationDomain& domain, std::uint64_t exhaustive_budget) {
    scheme.validate();
    params.validate_code();
    CertificationReport rep;
    rep.scheme = scheme;
    rep.q = params.q;
    rep.length = params.n();
    rep.t = params.t;
    rep.exhaustive = domain.exhaustive;
    rep.seed = domain.seed;

    const auto test_word = [&](const Word& x) {
        const Digest d = label(x, scheme);
        for (const Word& y : burst_ball(x, params.t)) {
            ++rep.receptions_tested;
            RecoverResult r = recover_from_burst(d, y, params.t, scheme);
            if (r.status != RecoverStatus::ok || r.word != x) {
                CertificationFailure f;
                f.input = x;
                f.received = y;
                f.outcome = r.status;
                f.candidates = std::move(r.candidates);
                rep.failures.push_back(std::move(f));
            }
        }
        ++rep.words_tested;
    };

    if (domain.exhaustive) {
        if (checked_pow(params.q, static_cast<unsigned>(rep.length)) > exhaustive_budget)
            throw std::invalid_argument("certify: exhaustive domain exceeds budget");
        for (const Word& x : all_words(params.q, rep.length, exhaustive_budget)) test_word(x);
    } else {
        if (domain.samples == 0) {
            rep.warnings.push_back("no coverage: sampled domain with zero samples");
            return rep;
        }
        SplitMix64 rng(domain.seed);
        for (std::uint64_t k = 0; k < domain.samples; ++k) {
            std::vector<Symbol> sym(rep.length);
            for (auto& s : sym) s = static_cast<Symbol>(rng.bounded(params.q));
            test_word(Word(std::move(sym), params.q));
        }
    }
    return rep;
}

}  // namespace segdel

#include "segdel/word.hpp"

#include <algorithm>
#include <cmath>

namespace segdel {

void ChannelParams::validate_channel() const {
    if (q < 2) throw std::invalid_argument("ChannelParams: q must be >= 2");
    if (q > 256) throw std::invalid_argument("ChannelParams: q above 256 unsupported");
    if (b == 0) throw std::invalid_argument("ChannelParams: b must be positive");
    if (gamma == 0) throw std::invalid_argument("ChannelParams: gamma must be positive");
    if (t == 0 || t > b) throw std::invalid_argument("ChannelParams: t must satisfy 1 <= t <= b");
}

void ChannelParams::validate_code() const {
    validate_channel();
    if (2ull * t >= b) throw std::invalid_argument("ChannelParams: code constructions assume 2t < b");
    if (rho < t) throw std::invalid_argument("ChannelParams: rho must be >= t");
    if (delta < 2ull * t) throw std::invalid_argument("ChannelParams: delta must be >= 2t");
}

ChannelParams ChannelParams::with_defaults(unsigned q, unsigned b, unsigned t, unsigned gamma) {
    ChannelParams p;
    p.q = q;
    p.b = b;
    p.t = t;
    p.gamma = gamma;
    p.validate_channel();
    const std::size_t n = p.n();
    const auto log2_ceil = [](std::uint64_t v) {
        unsigned e = 0;
        while ((1ull << e) < v) ++e;
        return e;
    };
    p.delta = 2ull * t * checked_pow(q, 2 * t) * std::max(1u, log2_ceil(n));
    p.rho = (q == 2) ? p.delta + t : 3 * p.delta;
    p.digest_symbols = static_cast<unsigned>(
        std::ceil(4.0 * std::log2(2.0 * double(p.rho)) / std::log2(double(q))));
    return p;
}

bool Pattern::is_canonical() const {
    const std::size_t len = word_.size();
    if (len % 2 != 0) return false;
    const std::size_t t = len / 2;
    for (std::size_t i = 0; i < t; ++i)
        if (word_[i] != 0) return false;
    for (std::size_t i = t; i < len; ++i)
        if (word_[i] != 1) return false;
    return true;
}

std::vector<std::size_t> occurrence_starts(const Word& x, const Pattern& p) {
    std::vector<std::size_t> starts;
    if (p.size() > x.size()) return starts;
    const auto& xs = x.symbols();
    const auto& ps = p.word().symbols();
    for (std::size_t i = 0; i + ps.size() <= xs.size(); ++i) {
        if (std::equal(ps.begin(), ps.end(), xs.begin() + i)) starts.push_back(i + 1);
    }
    return starts;
}

Word indicator_vector(const Word& x, const Pattern& p) {
    if (p.size() > x.size()) throw std::invalid_argument("indicator_vector: pattern longer than word");
    std::vector<Symbol> v(x.size(), 0);
    for (std::size_t pos : occurrence_starts(x, p)) v[pos - 1] = 1;
    return Word(std::move(v), 2);
}

bool is_dense(const Word& x, const Pattern& p, std::uint64_t delta) {
    if (delta < p.size()) throw std::invalid_argument("is_dense: delta must be >= |p|");
    if (delta > x.size()) return true;
    // occurrence starts, then verify every delta-window holds one completely
    const auto starts = occurrence_starts(x, p);
    std::size_t next = 0;
    for (std::size_t lo = 1; lo + delta - 1 <= x.size(); ++lo) {
        const std::size_t hi = lo + delta - 1;
        while (next < starts.size() && starts[next] < lo) ++next;
        if (next >= starts.size() || starts[next] + p.size() - 1 > hi) return false;
    }
    return true;
}

Word segment(const Word& x, const ChannelParams& params, unsigned i) {
    params.validate_channel();
    if (x.size() != params.n()) throw std::invalid_argument("segment: word length differs from n");
    if (i < 1 || i > params.gamma) throw std::invalid_argument("segment: index outside [1, gamma]");
    const std::size_t lo = std::size_t(i - 1) * params.b + 1;
    return x.slice(lo, lo + params.b - 1);
}

std::vector<Word> all_words(unsigned q, std::size_t n, std::uint64_t max_count) {
    const std::uint64_t total = checked_pow(q, static_cast<unsigned>(n));
    if (total > max_count) throw std::invalid_argument("all_words: universe exceeds budget");
    std::vector<Word> out;
    out.reserve(total);
    std::vector<Symbol> cur(n, 0);
    for (std::uint64_t k = 0; k < total; ++k) {
        out.emplace_back(cur, q);
        for (std::size_t i = n; i-- > 0;) {
            if (++cur[i] < q) break;
            cur[i] = 0;
        }
    }
    return out;
}

std::uint64_t checked_pow(std::uint64_t q, unsigned e) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (r > std::numeric_limits<std::uint64_t>::max() / q)
            throw std::overflow_error("checked_pow: overflow");
        r *= q;
    }
    return r;
}

}  // namespace segdel

// Alphabet-generic sequences, segmentation, pattern search and density predicates.
#ifndef SEGDEL_WORD_HPP
#define SEGDEL_WORD_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace segdel {

using Symbol = std::uint8_t;

/// A finite sequence over the alphabet {0, ..., q-1}. Value type, ordered
/// lexicographically on symbols (alphabet size first, so mixed-alphabet sets
/// stay well defined).
class Word {
  public:
    Word() = default;
    Word(std::vector<Symbol> symbols, unsigned q) : symbols_(std::move(symbols)), q_(q) { check(); }
    Word(std::initializer_list<int> symbols, unsigned q) : q_(q) {
        symbols_.reserve(symbols.size());
        for (int s : symbols) symbols_.push_back(static_cast<Symbol>(s));
        check();
    }
    static Word zeros(std::size_t n, unsigned q) { return Word(std::vector<Symbol>(n, 0), q); }

    unsigned alphabet() const noexcept { return q_; }
    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    Symbol operator[](std::size_t i) const { return symbols_[i]; }
    const std::vector<Symbol>& symbols() const noexcept { return symbols_; }

    /// x(lo:hi), 1-based inclusive bounds.
    Word slice(std::size_t lo, std::size_t hi) const {
        if (lo < 1 || hi > size() || lo > hi + 1) throw std::invalid_argument("Word::slice: bad bounds");
        return Word(std::vector<Symbol>(symbols_.begin() + lo - 1, symbols_.begin() + hi), q_);
    }
    /// Deletes len symbols starting at 1-based position pos.
    Word without_run(std::size_t pos, std::size_t len) const {
        if (pos < 1 || pos + len - 1 > size()) throw std::invalid_argument("Word::without_run: bad range");
        std::vector<Symbol> out;
        out.reserve(size() - len);
        out.insert(out.end(), symbols_.begin(), symbols_.begin() + pos - 1);
        out.insert(out.end(), symbols_.begin() + pos - 1 + len, symbols_.end());
        return Word(std::move(out), q_);
    }
    /// Inserts block before 1-based position pos (pos = size()+1 appends).
    Word with_run(std::size_t pos, const Word& block) const {
        if (pos < 1 || pos > size() + 1) throw std::invalid_argument("Word::with_run: bad position");
        std::vector<Symbol> out;
        out.reserve(size() + block.size());
        out.insert(out.end(), symbols_.begin(), symbols_.begin() + pos - 1);
        out.insert(out.end(), block.symbols_.begin(), block.symbols_.end());
        out.insert(out.end(), symbols_.begin() + pos - 1, symbols_.end());
        return Word(std::move(out), q_);
    }
    Word& append(const Word& tail) {
        symbols_.insert(symbols_.end(), tail.symbols_.begin(), tail.symbols_.end());
        return *this;
    }
    Symbol last() const {
        if (empty()) throw std::invalid_argument("Word::last: empty word");
        return symbols_.back();
    }

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (auto c = a.q_ <=> b.q_; c != 0) return c;
        return a.symbols_ <=> b.symbols_;
    }

    std::string to_string() const {
        std::string s;
        for (Symbol v : symbols_) {
            if (!s.empty()) s.push_back(',');
            s += std::to_string(unsigned(v));
        }
        return "(" + s + ")";
    }

  private:
    void check() const {
        if (q_ < 2) throw std::invalid_argument("Word: alphabet size must be >= 2");
        if (q_ > 256) throw std::invalid_argument("Word: alphabet size above 256 unsupported");
        for (Symbol s : symbols_)
            if (s >= q_) throw std::invalid_argument("Word: symbol out of alphabet");
    }

    std::vector<Symbol> symbols_;
    unsigned q_ = 2;
};

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept {
        std::uint64_t h = 0x9e3779b97f4a7c15ull ^ (std::uint64_t(w.alphabet()) << 32) ^ w.size();
        for (Symbol s : w.symbols()) {
            h ^= s + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

/// Channel geometry plus the density / window parameters that govern every
/// construction. n = b*gamma always.
struct ChannelParams {
    unsigned q = 2;       ///< alphabet size
    unsigned b = 0;       ///< segment length
    unsigned t = 0;       ///< burst length
    unsigned gamma = 0;   ///< number of segments
    std::uint64_t delta = 0;        ///< density window
    std::uint64_t rho = 0;          ///< syndrome window stride
    unsigned digest_symbols = 0;    ///< digest length N, in q-ary symbols

    std::size_t n() const noexcept { return std::size_t(b) * gamma; }

    /// Channel-model sanity: enough to simulate and enumerate balls.
    void validate_channel() const;
    /// Code-construction assumptions on top of the channel model (2t < b,
    /// rho >= t, delta >= 2t).
    void validate_code() const;

    /// Fills delta / rho / digest_symbols with their formula defaults
    /// (delta = 2t q^{2t} ceil(log2 n), rho = delta + t for q = 2 and
    /// 3*delta otherwise, N = ceil(4 log_q(2 rho))).
    static ChannelParams with_defaults(unsigned q, unsigned b, unsigned t, unsigned gamma);

    friend bool operator==(const ChannelParams&, const ChannelParams&) = default;
};

/// Pattern searched for by the density and indicator machinery. The canonical
/// pattern is 0^t 1^t.
class Pattern {
  public:
    explicit Pattern(Word w) : word_(std::move(w)) {
        if (word_.empty()) throw std::invalid_argument("Pattern: empty");
    }
    static Pattern canonical(unsigned t, unsigned q) {
        if (t < 1) throw std::invalid_argument("Pattern::canonical: t must be >= 1");
        std::vector<Symbol> s(2 * std::size_t(t), 0);
        for (unsigned i = 0; i < t; ++i) s[t + i] = 1;
        return Pattern(Word(std::move(s), q));
    }
    const Word& word() const noexcept { return word_; }
    std::size_t size() const noexcept { return word_.size(); }
    bool is_canonical() const;

  private:
    Word word_;
};

/// 1-based start positions of every occurrence of p in x.
std::vector<std::size_t> occurrence_starts(const Word& x, const Pattern& p);

/// Binary word of length |x|: position i is 1 iff p occurs at i.
Word indicator_vector(const Word& x, const Pattern& p);

/// True iff every length-delta substring of x contains p (vacuously true when
/// delta exceeds |x|).
bool is_dense(const Word& x, const Pattern& p, std::uint64_t delta);

/// The i-th segment x((i-1)b+1 : ib), i in [1, gamma].
Word segment(const Word& x, const ChannelParams& params, unsigned i);

/// All q^n words of length n, lexicographic order. Guarded by max_count.
std::vector<Word> all_words(unsigned q, std::size_t n, std::uint64_t max_count = (1ull << 22));

/// q^e with overflow detection.
std::uint64_t checked_pow(std::uint64_t q, unsigned e);

}  // namespace segdel

#endif

// One-burst labeling: a fixed-length digest from which a word can be
// recovered after any single burst of t deletions. The digest pairs a
// position-weighted sum with a polynomial evaluation; schemes are certified
// empirically per parameter set before use.
#ifndef SEGDEL_LABELING_HPP
#define SEGDEL_LABELING_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "segdel/word.hpp"

namespace segdel {

struct LabelingScheme {
    std::uint64_t p1 = 1;         ///< modulus of the position-weighted sum
    std::uint64_t p2 = 1;         ///< modulus of the polynomial evaluation
    std::uint64_t beta = 2;       ///< evaluation point of the polynomial
    unsigned digest_symbols = 0;  ///< declared digest length N in q-ary symbols

    void validate() const {
        if (p1 < 1 || p2 < 1) throw std::invalid_argument("LabelingScheme: moduli must be >= 1");
        if (beta < 1) throw std::invalid_argument("LabelingScheme: beta must be >= 1");
    }

    /// Sized for recovery at lengths up to max_len with bursts of length t:
    /// p1 = smallest prime > 2*max_len, p2 = smallest prime > (max_len q^t)^2,
    /// beta = q, digest_symbols = exact encoded width.
    static LabelingScheme recommended(unsigned q, std::size_t max_len, unsigned t);

    friend bool operator==(const LabelingScheme&, const LabelingScheme&) = default;
};

struct Digest {
    std::uint64_t weighted_sum = 0;  ///< sum of i*x_i mod p1 (1-based i)
    std::uint64_t poly_eval = 0;     ///< sum of x_i beta^{i-1} mod p2
    std::size_t length = 0;

    friend bool operator==(const Digest&, const Digest&) = default;
};

Digest label(const Word& x, const LabelingScheme& scheme);

/// Base-q digits needed to write values in [0, modulus).
unsigned digit_width(unsigned q, std::uint64_t modulus);

/// Big-endian base-q concatenation of the digest components, as an integer.
/// Throws ConfigError (std::runtime_error) when the widest possible encoding
/// does not fit below q^N.
std::uint64_t encode_digest(const Digest& d, const LabelingScheme& scheme, unsigned q, unsigned N);
bool digest_fits(const LabelingScheme& scheme, unsigned q, unsigned N);

enum class RecoverStatus { ok, ambiguous, no_candidate };

struct RecoverResult {
    RecoverStatus status = RecoverStatus::no_candidate;
    Word word;
    std::vector<Word> candidates;  ///< matching candidates when not unique
};

/// The unique word c with |c| = d.length, y in B^D_t(c) and label(c) = d.
/// Exhaustive insertion search; ambiguity signals undersized moduli.
RecoverResult recover_from_burst(const Digest& d, const Word& y, unsigned t,
                                 const LabelingScheme& scheme);

struct CertificationDomain {
    bool exhaustive = true;
    std::uint64_t samples = 0;  ///< used when not exhaustive
    std::uint64_t seed = 0;
    static CertificationDomain all() { return {true, 0, 0}; }
    static CertificationDomain sampled(std::uint64_t k, std::uint64_t seed) { return {false, k, seed}; }
};

struct CertificationFailure {
    Word input;
    Word received;
    RecoverStatus outcome = RecoverStatus::no_candidate;
    std::vector<Word> candidates;
};

struct CertificationReport {
    LabelingScheme scheme;
    unsigned q = 2;
    std::size_t length = 0;
    unsigned t = 0;
    bool exhaustive = true;
    std::uint64_t seed = 0;
    std::uint64_t words_tested = 0;
    std::uint64_t receptions_tested = 0;
    std::vector<CertificationFailure> failures;
    std::vector<std::string> warnings;

    bool certified() const noexcept { return failures.empty(); }
};

/// Runs recover_from_burst(label(x), y) for every y in B^D_t(x) over the
/// requested domain of x; certified iff every recovery returns x uniquely.
CertificationReport certify(const LabelingScheme& scheme, const ChannelParams& params,
                            const CertificationDomain& domain,
                            std::uint64_t exhaustive_budget = (1ull << 22));

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace segdel

#endif

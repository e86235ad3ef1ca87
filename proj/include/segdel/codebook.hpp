// Constrained codeword classes, codebook construction by syndrome-class
// argmax, segment-chained encoding, and the boundary-identifying decoder.
#ifndef SEGDEL_CODEBOOK_HPP
#define SEGDEL_CODEBOOK_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "segdel/syndrome.hpp"
#include "segdel/word.hpp"

namespace segdel {

/// Structural constraints tying a segment codeword to branch symbol j (the
/// previous segment's last symbol; j = 0 for the first segment):
///   q = 2:  s_1 = 1-j,  s_{t+1} != s_{2t},  s_{b-t+1} = s_b
///   q > 2:  s at every forbidden position != j,  s_{b-t+1} = s_b
struct ClassConstraint {
    unsigned q = 2;
    unsigned b = 0;
    unsigned t = 0;
    unsigned branch = 0;
    std::vector<std::uint32_t> forbidden_positions;  ///< 1-based, q > 2 only
};

/// Default q-ary forbidden position set {1, t, t+1, 2t}.
std::vector<std::uint32_t> default_forbidden_positions(unsigned t);

/// Requires t >= 2 and b >= 3t so the constrained index sets stay disjoint.
ClassConstraint class_constraints(const ChannelParams& params, unsigned branch,
                                  std::span<const std::uint32_t> forbidden = {});

bool satisfies(const Word& s, const ClassConstraint& cs);

struct CodebookBranch {
    SyndromeTuple tuple;
    std::vector<Word> codewords;  ///< lexicographically sorted, size M
};

struct Codebook {
    ChannelParams params;
    LabelingScheme scheme;
    bool density_enforced = false;
    std::vector<std::uint32_t> forbidden_positions;
    std::vector<CodebookBranch> branches;  ///< one per branch symbol j in [0, q)
    std::size_t common_size = 0;           ///< M

    /// Rank of s within branch j's list, if present.
    std::optional<std::size_t> rank(unsigned branch, const Word& s) const;
    /// Re-checks every stored invariant; throws std::invalid_argument.
    void validate() const;
};

struct BuildOptions {
    bool enforce_density = false;
    std::vector<std::uint32_t> forbidden_positions;  ///< empty = default set
    std::uint64_t max_universe = 1ull << 22;
    /// Optional candidate generator replacing exhaustive enumeration.
    std::function<std::vector<Word>()> candidates;
};

struct BuildError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// For each branch, partitions the constraint-satisfying (and dense, when
/// enforced) length-b words by syndrome tuple and keeps the largest class
/// (ties to the smallest tuple). M = min over branches; each list is cut to
/// its lexicographically first M members.
Codebook build_codebook(const ChannelParams& params, const LabelingScheme& scheme,
                        const BuildOptions& options = {});

/// Segment-by-segment encoding: segment 1 from branch 0, segment i > 1 from
/// the branch named by the previous encoded segment's last symbol.
Word encode(std::span<const std::size_t> message, const Codebook& book);

enum class ChainDecodeStatus {
    ok,
    ambiguous_segment,
    no_candidate,
    segment_not_in_codebook,
    length_mismatch
};

struct DecoderTrace {
    enum class Verdict : std::uint8_t { intact, burst_corrected };
    std::vector<std::size_t> cursors;  ///< p_1 .. p_{gamma+1}, p_1 = 0
    std::vector<Verdict> verdicts;
    std::vector<Word> segments;
};

struct DecodeResult {
    ChainDecodeStatus status = ChainDecodeStatus::length_mismatch;
    std::vector<std::size_t> messages;
    Word word;
    DecoderTrace trace;
    unsigned failed_segment = 0;  ///< 1-based, 0 when ok
    std::string detail;
};

/// Boundary-identifying decoder: per segment, a full-length window whose
/// syndrome matches the branch tuple is taken verbatim (cursor advances b);
/// otherwise the one-burst decoder runs on the b-t window and the cursor
/// advances b-t. The final cursor must land exactly on |y|.
DecodeResult decode(const Word& y, const Codebook& book);

/// (1/b) log2 M, bits per symbol.
double rate_bits_per_symbol(const Codebook& book);
/// (1/b) log_q M, q-ary symbols per symbol.
double rate_symbols_per_symbol(const Codebook& book);

}  // namespace segdel

#endif

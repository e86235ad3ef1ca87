// Burst-deletion confusability balls, segmented channel simulation, and the
// exhaustive enumeration oracles built on them.
#ifndef SEGDEL_CHANNEL_HPP
#define SEGDEL_CHANNEL_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "segdel/word.hpp"

namespace segdel {

/// One entry per segment: either no burst or the 1-based start a in
/// [1, b-t+1] of a burst of exactly t deletions inside that segment.
struct ErrorPattern {
    std::vector<std::optional<std::uint32_t>> bursts;

    std::size_t burst_count() const {
        std::size_t c = 0;
        for (const auto& e : bursts) c += e.has_value();
        return c;
    }
    void validate(const ChannelParams& params) const;

    friend bool operator==(const ErrorPattern&, const ErrorPattern&) = default;
};

/// All words obtained from x by deleting t consecutive symbols, deduplicated
/// and sorted.
std::vector<Word> burst_ball(const Word& x, unsigned t);

/// All channel outputs reachable from x: union over every per-segment burst
/// choice (including "no burst"), deduplicated and sorted. Contains x itself.
std::vector<Word> segmented_ball(const Word& x, const ChannelParams& params);

/// Deterministic channel: applies the given pattern segment by segment.
Word apply_channel(const Word& x, const ChannelParams& params, const ErrorPattern& pattern);

/// Random channel: each segment independently suffers a burst with the given
/// probability at a uniformly random admissible start. Deterministic under a
/// fixed seed.
std::pair<Word, ErrorPattern> apply_channel_random(const Word& x, const ChannelParams& params,
                                                   double burst_probability, std::uint64_t seed);

/// Every admissible ErrorPattern for the given geometry, in a fixed order
/// ((b-t+2)^gamma patterns).
std::vector<ErrorPattern> all_error_patterns(const ChannelParams& params);

/// All x' != x in the universe whose segmented ball intersects that of x.
std::vector<Word> confusable_neighbors(const Word& x, const ChannelParams& params,
                                       std::span<const Word> universe);

/// The counting bound b^{2 gamma} q^{gamma t} on |confusable_neighbors| over
/// the full universe.
double confusable_bound(const ChannelParams& params);

}  // namespace segdel

#endif

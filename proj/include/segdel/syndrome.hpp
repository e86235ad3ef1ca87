// The four-component syndrome over dense words: pattern-count and
// position-sum residues plus parity-split sums of overlapping window digests,
// and the one-burst decoder driven by it.
#ifndef SEGDEL_SYNDROME_HPP
#define SEGDEL_SYNDROME_HPP

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "segdel/labeling.hpp"
#include "segdel/word.hpp"

namespace segdel {

/// Overlapping index windows covering [1, n]: window j spans
/// [(j-1)rho+1, (j+1)rho], the last one is clipped to n, and when fewer than
/// two windows would exist the whole of [1, n] becomes the single window j=1.
struct WindowLayout {
    std::uint64_t rho = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> windows;  ///< 1-based inclusive

    std::size_t count() const noexcept { return windows.size(); }
};

WindowLayout window_layout(std::size_t n, std::uint64_t rho);

struct SyndromeTuple {
    std::uint32_t alpha = 0;  ///< pattern count mod 4
    std::uint64_t beta = 0;   ///< position-weighted pattern sum mod 2n
    std::uint64_t eta = 0;    ///< even-window digest sum mod q^N
    std::uint64_t zeta = 0;   ///< odd-window digest sum mod q^N

    friend bool operator==(const SyndromeTuple&, const SyndromeTuple&) = default;
    friend auto operator<=>(const SyndromeTuple&, const SyndromeTuple&) = default;
};

/// (a0, a1): indicator weight mod 4 and position-weighted sum mod 2n.
std::pair<std::uint32_t, std::uint64_t> a_syndromes(const Word& x, const Pattern& p, std::size_t n);

/// Maps a window's content to an integer in [0, q^N).
using WindowEncoder = std::function<std::uint64_t(const Word&)>;

/// Production window encoder: label then big-endian base-q concatenation.
/// Rejects schemes whose encoding cannot fit below q^N.
WindowEncoder digest_window_encoder(const LabelingScheme& scheme, unsigned q, unsigned N);

/// (eta, zeta): per-parity digest sums over the layout's windows, each
/// reduced mod q^N.
std::pair<std::uint64_t, std::uint64_t> window_parities(const Word& x, const WindowLayout& layout,
                                                        const WindowEncoder& encoder,
                                                        std::uint64_t q_pow_n);
std::pair<std::uint64_t, std::uint64_t> window_parities(const Word& x, const WindowLayout& layout,
                                                        const LabelingScheme& scheme, unsigned q);

/// Full syndrome of x with n = |x| (a1 mod 2|x|, layout over |x|).
/// When enforce_density is set, a non-dense x is a domain error.
SyndromeTuple f_syndrome(const Word& x, const ChannelParams& params, const LabelingScheme& scheme,
                         bool enforce_density = false);
/// Same, with an injected window encoder (q^N passed explicitly).
SyndromeTuple f_syndrome(const Word& x, const ChannelParams& params, const WindowEncoder& encoder,
                         std::uint64_t q_pow_n, bool enforce_density = false);

enum class OneBurstStatus { ok, ambiguous, no_candidate };

struct OneBurstResult {
    OneBurstStatus status = OneBurstStatus::no_candidate;
    Word word;
    std::uint32_t survivors = 0;
};

/// Recovers the unique length-n word c with y in B^D_t(c), f(c) = expected,
/// c dense (when enforced) and extra_filter(c) true, by exhaustive insertion
/// search. |y| must be n - t.
OneBurstResult decode_one_burst(const Word& y, const SyndromeTuple& expected, std::size_t n,
                                unsigned t, const ChannelParams& params,
                                const LabelingScheme& scheme, bool enforce_density = false,
                                const std::function<bool(const Word&)>& extra_filter = {});

}  // namespace segdel

#endif

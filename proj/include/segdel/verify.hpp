// Exhaustive and Monte Carlo verification: pairwise ball disjointness,
// decode totality over every admissible error pattern, and the intact-window
// consistency property.
#ifndef SEGDEL_VERIFY_HPP
#define SEGDEL_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "segdel/channel.hpp"
#include "segdel/codebook.hpp"
#include "segdel/serial.hpp"

namespace segdel {

struct Budgets {
    std::uint64_t max_codewords = 1ull << 16;
    std::uint64_t max_patterns = 1ull << 24;  ///< codewords x error patterns
};

struct VerificationReport {
    std::string mode;  ///< "exhaustive" | "montecarlo"
    json config_echo;
    std::uint64_t codewords = 0;
    std::uint64_t pairs_checked = 0;
    std::uint64_t patterns_checked = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    bool complete = true;
    std::vector<json> failures;
    double rate_bits_per_symbol = 0.0;
    double achieved_redundancy_bits = 0.0;
    double class_size_bound = 0.0;
    double confusable_bound = 0.0;
    double wall_ms = 0.0;  ///< console diagnostics only, never serialized

    bool pass() const noexcept { return failures.empty() && complete; }
};

json to_json(const VerificationReport& rep);

/// Checks, over the full code {encode(m)}:
///  (a) pairwise segmented-ball disjointness,
///  (b) decode recovery for every codeword x every error pattern,
///  (c) whenever the decoder takes a full window verbatim, the window equals
///      the true segment and the cursor matches the true boundary.
/// Budget overruns mark the report incomplete instead of silently truncating.
VerificationReport verify_exhaustive(const Codebook& book, const Budgets& budgets = {});

/// Encode -> random channel -> decode, `trials` times, deterministic under
/// the seed.
VerificationReport verify_montecarlo(const Codebook& book, std::uint64_t trials,
                                     std::uint64_t seed, double burst_probability);

}  // namespace segdel

#endif

// Redundancy accounting: guaranteed class-size bounds, achieved redundancy,
// leading-term expressions, and the published-construction comparison table.
#ifndef SEGDEL_REDUNDANCY_HPP
#define SEGDEL_REDUNDANCY_HPP

#include <optional>
#include <string>
#include <vector>

#include "segdel/codebook.hpp"
#include "segdel/word.hpp"

namespace segdel {

/// One comparison-table entry evaluated at a concrete segment length.
struct ComparisonRow {
    std::string alphabet;    ///< "q=2", "q=4", "q>2", ...
    std::string error_type;  ///< "1-del", "1-burst of t-del", ...
    std::string construction;
    std::string formula;
    unsigned b = 0;
    std::optional<double> bits;  ///< empty when the formula has no solution at b
};

/// All comparison rows at segment length b. t1/t2 parameterize the
/// burst-indel rows (u = b/(t1+t2+2)); q parameterizes their lambda.
std::vector<ComparisonRow> comparison_table(unsigned b, unsigned q, unsigned t1, unsigned t2);

struct RedundancyReport {
    ChannelParams params;
    /// b log2 q - log2 M, present when a codebook was supplied.
    std::optional<double> achieved_bits_per_segment;
    std::optional<double> rate_bits_per_symbol;
    /// Guaranteed lower bound on the per-branch max class size
    /// (2^{b-3}/(8b 2^{2N}) binary, q^{b-5}(q-1)^4/(8b q^{2N}) otherwise).
    double class_size_bound = 0.0;
    /// Leading-term redundancy expression with symbolic remainder terms.
    std::string redundancy_expression;
    /// Numeric value of the computable leading terms of that expression.
    double redundancy_leading_bits = 0.0;
    /// Whole-sequence redundancy leading term of the syndrome-compression
    /// alternative, in q-ary symbols: 4 gamma log_q b.
    double compression_total_symbols = 0.0;
    /// b^{2 gamma} q^{gamma t}.
    double confusable_bound = 0.0;
    std::vector<ComparisonRow> comparison;
};

double class_size_bound(const ChannelParams& params, unsigned digest_symbols);

RedundancyReport redundancy_report(const ChannelParams& params, const Codebook* book = nullptr,
                                   unsigned t1 = 1, unsigned t2 = 1);

}  // namespace segdel

#endif

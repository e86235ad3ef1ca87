#include "segdel/redundancy.hpp"

#include <cmath>

#include "segdel/channel.hpp"

namespace segdel {

namespace {

const double kLog2_3 = std::log2(3.0);

/// Solves b = b' + ceil(log2 b') + 7 for b'; empty when no solution exists.
std::optional<unsigned> solve_b_prime(unsigned b) {
    for (unsigned bp = 1; bp + 7 <= b; ++bp) {
        const unsigned lg = static_cast<unsigned>(std::ceil(std::log2(double(bp))));
        if (bp + lg + 7 == b) return bp;
    }
    return std::nullopt;
}

}  // namespace

std::vector<ComparisonRow> comparison_table(unsigned b, unsigned q, unsigned t1, unsigned t2) {
    if (b < 2) throw std::invalid_argument("comparison_table: b must be >= 2");
    const double lb = std::log2(double(b));
    const double lb1 = std::log2(double(b) + 1.0);
    std::vector<ComparisonRow> rows;
    const auto add = [&rows, b](std::string alphabet, std::string error, std::string who,
                                std::string formula, std::optional<double> bits) {
        rows.push_back({std::move(alphabet), std::move(error), std::move(who), std::move(formula),
                        b, bits});
    };

    add("q=2", "1-del", "vt-subset", "log(b+1)+2", lb1 + 2.0);
    add("q=2", "1-ins", "vt-subset", "log(b+1)+2.5", lb1 + 2.5);
    add("q=2", "1-indel", "vt-subset", "log(b+1)+7", lb1 + 7.0);
    add("q=2", "1-del", "vt-systematic", "log(b+1)+2-log 1.5", lb1 + 2.0 - std::log2(1.5));
    add("q=2", "1-ins", "vt-systematic", "log(b+1)+2.5", lb1 + 2.5);
    add("q=2", "1-indel", "marker", "log(b-6)+7",
        b > 7 ? std::optional<double>(std::log2(double(b) - 6.0) + 7.0) : std::nullopt);
    add("q=2", "1-edit", "marker", "log(b-9)+10",
        b > 10 ? std::optional<double>(std::log2(double(b) - 9.0) + 10.0) : std::nullopt);
    add("q=4", "1-indel", "gc-balanced", "log b+6 log 3+6", lb + 6.0 * kLog2_3 + 6.0);
    if (const auto bp = solve_b_prime(b)) {
        add("q=4", "1-edit", "marker-vt", "2 log b'+14, b=b'+ceil(log b')+7",
            2.0 * std::log2(double(*bp)) + 14.0);
    } else {
        add("q=4", "1-edit", "marker-vt", "2 log b'+14, b=b'+ceil(log b')+7", std::nullopt);
    }
    add("q>2", "1-del", "vt-subset", "log b+6-2 log 3", lb + 6.0 - 2.0 * kLog2_3);
    add("q>2", "1-ins", "vt-subset", "log b+8", lb + 8.0);
    add("q>2", "1-indel", "vt-subset", "log b+16", lb + 16.0);
    {
        // burst-indel MDS rows; u is the segment-to-burst ratio
        const double u = double(b) / double(t1 + t2 + 2);
        const double lambda = std::log2(double(q)) / std::floor(1.0 + lb);
        add("q>2", "1-burst <=t1-del/<=t2-ins", "bm-mds", "b log b/u+log b",
            u > 0 ? std::optional<double>(double(b) * lb / u + lb) : std::nullopt);
        add("q>2", "1-burst <=t1-del/<=t2-ins", "bm-db-mds",
            "((lambda+2u)b log b)/(2u(lambda+1))+log b",
            u > 0 ? std::optional<double>((lambda + 2.0 * u) * double(b) * lb /
                                              (2.0 * u * (lambda + 1.0)) +
                                          lb)
                  : std::nullopt);
    }
    add("q=2", "1-burst of t-del", "this construction",
        "log b+8 log log b+o(log log b)+r_{q,t}+3", lb + 8.0 * std::log2(lb) + 3.0);
    add("q>2", "1-burst of t-del", "this construction",
        "log b+8 log log b+o(log log b)+r_{q,t}+5 log q-4 log(q-1)",
        lb + 8.0 * std::log2(lb) + 5.0 * std::log2(double(q)) -
            4.0 * std::log2(double(q) - 1.0));
    return rows;
}

double class_size_bound(const ChannelParams& params, unsigned digest_symbols) {
    const double denom = 8.0 * double(params.b) *
                         std::pow(double(params.q), 2.0 * double(digest_symbols));
    if (params.q == 2) return std::pow(2.0, double(params.b) - 3.0) / denom;
    return std::pow(double(params.q), double(params.b) - 5.0) *
           std::pow(double(params.q) - 1.0, 4.0) / denom;
}

RedundancyReport redundancy_report(const ChannelParams& params, const Codebook* book, unsigned t1,
                                   unsigned t2) {
    RedundancyReport rep;
    rep.params = params;
    const double lb = std::log2(double(params.b));
    const double lq = std::log2(double(params.q));
    unsigned digest_symbols = params.digest_symbols;
    if (book) {
        digest_symbols = book->scheme.digest_symbols;
        rep.achieved_bits_per_segment =
            double(params.b) * lq - std::log2(double(book->common_size));
        rep.rate_bits_per_symbol = rate_bits_per_symbol(*book);
    }
    rep.class_size_bound = class_size_bound(params, digest_symbols);
    if (params.q == 2) {
        rep.redundancy_expression = "log b + 8 log log b + o(log log b) + r_{q,t} + 3";
        rep.redundancy_leading_bits = lb + 8.0 * std::log2(lb) + 3.0;
    } else {
        rep.redundancy_expression =
            "log b + 8 log log b + o(log log b) + r_{q,t} + 5 log q - 4 log(q-1)";
        rep.redundancy_leading_bits =
            lb + 8.0 * std::log2(lb) + 5.0 * lq - 4.0 * std::log2(double(params.q) - 1.0);
    }
    rep.compression_total_symbols = 4.0 * double(params.gamma) * lb / lq;
    rep.confusable_bound = confusable_bound(params);
    rep.comparison = comparison_table(params.b, params.q, t1, t2);
    return rep;
}

}  // namespace segdel

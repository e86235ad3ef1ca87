#include "segdel/codebook.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace segdel {

std::vector<std::uint32_t> default_forbidden_positions(unsigned t) {
    return {1u, t, t + 1u, 2u * t};
}

ClassConstraint class_constraints(const ChannelParams& params, unsigned branch,
                                  std::span<const std::uint32_t> forbidden) {
    params.validate_code();
    if (params.t < 2)
        throw std::invalid_argument("class_constraints: t >= 2 required (the inequality pair degenerates at t = 1)");
    if (params.b < 3 * params.t)
        throw std::invalid_argument("class_constraints: b >= 3t required to keep constrained positions disjoint");
    if (branch >= params.q) throw std::invalid_argument("class_constraints: branch outside [0, q)");
    ClassConstraint cs;
    cs.q = params.q;
    cs.b = params.b;
    cs.t = params.t;
    cs.branch = branch;
    if (params.q > 2) {
        cs.forbidden_positions = forbidden.empty()
                                     ? default_forbidden_positions(params.t)
                                     : std::vector<std::uint32_t>(forbidden.begin(), forbidden.end());
        std::sort(cs.forbidden_positions.begin(), cs.forbidden_positions.end());
        cs.forbidden_positions.erase(
            std::unique(cs.forbidden_positions.begin(), cs.forbidden_positions.end()),
            cs.forbidden_positions.end());
        for (std::uint32_t pos : cs.forbidden_positions)
            if (pos < 1 || pos > params.b - params.t)
                throw std::invalid_argument("class_constraints: forbidden position collides with the suffix pair");
    }
    return cs;
}

bool satisfies(const Word& s, const ClassConstraint& cs) {
    if (s.size() != cs.b) throw std::invalid_argument("satisfies: word length differs from b");
    if (s[cs.b - cs.t] != s[cs.b - 1]) return false;  // s_{b-t+1} = s_b
    if (cs.q == 2) {
        if (s[0] != 1 - cs.branch) return false;        // s_1 = 1-j
        return s[cs.t] != s[2 * cs.t - 1];              // s_{t+1} != s_{2t}
    }
    for (std::uint32_t pos : cs.forbidden_positions)
        if (s[pos - 1] == cs.branch) return false;
    return true;
}

Codebook build_codebook(const ChannelParams& params, const LabelingScheme& scheme,
                        const BuildOptions& options) {
    params.validate_code();
    scheme.validate();
    const WindowEncoder encoder =
        digest_window_encoder(scheme, params.q, scheme.digest_symbols);
    const std::uint64_t q_pow_n = checked_pow(params.q, scheme.digest_symbols);
    const Pattern p = Pattern::canonical(params.t, params.q);

    std::vector<Word> candidates;
    if (options.candidates) {
        candidates = options.candidates();
        for (const Word& w : candidates)
            if (w.size() != params.b || w.alphabet() != params.q)
                throw std::invalid_argument("build_codebook: candidate with wrong length or alphabet");
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    } else {
        if (checked_pow(params.q, params.b) > options.max_universe)
            throw std::invalid_argument("build_codebook: enumeration exceeds the configured budget");
        candidates = all_words(params.q, params.b, options.max_universe);
    }

    std::vector<ClassConstraint> constraints;
    for (unsigned j = 0; j < params.q; ++j)
        constraints.push_back(class_constraints(params, j, options.forbidden_positions));

    Codebook book;
    book.params = params;
    book.scheme = scheme;
    book.density_enforced = options.enforce_density;
    book.forbidden_positions = constraints.front().forbidden_positions;
    book.branches.resize(params.q);

    // One pass: f per candidate, bucketed per branch.  map keeps the
    // tie-break (largest class, then smallest tuple) deterministic.
    std::vector<std::map<SyndromeTuple, std::vector<Word>>> classes(params.q);
    for (const Word& w : candidates) {
        if (options.enforce_density && !is_dense(w, p, params.delta)) continue;
        bool any = false;
        SyndromeTuple f;
        for (unsigned j = 0; j < params.q; ++j) {
            if (!satisfies(w, constraints[j])) continue;
            if (!any) {
                f = f_syndrome(w, params, encoder, q_pow_n, false);
                any = true;
            }
            classes[j][f].push_back(w);
        }
    }

    std::size_t m = std::numeric_limits<std::size_t>::max();
    for (unsigned j = 0; j < params.q; ++j) {
        if (classes[j].empty())
            throw BuildError("build_codebook: branch " + std::to_string(j) +
                             " has no admissible codeword class");
        const auto best = std::max_element(
            classes[j].begin(), classes[j].end(),
            [](const auto& a, const auto& b) { return a.second.size() < b.second.size(); });
        // max_element returns the FIRST maximum; map order makes that the
        // lexicographically smallest tuple among ties.
        book.branches[j].tuple = best->first;
        book.branches[j].codewords = best->second;  // lex-sorted: candidates were
        m = std::min(m, book.branches[j].codewords.size());
    }
    for (auto& branch : book.branches) branch.codewords.resize(m);
    book.common_size = m;
    return book;
}

std::optional<std::size_t> Codebook::rank(unsigned branch, const Word& s) const {
    const auto& list = branches.at(branch).codewords;
    const auto it = std::lower_bound(list.begin(), list.end(), s);
    if (it == list.end() || *it != s) return std::nullopt;
    return static_cast<std::size_t>(it - list.begin());
}

void Codebook::validate() const {
    params.validate_code();
    scheme.validate();
    if (branches.size() != params.q)
        throw std::invalid_argument("Codebook: expected one branch per alphabet symbol");
    if (common_size < 1) throw std::invalid_argument("Codebook: M must be >= 1");
    const WindowEncoder encoder = digest_window_encoder(scheme, params.q, scheme.digest_symbols);
    const std::uint64_t q_pow_n = checked_pow(params.q, scheme.digest_symbols);
    const Pattern p = Pattern::canonical(params.t, params.q);
    for (unsigned j = 0; j < params.q; ++j) {
        const auto& branch = branches[j];
        if (branch.codewords.size() != common_size)
            throw std::invalid_argument("Codebook: branch list size differs from M");
        if (!std::is_sorted(branch.codewords.begin(), branch.codewords.end()))
            throw std::invalid_argument("Codebook: branch list is not sorted");
        if (std::adjacent_find(branch.codewords.begin(), branch.codewords.end()) !=
            branch.codewords.end())
            throw std::invalid_argument("Codebook: duplicate codeword in branch list");
        const ClassConstraint cs = class_constraints(params, j, forbidden_positions);
        for (const Word& w : branch.codewords) {
            if (w.size() != params.b || w.alphabet() != params.q)
                throw std::invalid_argument("Codebook: codeword with wrong length or alphabet");
            if (!satisfies(w, cs))
                throw std::invalid_argument("Codebook: codeword violates its branch constraint");
            if (density_enforced && !is_dense(w, p, params.delta))
                throw std::invalid_argument("Codebook: codeword violates the density requirement");
            if (f_syndrome(w, params, encoder, q_pow_n, false) != branch.tuple)
                throw std::invalid_argument("Codebook: codeword syndrome differs from the branch tuple");
        }
    }
}

Word encode(std::span<const std::size_t> message, const Codebook& book) {
    if (message.size() != book.params.gamma)
        throw std::invalid_argument("encode: expected one index per segment");
    Word out({}, book.params.q);
    unsigned branch = 0;
    for (std::size_t idx : message) {
        if (idx >= book.common_size) throw std::out_of_range("encode: message index outside [0, M)");
        const Word& seg = book.branches.at(branch).codewords[idx];
        out.append(seg);
        branch = seg.last();
    }
    return out;
}

DecodeResult decode(const Word& y, const Codebook& book) {
    const ChannelParams& pr = book.params;
    const WindowEncoder encoder =
        digest_window_encoder(book.scheme, pr.q, book.scheme.digest_symbols);
    const std::uint64_t q_pow_n = checked_pow(pr.q, book.scheme.digest_symbols);

    DecodeResult res;
    res.word = Word({}, pr.q);
    res.trace.cursors.push_back(0);
    unsigned branch = 0;
    std::size_t pos = 0;
    for (unsigned i = 1; i <= pr.gamma; ++i) {
        const std::size_t remaining = y.size() - pos;
        const SyndromeTuple& expected = book.branches.at(branch).tuple;
        Word seg;
        bool intact = false;
        if (remaining >= pr.b) {
            Word window = y.slice(pos + 1, pos + pr.b);
            if (f_syndrome(window, pr, encoder, q_pow_n, false) == expected) {
                seg = std::move(window);
                intact = true;
            }
        }
        if (intact) {
            pos += pr.b;
            res.trace.verdicts.push_back(DecoderTrace::Verdict::intact);
        } else {
            if (remaining < pr.b - pr.t) {
                res.status = ChainDecodeStatus::length_mismatch;
                res.failed_segment = i;
                res.detail = "length mismatch at end: segment window underflows";
                res.messages.clear();
                return res;
            }
            const ClassConstraint cs = class_constraints(pr, branch, book.forbidden_positions);
            const OneBurstResult one = decode_one_burst(
                y.slice(pos + 1, pos + pr.b - pr.t), expected, pr.b, pr.t, pr, book.scheme,
                book.density_enforced, [&cs](const Word& c) { return satisfies(c, cs); });
            if (one.status != OneBurstStatus::ok) {
                res.status = one.status == OneBurstStatus::ambiguous
                                 ? ChainDecodeStatus::ambiguous_segment
                                 : ChainDecodeStatus::no_candidate;
                res.failed_segment = i;
                res.detail = one.status == OneBurstStatus::ambiguous
                                 ? "ambiguous segment: multiple candidates share the expected syndrome"
                                 : "no candidate matches the expected syndrome";
                res.messages.clear();
                return res;
            }
            seg = one.word;
            pos += pr.b - pr.t;
            res.trace.verdicts.push_back(DecoderTrace::Verdict::burst_corrected);
        }
        const auto idx = book.rank(branch, seg);
        if (!idx) {
            res.status = ChainDecodeStatus::segment_not_in_codebook;
            res.failed_segment = i;
            res.detail = "recovered segment " + seg.to_string() + " is not in branch " +
                         std::to_string(branch);
            res.messages.clear();
            return res;
        }
        res.messages.push_back(*idx);
        res.trace.segments.push_back(seg);
        res.trace.cursors.push_back(pos);
        res.word.append(seg);
        branch = seg.last();
    }
    if (pos != y.size()) {
        res.status = ChainDecodeStatus::length_mismatch;
        res.failed_segment = pr.gamma;
        res.detail = "length mismatch at end: trailing symbols remain";
        res.messages.clear();
        return res;
    }
    res.status = ChainDecodeStatus::ok;
    res.failed_segment = 0;
    return res;
}

double rate_bits_per_symbol(const Codebook& book) {
    return std::log2(double(book.common_size)) / double(book.params.b);
}

double rate_symbols_per_symbol(const Codebook& book) {
    return std::log2(double(book.common_size)) /
           (double(book.params.b) * std::log2(double(book.params.q)));
}

}  // namespace segdel

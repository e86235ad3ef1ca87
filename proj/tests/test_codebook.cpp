#include <doctest.h>

#include "oracle.hpp"
#include "segdel/codebook.hpp"
#include "segdel/serial.hpp"

using namespace segdel;

namespace {

ChannelParams crit_binary_params() {
    ChannelParams pr = ChannelParams::with_defaults(2, 8, 2, 2);
    pr.rho = 8;
    pr.digest_symbols = 5;
    return pr;
}
const LabelingScheme kBinaryScheme{1, 17, 2, 5};

ChannelParams ternary_params() {
    ChannelParams pr = ChannelParams::with_defaults(3, 9, 2, 2);
    pr.rho = 9;
    pr.digest_symbols = 6;
    return pr;
}
const LabelingScheme kTernaryScheme{11, 17, 3, 6};

}  // namespace

TEST_CASE("class constraints pin the documented positions") {
    const ClassConstraint bin = class_constraints(crit_binary_params(), 1);
    CHECK(bin.q == 2);
    // s_1 = 0, s_3 != s_4, s_7 = s_8
    CHECK(satisfies(Word({0, 0, 0, 1, 1, 0, 1, 1}, 2), bin));
    CHECK_FALSE(satisfies(Word({0, 0, 1, 1, 1, 0, 1, 0}, 2), bin));  // s_7 != s_8
    CHECK_FALSE(satisfies(Word({1, 0, 0, 1, 1, 0, 1, 1}, 2), bin));  // s_1 must be 0
    CHECK_FALSE(satisfies(Word({0, 0, 1, 1, 1, 0, 1, 1}, 2), bin));  // s_3 = s_4
    CHECK_THROWS_AS(satisfies(Word({0, 0}, 2), bin), std::invalid_argument);

    const ClassConstraint ter = class_constraints(ternary_params(), 0);
    CHECK(ter.forbidden_positions == std::vector<std::uint32_t>{1, 2, 3, 4});
    CHECK(satisfies(Word({1, 1, 1, 1, 0, 0, 0, 2, 2}, 3), ter));
    CHECK_FALSE(satisfies(Word({0, 1, 1, 1, 0, 0, 0, 2, 2}, 3), ter));  // s_1 = branch
    CHECK_FALSE(satisfies(Word({1, 1, 1, 1, 0, 0, 0, 2, 1}, 3), ter));  // suffix pair
}

TEST_CASE("class constraints reject unsupported parameters") {
    ChannelParams t1 = ChannelParams::with_defaults(2, 8, 1, 2);
    CHECK_THROWS_AS(class_constraints(t1, 0), std::invalid_argument);
    ChannelParams narrow = ChannelParams::with_defaults(2, 7, 3, 2);
    CHECK_THROWS_AS(class_constraints(narrow, 0), std::invalid_argument);  // b < 3t
    CHECK_THROWS_AS(class_constraints(crit_binary_params(), 2), std::invalid_argument);
}

TEST_CASE("binary codebook construction is deterministic and well formed") {
    const Codebook book = build_codebook(crit_binary_params(), kBinaryScheme);
    CHECK(book.common_size == 4);
    CHECK(book.branches[0].tuple == SyndromeTuple{0, 0, 0, 9});
    CHECK(book.branches[1].tuple == SyndromeTuple{0, 0, 0, 8});
    CHECK(book.branches[0].codewords ==
          std::vector<Word>{Word({1, 0, 0, 1, 0, 0, 0, 0}, 2), Word({1, 0, 1, 0, 1, 0, 1, 1}, 2),
                            Word({1, 1, 0, 1, 0, 1, 0, 0}, 2), Word({1, 1, 1, 0, 1, 1, 1, 1}, 2)});
    CHECK(book.branches[1].codewords ==
          std::vector<Word>{Word({0, 0, 0, 1, 0, 0, 0, 0}, 2), Word({0, 0, 1, 0, 1, 0, 1, 1}, 2),
                            Word({0, 1, 0, 1, 0, 1, 0, 0}, 2), Word({0, 1, 1, 0, 1, 1, 1, 1}, 2)});
    const Codebook again = build_codebook(crit_binary_params(), kBinaryScheme);
    CHECK(again.common_size == book.common_size);
    CHECK(again.branches[0].codewords == book.branches[0].codewords);
    CHECK(again.branches[1].codewords == book.branches[1].codewords);
    CHECK_NOTHROW(book.validate());
}

TEST_CASE("guaranteed class size with a trivial digest") {
    // with P1 = P2 = 1 the partition collapses onto (alpha, beta); the
    // pigeonhole bound still holds for any declared N
    ChannelParams pr = crit_binary_params();
    pr.digest_symbols = 0;
    const LabelingScheme trivial{1, 1, 2, 0};
    const Codebook book = build_codebook(pr, trivial);
    CHECK(book.common_size == 22);
    CHECK(double(book.common_size) >= std::pow(2.0, 8.0 - 3.0) / (8.0 * 8.0));
}

TEST_CASE("encoding chains branches through final symbols") {
    const Codebook book = build_codebook(crit_binary_params(), kBinaryScheme);
    const std::vector<std::size_t> single{0};
    ChannelParams one = crit_binary_params();
    one.gamma = 1;
    const Codebook book1 = build_codebook(one, kBinaryScheme);
    CHECK(encode(single, book1) == book1.branches[0].codewords.front());

    const std::vector<std::size_t> msg{1, 2};
    const Word x = encode(msg, book);
    CHECK(x == Word({1, 0, 1, 0, 1, 0, 1, 1, 0, 1, 0, 1, 0, 1, 0, 0}, 2));
    // branch of segment 2 equals the last symbol of segment 1
    const Word seg1 = x.slice(1, 8), seg2 = x.slice(9, 16);
    const unsigned branch2 = seg1.last();
    CHECK(book.rank(branch2, seg2).has_value());
    CHECK(satisfies(seg2, class_constraints(book.params, branch2)));

    const std::vector<std::size_t> bad{0, 4};
    CHECK_THROWS_AS(encode(bad, book), std::out_of_range);
    const std::vector<std::size_t> short_msg{0};
    CHECK_THROWS_AS(encode(short_msg, book), std::invalid_argument);
}

TEST_CASE("decode handles clean, corrupted and truncated inputs") {
    const Codebook book = build_codebook(crit_binary_params(), kBinaryScheme);
    const std::vector<std::size_t> msg{1, 2};
    const Word x = encode(msg, book);

    const DecodeResult clean = decode(x, book);
    REQUIRE(clean.status == ChainDecodeStatus::ok);
    CHECK(clean.messages == msg);
    CHECK(clean.word == x);
    CHECK(clean.trace.verdicts ==
          std::vector<DecoderTrace::Verdict>{DecoderTrace::Verdict::intact,
                                             DecoderTrace::Verdict::intact});

    // burst at position 3 of segment 1
    ErrorPattern pat{{3, std::nullopt}};
    const Word y = apply_channel(x, book.params, pat);
    const DecodeResult hit = decode(y, book);
    REQUIRE(hit.status == ChainDecodeStatus::ok);
    CHECK(hit.messages == msg);
    CHECK(hit.word == x);
    CHECK(hit.trace.verdicts ==
          std::vector<DecoderTrace::Verdict>{DecoderTrace::Verdict::burst_corrected,
                                             DecoderTrace::Verdict::intact});
    CHECK(hit.trace.cursors == std::vector<std::size_t>{0, 6, 14});

    // dropping one extra symbol breaks the final cursor contract
    const Word truncated = x.slice(1, x.size() - 1);
    const DecodeResult bad = decode(truncated, book);
    CHECK(bad.status == ChainDecodeStatus::length_mismatch);
}

TEST_CASE("ternary codebook round-trips every single-burst pattern") {
    const Codebook book = build_codebook(ternary_params(), kTernaryScheme,
                                         BuildOptions{false, {}, 1 << 20, nullptr});
    CHECK(book.common_size == 11);
    const std::vector<std::size_t> msg{7, 3};
    const Word x = encode(msg, book);
    for (std::size_t a = 1; a <= book.params.b - book.params.t + 1; ++a) {
        for (int which = 0; which < 2; ++which) {
            ErrorPattern pat{{std::nullopt, std::nullopt}};
            pat.bursts[which] = static_cast<std::uint32_t>(a);
            const Word y = apply_channel(x, book.params, pat);
            const DecodeResult r = decode(y, book);
            REQUIRE(r.status == ChainDecodeStatus::ok);
            CHECK(r.messages == msg);
            CHECK(r.word == x);
            // cursor advances are b or b-t and end on |y|
            for (std::size_t i = 1; i < r.trace.cursors.size(); ++i) {
                const std::size_t step = r.trace.cursors[i] - r.trace.cursors[i - 1];
                CHECK((step == book.params.b || step == book.params.b - book.params.t));
            }
            CHECK(r.trace.cursors.back() == y.size());
        }
    }
}

TEST_CASE("rates follow the codebook size") {
    Codebook fake;
    fake.params = crit_binary_params();
    fake.common_size = 16;
    CHECK(rate_bits_per_symbol(fake) == doctest::Approx(0.5));
    fake.common_size = 1;
    CHECK(rate_bits_per_symbol(fake) == 0.0);
    fake.common_size = 256;  // M = 2^b: the unreachable unit-rate ceiling
    CHECK(rate_bits_per_symbol(fake) == 1.0);
    const Codebook book = build_codebook(crit_binary_params(), kBinaryScheme);
    CHECK(rate_bits_per_symbol(book) == 0.25);
    CHECK(rate_symbols_per_symbol(book) == 0.25);  // q = 2
}

TEST_CASE("codebook serialization round-trips and the loader re-validates") {
    const Codebook book = build_codebook(crit_binary_params(), kBinaryScheme);
    const json j = to_json(book);
    const Codebook loaded = codebook_from_json(j);
    CHECK(loaded.common_size == book.common_size);
    CHECK(loaded.branches[0].codewords == book.branches[0].codewords);
    CHECK(loaded.branches[1].tuple == book.branches[1].tuple);
    CHECK(to_json(loaded) == j);

    json tampered = j;
    tampered["branches"][0]["tuple"]["zeta"] = 3;  // wrong class tuple
    CHECK_THROWS_AS(codebook_from_json(tampered), std::invalid_argument);

    json swapped = j;
    std::swap(swapped["branches"][0]["codewords"][0], swapped["branches"][0]["codewords"][1]);
    CHECK_THROWS_AS(codebook_from_json(swapped), std::invalid_argument);  // lost lex order

    json wrong_m = j;
    wrong_m["M"] = 3;
    CHECK_THROWS_AS(codebook_from_json(wrong_m), std::invalid_argument);
}

TEST_CASE("boundary windows never mimic the previous segment tail") {
    // every chained pair, every burst start: the first t received symbols of
    // the damaged segment differ from the previous segment's last t symbols
    for (int variant = 0; variant < 2; ++variant) {
        const Codebook book = variant == 0
                                  ? build_codebook(crit_binary_params(), kBinaryScheme)
                                  : build_codebook(ternary_params(), kTernaryScheme);
        const unsigned b = book.params.b, t = book.params.t;
        for (const auto& prev_branch : book.branches) {
            for (const Word& prev : prev_branch.codewords) {
                const Word tail = prev.slice(b - t + 1, b);
                for (const Word& next : book.branches[prev.last()].codewords) {
                    for (std::size_t a = 1; a + t - 1 <= b; ++a) {
                        const Word head = next.without_run(a, t).slice(1, t);
                        CHECK(head != tail);
                    }
                }
            }
        }
    }
}

TEST_CASE("density-enforced construction carries the requirement end to end") {
    ChannelParams pr = crit_binary_params();
    pr.delta = 8;  // test-scale window: every segment must contain 0011
    pr.digest_symbols = 3;
    const LabelingScheme scheme{1, 7, 2, 3};
    BuildOptions opts;
    opts.enforce_density = true;
    const Codebook book = build_codebook(pr, scheme, opts);
    CHECK(book.common_size == 2);
    CHECK(book.density_enforced);
    const Pattern p = Pattern::canonical(pr.t, pr.q);
    for (const auto& br : book.branches)
        for (const Word& w : br.codewords) CHECK(is_dense(w, p, pr.delta));

    // decode still recovers every single-burst corruption
    const std::vector<std::size_t> msg{1, 0};
    const Word x = encode(msg, book);
    for (std::size_t a = 1; a + pr.t - 1 <= pr.b; ++a) {
        ErrorPattern pat{{static_cast<std::uint32_t>(a), std::nullopt}};
        const DecodeResult r = decode(apply_channel(x, pr, pat), book);
        REQUIRE(r.status == ChainDecodeStatus::ok);
        CHECK(r.messages == msg);
    }

    // the loader rejects a smuggled codeword (constraint or tuple mismatch)
    json j = to_json(book);
    j["branches"][0]["codewords"][0] = json::array({1, 0, 0, 0, 0, 0, 0, 0});
    CHECK_THROWS_AS(codebook_from_json(j), std::invalid_argument);

    // validate() rejects a sparse codeword even when constraints and tuple hold
    Codebook sparse_book;
    sparse_book.params = pr;
    sparse_book.scheme = scheme;
    sparse_book.density_enforced = true;
    sparse_book.common_size = 1;
    sparse_book.branches.resize(2);
    const Word sparse0({1, 0, 1, 0, 1, 0, 0, 0}, 2);  // no 0011 anywhere
    const Word sparse1({0, 0, 1, 0, 1, 0, 0, 0}, 2);
    sparse_book.branches[0].codewords = {sparse0};
    sparse_book.branches[0].tuple = f_syndrome(sparse0, pr, scheme, false);
    sparse_book.branches[1].codewords = {sparse1};
    sparse_book.branches[1].tuple = f_syndrome(sparse1, pr, scheme, false);
    CHECK_THROWS_WITH_AS(sparse_book.validate(),
                         "Codebook: codeword violates the density requirement",
                         std::invalid_argument);
    sparse_book.density_enforced = false;
    CHECK_NOTHROW(sparse_book.validate());
}

TEST_CASE("custom candidate generators feed construction") {
    ChannelParams pr = crit_binary_params();
    BuildOptions opts;
    opts.candidates = [&pr]() { return all_words(pr.q, pr.b); };
    const Codebook book = build_codebook(pr, kBinaryScheme, opts);
    CHECK(book.common_size == 4);

    BuildOptions starved;
    starved.candidates = []() { return std::vector<Word>{Word({1, 1, 1, 1, 1, 1, 1, 1}, 2)}; };
    CHECK_THROWS_AS(build_codebook(pr, kBinaryScheme, starved), BuildError);

    BuildOptions tiny;
    tiny.max_universe = 16;
    CHECK_THROWS_AS(build_codebook(pr, kBinaryScheme, tiny), std::invalid_argument);
}

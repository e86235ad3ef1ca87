#include <doctest.h>

#include <set>

#include "oracle.hpp"
#include "segdel/channel.hpp"

using namespace segdel;

namespace {
std::set<Word> as_set(const std::vector<Word>& v) { return {v.begin(), v.end()}; }
}  // namespace

TEST_CASE("burst ball enumerates every deletion window") {
    CHECK(as_set(burst_ball(Word({0, 1, 0}, 2), 1)) ==
          std::set<Word>{Word({1, 0}, 2), Word({0, 0}, 2), Word({0, 1}, 2)});
    CHECK(as_set(burst_ball(Word({0, 0, 1, 1}, 2), 2)) ==
          std::set<Word>{Word({1, 1}, 2), Word({0, 1}, 2), Word({0, 0}, 2)});
    CHECK(as_set(burst_ball(Word({0, 0, 0}, 2), 1)) == std::set<Word>{Word({0, 0}, 2)});
    CHECK_THROWS_AS(burst_ball(Word({0, 1}, 2), 2), std::invalid_argument);
}

TEST_CASE("burst ball size is bounded by the window count") {
    oracle::WordGen gen(11);
    for (int rep = 0; rep < 100; ++rep) {
        const Word x = gen.word(3 + gen.next() % 10, 2);
        const unsigned t = 1 + gen.next() % (x.size() - 1);
        const auto ball = burst_ball(x, t);
        CHECK(ball.size() <= x.size() - t + 1);
        CHECK(as_set(ball) == oracle::ball(x, t));
    }
}

TEST_CASE("segmented ball matches the stated examples") {
    ChannelParams pr = ChannelParams::with_defaults(2, 2, 1, 2);
    CHECK(as_set(segmented_ball(Word({0, 1, 1, 0}, 2), pr)) ==
          std::set<Word>{Word({0, 1, 1, 0}, 2), Word({1, 1, 0}, 2), Word({0, 1, 0}, 2),
                         Word({0, 1, 1}, 2), Word({1, 0}, 2), Word({1, 1}, 2), Word({0, 0}, 2),
                         Word({0, 1}, 2)});
    CHECK(as_set(segmented_ball(Word({0, 0, 0, 0}, 2), pr)) ==
          std::set<Word>{Word({0, 0, 0, 0}, 2), Word({0, 0, 0}, 2), Word({0, 0}, 2)});
}

TEST_CASE("pattern count identity and ball round-trip through apply_channel") {
    ChannelParams pr = ChannelParams::with_defaults(2, 4, 2, 2);
    const auto patterns = all_error_patterns(pr);
    CHECK(patterns.size() == 16);  // (b - t + 2)^gamma

    oracle::WordGen gen(12);
    for (int rep = 0; rep < 25; ++rep) {
        const Word x = gen.word(pr.n(), 2);
        std::set<Word> via_patterns;
        for (const ErrorPattern& pat : patterns) via_patterns.insert(apply_channel(x, pr, pat));
        CHECK(via_patterns == as_set(segmented_ball(x, pr)));
        CHECK(via_patterns == oracle::segmented_ball(x, pr.b, pr.t, pr.gamma));
        // member lengths run from n - gamma*t to n in steps of t
        for (const Word& e : via_patterns) {
            CHECK(e.size() >= pr.n() - std::size_t(pr.gamma) * pr.t);
            CHECK(e.size() <= pr.n());
            CHECK((pr.n() - e.size()) % pr.t == 0);
        }
    }
}

TEST_CASE("deterministic channel") {
    ChannelParams pr = ChannelParams::with_defaults(2, 2, 1, 2);
    const Word x({0, 1, 1, 0}, 2);
    ErrorPattern none_then_first{{std::nullopt, 1}};
    CHECK(apply_channel(x, pr, none_then_first) == Word({0, 1, 0}, 2));
    ErrorPattern all_none{{std::nullopt, std::nullopt}};
    CHECK(apply_channel(x, pr, all_none) == x);
    ErrorPattern both_second{{2, 2}};
    CHECK(apply_channel(x, pr, both_second) == Word({0, 1}, 2));

    ErrorPattern bad{{3, std::nullopt}};
    CHECK_THROWS_AS(apply_channel(x, pr, bad), std::invalid_argument);
    ErrorPattern short_pattern{{std::nullopt}};
    CHECK_THROWS_AS(apply_channel(x, pr, short_pattern), std::invalid_argument);
}

TEST_CASE("random channel honors probability extremes and the seed") {
    ChannelParams pr = ChannelParams::with_defaults(2, 2, 1, 3);
    oracle::WordGen gen(13);
    const Word x = gen.word(pr.n(), 2);

    const auto [y0, p0] = apply_channel_random(x, pr, 0.0, 5);
    CHECK(y0 == x);
    CHECK(p0.burst_count() == 0);

    const auto [y1, p1] = apply_channel_random(x, pr, 1.0, 5);
    CHECK(p1.burst_count() == pr.gamma);
    CHECK(y1.size() == pr.n() - std::size_t(pr.gamma) * pr.t);

    const auto [y1b, p1b] = apply_channel_random(x, pr, 1.0, 5);
    CHECK(y1 == y1b);
    CHECK(p1 == p1b);
    const auto [y2, p2] = apply_channel_random(x, pr, 1.0, 6);
    CHECK(y2.size() == y1.size());  // different seed stays admissible
    CHECK_THROWS_AS(apply_channel_random(x, pr, 1.5, 5), std::invalid_argument);
}

TEST_CASE("confusable neighbors") {
    ChannelParams pr = ChannelParams::with_defaults(2, 2, 1, 2);
    const auto universe = all_words(2, 4);
    const Word zero({0, 0, 0, 0}, 2);
    const auto neighbors = confusable_neighbors(zero, pr, universe);
    bool has_0001 = false;
    for (const Word& w : neighbors) has_0001 = has_0001 || w == Word({0, 0, 0, 1}, 2);
    CHECK(has_0001);
    CHECK(neighbors.size() <= confusable_bound(pr));

    const std::vector<Word> self{zero};
    CHECK(confusable_neighbors(zero, pr, self).empty());
}

TEST_CASE("neighbor count respects the counting bound at a checkable size") {
    ChannelParams pr = ChannelParams::with_defaults(2, 3, 1, 2);
    const auto universe = all_words(2, pr.n());
    for (const Word& x : universe)
        CHECK(confusable_neighbors(x, pr, universe).size() <= confusable_bound(pr));
}

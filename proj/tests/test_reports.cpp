#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "segdel/redundancy.hpp"
#include "segdel/serial.hpp"

using namespace segdel;

namespace {
std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}
}  // namespace

TEST_CASE("comparison table reproduces the published formulas") {
    const auto rows = comparison_table(15, 2, 1, 1);
    bool found = false;
    for (const auto& r : rows) {
        if (r.alphabet == "q=2" && r.error_type == "1-del" && r.construction == "vt-subset") {
            found = true;
            CHECK(*r.bits == 6.0);  // log(15+1) + 2, exact
        }
        if (r.construction == "this construction") {
            CHECK(r.formula.find("r_{q,t}") != std::string::npos);
            CHECK(r.formula.find("o(log log b)") != std::string::npos);
        }
    }
    CHECK(found);

    // b' solving b = b' + ceil(log b') + 7 at b = 15 is 5
    for (const auto& r : comparison_table(15, 4, 1, 1))
        if (r.construction == "marker-vt") CHECK(*r.bits == doctest::Approx(2.0 * std::log2(5.0) + 14.0));
    CHECK_THROWS_AS(comparison_table(1, 2, 1, 1), std::invalid_argument);
}

TEST_CASE("class size bounds evaluate the closed forms") {
    ChannelParams b16 = ChannelParams::with_defaults(2, 16, 2, 2);
    CHECK(class_size_bound(b16, 2) == 4.0);  // 2^13 / (8*16*2^4)
    ChannelParams q3 = ChannelParams::with_defaults(3, 9, 2, 2);
    CHECK(class_size_bound(q3, 1) == doctest::Approx(2.0));  // 3^4*2^4 / (72*9)
}

TEST_CASE("redundancy report carries bounds, expressions and comparisons") {
    ChannelParams pr = ChannelParams::with_defaults(2, 8, 2, 2);
    pr.digest_symbols = 5;
    const RedundancyReport rep = redundancy_report(pr);
    CHECK_FALSE(rep.achieved_bits_per_segment.has_value());
    CHECK(rep.redundancy_expression.find("r_{q,t}") != std::string::npos);
    CHECK(rep.redundancy_expression.find("o(log log b)") != std::string::npos);
    CHECK(rep.confusable_bound == doctest::Approx(std::pow(8.0, 4.0) * 16.0));
    CHECK(rep.compression_total_symbols == doctest::Approx(8.0 * std::log2(8.0) / 1.0));
    CHECK_FALSE(rep.comparison.empty());

    ChannelParams small = ChannelParams::with_defaults(2, 4, 1, 2);
    CHECK(confusable_bound(small) == 1024.0);  // 4^4 * 2^2

    const json j = to_json(rep);
    CHECK(j.contains("comparison"));
    CHECK(j.at("class_size_bound").get<double>() == rep.class_size_bound);
}

TEST_CASE("emission is byte stable and rejects unknown formats") {
    const json doc{{"b", 1.5}, {"a", json::array({1, 2, 3})}};
    const auto dir = std::filesystem::temp_directory_path();
    const auto p1 = dir / "segdel_emit_a.json";
    const auto p2 = dir / "segdel_emit_b.json";
    emit(doc, "json", p1);
    emit(doc, "json", p2);
    CHECK(slurp(p1) == slurp(p2));
    CHECK(slurp(p1).find("\"a\"") < slurp(p1).find("\"b\""));  // sorted keys
    CHECK_THROWS_AS(emit(doc, "xml", p1), std::invalid_argument);
    std::filesystem::remove(p1);
    std::filesystem::remove(p2);

    const auto rows = comparison_csv(comparison_table(8, 2, 1, 1));
    CHECK(rows.front() ==
          std::vector<std::string>{"alphabet", "error_type", "construction", "formula", "b", "bits"});
    CHECK(rows.size() == comparison_table(8, 2, 1, 1).size() + 1);
    const auto pc = dir / "segdel_emit.csv";
    emit(rows, "csv", pc);
    const std::string text = slurp(pc);
    CHECK(text.find("alphabet,error_type") == 0);
    CHECK_THROWS_AS(emit(rows, "json", pc), std::invalid_argument);
    std::filesystem::remove(pc);
}

TEST_CASE("error pattern serialization uses none and burst entries") {
    ErrorPattern pat{{std::nullopt, 3}};
    const json j = to_json(pat);
    CHECK(j[0] == "none");
    CHECK(j[1] == json{{"burst", 3}});
    CHECK(pattern_from_json(j) == pat);
    CHECK_THROWS_AS(pattern_from_json(json::array({json{{"bad", 1}}})), std::invalid_argument);
}

TEST_CASE("scheme and params serialization round-trips") {
    const LabelingScheme s{29, 2309, 2, 13};
    CHECK(scheme_from_json(to_json(s)) == s);
    ChannelParams pr = ChannelParams::with_defaults(3, 9, 2, 2);
    pr.digest_symbols = 6;
    CHECK(params_from_json(to_json(pr)) == pr);
    // omitted tuning fields fall back to the formula defaults
    const ChannelParams defaulted = params_from_json(json{{"q", 2}, {"b", 8}, {"t", 2}, {"gamma", 2}});
    CHECK(defaulted.delta == ChannelParams::with_defaults(2, 8, 2, 2).delta);
}

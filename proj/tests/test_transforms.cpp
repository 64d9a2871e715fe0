#include <doctest.h>

#include "symbrank/transforms.hpp"

#include <algorithm>

using namespace symbrank;

namespace {

Word flipped(const Word& w) {
    std::string s = w.bits();
    for (char& c : s) c = (c == '0') ? '1' : '0';
    return Word(s);
}

}  // namespace

TEST_CASE("gallery names") {
    RankConstruction c = gallery("chacon");
    CHECK(c.expand(2, 1).bits() == "0010001010010");
    CHECK(gallery("chacon_like(1)").schedule() == ScheduleKind::Periodic);
    CHECK(gallery("prop_6_10").max_level() == 10);
    CHECK(gallery("prop_6_11(2)").schedule() == ScheduleKind::Periodic);
    CHECK(gallery("mef").arity(1) == 2);
    CHECK_THROWS_AS(gallery("nonsense"), std::invalid_argument);
    CHECK_THROWS_AS(gallery("chacon_like(x)"), std::invalid_argument);
}

TEST_CASE("chacon_like languages pick up flipped transitions") {
    RankConstruction c = gallery("chacon_like(2)");
    CHECK(validate(c).empty());
    LanguageSnapshot snap = language(c, 3, 4);
    CHECK(snap.stabilized);
    CHECK(snap.members.count(Word("110")) == 1);
    CHECK(snap.members.count(Word("011")) == 1);
}

TEST_CASE("prop_6_10 spacers grow linearly") {
    RankConstruction c = gallery("prop_6_10");
    CHECK(validate(c).empty());
    SpacerStats stats = spacer_stats(c, 9);
    for (std::size_t n = 0; n < stats.per_step_max.size(); ++n)
        CHECK(stats.per_step_max[n] == 3 * static_cast<int>(n) + 2);
    CHECK(minimality_verdict(c, 9).verdict ==
          MinimalityVerdict::NotMinimalEvidence);
}

TEST_CASE("prop_6_11 stays minimal with a huge rank-1 lookalike cycle") {
    RankConstruction c = gallery("prop_6_11(2)");
    CHECK(validate(c).empty());
    CHECK(check_proper(c, 3).proper);
    CHECK(minimality_verdict(c, 3).verdict == MinimalityVerdict::MinimalCertified);
}

TEST_CASE("good_cover of chacon") {
    RankConstruction c = gallery("chacon");
    GoodCoverResult gc = good_cover(c, 3);
    CHECK(gc.trace == std::vector<int>{3, 7, 11});
    CHECK(gc.cover.arity(1) == 2);  // 2n with n = 1
    CHECK(check_proper(gc.cover, 2).proper);
    CHECK(check_good(gc.cover, 1).good);
    // paired words share lengths; word 1 is the source level word
    CHECK(gc.cover.length(1, 1) == gc.cover.length(1, 2));
    // the table pairs cover words with source words at the second trace level
    REQUIRE(gc.table.sources.size() == 2);
    CHECK(gc.table.sources[0] == gc.cover.expand(1, 1));
    CHECK(gc.table.sources[1] == gc.cover.expand(1, 2));
    CHECK(gc.table.targets[0] == gc.table.targets[1]);
    CHECK(gc.table.targets[0] == c.expand(7, 1));
}

TEST_CASE("apply_substitution maps cover windows into the source language") {
    RankConstruction c = gallery("chacon");
    GoodCoverResult gc = good_cover(c, 3);
    std::size_t maxlen = gc.cover.expand(1, 1).size();
    std::size_t margin = maxlen - 1;
    Word win = gc.cover.expand(2, 1).sub(0, 2 * maxlen + 3000);
    WindowContext image = apply_substitution({win, 0}, gc.cover, gc.table);
    CHECK(image.word.size() == win.size() - 2 * margin);
    CHECK(image.origin == static_cast<std::int64_t>(margin));
    // the image is a subword of the source expansion
    Word deep = c.expand(11, 1);
    CHECK_FALSE(occurrences(image.word, deep).empty());

    WindowContext ones{Word::ones(2 * maxlen), 0};
    WindowContext ones_image = apply_substitution(ones, gc.cover, gc.table);
    CHECK(ones_image.word == Word::ones(2 * maxlen - 2 * margin));

    CHECK_THROWS_AS(apply_substitution({Word::ones(10), 0}, gc.cover, gc.table),
                    std::runtime_error);
}

TEST_CASE("sliding block codes") {
    WindowContext ctx{Word("000111010"), 5};
    WindowContext id = apply_code(ctx, identity_code());
    CHECK(id.word == ctx.word);
    CHECK(id.origin == 5);
    WindowContext flip = apply_code(ctx, bit_flip_code());
    CHECK(flip.word.bits() == "111000101");
    WindowContext maj = apply_code(ctx, majority3_code());
    CHECK(maj.word.bits() == "0011110");
    CHECK(maj.origin == 6);
}

TEST_CASE("factor through the identity code reproduces the source") {
    RankConstruction c = gallery("chacon");
    FactorResult fr = factor_construction(c, identity_code(), 3);
    CHECK(fr.level_sizes == std::vector<std::size_t>{1, 1, 1});
    CHECK(fr.construction.expand(2, 1) == c.expand(2, 1));
    for (int i = 0; i < 3; ++i) {
        CHECK(fr.construction.step(i).buildings[0].blocks ==
              std::vector<int>{1, 1, 1});
        CHECK(fr.construction.step(i).buildings[0].spacers ==
              std::vector<int>{0, 1});
    }
}

TEST_CASE("factor through the bit flip lands in the flipped language") {
    RankConstruction c = gallery("chacon");
    FactorResult fr = factor_construction(c, bit_flip_code(), 3);
    CHECK(fr.k1 == 2);  // chacon 1-runs cap at 1
    REQUIRE_FALSE(fr.level_sizes.empty());
    Word deep = flipped(c.expand(7, 1));
    int top = fr.construction.max_level();
    for (int level = 1; level <= top; ++level) {
        for (int j = 1; j <= fr.construction.arity(level); ++j) {
            Word w = fr.construction.expand(level, j);
            CHECK_FALSE(occurrences(w, deep).empty());
        }
    }
}

TEST_CASE("mef recursion and lengths") {
    MEFParams params;
    params.a = {8, 26, 90, 318};
    CHECK(params.p(0) == 1);
    CHECK(params.q(0) == 1);
    CHECK(params.p(1) == 4);
    CHECK(params.q(1) == 3);
    CHECK(params.p(2) == 14);
    CHECK(params.q(2) == 11);
    CHECK(params.p(3) == 50);
    CHECK(params.q(3) == 39);
    CHECK(params.A(0) == 1);
    CHECK(params.A(2) == 208);
    CHECK(mef_violations(params, 4).empty());

    RankConstruction c = mef_construction(params, 4);
    CHECK(validate(c).empty());
    for (int i = 1; i <= 4; ++i) {
        CHECK(c.length(i, 1) == params.p(i) * params.A(i));
        CHECK(c.length(i, 2) == params.q(i) * params.A(i));
    }
    CHECK(c.expand(1, 1) ==
          Word::zeros(8) + Word::ones(16) + Word::zeros(8));
    CHECK(c.expand(1, 2) ==
          Word::zeros(8) + Word::ones(8) + Word::zeros(8));

    MEFParams bad;
    bad.a = {2};
    CHECK_FALSE(mef_violations(bad, 1).empty());
}

TEST_CASE("mef digit reads") {
    MEFParams params;
    params.a = {8};
    CHECK(mef_digits(params, BigInt(-3), 0) == 6);
    CHECK(mef_digits(params, BigInt(0), 0) == 1);
    CHECK(mef_digits(params, BigInt(7), 0) == 8);
    CHECK(mef_digits(params, BigInt(8), 0) == 1);
}

TEST_CASE("cyclic partition verification") {
    PartitionReport r2 = verify_cyclic_partition(2, 8);
    CHECK(r2.pass);
    PartitionReport r3 = verify_cyclic_partition(3, 8);
    CHECK(r3.pass);
}

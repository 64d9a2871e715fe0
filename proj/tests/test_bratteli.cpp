#include <doctest.h>

#include "symbrank/bratteli.hpp"

#include <set>

using namespace symbrank;

namespace {

OrderedBratteliDiagram odometer(const std::vector<int>& a) {
    OrderedBratteliDiagram d;
    d.level_sizes.assign(a.size() + 1, 1);
    for (int fan : a) d.incoming.push_back({std::vector<int>(fan, 1)});
    return d;
}

OrderedBratteliDiagram two_tower() {
    // heights (3, 2) at level 1
    OrderedBratteliDiagram d;
    d.level_sizes = {1, 2};
    d.incoming = {{{1, 1, 1}, {1, 1}}};
    return d;
}

}  // namespace

TEST_CASE("validate_diagram") {
    CHECK(validate_diagram(odometer({2, 3})).empty());
    CHECK(validate_diagram(two_tower()).empty());

    OrderedBratteliDiagram bad_root;
    bad_root.level_sizes = {2, 1};
    bad_root.incoming = {{{1, 2}}};
    CHECK_FALSE(validate_diagram(bad_root).empty());

    OrderedBratteliDiagram dangling;
    dangling.level_sizes = {1, 2, 1};
    dangling.incoming = {{{1}, {1}}, {{1, 1}}};  // level-2 never uses source 2
    auto v = validate_diagram(dangling);
    REQUIRE(v.size() == 1);
    CHECK(v[0].find("source-surjectivity") != std::string::npos);

    OrderedBratteliDiagram out_of_range;
    out_of_range.level_sizes = {1, 1};
    out_of_range.incoming = {{{1, 2}}};
    CHECK_FALSE(validate_diagram(out_of_range).empty());
}

TEST_CASE("heights") {
    OrderedBratteliDiagram d;
    d.level_sizes = {1, 2, 2};
    d.incoming = {{{1, 1, 1}, {1, 1}}, {{1, 2, 1}, {1, 2}}};
    CHECK(heights(d, 1) == HeightVector{3, 2});
    CHECK(heights(d, 2) == HeightVector{8, 5});
    CHECK(heights(d, 0) == HeightVector{1});
    CHECK_THROWS_AS(heights(d, 3), std::out_of_range);
}

TEST_CASE("telescope_diagram composes path counts") {
    OrderedBratteliDiagram d;
    d.level_sizes = {1, 2, 2, 2};
    d.incoming = {{{1, 1}, {1}},
                  {{1, 2, 1}, {2, 1}},
                  {{1, 2}, {2, 1, 1}}};
    OrderedBratteliDiagram t = telescope_diagram(d, {0, 2, 3});
    CHECK(t.level_sizes == std::vector<int>{1, 2, 2});
    CHECK(heights(t, 1) == heights(d, 2));
    CHECK(heights(t, 2) == heights(d, 3));
    // composed incoming lists expand each edge into its path sources
    CHECK(t.edges_into(1, 1).size() == 5);
    CHECK(t.edges_into(1, 2).size() == 3);
    CHECK_THROWS_AS(telescope_diagram(d, {1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(telescope_diagram(d, {0, 4}), std::invalid_argument);
}

TEST_CASE("vershik successor on the (2,3) odometer") {
    OrderedBratteliDiagram d = odometer({2, 3});
    PathPrefix p = minimal_path(d, 2, 1);
    std::set<std::pair<int, int>> seen;
    int wraps = 0;
    for (int s = 0; s < 6; ++s) {
        seen.insert({p.picks[0].second, p.picks[1].second});
        auto [next, wrapped] = vershik_successor(d, p);
        if (wrapped) ++wraps;
        p = next;
    }
    CHECK(seen.size() == 6);  // a permutation of all depth-2 paths
    CHECK(wraps == 1);        // exactly the final step wraps
    CHECK(p.picks == minimal_path(d, 2, 1).picks);  // period 6

    PathPrefix mx = maximal_path(d, 2, 1);
    CHECK(mx.picks[0].second == 1);
    CHECK(mx.picks[1].second == 2);
    CHECK(vershik_successor(d, mx).second);
}

TEST_CASE("per-fiber periods equal heights") {
    OrderedBratteliDiagram d = two_tower();
    for (int v = 1; v <= 2; ++v) {
        PathPrefix p = minimal_path(d, 1, v);
        int steps = 0;
        bool wrapped = false;
        while (!wrapped) {
            auto [next, w] = vershik_successor(d, p);
            p = next;
            wrapped = w;
            ++steps;
        }
        CHECK(BigInt(steps) == heights(d, 1)[v - 1]);
        CHECK(p.picks == minimal_path(d, 1, v).picks);
    }
}

TEST_CASE("tower_coding emits vertices along the orbit") {
    OrderedBratteliDiagram d = odometer({2, 3});
    std::vector<int> code = tower_coding(d, 2, 0, 7);
    CHECK(code == std::vector<int>(7, 1));
    // level-2 vertex is always 1 on the single tower
    CHECK(tower_coding(d, 2, 2, 3) == std::vector<int>{1, 1, 1});
    CHECK_THROWS_AS(tower_coding(d, 2, 3, 1), std::invalid_argument);
}

TEST_CASE("extremal probe and eta") {
    OrderedBratteliDiagram d;
    d.level_sizes = {1, 2, 2};
    d.incoming = {{{1, 1}, {1, 1}}, {{1, 2, 2}, {1, 1, 2}}};
    ExtremalReport r = extremal_path_probe(d, 2);
    REQUIRE(r.levels.size() == 2);
    CHECK(r.levels[0].min_determined);
    CHECK(r.levels[0].min_source == 1);
    CHECK(r.levels[1].min_determined);
    CHECK(r.levels[1].min_source == 1);
    CHECK(r.levels[1].max_determined);
    CHECK(r.levels[1].max_source == 2);
    CHECK(r.all_determined());
    CHECK(eta(d, 2, 1) == std::vector<int>{1, 2, 2});
    CHECK_THROWS_AS(eta(d, 3, 1), std::out_of_range);

    OrderedBratteliDiagram mixed = d;
    mixed.incoming[1] = {{1, 2, 2}, {2, 1, 1}};
    ExtremalReport r2 = extremal_path_probe(mixed, 2);
    CHECK_FALSE(r2.levels[1].min_determined);
    CHECK_FALSE(r2.levels[1].max_determined);
    CHECK_FALSE(r2.all_determined());
}

TEST_CASE("bratteli conversion marker words") {
    OrderedBratteliDiagram d;
    d.level_sizes = {1, 2};
    d.incoming = {{std::vector<int>(20, 1), std::vector<int>(20, 1)}};
    RankConstruction c = bratteli_to_rank_construction(d, 2);
    CHECK(c.expand(1, 1).bits() == "00100000000001010100");
    Word v12 = c.expand(1, 2);
    CHECK(v12.size() == 20);
    CHECK(max_run(v12, '0') == 6);  // middle zero-run of the j = 2 marker
    CHECK(c.length(1, 1) == 20);

    OrderedBratteliDiagram shallow;
    shallow.level_sizes = {1, 2};
    shallow.incoming = {{std::vector<int>(20, 1), std::vector<int>(9, 1)}};
    CHECK_THROWS_WITH_AS(bratteli_to_rank_construction(shallow, 2),
                         "word 2: |eta_1| = 9 below required 15",
                         std::invalid_argument);
}

TEST_CASE("bratteli conversion lengths equal heights") {
    OrderedBratteliDiagram d;
    d.level_sizes = {1, 2, 2};
    d.incoming = {{std::vector<int>(20, 1), std::vector<int>(18, 1)},
                  {{1, 2, 2}, {1, 2, 2}}};
    RankConstruction c = bratteli_to_rank_construction(d, 2);
    for (int k = 1; k <= 2; ++k) {
        HeightVector h = heights(d, k);
        for (int j = 1; j <= 2; ++j)
            CHECK(c.length(k, j) == h[j - 1]);
    }
    CHECK(validate(c).empty());
    CHECK(c.step(1).buildings[0].blocks[0] == 1);  // start-chain condition

    // missing full connectivity at an inner level
    OrderedBratteliDiagram sparse = d;
    sparse.incoming[1] = {{1, 1, 1}, {1, 1, 1}};
    CHECK_THROWS_AS(bratteli_to_rank_construction(sparse, 2),
                    std::invalid_argument);
}

// Acceptance checks: one line per criterion, nonzero exit on any failure.
#include "symbrank/bratteli.hpp"
#include "symbrank/construction.hpp"
#include "symbrank/parsing.hpp"
#include "symbrank/transforms.hpp"
#include "symbrank/words.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

using namespace symbrank;

namespace {

RankConstruction chacon() { return gallery("chacon"); }

bool criterion_1_chacon_exactness() {
    RankConstruction c = chacon();
    if (c.expand(2, 1).bits() != "0010001010010") return false;
    for (int n = 0; n <= 12; ++n) {
        BigInt expect = (pow(BigInt(3), n + 1) - 1) / 2;
        if (c.length(n, 1) != expect) return false;
    }
    return true;
}

void naive_buildings(const std::string& rest, const std::vector<Word>& blocks,
                     std::vector<int>& blk, std::vector<int>& sp,
                     std::vector<Building>& out) {
    if (rest.empty()) {
        if (blk.size() >= 2) out.push_back(Building{blk, sp});
        return;
    }
    for (std::size_t v = 0; v < blocks.size(); ++v) {
        const std::string& b = blocks[v].bits();
        if (rest.compare(0, b.size(), b) != 0) continue;
        std::string after = rest.substr(b.size());
        blk.push_back(static_cast<int>(v) + 1);
        if (after.empty()) {
            naive_buildings(after, blocks, blk, sp, out);
        } else {
            std::size_t run = 0;
            while (run < after.size() && after[run] == '1') ++run;
            if (run < after.size()) {  // trailing 1s cannot end a building
                sp.push_back(static_cast<int>(run));
                naive_buildings(after.substr(run), blocks, blk, sp, out);
                sp.pop_back();
            }
        }
        blk.pop_back();
    }
}

std::set<std::pair<std::vector<int>, std::vector<int>>> building_set(
    const std::vector<Building>& bs) {
    std::set<std::pair<std::vector<int>, std::vector<int>>> out;
    for (const Building& b : bs) out.insert({b.blocks, b.spacers});
    return out;
}

bool criterion_2_enumeration_oracle() {
    std::vector<Word> pool{Word("0"), Word("00"), Word("000"), Word("0010")};
    EnumResult sample =
        enumerate_buildings(Word("00100"), {Word("0"), Word("00")}, 1000);
    if (sample.buildings.size() != 4) return false;

    for (std::size_t len = 1; len <= 14; ++len) {
        for (std::uint64_t bits = 0; bits < (1ull << len); ++bits) {
            std::string s;
            for (std::size_t i = 0; i < len; ++i)
                s.push_back((bits >> i) & 1 ? '1' : '0');
            if (s.front() != '0' || s.back() != '0') continue;  // F-words only
            Word w(s);
            for (int mask = 1; mask < 16; ++mask) {
                std::vector<Word> blocks;
                for (int v = 0; v < 4; ++v)
                    if (mask & (1 << v)) blocks.push_back(pool[v]);
                EnumResult fast = enumerate_buildings(w, blocks, 1u << 20);
                if (fast.overflow) return false;
                std::vector<Building> slow;
                std::vector<int> blk, sp;
                naive_buildings(s, blocks, blk, sp, slow);
                if (building_set(fast.buildings) != building_set(slow))
                    return false;
            }
        }
    }
    return true;
}

bool criterion_3_unique_readability() {
    // Chacon: every window of every length inside the level-4 expansion
    RankConstruction c = chacon();
    std::size_t deep4 = c.expand(4, 1).size();  // probe target at level 2
    for (std::size_t len = 1; len <= std::min<std::size_t>(300, deep4); ++len) {
        ReadabilityReport r = unique_readability_probe(c, 2, len, deep4);
        if (r.violation) return false;
    }
    // cover: sampled windows up to length 300 inside the level-3 expansion
    GoodCoverResult gc = good_cover(c, 4);
    for (std::size_t len : {50u, 150u, 300u}) {
        ReadabilityReport r = unique_readability_probe(gc.cover, 1, len, 300);
        if (r.violation) return false;
    }
    // the {"00","000"} level yields a counterexample
    LevelStep st;
    st.buildings.push_back(Building{{1, 1}, {0}});
    st.buildings.push_back(Building{{1, 1, 1}, {0, 0}});
    LevelStep up;
    up.buildings.push_back(Building{{1, 2}, {0}});
    up.buildings.push_back(Building{{2, 1}, {0}});
    RankConstruction bad(1, {st, up, up, up});
    ReadabilityReport hit = unique_readability_probe(bad, 1, 10, 2000);
    return hit.violation && hit.counterexample.has_value();
}

bool criterion_4_conversion_heights() {
    std::mt19937 rng(20260824);
    auto randint = [&](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };
    int rank = 4;
    for (int trial = 0; trial < 20; ++trial) {
        int depth = randint(2, 4);
        OrderedBratteliDiagram d;
        d.level_sizes.push_back(1);
        for (int k = 1; k <= depth; ++k) d.level_sizes.push_back(randint(2, rank));
        // level 1: enough edges for the marker-length precondition
        {
            std::vector<std::vector<int>> lists;
            for (int v = 0; v < d.level_sizes[1]; ++v)
                lists.push_back(std::vector<int>(27 + randint(0, 8), 1));
            d.incoming.push_back(std::move(lists));
        }
        for (int k = 2; k <= depth; ++k) {
            int prev = d.level_sizes[k - 1];
            int front = randint(1, prev), back = randint(1, prev);
            std::vector<std::vector<int>> lists;
            for (int v = 0; v < d.level_sizes[k]; ++v) {
                std::vector<int> edges{front};
                std::vector<int> all(prev);
                std::iota(all.begin(), all.end(), 1);
                std::shuffle(all.begin(), all.end(), rng);
                edges.insert(edges.end(), all.begin(), all.end());
                for (int extra = randint(0, 3); extra > 0; --extra)
                    edges.push_back(randint(1, prev));
                edges.push_back(back);
                lists.push_back(std::move(edges));
            }
            d.incoming.push_back(std::move(lists));
        }
        RankConstruction c = bratteli_to_rank_construction(d, rank);
        for (int i = 1; i <= depth; ++i) {
            HeightVector h = heights(d, i);
            std::vector<BigInt> lens;
            for (int j = 1; j <= d.level_sizes[i]; ++j)
                lens.push_back(c.length(i, j));
            std::sort(h.begin(), h.end());
            std::sort(lens.begin(), lens.end());
            if (h != lens) return false;
        }
    }
    return true;
}

bool criterion_5_mef_identities() {
    MEFParams probe;  // p/q do not depend on the edge counts
    for (int n = 0; n <= 20; ++n) {
        BigInt p = probe.p(n), q = probe.q(n);
        if (gcd(p, q) != 1) return false;
        if (q % 2 == 0) return false;
    }
    MEFParams params;
    for (int i = 1; i <= 6; ++i) {
        BigInt a = probe.p(i) + probe.q(i) + 1;
        params.a.push_back(a.convert_to<long long>());
    }
    if (!mef_violations(params, 6).empty()) return false;
    RankConstruction c = mef_construction(params, 6);
    for (int n = 1; n <= 6; ++n) {
        if (c.length(n, 1) != params.p(n) * params.A(n)) return false;
        if (c.length(n, 2) != params.q(n) * params.A(n)) return false;
    }
    return true;
}

bool criterion_6_vershik_periodicity() {
    OrderedBratteliDiagram odo;
    odo.level_sizes = {1, 1, 1};
    odo.incoming = {{{1, 1}}, {{1, 1, 1}}};
    PathPrefix p = minimal_path(odo, 2, 1);
    std::set<std::pair<int, int>> seen;
    for (int s = 0; s < 6; ++s) {
        seen.insert({p.picks[0].second, p.picks[1].second});
        p = vershik_successor(odo, p).first;
    }
    if (seen.size() != 6) return false;
    if (p.picks != minimal_path(odo, 2, 1).picks) return false;

    OrderedBratteliDiagram two;
    two.level_sizes = {1, 2};
    two.incoming = {{{1, 1, 1}, {1, 1}}};
    HeightVector h = heights(two, 1);
    for (int v = 1; v <= 2; ++v) {
        PathPrefix q = minimal_path(two, 1, v);
        BigInt steps = 0;
        bool wrapped = false;
        while (!wrapped) {
            auto [next, w] = vershik_successor(two, q);
            q = next;
            wrapped = w;
            ++steps;
        }
        if (steps != h[v - 1]) return false;
    }
    return true;
}

bool criterion_7_cyclic_partition() {
    return verify_cyclic_partition(2, 8).pass && verify_cyclic_partition(3, 8).pass;
}

bool criterion_8_language_distances() {
    RankConstruction ch = chacon();
    LevelStep zero_step;
    zero_step.buildings.push_back(Building{{1, 1, 1}, {0, 0}});
    RankConstruction zero(1, {}, {zero_step});
    auto pc = language_profile(ch, 20, 12);
    auto pz = language_profile(zero, 20, 12);
    DistanceReport d1 = language_distance(pc, pz, 20);
    if (!d1.exact || d1.n_star != 1) return false;

    auto pl = language_profile(gallery("chacon_like(1)"), 20, 12);
    DistanceReport d2 = language_distance(pc, pl, 20);
    if (d2.exact || d2.n_star != 20 || d2.to_string() != "<= 2^-20") return false;

    std::vector<std::vector<LanguageSnapshot>> profiles;
    for (const char* name :
         {"chacon", "chacon_like(1)", "chacon_like(2)", "prop_6_11(2)"})
        profiles.push_back(language_profile(gallery(name), 8, 12));
    profiles.push_back(language_profile(zero, 8, 12));
    for (const auto& x : profiles)
        for (const auto& y : profiles)
            for (const auto& z : profiles) {
                DistanceReport dxz = language_distance(x, z, 8);
                DistanceReport dxy = language_distance(x, y, 8);
                DistanceReport dyz = language_distance(y, z, 8);
                if (dxz.exact && dxy.exact && dyz.exact &&
                    dxz.value() > std::max(dxy.value(), dyz.value()))
                    return false;
            }
    return true;
}

bool criterion_9_cover_properties() {
    RankConstruction c = chacon();
    GoodCoverResult gc = good_cover(c, 3);
    if (gc.trace.size() < 2 || gc.trace[0] != 3 || gc.trace[1] != 7) return false;
    if (!check_proper(gc.cover, 2).proper) return false;
    if (!check_good(gc.cover, 1).good) return false;
    int n = c.arity(1);
    for (int q = 1; q <= n; ++q)
        if (gc.cover.length(1, q) != gc.cover.length(1, q + n)) return false;
    return true;
}

std::set<Word> flipped(const std::set<Word>& words) {
    std::set<Word> out;
    for (const Word& w : words) {
        std::string s = w.bits();
        for (char& ch : s) ch = (ch == '0') ? '1' : '0';
        out.insert(Word(s));
    }
    return out;
}

bool criterion_10_factor_closure() {
    RankConstruction c = chacon();
    auto source = language_profile(c, 12, 12);

    FactorResult ident = factor_construction(c, identity_code(), 6);
    auto pi = language_profile(ident.construction, 12, ident.construction.max_level());
    for (int n = 1; n <= 12; ++n)
        if (pi[n - 1].members != source[n - 1].members) return false;

    FactorResult flip = factor_construction(c, bit_flip_code(), 6);
    auto pf = language_profile(flip.construction, 12, flip.construction.max_level());
    for (int n = 1; n <= 12; ++n)
        if (pf[n - 1].members != flipped(source[n - 1].members)) return false;
    return true;
}

bool criterion_11_detector_oracle() {
    if (detect_built_from({Word("101"), 0}, Word("000"))) return false;
    for (const Word& v : {Word("0"), Word("00"), Word("000")}) {
        std::size_t maxw = 12, bound = maxw + 2 * v.size();
        std::set<std::string> seen;
        std::function<void(const std::string&)> grow = [&](const std::string& u) {
            for (std::size_t s = 0; s < u.size(); ++s)
                for (std::size_t l = 1; l <= maxw && s + l <= u.size(); ++l)
                    seen.insert(u.substr(s, l));
            for (std::size_t run = 0; run <= maxw; ++run) {
                std::string next = u + std::string(run, '1') + v.bits();
                if (next.size() <= bound) grow(next);
            }
        };
        grow(v.bits());
        for (std::size_t len = 1; len <= maxw; ++len) {
            for (std::uint64_t bits = 0; bits < (1ull << len); ++bits) {
                std::string s;
                for (std::size_t i = 0; i < len; ++i)
                    s.push_back((bits >> i) & 1 ? '1' : '0');
                bool oracle = seen.count(s) == 1;
                if (detect_built_from({Word(s), 0}, v) != oracle) return false;
            }
        }
    }
    return true;
}

bool criterion_12_unbounded_spacers() {
    RankConstruction c = gallery("prop_6_10");
    SpacerStats stats = spacer_stats(c, 9);
    if (stats.certified) return false;  // no global bound certificate
    for (int n = 0; n <= 8; ++n)
        if (stats.per_step_max[n] != 3 * n + 2) return false;
    return minimality_verdict(c, 9).verdict ==
           MinimalityVerdict::NotMinimalEvidence;
}

struct Criterion {
    const char* title;
    bool (*run)();
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {"1. Chacon expansion exactness", criterion_1_chacon_exactness},
        {"2. building-enumeration oracle", criterion_2_enumeration_oracle},
        {"3. good implies unique readability", criterion_3_unique_readability},
        {"4. diagram conversion height law", criterion_4_conversion_heights},
        {"5. p/q recursion and length identities", criterion_5_mef_identities},
        {"6. Vershik tower periodicity", criterion_6_vershik_periodicity},
        {"7. cyclic partition check", criterion_7_cyclic_partition},
        {"8. language distance values", criterion_8_language_distances},
        {"9. good cover properties", criterion_9_cover_properties},
        {"10. factor closure under codes", criterion_10_factor_closure},
        {"11. built-from detector oracle", criterion_11_detector_oracle},
        {"12. unbounded-spacer evidence", criterion_12_unbounded_spacers},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        bool ok = false;
        std::string note;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            note = std::string(" (exception: ") + e.what() + ")";
        }
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << c.title << note << "\n";
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}

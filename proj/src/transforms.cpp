#include "symbrank/transforms.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace symbrank {

namespace {

SlidingBlockCode radius0(char zero_to, char one_to) {
    SlidingBlockCode code;
    code.radius = 0;
    code.table[Word("0")] = zero_to;
    code.table[Word("1")] = one_to;
    return code;
}

Word code_image(const SlidingBlockCode& code, const Word& w) {
    std::size_t span = 2 * static_cast<std::size_t>(code.radius) + 1;
    if (w.size() < span) throw std::invalid_argument("window shorter than code span");
    std::string out;
    out.reserve(w.size() - span + 1);
    for (std::size_t i = 0; i + span <= w.size(); ++i) {
        auto it = code.table.find(w.sub(i, span));
        if (it == code.table.end())
            throw std::invalid_argument("code table not total");
        out.push_back(it->second);
    }
    return Word(out);
}

bool level_reachable(const RankConstruction& c, int level) {
    return c.max_level() < 0 || level <= c.max_level();
}

// Least k with a 3-consecutive-level stabilized max run of `symbol`, as
// (stabilized run) + 1; 0 when stabilization is not reached.
int run_bound(const RankConstruction& c, char symbol) {
    std::vector<std::size_t> runs;
    for (int i = 1; i <= 40 && level_reachable(c, i); ++i) {
        std::size_t r = 0;
        try {
            for (int j = 1; j <= c.arity(i); ++j)
                r = std::max(r, max_run(c.expand(i, j), symbol));
        } catch (const std::runtime_error&) {
            break;  // expansion budget; rely on what stabilized so far
        }
        runs.push_back(r);
        std::size_t s = runs.size();
        if (s >= 3 && runs[s - 1] == runs[s - 2] && runs[s - 2] == runs[s - 3])
            return static_cast<int>(r) + 1;
    }
    return 0;
}

}  // namespace

SlidingBlockCode identity_code() { return radius0('0', '1'); }
SlidingBlockCode bit_flip_code() { return radius0('1', '0'); }

SlidingBlockCode majority3_code() {
    SlidingBlockCode code;
    code.radius = 1;
    for (int bits = 0; bits < 8; ++bits) {
        std::string w = {char('0' + ((bits >> 2) & 1)), char('0' + ((bits >> 1) & 1)),
                         char('0' + (bits & 1))};
        int ones = (bits & 1) + ((bits >> 1) & 1) + ((bits >> 2) & 1);
        code.table[Word(w)] = ones >= 2 ? '1' : '0';
    }
    return code;
}

GoodCoverResult good_cover(const RankConstruction& c, int levels) {
    if (levels < 2) throw std::invalid_argument("need at least two cover levels");
    int n = c.arity(1);

    int k0 = run_bound(c, '0');
    if (k0 == 0) throw std::runtime_error("zero-run bound unstabilized; extend depth");

    auto min_len = [&](int i) {
        BigInt b = c.length(i, 1);
        for (int j = 2; j <= c.arity(i); ++j) b = std::min(b, c.length(i, j));
        return b;
    };
    auto max_len = [&](int i) {
        BigInt a = c.length(i, 1);
        for (int j = 2; j <= c.arity(i); ++j) a = std::max(a, c.length(i, j));
        return a;
    };

    int i1 = -1;
    for (int i = 1; i <= 64 && level_reachable(c, i); ++i)
        if (min_len(i) > 4 * k0 + 4) {
            i1 = i;
            break;
        }
    if (i1 < 0) throw std::runtime_error("no level clears the zero-run bound; extend depth");

    auto proper = check_proper(c, i1 + 1);
    if (!proper.proper)
        throw std::invalid_argument("input not proper: " + proper.reason);

    std::vector<int> trace{i1};
    // cover words per cover level p: level 1 explicit, deeper via buildings
    std::vector<Word> w1(2 * n);
    for (int q = 1; q <= n; ++q) w1[q - 1] = c.expand(i1, q);
    for (int q = n + 1; q <= 2 * n; ++q) {
        std::size_t len = c.length(i1, q - n).convert_to<std::size_t>();
        w1[q - 1] = Word("01") + Word::zeros(len - 4) + Word("10");
    }
    std::vector<std::vector<Building>> cover_steps;  // step p-1 builds w_{p+1} from w_p

    for (int p = 1; p < levels; ++p) {
        int ip = trace.back();
        if (!level_reachable(c, ip + 1))
            throw std::runtime_error("source construction too shallow; extend depth");
        BigInt mp_big = (max_len(ip + 1) + min_len(ip) - 1) / min_len(ip);
        long long mp = mp_big.convert_to<long long>();
        long long need = 12 * mp + 4 * n;

        int inext = -1;
        std::vector<Building> tele;
        for (int cand = ip + 1; cand <= ip + 32 && level_reachable(c, cand); ++cand) {
            RankConstruction t = telescope(c, {0, ip, cand});
            const auto& buildings = t.step(1).buildings;
            bool ok = true;
            for (const Building& b : buildings) {
                long long ell = static_cast<long long>(b.spacers.size());
                if (ell <= need) {
                    ok = false;
                    break;
                }
                // every 2 m_p consecutive blocks use all n indices
                long long window = 2 * mp;
                for (long long t0 = 0; ok && t0 + window <= ell + 1; ++t0) {
                    std::vector<bool> seen(n + 1, false);
                    for (long long t1 = t0; t1 < t0 + window; ++t1)
                        seen[b.blocks[static_cast<std::size_t>(t1)]] = true;
                    for (int j = 1; j <= n; ++j)
                        if (!seen[j]) ok = false;
                }
                if (!ok) break;
            }
            if (ok) {
                inext = cand;
                tele = buildings;
                break;
            }
        }
        if (inext < 0)
            throw std::runtime_error("no admissible next level; extend depth");
        auto proper_next = check_proper(c, inext);
        if (!proper_next.proper)
            throw std::invalid_argument("input not proper: " + proper_next.reason);
        trace.push_back(inext);

        std::vector<Building> step(2 * n);
        for (int j = 1; j <= n; ++j) {
            const Building& b = tele[j - 1];
            long long ell = static_cast<long long>(b.spacers.size());
            Building phi_b, psi_b;
            phi_b.spacers = b.spacers;
            psi_b.spacers = b.spacers;
            for (long long t = 1; t <= ell + 1; ++t) {
                int jt = b.blocks[static_cast<std::size_t>(t - 1)];
                bool phi_hi = (2 <= t && t <= 2 * mp + j + 1) ||
                              (ell - 2 * mp - j + 1 <= t && t <= ell);
                bool psi_hi = (2 <= t && t <= 2 * mp + j + n + 1) ||
                              (ell - 2 * mp - j - n + 1 <= t && t <= ell);
                phi_b.blocks.push_back(phi_hi ? jt + n : jt);
                psi_b.blocks.push_back(psi_hi ? jt + n : jt);
            }
            step[j - 1] = std::move(phi_b);
            step[j + n - 1] = std::move(psi_b);
        }
        cover_steps.push_back(std::move(step));
    }

    // materialize level-2 cover words; the output drops the first cover step
    std::vector<Word> w2(2 * n);
    for (int q = 1; q <= 2 * n; ++q) {
        const Building& b = cover_steps[0][q - 1];
        Word acc = w1[b.blocks[0] - 1];
        for (std::size_t t = 0; t < b.spacers.size(); ++t)
            acc = acc + Word::ones(b.spacers[t]) + w1[b.blocks[t + 1] - 1];
        w2[q - 1] = std::move(acc);
    }

    std::vector<LevelStep> steps;
    {
        LevelStep st;
        for (int q = 1; q <= 2 * n; ++q)
            st.buildings.push_back(building_from_zeros(w2[q - 1]));
        steps.push_back(std::move(st));
    }
    for (std::size_t p = 1; p < cover_steps.size(); ++p)
        steps.push_back(LevelStep{cover_steps[p]});

    GoodCoverResult result{RankConstruction(1, std::move(steps)), {}, trace};
    result.table.radius = 0;
    result.table.sources = w2;
    for (int q = 1; q <= 2 * n; ++q)
        result.table.targets.push_back(c.expand(trace[1], (q - 1) % n + 1));
    return result;
}

WindowContext apply_substitution(const WindowContext& ctx,
                                 const RankConstruction& cover,
                                 const SubstitutionTable& table) {
    int count = cover.arity(1);
    if (static_cast<int>(table.sources.size()) != count ||
        static_cast<int>(table.targets.size()) != count)
        throw std::invalid_argument("table does not match the cover level");
    std::size_t maxlen = 0;
    for (const Word& w : table.sources) maxlen = std::max(maxlen, w.size());
    std::size_t len = ctx.word.size();
    if (len < 2 * maxlen - 1) throw std::runtime_error("window too small");

    std::vector<std::vector<bool>> occ(count);
    for (int q = 1; q <= count; ++q) {
        occ[q - 1].assign(len, false);
        for (std::size_t pos : occurrences(table.sources[q - 1], ctx.word))
            occ[q - 1][pos] = true;
    }
    // expected occurrence: no other level word covers the start from the left
    std::vector<std::pair<int, std::size_t>> at(len, {0, 0});
    for (int q = 1; q <= count; ++q) {
        std::size_t lq = table.sources[q - 1].size();
        for (std::size_t k = 0; k + lq <= len; ++k) {
            if (!occ[q - 1][k]) continue;
            bool expected = true;
            for (int q2 = 1; q2 <= count && expected; ++q2) {
                if (q2 == q) continue;
                std::size_t l2 = table.sources[q2 - 1].size();
                std::size_t lo = k + lq >= l2 ? k + lq - l2 : 0;
                for (std::size_t k2 = lo; k2 <= k && expected; ++k2)
                    if (occ[q2 - 1][k2]) expected = false;
            }
            if (!expected) continue;
            for (std::size_t t = 0; t < lq; ++t) at[k + t] = {q, k};
        }
    }
    std::string out;
    for (std::size_t pos = maxlen - 1; pos + maxlen <= len; ++pos) {
        auto [q, start] = at[pos];
        out.push_back(q == 0 ? '1' : table.targets[q - 1][pos - start]);
    }
    return {Word(out), ctx.origin + static_cast<std::int64_t>(maxlen) - 1};
}

WindowContext apply_code(const WindowContext& ctx, const SlidingBlockCode& code) {
    return {code_image(code, ctx.word), ctx.origin + code.radius};
}

namespace {

// Level tiles (word index, offset) of expand(top, 1), descending through
// the buildings.
std::vector<std::pair<int, std::size_t>> tile_level(const RankConstruction& c,
                                                    int top, int target) {
    std::vector<std::pair<int, std::size_t>> cur{{1, 0}};
    for (int lvl = top; lvl > target; --lvl) {
        std::vector<std::pair<int, std::size_t>> next;
        for (auto [q, pos] : cur) {
            const Building& b = c.step(lvl - 1).buildings[q - 1];
            std::size_t at = pos;
            for (std::size_t t = 0; t < b.blocks.size(); ++t) {
                next.emplace_back(b.blocks[t], at);
                at += c.length(lvl - 1, b.blocks[t]).convert_to<std::size_t>();
                if (t < b.spacers.size()) at += static_cast<std::size_t>(b.spacers[t]);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

struct TrimmedImage {
    Word core;
    std::size_t lead = 0;
    std::size_t trail = 0;
};

TrimmedImage trim_image(const Word& u, int level) {
    std::size_t a = 0, b = 0;
    while (a < u.size() && u[a] == '1') ++a;
    while (b < u.size() - a && u[u.size() - 1 - b] == '1') ++b;
    if (a + b >= u.size())
        throw std::runtime_error("empty code image block at level " +
                                 std::to_string(level));
    return {u.sub(a, u.size() - a - b), a, b};
}

}  // namespace

FactorResult factor_construction(const RankConstruction& c,
                                 const SlidingBlockCode& code, int depth) {
    if (depth < 1) throw std::invalid_argument("depth must be >= 1");
    int n = c.arity(1);
    int k1 = run_bound(c, '1');
    if (k1 == 0) throw std::runtime_error("one-run bound unstabilized; extend depth");
    std::size_t r = static_cast<std::size_t>(code.radius);
    for (int j = 1; j <= n; ++j)
        if (c.length(1, j) <= static_cast<long long>(2 * r + k1))
            throw std::invalid_argument("level-1 words too short for the code");
    if (!level_reachable(c, depth + 2))
        throw std::invalid_argument("construction too shallow for the requested depth");

    Word E = c.expand(depth + 2, 1);

    using Key = std::tuple<int, int, int>;  // (q, spacer, q')
    std::map<Key, TrimmedImage> prev_images;
    std::map<Key, int> prev_word_of;
    FactorResult result;
    ChainLevels chains;
    chains.words.push_back({Word("0")});
    std::vector<std::vector<Word>> level_word_sets;
    std::vector<std::vector<Building>> level_building_sets;

    for (int p = 1; p <= depth; ++p) {
        auto tiles = tile_level(c, depth + 2, p);
        std::vector<std::tuple<Key, std::size_t, std::size_t>> adjacencies;
        std::map<Key, int> counts;
        for (std::size_t t = 0; t + 1 < tiles.size(); ++t) {
            auto [q, pos] = tiles[t];
            auto [q2, pos2] = tiles[t + 1];
            std::size_t wl = c.length(p, q).convert_to<std::size_t>();
            int s = static_cast<int>(pos2 - pos - wl);
            adjacencies.emplace_back(Key{q, s, q2}, pos, pos2);
            ++counts[Key{q, s, q2}];
        }
        for (const auto& [key, cnt] : counts)
            if (cnt < 2)
                throw std::runtime_error("adjacency sample too thin at level " +
                                         std::to_string(p) + "; extend depth");

        std::map<Key, TrimmedImage> images;
        if (p == 1) {
            for (const auto& [key, pos, pos2] : adjacencies) {
                if (pos2 + 2 * r > E.size()) continue;
                Word raw = code_image(code, E.sub(pos, pos2 - pos + 2 * r));
                auto it = images.find(key);
                if (it == images.end()) {
                    images.emplace(key, trim_image(raw, p));
                } else {
                    TrimmedImage fresh = trim_image(raw, p);
                    if (fresh.core != it->second.core ||
                        fresh.lead != it->second.lead)
                        throw std::runtime_error(
                            "code not locally constant at level 1");
                }
            }
        } else {
            for (const auto& [key, cnt] : counts) {
                auto [q, s, q2] = key;
                const Building& b = c.step(p - 1).buildings[q - 1];
                int first_next = c.step(p - 1).buildings[q2 - 1].blocks.front();
                std::string raw_bits;
                auto append_piece = [&](const Key& low) {
                    auto it = prev_images.find(low);
                    if (it == prev_images.end())
                        throw std::runtime_error(
                            "missing lower adjacency image; extend depth");
                    const TrimmedImage& piece = it->second;
                    raw_bits.append(piece.lead, '1');
                    raw_bits += piece.core.bits();
                    raw_bits.append(piece.trail, '1');
                };
                for (std::size_t t = 0; t < b.spacers.size(); ++t)
                    append_piece(Key{b.blocks[t], b.spacers[t], b.blocks[t + 1]});
                append_piece(Key{b.blocks.back(), s, first_next});
                images.emplace(key, trim_image(Word(raw_bits), p));
            }
        }

        std::vector<Word> level_words;
        std::map<Word, int> word_index;
        std::map<Key, int> image_word;
        for (const auto& [key, img] : images) {
            auto it = word_index.find(img.core);
            if (it == word_index.end()) {
                level_words.push_back(img.core);
                it = word_index.emplace(img.core,
                                        static_cast<int>(level_words.size()))
                         .first;
            }
            image_word[key] = it->second;
        }
        result.level_sizes.push_back(level_words.size());

        std::vector<Building> level_buildings;
        if (p == 1) {
            // level-1 images may trim down to "0"; the chain is rebased on
            // the next level in that case
            bool decomposable = true;
            for (const Word& w : level_words)
                if (occurrences(Word("0"), w).size() < 2) decomposable = false;
            if (decomposable)
                for (const Word& w : level_words)
                    level_buildings.push_back(building_from_zeros(w));
        } else {
            for (const Word& w : level_words) {
                Key source{};
                for (const auto& [key, img] : images)
                    if (img.core == w) {
                        source = key;
                        break;
                    }
                auto [q, s, q2] = source;
                const Building& b = c.step(p - 1).buildings[q - 1];
                int first_next = c.step(p - 1).buildings[q2 - 1].blocks.front();
                std::vector<Key> lows;
                for (std::size_t t = 0; t < b.spacers.size(); ++t)
                    lows.push_back(Key{b.blocks[t], b.spacers[t], b.blocks[t + 1]});
                lows.push_back(Key{b.blocks.back(), s, first_next});
                Building nb;
                for (std::size_t t = 0; t < lows.size(); ++t) {
                    const TrimmedImage& piece = prev_images.at(lows[t]);
                    nb.blocks.push_back(prev_word_of.at(lows[t]));
                    if (t + 1 < lows.size()) {
                        const TrimmedImage& next_piece = prev_images.at(lows[t + 1]);
                        nb.spacers.push_back(static_cast<int>(piece.trail +
                                                              next_piece.lead));
                    }
                }
                level_buildings.push_back(std::move(nb));
            }
        }
        level_word_sets.push_back(level_words);
        level_building_sets.push_back(std::move(level_buildings));
        prev_images = std::move(images);
        prev_word_of = std::move(image_word);
    }

    // rebase on the second level when the level-1 images are degenerate
    std::size_t start = level_building_sets[0].empty() ? 1 : 0;
    if (start >= level_word_sets.size())
        throw std::runtime_error("images too degenerate; extend depth");
    chains.words.push_back(level_word_sets[start]);
    if (start == 0) {
        chains.buildings.push_back(std::move(level_building_sets[0]));
    } else {
        std::vector<Building> rebased;
        for (const Word& w : level_word_sets[start])
            rebased.push_back(building_from_zeros(w));
        chains.buildings.push_back(std::move(rebased));
    }
    for (std::size_t p = start + 1; p < level_word_sets.size(); ++p) {
        chains.words.push_back(level_word_sets[p]);
        chains.buildings.push_back(std::move(level_building_sets[p]));
    }

    result.construction = from_chains(chains);
    result.k1 = k1;
    return result;
}

BigInt MEFParams::p(int i) const {
    BigInt pp = 1, qq = 1;
    for (int t = 0; t < i; ++t) {
        BigInt np = 2 * pp + 2 * qq, nq = 2 * pp + qq;
        pp = np;
        qq = nq;
    }
    return pp;
}

BigInt MEFParams::q(int i) const {
    BigInt pp = 1, qq = 1;
    for (int t = 0; t < i; ++t) {
        BigInt np = 2 * pp + 2 * qq, nq = 2 * pp + qq;
        pp = np;
        qq = nq;
    }
    return qq;
}

BigInt MEFParams::A(int i) const {
    BigInt prod = 1;
    for (int t = 1; t <= i; ++t) prod *= a.at(t - 1);
    return prod;
}

std::vector<std::string> mef_violations(const MEFParams& params, int depth) {
    std::vector<std::string> out;
    if (static_cast<int>(params.a.size()) < depth) {
        out.push_back("fewer edge counts than requested depth");
        return out;
    }
    for (int i = 1; i <= depth; ++i) {
        if (params.a[i - 1] < 2)
            out.push_back("a_" + std::to_string(i) + " must be >= 2");
        if (BigInt(params.a[i - 1]) <=
            params.slack * (params.p(i) + params.q(i)))
            out.push_back("edge count too small at i = " + std::to_string(i));
    }
    return out;
}

RankConstruction mef_construction(const MEFParams& params, int depth) {
    auto bad = mef_violations(params, depth);
    if (!bad.empty()) throw std::invalid_argument(bad.front());
    std::vector<LevelStep> steps;
    {
        std::size_t a1 = static_cast<std::size_t>(params.a[0]);
        LevelStep st;
        st.buildings.push_back(building_from_zeros(
            Word::zeros(a1) + Word::ones(2 * a1) + Word::zeros(a1)));
        st.buildings.push_back(building_from_zeros(
            Word::zeros(a1) + Word::ones(a1) + Word::zeros(a1)));
        steps.push_back(std::move(st));
    }
    for (int i = 2; i <= depth; ++i) {
        std::size_t ai = static_cast<std::size_t>(params.a[i - 1]);
        auto make = [&](std::size_t middle_twos) {
            Building b;
            b.blocks.insert(b.blocks.end(), ai, 1);
            b.blocks.insert(b.blocks.end(), middle_twos, 2);
            b.blocks.insert(b.blocks.end(), ai, 1);
            b.spacers.assign(b.blocks.size() - 1, 0);
            return b;
        };
        LevelStep st;
        st.buildings.push_back(make(2 * ai));
        st.buildings.push_back(make(ai));
        steps.push_back(std::move(st));
    }
    return RankConstruction(1, std::move(steps));
}

int mef_digits(const MEFParams& params, const BigInt& k, int i) {
    BigInt ai = params.A(i), ai1 = params.A(i + 1);
    BigInt res = k % ai1;
    if (res < 0) res += ai1;
    return (res / ai).convert_to<int>() + 1;
}

namespace {

// Accepts "name" or "name(arg)" with a nonnegative integer argument.
bool parse_gallery_name(const std::string& s, std::string& base, long long& arg,
                        bool& has_arg) {
    auto open = s.find('(');
    if (open == std::string::npos) {
        base = s;
        has_arg = false;
        return true;
    }
    if (s.back() != ')') return false;
    base = s.substr(0, open);
    std::string inner = s.substr(open + 1, s.size() - open - 2);
    if (inner.empty()) return false;
    for (char ch : inner)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    arg = std::stoll(inner);
    has_arg = true;
    return true;
}

RankConstruction chacon_like(long long k) {
    if (k < 1) throw std::invalid_argument("chacon_like needs k >= 1");
    std::size_t ku = static_cast<std::size_t>(k);
    LevelStep first;
    first.buildings.push_back(building_from_zeros(
        Word::zeros(2 * ku) + Word::ones(ku) + Word::zeros(ku)));
    LevelStep cyc;
    cyc.buildings.push_back(Building{{1, 1, 1}, {0, static_cast<int>(k)}});
    return RankConstruction(1, {first}, {cyc});
}

RankConstruction prop_6_10(long long steps) {
    if (steps < 1) throw std::invalid_argument("prop_6_10 needs >= 1 step");
    std::vector<LevelStep> prefix;
    for (long long n = 0; n < steps; ++n) {
        Building b;
        b.spacers.push_back(static_cast<int>(3 * n + 1));
        for (long long m = 0; m <= n; ++m) {
            b.spacers.push_back(static_cast<int>(3 * m));
            b.spacers.push_back(static_cast<int>(3 * m));
        }
        b.spacers.push_back(static_cast<int>(3 * n + 2));
        b.blocks.assign(b.spacers.size() + 1, 1);
        prefix.push_back(LevelStep{{b}});
    }
    return RankConstruction(1, std::move(prefix));
}

RankConstruction prop_6_11(long long N) {
    if (N < 2) throw std::invalid_argument("prop_6_11 needs N >= 2");
    long long q = 10 * N;
    Building b;
    for (long long t = 0; t < q; ++t) b.spacers.push_back(1);
    for (long long m = 2; m <= N + 1; ++m) {
        b.spacers.push_back(static_cast<int>(m));
        b.spacers.push_back(static_cast<int>(m));
    }
    for (long long t = 0; t < q; ++t)
        b.spacers.push_back(static_cast<int>(N + 2));
    b.blocks.assign(b.spacers.size() + 1, 1);
    return RankConstruction(1, {}, {LevelStep{{b}}});
}

}  // namespace

RankConstruction gallery(const std::string& name) {
    std::string base;
    long long arg = 0;
    bool has_arg = false;
    if (!parse_gallery_name(name, base, arg, has_arg))
        throw std::invalid_argument("unknown gallery name: " + name);
    if (base == "chacon" && !has_arg) {
        LevelStep cyc;
        cyc.buildings.push_back(Building{{1, 1, 1}, {0, 1}});
        return RankConstruction(1, {}, {cyc});
    }
    if (base == "chacon_like" && has_arg) return chacon_like(arg);
    if (base == "prop_6_10") return prop_6_10(has_arg ? arg : 10);
    if (base == "prop_6_11" && has_arg) return prop_6_11(arg);
    if (base == "mef" && !has_arg) {
        MEFParams params;
        for (int i = 1; i <= 4; ++i)
            params.a.push_back(
                (params.p(i) + params.q(i)).convert_to<long long>() + 1);
        return mef_construction(params, 4);
    }
    throw std::invalid_argument("unknown gallery name: " + name);
}

PartitionReport verify_cyclic_partition(int k, int depth) {
    std::size_t ku = static_cast<std::size_t>(k);
    std::vector<Word> anchors{
        Word::zeros(3 * ku),
        Word::zeros(2 * ku) + Word::ones(ku),
        Word::zeros(ku) + Word::ones(ku) + Word::zeros(ku),
        Word::ones(ku) + Word::zeros(ku) + Word::ones(ku),
        Word::ones(ku) + Word::zeros(2 * ku)};
    return verify_cyclic_partition(k, depth, anchors);
}

PartitionReport verify_cyclic_partition(int k, int depth,
                                        const std::vector<Word>& anchor_words) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    std::size_t ku = static_cast<std::size_t>(k);
    RankConstruction c = chacon_like(k);
    LanguageSnapshot snap = language(c, 4 * ku, depth);
    if (!snap.stabilized)
        throw std::runtime_error("language not stabilized; extend depth");
    std::set<Word> anchors(anchor_words.begin(), anchor_words.end());
    for (const Word& w : snap.members) {
        bool head = anchors.count(w.sub(0, 3 * ku)) > 0;
        bool shifted = anchors.count(w.sub(ku, 3 * ku)) > 0;
        if (head != shifted)
            return {false, w, "shift invariance fails"};
        int hits = 0;
        for (std::size_t t = 0; t < ku; ++t)
            if (anchors.count(w.sub(t, 3 * ku))) ++hits;
        if (hits != 1)
            return {false, w,
                    "phase count " + std::to_string(hits) + " != 1"};
    }
    return {true, std::nullopt, ""};
}

}  // namespace symbrank

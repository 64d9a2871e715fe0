#include "symbrank/parsing.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace symbrank {

namespace {

std::size_t skip_ones(const std::string& w, std::size_t p) {
    while (p < w.size() && w[p] == '1') ++p;
    return p;
}

bool matches_at(const std::string& hay, std::size_t pos, const std::string& pat,
                std::size_t pat_off, std::size_t len) {
    if (pos + len > hay.size() || pat_off + len > pat.size()) return false;
    return hay.compare(pos, len, pat, pat_off, len) == 0;
}

}  // namespace

EnumResult enumerate_buildings(const Word& w, const std::vector<Word>& blocks,
                               std::size_t cap) {
    if (cap < 1) throw std::invalid_argument("cap must be >= 1");
    if (!is_fword(w)) throw std::invalid_argument("w must be an F-word");
    if (blocks.empty()) throw std::invalid_argument("block set empty");
    for (const Word& b : blocks)
        if (!is_fword(b)) throw std::invalid_argument("blocks must be F-words");

    const std::string& s = w.bits();
    std::size_t W = s.size();

    // feasible[p]: the suffix from p tiles out to the end
    std::vector<char> feasible(W + 1, 0);
    feasible[W] = 1;
    for (std::size_t p = W; p-- > 0;) {
        if (s[p] == '1') continue;  // blocks start at zeros
        for (const Word& b : blocks) {
            if (!matches_at(s, p, b.bits(), 0, b.size())) continue;
            if (feasible[skip_ones(s, p + b.size())]) {
                feasible[p] = 1;
                break;
            }
        }
    }

    EnumResult result;
    std::vector<int> cur_blocks;
    std::vector<int> cur_spacers;
    bool done = false;

    auto dfs = [&](auto&& self, std::size_t p) -> void {
        if (done) return;
        if (p == W) {
            if (cur_blocks.size() >= 2) {
                if (result.buildings.size() == cap) {
                    result.overflow = true;
                    done = true;
                    return;
                }
                result.buildings.push_back({cur_blocks, cur_spacers});
            }
            return;
        }
        if (!feasible[p]) return;
        for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
            const std::string& b = blocks[bi].bits();
            if (!matches_at(s, p, b, 0, b.size())) continue;
            std::size_t e = p + b.size();
            std::size_t q = skip_ones(s, e);
            cur_blocks.push_back(static_cast<int>(bi) + 1);
            if (q < W || e < W) {
                if (q == W) {
                    // trailing 1s cannot close a building of an F-word
                    cur_blocks.pop_back();
                    continue;
                }
                cur_spacers.push_back(static_cast<int>(q - e));
                self(self, q);
                cur_spacers.pop_back();
            } else {
                self(self, W);
            }
            cur_blocks.pop_back();
            if (done) return;
        }
    };
    dfs(dfs, 0);
    return result;
}

bool detect_built_from(const WindowContext& ctx, const Word& v) {
    if (ctx.word.empty()) throw std::invalid_argument("empty window");
    if (!is_fword(v)) throw std::invalid_argument("v must be an F-word");
    const std::string& w = ctx.word.bits();
    const std::string& t = v.bits();
    std::size_t V = t.size();
    // NFA states: 0..V-1 = next expected tile offset; V = in a 1-run gap
    std::vector<char> state(V + 1, 1);  // window may open anywhere
    for (char c : w) {
        std::vector<char> next(V + 1, 0);
        bool any = false;
        if (state[V]) {
            if (c == '1') {
                next[V] = 1;
                any = true;
            }
            if (c == t[0]) {
                if (V == 1)
                    next[V] = 1;
                else
                    next[1] = 1;
                any = true;
            }
        }
        for (std::size_t o = 0; o < V; ++o) {
            if (!state[o] || t[o] != c) continue;
            if (o + 1 == V)
                next[V] = 1;
            else
                next[o + 1] = 1;
            any = true;
        }
        if (!any) return false;
        state = std::move(next);
    }
    return true;
}

Clopen expected_occurrence(const WindowContext& ctx, const RankConstruction& c,
                           int level, int j, std::int64_t k, bool assume_good) {
    if (!assume_good) {
        GoodReport g = check_good(c, level);
        if (!g.good) throw std::runtime_error("criterion requires good level");
    }
    int n = c.arity(level);
    if (j < 1 || j > n) throw std::out_of_range("word index out of range");
    std::vector<std::string> words;
    std::size_t maxlen = 0;
    for (int q = 1; q <= n; ++q) {
        words.push_back(c.expand(level, q).bits());
        maxlen = std::max(maxlen, words.back().size());
    }
    const std::string& win = ctx.word.bits();
    std::int64_t lo = ctx.origin;
    std::int64_t hi = ctx.origin + static_cast<std::int64_t>(win.size());
    std::int64_t ml = static_cast<std::int64_t>(maxlen);
    if (k - ml + 1 < lo || k + ml - 1 >= hi) return Clopen::WindowTooSmall;

    auto occurs = [&](int q, std::int64_t pos) {
        const std::string& word = words[q - 1];
        std::int64_t off = pos - lo;
        if (off < 0 || off + static_cast<std::int64_t>(word.size()) >
                           static_cast<std::int64_t>(win.size()))
            return false;
        return win.compare(static_cast<std::size_t>(off), word.size(), word) == 0;
    };

    std::int64_t jlen = static_cast<std::int64_t>(words[j - 1].size());
    if (!occurs(j, k)) return Clopen::False;
    for (int q = 1; q <= n; ++q) {
        if (q == j) continue;
        std::int64_t qlen = static_cast<std::int64_t>(words[q - 1].size());
        for (std::int64_t kp = k + jlen - qlen; kp <= k; ++kp) {
            if (occurs(q, kp)) return Clopen::False;
        }
    }
    return Clopen::True;
}

namespace {

struct TopTilings {
    std::vector<std::vector<Mark>> tilings;
    bool overflow = false;
};

// Enumerate top-level tilings of the window: every 0 covered by a mark,
// gaps are pure 1-runs; Partial mode lets edge marks extend past the window.
TopTilings enumerate_top_tilings(const WindowContext& ctx,
                                 const std::vector<std::string>& words,
                                 std::size_t cap, EdgeMode mode) {
    const std::string& w = ctx.word.bits();
    std::size_t W = w.size();
    TopTilings out;
    std::vector<Mark> cur;
    bool done = false;

    auto record = [&]() {
        if (out.tilings.size() == cap) {
            out.overflow = true;
            done = true;
            return;
        }
        out.tilings.push_back(cur);
    };

    auto dfs = [&](auto&& self, std::size_t p) -> void {
        if (done) return;
        std::size_t q = skip_ones(w, p);
        if (q == W) {
            record();
            return;
        }
        for (std::size_t j = 0; j < words.size(); ++j) {
            const std::string& v = words[j];
            if (q + v.size() <= W) {
                if (matches_at(w, q, v, 0, v.size())) {
                    cur.push_back({ctx.origin + static_cast<std::int64_t>(q),
                                   static_cast<int>(j) + 1, false, false});
                    self(self, q + v.size());
                    cur.pop_back();
                    if (done) return;
                }
            } else if (mode == EdgeMode::Partial) {
                std::size_t e = W - q;
                if (e < v.size() && matches_at(w, q, v, 0, e)) {
                    cur.push_back({ctx.origin + static_cast<std::int64_t>(q),
                                   static_cast<int>(j) + 1, false, true});
                    record();
                    cur.pop_back();
                    if (done) return;
                }
            }
        }
    };

    // branch 0: no left-partial mark
    dfs(dfs, 0);
    if (mode == EdgeMode::Partial && !done) {
        // left-partial marks anchored at the window start
        for (std::size_t j = 0; j < words.size() && !done; ++j) {
            const std::string& v = words[j];
            for (std::size_t off = 1; off < v.size() && !done; ++off) {
                std::size_t e = std::min(v.size() - off, W);
                if (!matches_at(w, 0, v, off, e)) continue;
                if (w.compare(0, e, std::string(e, '1')) == 0) continue;  // pure 1s: a gap
                Mark m{ctx.origin - static_cast<std::int64_t>(off),
                       static_cast<int>(j) + 1, true, off + e < v.size()};
                cur.push_back(m);
                if (off + e < v.size()) {
                    record();  // mark spans the whole window
                } else {
                    dfs(dfs, e);
                }
                cur.pop_back();
            }
        }
    }
    return out;
}

using SubMarks = std::vector<std::vector<std::pair<std::int64_t, int>>>;

// Mark offsets of every level <= L inside word (L, j), relative to its start.
const SubMarks& sub_marks(const RankConstruction& c, int L, int j,
                          std::map<std::pair<int, int>, SubMarks>& memo) {
    auto key = std::make_pair(L, j);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    SubMarks sm(L + 1);
    sm[L].push_back({0, j});
    if (L > 0) {
        const Building& b = c.step(L - 1).buildings[j - 1];
        std::int64_t off = 0;
        for (std::size_t t = 0; t < b.blocks.size(); ++t) {
            const SubMarks& sub = sub_marks(c, L - 1, b.blocks[t], memo);
            for (int lvl = 0; lvl < L; ++lvl)
                for (const auto& [o, idx] : sub[lvl])
                    sm[lvl].push_back({off + o, idx});
            off += static_cast<std::int64_t>(c.expand(L - 1, b.blocks[t]).size());
            if (t < b.spacers.size()) off += b.spacers[t];
        }
    }
    it = memo.emplace(key, std::move(sm)).first;
    return it->second;
}

}  // namespace

ParseResult parse_window(const WindowContext& ctx, const RankConstruction& c,
                         int max_level, std::size_t cap, EdgeMode mode) {
    if (max_level < 1) throw std::invalid_argument("max_level must be >= 1");
    if (ctx.word.empty()) throw std::invalid_argument("empty window");
    int n = c.arity(max_level);
    std::vector<std::string> words;
    std::vector<std::int64_t> lens;
    for (int j = 1; j <= n; ++j) {
        words.push_back(c.expand(max_level, j).bits());
        lens.push_back(static_cast<std::int64_t>(words.back().size()));
    }
    TopTilings top = enumerate_top_tilings(ctx, words, cap, mode);

    std::map<std::pair<int, int>, SubMarks> memo;
    std::int64_t wlo = ctx.origin;
    std::int64_t whi = ctx.origin + static_cast<std::int64_t>(ctx.word.size());

    ParseResult result;
    result.overflow = top.overflow;
    for (const auto& tiling : top.tilings) {
        ParseCandidate cand;
        cand.layers.resize(max_level + 1);
        for (int lvl = 0; lvl <= max_level; ++lvl) cand.layers[lvl].level = lvl;
        for (const Mark& m : tiling) {
            if (m.left_partial || m.right_partial) cand.has_partial_edges = true;
            cand.layers[max_level].marks.push_back(m);
            const SubMarks& sm = sub_marks(c, max_level, m.word_index, memo);
            for (int lvl = 0; lvl < max_level; ++lvl) {
                for (const auto& [o, idx] : sm[lvl]) {
                    std::int64_t start = m.pos + o;
                    std::int64_t end =
                        start + static_cast<std::int64_t>(c.expand(lvl, idx).size());
                    if (end <= wlo || start >= whi) continue;
                    cand.layers[lvl].marks.push_back(
                        {start, idx, start < wlo, end > whi});
                }
            }
        }
        for (auto& layer : cand.layers)
            std::sort(layer.marks.begin(), layer.marks.end(),
                      [](const Mark& a, const Mark& b) { return a.pos < b.pos; });
        result.candidates.push_back(std::move(cand));
    }
    return result;
}

ReadabilityReport unique_readability_probe(const RankConstruction& c, int level,
                                           std::size_t window_len,
                                           std::size_t budget) {
    ReadabilityReport report;
    if (budget == 0) return report;
    Word deep = c.expand(level + 2, 1);
    std::vector<std::string> words;
    std::vector<std::int64_t> lens;
    int n = c.arity(level);
    for (int j = 1; j <= n; ++j) {
        words.push_back(c.expand(level, j).bits());
        lens.push_back(static_cast<std::int64_t>(words.back().size()));
    }
    std::size_t W = std::min(window_len, deep.size());
    std::size_t total = deep.size() - W + 1;
    std::size_t stride = std::max<std::size_t>(1, total / budget);

    for (std::size_t pos = 0; pos < total; pos += stride) {
        if (report.windows_inspected >= budget) break;
        ++report.windows_inspected;
        WindowContext ctx{deep.sub(pos, W), static_cast<std::int64_t>(pos)};
        TopTilings top = enumerate_top_tilings(ctx, words, 16, EdgeMode::Partial);
        if (top.tilings.size() < 2) continue;
        // compare fully-visible marks across candidates
        std::vector<std::vector<Mark>> fulls;
        for (const auto& t : top.tilings) {
            std::vector<Mark> f;
            for (const Mark& m : t)
                if (!m.left_partial && !m.right_partial) f.push_back(m);
            fulls.push_back(std::move(f));
        }
        for (std::size_t a = 0; a < fulls.size(); ++a) {
            for (std::size_t b = a + 1; b < fulls.size(); ++b) {
                for (const Mark& ma : fulls[a]) {
                    std::int64_t ea = ma.pos + lens[ma.word_index - 1];
                    for (const Mark& mb : fulls[b]) {
                        if (ma.pos == mb.pos && ma.word_index == mb.word_index)
                            continue;
                        std::int64_t eb = mb.pos + lens[mb.word_index - 1];
                        if (ma.pos < eb && mb.pos < ea) {
                            report.violation = true;
                            report.counterexample = ctx;
                            report.detail =
                                "conflicting marks at positions " +
                                std::to_string(ma.pos) + " and " +
                                std::to_string(mb.pos);
                            return report;
                        }
                    }
                }
            }
        }
    }
    return report;
}

Rank1WitnessReport rank1_witness_probe(const RankConstruction& c, int depth) {
    if (depth < 1) throw std::invalid_argument("depth must be >= 1");
    if (c.max_level() >= 0) depth = std::min(depth, c.max_level());
    for (int level = 0; level <= depth; ++level)
        if (c.arity(level) != 1)
            throw std::invalid_argument("rank1_witness_probe requires arity 1");

    Rank1WitnessReport report;
    for (int i = 0; i + 1 <= depth; ++i) {
        const std::string v = c.expand(i, 1).bits();
        const std::string u = c.expand(i + 1, 1).bits();
        // can u be read as an initial segment of a v-building within
        // |u| + |v| symbols? walk tiles from position 0
        std::vector<char> start(u.size() + 1, 0);  // tile-start positions
        start[0] = 1;
        bool pass = false;
        for (std::size_t p = 0; p <= u.size() && !pass; ++p) {
            if (!start[p]) continue;
            std::size_t rem = u.size() - p;
            if (rem < v.size()) {
                // the final tile may overrun the end of u
                if (u.compare(p, rem, v, 0, rem) == 0) pass = true;
                continue;
            }
            if (u.compare(p, v.size(), v, 0, v.size()) != 0) continue;
            std::size_t e = p + v.size();
            if (e == u.size()) {
                pass = true;
                continue;
            }
            std::size_t q = skip_ones(u, e);
            if (q == u.size()) {
                pass = true;  // trailing 1-run; one more tile stays in budget
                continue;
            }
            start[q] = 1;
        }
        report.per_level.push_back({i + 1, pass});
        if (!pass) report.all_pass = false;
    }
    return report;
}

}  // namespace symbrank

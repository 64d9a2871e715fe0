#include "symbrank/construction.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace symbrank {

RankConstruction::RankConstruction(int arity0, std::vector<LevelStep> prefix,
                                   std::vector<LevelStep> cycle)
    : arity0_(arity0), prefix_(std::move(prefix)), cycle_(std::move(cycle)) {
    if (arity0_ < 1) throw std::invalid_argument("arity0 must be >= 1");
}

bool RankConstruction::step_reachable(int i) const {
    if (i < 0) return false;
    if (!cycle_.empty()) return true;
    return i < static_cast<int>(prefix_.size());
}

const LevelStep& RankConstruction::step(int i) const {
    if (!step_reachable(i))
        throw std::out_of_range("level step " + std::to_string(i) + " unreachable");
    if (i < static_cast<int>(prefix_.size())) return prefix_[i];
    return cycle_[(i - prefix_.size()) % cycle_.size()];
}

int RankConstruction::max_level() const {
    if (!cycle_.empty()) return -1;
    return static_cast<int>(prefix_.size());
}

int RankConstruction::arity(int level) const {
    if (level < 0) throw std::out_of_range("negative level");
    if (level == 0) return arity0_;
    return static_cast<int>(step(level - 1).buildings.size());
}

int RankConstruction::declared_rank() const {
    int top = static_cast<int>(prefix_.size() + cycle_.size());
    int best = 0;
    for (int level = 1; level <= top; ++level) {
        if (!step_reachable(level - 1)) break;
        best = std::max(best, arity(level));
    }
    return best == 0 ? arity0_ : best;
}

BigInt RankConstruction::length(int level, int j) const {
    if (level == 0) {
        if (j < 1 || j > arity0_) throw std::out_of_range("word index out of range");
        return 1;
    }
    auto key = std::make_pair(level, j);
    auto it = len_cache_->find(key);
    if (it != len_cache_->end()) return it->second;
    const LevelStep& st = step(level - 1);
    if (j < 1 || j > static_cast<int>(st.buildings.size()))
        throw std::out_of_range("word index out of range");
    const Building& b = st.buildings[j - 1];
    BigInt total = 0;
    for (int blk : b.blocks) total += length(level - 1, blk);
    for (int s : b.spacers) total += s;
    (*len_cache_)[key] = total;
    return total;
}

Word RankConstruction::expand(int level, int j) const {
    BigInt len = length(level, j);
    if (len > BigInt(budget_bytes_))
        throw std::runtime_error("expansion budget exceeded");
    if (level == 0) return Word("0");
    auto key = std::make_pair(level, j);
    auto it = word_cache_->find(key);
    if (it != word_cache_->end()) return it->second;
    const Building& b = step(level - 1).buildings[j - 1];
    std::string out;
    out.reserve(static_cast<std::size_t>(len));
    for (std::size_t t = 0; t < b.blocks.size(); ++t) {
        out += expand(level - 1, b.blocks[t]).bits();
        if (t < b.spacers.size()) out.append(b.spacers[t], '1');
    }
    Word w(std::move(out));
    (*word_cache_)[key] = w;
    return w;
}

namespace {

void validate_step(const LevelStep& st, int prev_arity, int step_index,
                   std::vector<Violation>& out) {
    if (st.buildings.empty()) {
        out.push_back({step_index, -1, "step has no buildings"});
        return;
    }
    for (std::size_t q = 0; q < st.buildings.size(); ++q) {
        const Building& b = st.buildings[q];
        if (b.blocks.size() < 2) {
            out.push_back({step_index, static_cast<int>(q) + 1,
                           "building needs at least 2 blocks (k >= 1)"});
            continue;
        }
        if (b.spacers.size() + 1 != b.blocks.size()) {
            out.push_back({step_index, static_cast<int>(q) + 1,
                           "spacer count must be blocks-1"});
            continue;
        }
        for (int blk : b.blocks) {
            if (blk < 1 || blk > prev_arity) {
                out.push_back({step_index, static_cast<int>(q) + 1,
                               "block index out of range"});
                break;
            }
        }
        for (int s : b.spacers) {
            if (s < 0) {
                out.push_back({step_index, static_cast<int>(q) + 1,
                               "negative spacer"});
                break;
            }
        }
    }
    if (!st.buildings.empty() && !st.buildings[0].blocks.empty() &&
        st.buildings[0].blocks[0] != 1) {
        out.push_back({step_index, 1, "building 1 must start with word 1"});
    }
}

}  // namespace

std::vector<Violation> validate(const RankConstruction& c) {
    std::vector<Violation> out;
    int prev = c.arity0();
    const auto& prefix = c.prefix();
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        validate_step(prefix[i], prev, static_cast<int>(i), out);
        prev = static_cast<int>(prefix[i].buildings.size());
    }
    const auto& cycle = c.cycle();
    for (std::size_t t = 0; t < cycle.size(); ++t) {
        validate_step(cycle[t], prev, static_cast<int>(prefix.size() + t), out);
        prev = static_cast<int>(cycle[t].buildings.size());
    }
    if (!cycle.empty()) {
        // the cycle must be re-enterable: its exit arity feeds its entry
        int entry_needed = 0;
        for (const auto& b : cycle[0].buildings)
            for (int blk : b.blocks) entry_needed = std::max(entry_needed, blk);
        if (entry_needed > prev)
            out.push_back({-1, -1, "periodic cycle entry/exit arities mismatch"});
    }
    return out;
}

Building building_from_zeros(const Word& w) {
    if (!is_fword(w)) throw std::invalid_argument("not an F-word");
    Building b;
    std::size_t i = 0;
    while (i < w.size()) {
        // each '0' is one block; the following 1-run is its spacer
        b.blocks.push_back(1);
        ++i;
        std::size_t run = 0;
        while (i < w.size() && w[i] == '1') {
            ++run;
            ++i;
        }
        if (i < w.size()) b.spacers.push_back(static_cast<int>(run));
    }
    if (b.blocks.size() < 2)
        throw std::invalid_argument("word too short to build (needs >= 2 blocks)");
    return b;
}

namespace {

// Splice the buildings of steps [from_step, to_step) under a top building
// over level to_step, producing a building over level from_step.
Building compose_down(const RankConstruction& c, Building top, int top_level,
                      int base_level) {
    Building cur = std::move(top);
    for (int m = top_level; m > base_level; --m) {
        const LevelStep& st = c.step(m - 1);
        Building next;
        for (std::size_t t = 0; t < cur.blocks.size(); ++t) {
            const Building& sub = st.buildings[cur.blocks[t] - 1];
            next.blocks.insert(next.blocks.end(), sub.blocks.begin(), sub.blocks.end());
            next.spacers.insert(next.spacers.end(), sub.spacers.begin(), sub.spacers.end());
            if (t < cur.spacers.size()) next.spacers.push_back(cur.spacers[t]);
        }
        cur = std::move(next);
    }
    return cur;
}

}  // namespace

RankConstruction telescope(const RankConstruction& c, const std::vector<int>& cuts) {
    if (cuts.size() < 2 || cuts[0] != 0)
        throw std::invalid_argument("cuts must start at 0 and keep at least one step");
    for (std::size_t k = 1; k < cuts.size(); ++k)
        if (cuts[k] <= cuts[k - 1])
            throw std::invalid_argument("cuts must be strictly increasing");
    if (c.max_level() >= 0 && cuts.back() > c.max_level())
        throw std::invalid_argument("cut level unreachable");

    std::vector<LevelStep> steps;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        int lo = cuts[k], hi = cuts[k + 1];
        LevelStep st;
        int words = c.arity(hi);
        for (int j = 1; j <= words; ++j) {
            Building top = c.step(hi - 1).buildings[j - 1];
            st.buildings.push_back(compose_down(c, std::move(top), hi - 1, lo));
        }
        steps.push_back(std::move(st));
    }
    RankConstruction out(c.arity0(), std::move(steps));
    out.set_budget_bytes(c.budget_bytes());
    return out;
}

ProperReport check_proper(const RankConstruction& c, int depth) {
    if (depth < 1) throw std::invalid_argument("depth must be >= 1");
    ProperReport r;
    if (c.max_level() >= 0 && depth > c.max_level()) depth = c.max_level();
    int n = c.arity(1);
    for (int level = 1; level <= depth; ++level) {
        if (c.arity(level) != n) {
            r.proper = false;
            r.step = level - 1;
            r.reason = "arity changes at level " + std::to_string(level);
            return r;
        }
    }
    for (int i = 0; i < depth; ++i) {
        int avail = c.arity(i);
        const LevelStep& st = c.step(i);
        for (std::size_t q = 0; q < st.buildings.size(); ++q) {
            std::vector<bool> used(avail + 1, false);
            for (int blk : st.buildings[q].blocks) used[blk] = true;
            for (int idx = 1; idx <= avail; ++idx) {
                if (!used[idx]) {
                    r.proper = false;
                    r.step = i;
                    r.building = static_cast<int>(q) + 1;
                    r.missing_index = idx;
                    r.reason = "building omits index " + std::to_string(idx);
                    return r;
                }
            }
        }
    }
    r.proper = true;
    return r;
}

namespace {

bool is_suffix_of_any(const std::string& piece, const std::vector<Word>& words,
                      bool strict) {
    for (const Word& w : words) {
        const std::string& s = w.bits();
        if (piece.size() > s.size()) continue;
        if (strict && piece.size() == s.size()) continue;
        if (std::equal(piece.begin(), piece.end(), s.end() - piece.size()))
            return true;
    }
    return false;
}

bool is_prefix_of_any(const std::string& piece, const std::vector<Word>& words,
                      bool strict) {
    for (const Word& w : words) {
        const std::string& s = w.bits();
        if (piece.size() > s.size()) continue;
        if (strict && piece.size() == s.size()) continue;
        if (std::equal(piece.begin(), piece.end(), s.begin())) return true;
    }
    return false;
}

}  // namespace

GoodReport check_good_words(const std::vector<Word>& level_words, bool strict) {
    GoodReport report;
    for (std::size_t wi = 0; wi < level_words.size(); ++wi) {
        const std::string& w = level_words[wi].bits();
        std::size_t W = w.size();
        // reachable[p]: position p can follow "alpha 1^s (word 1^s)*"
        std::vector<char> reachable(W + 1, 0);
        std::vector<int> via_word(W + 1, -1);  // block index used to arrive, -1 = alpha
        std::vector<std::size_t> from(W + 1, 0);
        auto skip_ones = [&](std::size_t p) {
            while (p < W && w[p] == '1') ++p;
            return p;
        };
        for (std::size_t p = 1; p < W; ++p) {
            if (!is_suffix_of_any(w.substr(0, p), level_words, strict)) continue;
            std::size_t q = skip_ones(p);
            if (q <= W && !reachable[q]) {
                reachable[q] = 1;
                via_word[q] = -1;
                from[q] = p;
            }
        }
        // close under full interior words followed by 1-runs
        for (std::size_t p = 0; p <= W; ++p) {
            if (!reachable[p]) continue;
            for (std::size_t v = 0; v < level_words.size(); ++v) {
                const std::string& s = level_words[v].bits();
                if (p + s.size() > W) continue;
                if (!std::equal(s.begin(), s.end(), w.begin() + p)) continue;
                std::size_t q = skip_ones(p + s.size());
                if (!reachable[q]) {
                    reachable[q] = 1;
                    via_word[q] = static_cast<int>(v);
                    from[q] = p;
                }
            }
        }
        for (std::size_t p = 1; p < W; ++p) {
            if (!reachable[p]) continue;
            if (w[p] == '1') continue;  // beta starts with 0 (prefix of an F-word)
            if (is_prefix_of_any(w.substr(p), level_words, strict)) {
                GoodWitness wit;
                wit.word = level_words[wi];
                wit.word_index = static_cast<int>(wi) + 1;
                std::ostringstream msg;
                msg << "decomposes with beta = suffix starting at " << p;
                wit.decomposition = msg.str();
                report.good = false;
                report.witness = wit;
                return report;
            }
        }
    }
    report.good = true;
    return report;
}

GoodReport check_good(const RankConstruction& c, int level, bool strict) {
    std::vector<Word> words;
    int n = c.arity(level);
    for (int j = 1; j <= n; ++j) words.push_back(c.expand(level, j));
    return check_good_words(words, strict);
}

SpacerStats spacer_stats(const RankConstruction& c, int depth) {
    if (depth < 1) throw std::invalid_argument("depth must be >= 1");
    SpacerStats stats;
    if (c.max_level() >= 0 && depth > c.max_level()) depth = c.max_level();
    for (int i = 0; i < depth; ++i) {
        int m = 0;
        for (const Building& b : c.step(i).buildings)
            for (int s : b.spacers) m = std::max(m, s);
        stats.per_step_max.push_back(m);
        stats.max_spacer = std::max(stats.max_spacer, m);
    }
    if (c.schedule() == ScheduleKind::Periodic) {
        // the cycle carries the global bound
        int m = stats.max_spacer;
        for (const LevelStep& st : c.prefix())
            for (const Building& b : st.buildings)
                for (int s : b.spacers) m = std::max(m, s);
        for (const LevelStep& st : c.cycle())
            for (const Building& b : st.buildings)
                for (int s : b.spacers) m = std::max(m, s);
        stats.max_spacer = m;
        stats.certified = true;
    }
    return stats;
}

MinimalityReport minimality_verdict(const RankConstruction& c, int depth) {
    MinimalityReport r;
    if (depth < 1) depth = 1;
    int d = depth;
    if (c.max_level() >= 0) d = std::min(d, c.max_level());
    ProperReport proper = check_proper(c, d);
    SpacerStats stats = spacer_stats(c, d);
    bool cycle_proper = false;
    if (c.schedule() == ScheduleKind::Periodic) {
        int whole = static_cast<int>(c.prefix().size() + c.cycle().size());
        cycle_proper = check_proper(c, std::max(whole, d)).proper;
    }
    if (cycle_proper && stats.certified) {
        r.verdict = MinimalityVerdict::MinimalCertified;
        r.reason = "periodic schedule: proper with spacer bound " +
                   std::to_string(stats.max_spacer);
        return r;
    }
    // strictly increasing per-step spacer maxima is evidence against minimality
    bool increasing = stats.per_step_max.size() >= 3;
    for (std::size_t i = 1; i < stats.per_step_max.size() && increasing; ++i)
        if (stats.per_step_max[i] <= stats.per_step_max[i - 1]) increasing = false;
    if (increasing) {
        r.verdict = MinimalityVerdict::NotMinimalEvidence;
        r.reason = "per-step spacer maxima strictly increase on the truncation";
        return r;
    }
    if (!proper.proper) {
        r.verdict = MinimalityVerdict::NotMinimalEvidence;
        r.reason = "properness fails: " + proper.reason;
        return r;
    }
    r.verdict = MinimalityVerdict::MinimalEvidence;
    r.reason = "proper with bounded spacers on the truncation; no schedule certificate";
    return r;
}

std::set<Word> expected_subwords(const RankConstruction& c, int level, int j) {
    std::set<Word> out;
    out.insert(c.expand(level, j));
    if (level == 0) return out;
    const Building& b = c.step(level - 1).buildings[j - 1];
    std::set<int> seen(b.blocks.begin(), b.blocks.end());
    for (int blk : seen) {
        std::set<Word> sub = expected_subwords(c, level - 1, blk);
        out.insert(sub.begin(), sub.end());
    }
    return out;
}

LanguageSnapshot language(const RankConstruction& c, std::size_t n, int depth) {
    if (n < 1 || depth < 1) throw std::invalid_argument("language: n, depth >= 1");
    LanguageSnapshot snap = subwords(c.expand(depth, 1), n);
    snap.depth = depth;
    snap.stabilized = false;
    if (depth >= 2) {
        LanguageSnapshot prev = subwords(c.expand(depth - 1, 1), n);
        if (prev.members == snap.members &&
            BigInt(n) <= c.length(depth - 2, 1))
            snap.stabilized = true;
    }
    return snap;
}

std::vector<LanguageSnapshot> language_profile(const RankConstruction& c,
                                               std::size_t max_n, int max_depth) {
    std::vector<LanguageSnapshot> out;
    for (std::size_t n = 1; n <= max_n; ++n) {
        LanguageSnapshot snap;
        bool ok = false;
        for (int depth = 2; depth <= max_depth; ++depth) {
            if (c.max_level() >= 0 && depth > c.max_level()) break;
            snap = language(c, n, depth);
            if (snap.stabilized) {
                ok = true;
                break;
            }
        }
        if (!ok)
            throw std::runtime_error("language not certified at n=" +
                                     std::to_string(n));
        out.push_back(std::move(snap));
    }
    return out;
}

RankBoundReport rank_bounds(const RankConstruction& c, int depth) {
    if (depth < 1) throw std::invalid_argument("depth must be >= 1");
    if (c.max_level() >= 0) depth = std::min(depth, c.max_level());
    RankBoundReport r;
    r.declared_rank = c.declared_rank();
    SpacerStats stats = spacer_stats(c, depth);
    r.spacer_bound = stats.max_spacer;
    r.spacer_certified = stats.certified;
    r.one_run_bound = max_run(c.expand(depth, 1), '1') + 1;
    BigInt n2 = BigInt(r.declared_rank) * r.declared_rank;
    r.upper_a = n2 * BigInt(r.one_run_bound);
    r.upper_b = 4 * BigInt(r.spacer_bound + 1) * n2;
    return r;
}

RankConstruction from_chains(const ChainLevels& levels) {
    const auto& words = levels.words;
    const auto& buildings = levels.buildings;
    if (words.empty() || words[0].size() != 1 || words[0][0] != Word("0"))
        throw std::invalid_argument("chain levels must start with T0 = {\"0\"}");
    if (buildings.size() + 1 != words.size())
        throw std::invalid_argument("missing building level");
    int top = static_cast<int>(words.size()) - 1;
    for (int i = 0; i < top; ++i)
        if (buildings[i].size() != words[i + 1].size())
            throw std::invalid_argument("missing building at level " +
                                        std::to_string(i + 1));

    // reach[i][j]: deepest level a start-chain through word j of level i attains
    std::vector<std::vector<int>> reach(words.size());
    for (int i = 0; i <= top; ++i) reach[i].assign(words[i].size(), i);
    for (int i = top - 1; i >= 0; --i) {
        for (std::size_t j = 0; j < words[i].size(); ++j) {
            for (std::size_t m = 0; m < buildings[i].size(); ++m) {
                if (buildings[i][m].blocks.empty()) continue;
                if (buildings[i][m].blocks[0] == static_cast<int>(j) + 1)
                    reach[i][j] = std::max(reach[i][j], reach[i + 1][m]);
            }
        }
    }
    if (top >= 1 && reach[0][0] < top)
        throw std::runtime_error("no start-chain reaching the top level");

    // chain[i]: 0-based index of the chained word at level i
    std::vector<int> chain(words.size(), 0);
    for (int i = 0; i < top; ++i) {
        int pick = -1;
        for (std::size_t m = 0; m < buildings[i].size(); ++m) {
            if (buildings[i][m].blocks.empty()) continue;
            if (buildings[i][m].blocks[0] != chain[i] + 1) continue;
            if (pick < 0 || reach[i + 1][m] > reach[i + 1][pick])
                pick = static_cast<int>(m);
        }
        if (pick < 0)
            throw std::runtime_error("start-chain breaks at level " +
                                     std::to_string(i + 1));
        chain[i + 1] = pick;
    }

    // permute every level so the chained word is index 1
    std::vector<std::vector<int>> old_to_new(words.size());
    for (int i = 0; i <= top; ++i) {
        std::size_t cnt = words[i].size();
        old_to_new[i].assign(cnt, 0);
        int next = 2;
        for (std::size_t j = 0; j < cnt; ++j) {
            if (static_cast<int>(j) == chain[i])
                old_to_new[i][j] = 1;
            else
                old_to_new[i][j] = next++;
        }
    }

    std::vector<LevelStep> steps;
    for (int i = 0; i < top; ++i) {
        LevelStep st;
        st.buildings.resize(words[i + 1].size());
        for (std::size_t m = 0; m < buildings[i].size(); ++m) {
            Building b = buildings[i][m];
            for (int& blk : b.blocks) blk = old_to_new[i][blk - 1];
            st.buildings[old_to_new[i + 1][m] - 1] = std::move(b);
        }
        steps.push_back(std::move(st));
    }
    RankConstruction out(1, std::move(steps));

    // the construction must reproduce the given words
    for (int i = 1; i <= top; ++i) {
        for (std::size_t j = 0; j < words[i].size(); ++j) {
            Word got = out.expand(i, old_to_new[i][j]);
            if (got != words[i][j])
                throw std::runtime_error(
                    "buildings do not reproduce word " + std::to_string(j + 1) +
                    " at level " + std::to_string(i));
        }
    }
    return out;
}

}  // namespace symbrank

#pragma once

#include "symbrank/words.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace symbrank {

// One building w = v_{j1} 1^{s1} v_{j2} ... 1^{sk} v_{j(k+1)}.
// blocks holds 1-based indices into the previous level; spacers holds the
// k interleaved 1-run lengths (one fewer than blocks).
struct Building {
    std::vector<int> blocks;
    std::vector<int> spacers;
};

struct LevelStep {
    std::vector<Building> buildings;  // position q defines word q+1 of the next level
};

enum class ScheduleKind { Explicit, Periodic };

struct Violation {
    int step = -1;      // -1: construction-wide
    int building = -1;  // 1-based within step, -1: step-wide
    std::string message;
};

// A leveled hierarchy of binary words: level 0 holds arity0 copies of "0";
// each LevelStep gives one building per word of the next level. Periodic
// schedules repeat the cycle steps forever after the explicit prefix.
class RankConstruction {
public:
    RankConstruction() = default;
    RankConstruction(int arity0, std::vector<LevelStep> prefix,
                     std::vector<LevelStep> cycle = {});

    ScheduleKind schedule() const {
        return cycle_.empty() ? ScheduleKind::Explicit : ScheduleKind::Periodic;
    }
    int arity0() const { return arity0_; }
    const std::vector<LevelStep>& prefix() const { return prefix_; }
    const std::vector<LevelStep>& cycle() const { return cycle_; }

    // Step i builds level i+1 from level i (0-based).
    bool step_reachable(int i) const;
    const LevelStep& step(int i) const;
    // Deepest reachable level; -1 when unbounded (periodic).
    int max_level() const;

    int arity(int level) const;  // word count at a level
    // Max arity over reachable levels >= 1 within the prefix and cycle.
    int declared_rank() const;

    BigInt length(int level, int j) const;  // exact |v_{level,j}|
    Word expand(int level, int j) const;    // budget-checked materialization

    std::size_t budget_bytes() const { return budget_bytes_; }
    void set_budget_bytes(std::size_t b) { budget_bytes_ = b; }

private:
    int arity0_ = 1;
    std::vector<LevelStep> prefix_;
    std::vector<LevelStep> cycle_;
    std::size_t budget_bytes_ = 64ull << 20;
    // memo caches; semantically invisible
    std::shared_ptr<std::map<std::pair<int, int>, Word>> word_cache_ =
        std::make_shared<std::map<std::pair<int, int>, Word>>();
    std::shared_ptr<std::map<std::pair<int, int>, BigInt>> len_cache_ =
        std::make_shared<std::map<std::pair<int, int>, BigInt>>();
};

std::vector<Violation> validate(const RankConstruction& c);

// Canonical decomposition of an F-word as a building over the single-word
// level {"0"}.
Building building_from_zeros(const Word& w);

// Compose consecutive steps so that new level k equals original level
// cuts[k]. cuts must be strictly increasing with cuts[0] = 0; the result is
// explicit with cuts.size()-1 steps.
RankConstruction telescope(const RankConstruction& c, const std::vector<int>& cuts);

struct ProperReport {
    bool proper = false;
    int step = -1;
    int building = -1;
    int missing_index = -1;
    std::string reason;
};
ProperReport check_proper(const RankConstruction& c, int depth);

struct GoodWitness {
    Word word;          // the level word that decomposes
    int word_index = 0; // 1-based
    std::string decomposition;
};
struct GoodReport {
    bool good = false;
    std::optional<GoodWitness> witness;
};
// Decomposition check on the words of one level. strict excludes full level
// words from serving as the alpha/beta edge pieces.
GoodReport check_good_words(const std::vector<Word>& level_words, bool strict = false);
GoodReport check_good(const RankConstruction& c, int level, bool strict = false);

struct SpacerStats {
    int max_spacer = 0;
    std::vector<int> per_step_max;  // steps 0..depth-1
    bool certified = false;         // periodic schedule: bound holds at all levels
};
SpacerStats spacer_stats(const RankConstruction& c, int depth);

enum class MinimalityVerdict { MinimalCertified, MinimalEvidence, NotMinimalEvidence };
struct MinimalityReport {
    MinimalityVerdict verdict = MinimalityVerdict::MinimalEvidence;
    std::string reason;
};
MinimalityReport minimality_verdict(const RankConstruction& c, int depth);

// The recursively defined expected-subword set of v_{level,j}: the word
// itself, its building blocks, and their expected subwords down to level 0.
std::set<Word> expected_subwords(const RankConstruction& c, int level, int j);

// subwords(expand(depth,1), n) with a stabilization guard: agreement with
// depth-1 and n <= |v_{depth-2,1}|. Exact for certified-minimal
// constructions once stabilized, heuristic otherwise.
LanguageSnapshot language(const RankConstruction& c, std::size_t n, int depth);

// Stabilized snapshots for n = 1..max_n (deepening as needed up to
// max_depth); throws if stabilization is not reached.
std::vector<LanguageSnapshot> language_profile(const RankConstruction& c,
                                               std::size_t max_n, int max_depth);

struct RankBoundReport {
    int declared_rank = 0;
    int spacer_bound = 0;        // M over inspected steps
    bool spacer_certified = false;
    std::size_t one_run_bound = 0;  // ell = max 1-run of deepest expansion + 1
    BigInt upper_a;              // n^2 * ell
    BigInt upper_b;              // 4 (M+1) n^2
};
RankBoundReport rank_bounds(const RankConstruction& c, int depth);

// Explicit word sets T_0..T_depth with one building per word of T_{i+1}
// over T_i. T_0 must be {"0"}.
struct ChainLevels {
    std::vector<std::vector<Word>> words;
    std::vector<std::vector<Building>> buildings;  // buildings[i] covers words[i+1]
};
// Reorders every level so the deepest start-chain sits at index 1 and
// returns the explicit construction carrying the same words.
RankConstruction from_chains(const ChainLevels& levels);

}  // namespace symbrank

#pragma once

#include "symbrank/construction.hpp"
#include "symbrank/words.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace symbrank {

// A finite view of a bi-infinite point: the window content plus the ambient
// coordinate of its first symbol.
struct WindowContext {
    Word word;
    std::int64_t origin = 0;
};

struct EnumResult {
    std::vector<Building> buildings;
    bool overflow = false;
};

// All distinct buildings of w from the block set S; the 1-runs between
// blocks are forced by content, so enumeration branches only on block
// choices. Truncated at cap with the overflow flag set.
EnumResult enumerate_buildings(const Word& w, const std::vector<Word>& blocks,
                               std::size_t cap);

// True iff the window occurs inside some word built from v (tiles of v
// separated by arbitrary 1-runs, partial tiles allowed at both window
// edges).
bool detect_built_from(const WindowContext& ctx, const Word& v);

enum class Clopen { True, False, WindowTooSmall };

// The clopen expected-occurrence criterion at a good level: v_{i,j} occurs
// at k and no other level word covers it from the left. The window must
// span [k - maxlen + 1, k + maxlen - 1]. assume_good skips the goodness
// certificate (for experiments on uncertified levels).
Clopen expected_occurrence(const WindowContext& ctx, const RankConstruction& c,
                           int level, int j, std::int64_t k,
                           bool assume_good = false);

struct Mark {
    std::int64_t pos = 0;  // ambient start (may precede the window)
    int word_index = 0;    // 1-based
    bool left_partial = false;
    bool right_partial = false;
};

struct ReadingLayer {
    int level = 0;
    std::vector<Mark> marks;  // ordered by pos, pairwise non-overlapping
};

struct ParseCandidate {
    std::vector<ReadingLayer> layers;  // levels 0..max_level
    bool has_partial_edges = false;
};

// Exact: marks tile the window (only leading/trailing 1-runs may stay
// uncovered). Partial: top-level marks may extend past either window edge.
enum class EdgeMode { Exact, Partial };

struct ParseResult {
    std::vector<ParseCandidate> candidates;
    bool overflow = false;
};

// Enumerates reading candidates for the window: every 0 must be covered by
// a top-level mark, gaps are 1-runs, lower layers follow from the buildings.
ParseResult parse_window(const WindowContext& ctx, const RankConstruction& c,
                         int max_level, std::size_t cap,
                         EdgeMode mode = EdgeMode::Exact);

struct ReadabilityReport {
    bool violation = false;
    std::optional<WindowContext> counterexample;
    std::string detail;
    std::size_t windows_inspected = 0;
};

// Scans windows of the given length inside expand(level+2, 1) for two parse
// candidates whose fully-visible level-`level` marks conflict. budget caps
// the number of windows inspected (strided when the expansion is long).
ReadabilityReport unique_readability_probe(const RankConstruction& c, int level,
                                           std::size_t window_len,
                                           std::size_t budget);

struct Rank1WitnessReport {
    std::vector<std::pair<int, bool>> per_level;  // (level i, pass)
    bool all_pass = true;
};

// Finite-depth necessary condition along a rank-1 generating sequence:
// v_{i+1} must be an initial segment of a word built from v_i of length at
// most |v_{i+1}| + |v_i|.
Rank1WitnessReport rank1_witness_probe(const RankConstruction& c, int depth);

}  // namespace symbrank

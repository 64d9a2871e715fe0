#pragma once

#include "symbrank/construction.hpp"
#include "symbrank/parsing.hpp"
#include "symbrank/words.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace symbrank {

// Defining data of the cover substitution: sources[q-1] is level-1 cover
// word q, targets[q-1] its image. Paired entries q and q+n share a target
// and have equal source lengths.
struct SubstitutionTable {
    int radius = 0;
    std::vector<Word> sources;
    std::vector<Word> targets;
};

// Radius-r local rule: table is total on words of length 2r+1.
struct SlidingBlockCode {
    int radius = 0;
    std::map<Word, char> table;
};
SlidingBlockCode identity_code();
SlidingBlockCode bit_flip_code();
SlidingBlockCode majority3_code();

struct GoodCoverResult {
    RankConstruction cover;  // rank 2n, good and proper
    SubstitutionTable table;
    std::vector<int> trace;  // chosen source levels i_1 < i_2 < ...
};
// Doubling cover of a proper rank-n construction: level-1 cover words are
// the level-i_1 source words alongside their 01...10 markers; deeper
// buildings copy telescoped source buildings with edge blocks shifted into
// the marker half. levels is the number of source levels chosen (>= 2); the
// first cover step is dropped so the output starts at the good levels.
GoodCoverResult good_cover(const RankConstruction& c, int levels);

// Positionwise image of the window: positions covered by an expected
// level-1 occurrence map through the table, uncovered positions map to 1.
// The window shrinks by (max level-1 length - 1) at each edge.
WindowContext apply_substitution(const WindowContext& ctx,
                                 const RankConstruction& cover,
                                 const SubstitutionTable& table);

// Positionwise lookup on (2r+1)-blocks; output shorter by 2r.
WindowContext apply_code(const WindowContext& ctx, const SlidingBlockCode& code);

struct FactorResult {
    RankConstruction construction;
    int k1 = 0;                          // 1-run bound of the source
    std::vector<std::size_t> level_sizes;  // |T_p| for p = 1..depth
};
// Image construction of a sliding-block code applied to the subshift of c:
// level-p words are the trimmed code images over adjacent expected level-p
// occurrences, with buildings induced by the source buildings.
FactorResult factor_construction(const RankConstruction& c,
                                 const SlidingBlockCode& code, int depth);

// Odometer-cover family parameters: edge counts a_1, a_2, ... with the
// derived sequences p_0 = q_0 = 1, p_{i+1} = 2p_i + 2q_i,
// q_{i+1} = 2p_i + q_i and partial products A_i.
struct MEFParams {
    std::vector<long long> a;
    int slack = 1;  // require a_i > slack * (p_i + q_i)

    BigInt p(int i) const;
    BigInt q(int i) const;
    BigInt A(int i) const;  // a_1 * ... * a_i, A_0 = 1
};
std::vector<std::string> mef_violations(const MEFParams& params, int depth);

// Rank-2 construction with v_{1,1} = 0^a 1^{2a} 0^a, v_{1,2} = 0^a 1^a 0^a
// and v_{i+1,1} = v_{i,1}^a v_{i,2}^{2a} v_{i,1}^a,
// v_{i+1,2} = v_{i,1}^a v_{i,2}^a v_{i,1}^a (a = a_{i+1}, zero spacers).
RankConstruction mef_construction(const MEFParams& params, int depth);

// Digit read off an expected v_{i+1,1} occurrence at ambient position k:
// the unique j with (j-1) A_i <= k mod A_{i+1} < j A_i.
int mef_digits(const MEFParams& params, const BigInt& k, int i);

// Named examples: "chacon", "chacon_like(k)", "prop_6_10", "prop_6_10(d)",
// "prop_6_11(N)", "mef".
RankConstruction gallery(const std::string& name);

struct PartitionReport {
    bool pass = false;
    std::optional<Word> witness;
    std::string detail;
};
// Checks the five-word cyclic partition of the chacon_like(k) language at
// length 4k: shift-invariance of membership and unique phase per word.
PartitionReport verify_cyclic_partition(int k, int depth);
PartitionReport verify_cyclic_partition(int k, int depth,
                                        const std::vector<Word>& anchor_words);

}  // namespace symbrank

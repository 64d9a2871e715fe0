#pragma once

#include "symbrank/construction.hpp"
#include "symbrank/words.hpp"

#include <set>
#include <string>
#include <vector>

namespace symbrank {

// Free-monoid morphism A* -> B* with 1-based letters.
struct Morphism {
    int source_size = 0;
    int target_size = 0;
    std::vector<std::vector<int>> rules;  // rules[a-1] = image of letter a
};

// Chain tau_n : A_{n+1}* -> A_n*. alphabet_sizes holds |A_0|..|A_m| for the
// explicit prefix; a nonempty cycle repeats forever (its entry/exit sizes
// must match).
struct DirectiveSequence {
    std::vector<int> alphabet_sizes;
    std::vector<Morphism> prefix;
    std::vector<Morphism> cycle;

    bool morphism_reachable(int i) const;
    const Morphism& morphism(int i) const;  // tau_i
    int alphabet_size(int i) const;         // |A_i|
};

std::vector<std::string> validate_directive(const DirectiveSequence& ds);

// tau_n o ... o tau_{N-1} with rules expanded.
Morphism compose_range(const DirectiveSequence& ds, int n, int N);

// Subword snapshot of the level-n language: union over letters a of the
// length word_len subwords of tau_[n,N)(a); stabilized iff equal at N-1.
struct SadicLanguageSnapshot {
    std::size_t len = 0;
    std::set<std::vector<int>> members;
    int horizon = 0;
    bool stabilized = false;
};
SadicLanguageSnapshot language_level(const DirectiveSequence& ds, int n,
                                     std::size_t word_len, int N);

struct PrimitivityResult {
    bool found = false;
    int N = 0;
};
// Least N <= horizon with every letter of A_n inside every tau_[n,N)(a).
PrimitivityResult primitivity_probe(const DirectiveSequence& ds, int n,
                                    int horizon);

struct AlphabetRankStats {
    int min_size = 0;
    bool certified = false;  // periodic schedules certify the liminf
    int liminf = 0;          // meaningful when certified
};
AlphabetRankStats alphabet_rank_stats(const DirectiveSequence& ds, int depth);

struct SadicConversion {
    RankConstruction construction;
    bool recognizable_declared = false;
};
// Conversion to a rank-K construction: level-1 words are marker words of
// length |tau_0(a)|; deeper buildings transcribe the tau rules with zero
// spacers. Letters are reordered along a start-chain.
SadicConversion sadic_to_rank_construction(const DirectiveSequence& ds, int K,
                                           bool recognizable_declared);

}  // namespace symbrank

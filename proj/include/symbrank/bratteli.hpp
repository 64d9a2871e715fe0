#pragma once

#include "symbrank/construction.hpp"
#include "symbrank/words.hpp"

#include <string>
#include <vector>

namespace symbrank {

// Leveled graph with ordered incoming edges. level_sizes[k] = |V_k| with
// |V_0| = 1; incoming[k-1][v] lists the 1-based source vertices of the
// edges into vertex v+1 of V_k, in increasing edge order.
struct OrderedBratteliDiagram {
    std::vector<int> level_sizes;
    std::vector<std::vector<std::vector<int>>> incoming;

    int depth() const { return static_cast<int>(level_sizes.size()) - 1; }
    const std::vector<int>& edges_into(int k, int v) const {
        return incoming[k - 1][v - 1];
    }
};

std::vector<std::string> validate_diagram(const OrderedBratteliDiagram& d);

// Compose levels so new level k equals original level cuts[k]; incoming
// lists enumerate composed paths ordered by the induced order (compare at
// the highest differing edge).
OrderedBratteliDiagram telescope_diagram(const OrderedBratteliDiagram& d,
                                         const std::vector<int>& cuts);

using HeightVector = std::vector<BigInt>;

// Root-path counts into each vertex of V_k.
HeightVector heights(const OrderedBratteliDiagram& d, int k);

// Finite path from the root to a vertex of V_N: picks[k-1] = (vertex r_k,
// 0-based position within its incoming list); the source at pick k must be
// r_{k-1}.
struct PathPrefix {
    std::vector<std::pair<int, int>> picks;
};

PathPrefix minimal_path(const OrderedBratteliDiagram& d, int depth, int top_vertex);
PathPrefix maximal_path(const OrderedBratteliDiagram& d, int depth, int top_vertex);

// Successor: advance the least non-maximal pick, minimal fill below; an
// all-maximal path wraps to the minimal path into the same top vertex.
std::pair<PathPrefix, bool> vershik_successor(const OrderedBratteliDiagram& d,
                                              const PathPrefix& p);

struct ExtremalLevelInfo {
    bool min_determined = false;
    bool max_determined = false;
    int min_source = 0;  // 1-based when determined
    int max_source = 0;
};
struct ExtremalReport {
    // entry k-1 describes level k (edges V_{k-1} -> V_k), k = 1..depth
    std::vector<ExtremalLevelInfo> levels;
    bool all_determined() const;
};
ExtremalReport extremal_path_probe(const OrderedBratteliDiagram& d, int depth);

// Incoming source sequence of vertex v at level k, in edge order.
std::vector<int> eta(const OrderedBratteliDiagram& d, int k, int v);

// Iterate the successor from the minimal depth-path into top vertex 1,
// emitting the vertex at the given level each step.
std::vector<int> tower_coding(const OrderedBratteliDiagram& d, int depth,
                              int level, std::size_t steps);

// Conversion to a rank-n construction: level-1 words are marker words of
// length |eta_1(w)|; deeper buildings transcribe eta with zero spacers.
// Vertices are reordered along the minimal-source chain so the start-chain
// condition holds.
RankConstruction bratteli_to_rank_construction(const OrderedBratteliDiagram& d,
                                               int rank);

}  // namespace symbrank

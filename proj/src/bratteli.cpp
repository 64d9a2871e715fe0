#include "symbrank/bratteli.hpp"

#include <algorithm>
#include <stdexcept>

namespace symbrank {

std::vector<std::string> validate_diagram(const OrderedBratteliDiagram& d) {
    std::vector<std::string> out;
    if (d.level_sizes.empty() || d.level_sizes[0] != 1) {
        out.push_back("level 0 must have exactly one vertex");
        return out;
    }
    if (d.incoming.size() + 1 != d.level_sizes.size()) {
        out.push_back("incoming lists must cover levels 1..depth");
        return out;
    }
    for (int k = 1; k <= d.depth(); ++k) {
        int sz = d.level_sizes[k];
        int prev = d.level_sizes[k - 1];
        if (static_cast<int>(d.incoming[k - 1].size()) != sz) {
            out.push_back("level " + std::to_string(k) +
                          ": incoming list count != size");
            continue;
        }
        std::vector<bool> used(prev + 1, false);
        for (int v = 1; v <= sz; ++v) {
            const auto& edges = d.edges_into(k, v);
            if (edges.empty())
                out.push_back("level " + std::to_string(k) + " vertex " +
                              std::to_string(v) + ": empty incoming list");
            for (int src : edges) {
                if (src < 1 || src > prev)
                    out.push_back("level " + std::to_string(k) + " vertex " +
                                  std::to_string(v) + ": source out of range");
                else
                    used[src] = true;
            }
        }
        for (int src = 1; src <= prev; ++src)
            if (!used[src])
                out.push_back("level " + std::to_string(k) +
                              ": source-surjectivity fails for vertex " +
                              std::to_string(src));
    }
    return out;
}

namespace {

// Source vertices of all paths from level a into vertex v at level m, in
// the induced path order (last edge varies slowest).
void list_path_sources(const OrderedBratteliDiagram& d, int m, int v, int a,
                       std::vector<int>& out) {
    if (m == a) {
        out.push_back(v);
        return;
    }
    for (int src : d.edges_into(m, v)) list_path_sources(d, m - 1, src, a, out);
}

}  // namespace

OrderedBratteliDiagram telescope_diagram(const OrderedBratteliDiagram& d,
                                         const std::vector<int>& cuts) {
    if (cuts.size() < 2 || cuts[0] != 0)
        throw std::invalid_argument("cuts must start at 0 with length >= 2");
    for (std::size_t k = 1; k < cuts.size(); ++k)
        if (cuts[k] <= cuts[k - 1])
            throw std::invalid_argument("cuts must be strictly increasing");
    if (cuts.back() > d.depth())
        throw std::invalid_argument("cut level exceeds depth");

    OrderedBratteliDiagram out;
    for (int c : cuts) out.level_sizes.push_back(d.level_sizes[c]);
    for (std::size_t k = 1; k < cuts.size(); ++k) {
        std::vector<std::vector<int>> lists;
        for (int v = 1; v <= d.level_sizes[cuts[k]]; ++v) {
            std::vector<int> sources;
            list_path_sources(d, cuts[k], v, cuts[k - 1], sources);
            lists.push_back(std::move(sources));
        }
        out.incoming.push_back(std::move(lists));
    }
    return out;
}

HeightVector heights(const OrderedBratteliDiagram& d, int k) {
    if (k < 0 || k > d.depth()) throw std::out_of_range("level out of range");
    HeightVector h{1};
    for (int m = 1; m <= k; ++m) {
        HeightVector next(d.level_sizes[m], 0);
        for (int v = 1; v <= d.level_sizes[m]; ++v)
            for (int src : d.edges_into(m, v)) next[v - 1] += h[src - 1];
        h = std::move(next);
    }
    return h;
}

PathPrefix minimal_path(const OrderedBratteliDiagram& d, int depth, int top_vertex) {
    PathPrefix p;
    p.picks.assign(depth, {0, 0});
    int v = top_vertex;
    for (int k = depth; k >= 1; --k) {
        p.picks[k - 1] = {v, 0};
        v = d.edges_into(k, v).front();
    }
    return p;
}

PathPrefix maximal_path(const OrderedBratteliDiagram& d, int depth, int top_vertex) {
    PathPrefix p;
    p.picks.assign(depth, {0, 0});
    int v = top_vertex;
    for (int k = depth; k >= 1; --k) {
        const auto& edges = d.edges_into(k, v);
        p.picks[k - 1] = {v, static_cast<int>(edges.size()) - 1};
        v = edges.back();
    }
    return p;
}

std::pair<PathPrefix, bool> vershik_successor(const OrderedBratteliDiagram& d,
                                              const PathPrefix& p) {
    int N = static_cast<int>(p.picks.size());
    for (int k = 1; k <= N; ++k) {
        auto [r, pos] = p.picks[k - 1];
        const auto& edges = d.edges_into(k, r);
        if (pos + 1 < static_cast<int>(edges.size())) {
            PathPrefix next = p;
            next.picks[k - 1] = {r, pos + 1};
            // minimal fill below the advanced edge
            int v = edges[pos + 1];
            for (int t = k - 1; t >= 1; --t) {
                next.picks[t - 1] = {v, 0};
                v = d.edges_into(t, v).front();
            }
            return {next, false};
        }
    }
    return {minimal_path(d, N, p.picks.back().first), true};
}

bool ExtremalReport::all_determined() const {
    for (const auto& info : levels)
        if (!info.min_determined || !info.max_determined) return false;
    return true;
}

ExtremalReport extremal_path_probe(const OrderedBratteliDiagram& d, int depth) {
    if (depth > d.depth()) depth = d.depth();
    ExtremalReport report;
    for (int k = 1; k <= depth; ++k) {
        ExtremalLevelInfo info;
        int minv = 0, maxv = 0;
        bool min_ok = true, max_ok = true;
        for (int v = 1; v <= d.level_sizes[k]; ++v) {
            const auto& edges = d.edges_into(k, v);
            if (edges.empty()) continue;
            if (minv == 0) minv = edges.front();
            else if (edges.front() != minv) min_ok = false;
            if (maxv == 0) maxv = edges.back();
            else if (edges.back() != maxv) max_ok = false;
        }
        info.min_determined = min_ok && minv != 0;
        info.max_determined = max_ok && maxv != 0;
        if (info.min_determined) info.min_source = minv;
        if (info.max_determined) info.max_source = maxv;
        report.levels.push_back(info);
    }
    return report;
}

std::vector<int> eta(const OrderedBratteliDiagram& d, int k, int v) {
    if (k < 1 || k > d.depth()) throw std::out_of_range("level out of range");
    return d.edges_into(k, v);
}

std::vector<int> tower_coding(const OrderedBratteliDiagram& d, int depth,
                              int level, std::size_t steps) {
    if (level > depth) throw std::invalid_argument("level exceeds depth");
    std::vector<int> out;
    PathPrefix p = minimal_path(d, depth, 1);
    for (std::size_t s = 0; s < steps; ++s) {
        out.push_back(level == 0 ? 1 : p.picks[level - 1].first);
        p = vershik_successor(d, p).first;
    }
    return out;
}

RankConstruction bratteli_to_rank_construction(const OrderedBratteliDiagram& d,
                                               int rank) {
    auto violations = validate_diagram(d);
    if (!violations.empty())
        throw std::invalid_argument("invalid diagram: " + violations.front());
    int depth = d.depth();
    if (depth < 1) throw std::invalid_argument("diagram needs depth >= 1");
    int n = rank;
    for (int k = 1; k <= depth; ++k) {
        int sz = d.level_sizes[k];
        if (sz < 2 || sz > n)
            throw std::invalid_argument("level " + std::to_string(k) +
                                        " size must lie in [2, rank]");
        // full connectivity: every source reaches every vertex at each level
        for (int v = 1; v <= sz; ++v) {
            const auto& edges = d.edges_into(k, v);
            for (int src = 1; src <= d.level_sizes[k - 1]; ++src)
                if (std::find(edges.begin(), edges.end(), src) == edges.end())
                    throw std::invalid_argument(
                        "level " + std::to_string(k) + " vertex " +
                        std::to_string(v) + " misses source " +
                        std::to_string(src) + "; telescope further");
        }
    }
    ExtremalReport ext = extremal_path_probe(d, depth);
    if (!ext.all_determined())
        throw std::invalid_argument(
            "extremal sources undetermined; telescope further");

    // reorder levels 1..depth-1 so the common minimal source sits at index 1
    std::vector<std::vector<int>> old_to_new(depth + 1);
    old_to_new[0] = {0, 1};  // 1-based identity on the root
    for (int k = 1; k <= depth; ++k) {
        int sz = d.level_sizes[k];
        old_to_new[k].assign(sz + 1, 0);
        int chain_vertex = (k < depth) ? ext.levels[k].min_source : 1;
        old_to_new[k][chain_vertex] = 1;
        int next = 2;
        for (int v = 1; v <= sz; ++v)
            if (v != chain_vertex) old_to_new[k][v] = next++;
    }
    std::vector<std::vector<int>> new_to_old(depth + 1);
    for (int k = 0; k <= depth; ++k) {
        new_to_old[k].assign(old_to_new[k].size(), 0);
        for (std::size_t v = 1; v < old_to_new[k].size(); ++v)
            new_to_old[k][old_to_new[k][v]] = static_cast<int>(v);
    }

    std::vector<LevelStep> steps;
    // level-1 marker words 0 (01)^j 0^mid (10)^{j+n} 0 with |word| = |eta_1|
    {
        LevelStep st;
        for (int j = 1; j <= d.level_sizes[1]; ++j) {
            int old_v = new_to_old[1][j];
            long long h = static_cast<long long>(d.edges_into(1, old_v).size());
            long long need = 2LL * n + 4LL * j + 3;
            if (h < need)
                throw std::invalid_argument(
                    "word " + std::to_string(j) + ": |eta_1| = " +
                    std::to_string(h) + " below required " + std::to_string(need));
            long long mid = h - 2 * n - 4 * j - 2;
            std::string bits = "0";
            for (int t = 0; t < j; ++t) bits += "01";
            bits.append(static_cast<std::size_t>(mid), '0');
            for (int t = 0; t < j + n; ++t) bits += "10";
            bits += "0";
            st.buildings.push_back(building_from_zeros(Word(bits)));
        }
        steps.push_back(std::move(st));
    }
    for (int k = 2; k <= depth; ++k) {
        LevelStep st;
        for (int j = 1; j <= d.level_sizes[k]; ++j) {
            int old_v = new_to_old[k][j];
            Building b;
            for (int src : d.edges_into(k, old_v))
                b.blocks.push_back(old_to_new[k - 1][src]);
            b.spacers.assign(b.blocks.size() - 1, 0);
            st.buildings.push_back(std::move(b));
        }
        steps.push_back(std::move(st));
    }
    return RankConstruction(1, std::move(steps));
}

}  // namespace symbrank

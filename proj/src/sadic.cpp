#include "symbrank/sadic.hpp"

#include <algorithm>
#include <stdexcept>

namespace symbrank {

bool DirectiveSequence::morphism_reachable(int i) const {
    if (i < 0) return false;
    if (!cycle.empty()) return true;
    return i < static_cast<int>(prefix.size());
}

const Morphism& DirectiveSequence::morphism(int i) const {
    if (!morphism_reachable(i))
        throw std::out_of_range("morphism " + std::to_string(i) + " unreachable");
    if (i < static_cast<int>(prefix.size())) return prefix[i];
    return cycle[(i - prefix.size()) % cycle.size()];
}

int DirectiveSequence::alphabet_size(int i) const {
    if (i < static_cast<int>(alphabet_sizes.size())) return alphabet_sizes[i];
    if (cycle.empty()) throw std::out_of_range("alphabet level unreachable");
    return morphism(i - 1).source_size;
}

std::vector<std::string> validate_directive(const DirectiveSequence& ds) {
    std::vector<std::string> out;
    if (ds.alphabet_sizes.size() != ds.prefix.size() + 1) {
        out.push_back("alphabet size count must be prefix length + 1");
        return out;
    }
    auto check = [&](const Morphism& m, int idx, int target_expected) {
        if (m.target_size != target_expected)
            out.push_back("morphism " + std::to_string(idx) +
                          ": target alphabet mismatch");
        if (static_cast<int>(m.rules.size()) != m.source_size)
            out.push_back("morphism " + std::to_string(idx) +
                          ": rule count != source alphabet");
        for (const auto& rule : m.rules) {
            if (rule.empty())
                out.push_back("morphism " + std::to_string(idx) + ": empty rule");
            for (int letter : rule)
                if (letter < 1 || letter > m.target_size)
                    out.push_back("morphism " + std::to_string(idx) +
                                  ": letter out of range");
        }
    };
    for (std::size_t i = 0; i < ds.prefix.size(); ++i) {
        check(ds.prefix[i], static_cast<int>(i), ds.alphabet_sizes[i]);
        if (ds.prefix[i].source_size != ds.alphabet_sizes[i + 1])
            out.push_back("morphism " + std::to_string(i) +
                          ": source alphabet mismatch");
    }
    int prev_source = ds.alphabet_sizes.back();
    for (std::size_t t = 0; t < ds.cycle.size(); ++t) {
        check(ds.cycle[t], static_cast<int>(ds.prefix.size() + t), prev_source);
        prev_source = ds.cycle[t].source_size;
    }
    if (!ds.cycle.empty() && ds.cycle[0].target_size != prev_source)
        out.push_back("cycle entry/exit alphabets mismatch");
    return out;
}

Morphism compose_range(const DirectiveSequence& ds, int n, int N) {
    if (n >= N) throw std::invalid_argument("compose_range needs n < N");
    if (!ds.morphism_reachable(N - 1))
        throw std::out_of_range("range exceeds directive sequence");
    std::vector<std::vector<int>> words = ds.morphism(N - 1).rules;
    for (int i = N - 2; i >= n; --i) {
        const Morphism& m = ds.morphism(i);
        std::size_t total = 0;
        std::vector<std::vector<int>> next;
        next.reserve(words.size());
        for (const auto& w : words) {
            std::vector<int> image;
            for (int letter : w) {
                const auto& rule = m.rules[letter - 1];
                image.insert(image.end(), rule.begin(), rule.end());
            }
            total += image.size();
            if (total > (64u << 20))
                throw std::runtime_error("composition budget exceeded");
            next.push_back(std::move(image));
        }
        words = std::move(next);
    }
    Morphism out;
    out.source_size = ds.alphabet_size(N);
    out.target_size = ds.alphabet_size(n);
    out.rules = std::move(words);
    return out;
}

namespace {

std::set<std::vector<int>> letter_subwords(const std::vector<std::vector<int>>& rules,
                                           std::size_t len) {
    std::set<std::vector<int>> out;
    for (const auto& w : rules)
        for (std::size_t s = 0; s + len <= w.size(); ++s)
            out.insert(std::vector<int>(w.begin() + s, w.begin() + s + len));
    return out;
}

}  // namespace

SadicLanguageSnapshot language_level(const DirectiveSequence& ds, int n,
                                     std::size_t word_len, int N) {
    if (N <= n) throw std::invalid_argument("language_level needs N > n");
    if (word_len < 1) throw std::invalid_argument("word_len must be >= 1");
    SadicLanguageSnapshot snap;
    snap.len = word_len;
    snap.horizon = N;
    snap.members = letter_subwords(compose_range(ds, n, N).rules, word_len);
    if (N - 1 > n) {
        auto prev = letter_subwords(compose_range(ds, n, N - 1).rules, word_len);
        snap.stabilized = (prev == snap.members);
    }
    return snap;
}

PrimitivityResult primitivity_probe(const DirectiveSequence& ds, int n,
                                    int horizon) {
    for (int N = n + 1; N <= horizon; ++N) {
        if (!ds.morphism_reachable(N - 1)) break;
        Morphism m = compose_range(ds, n, N);
        bool all = true;
        for (const auto& rule : m.rules) {
            std::vector<bool> seen(m.target_size + 1, false);
            for (int letter : rule) seen[letter] = true;
            for (int a = 1; a <= m.target_size && all; ++a)
                if (!seen[a]) all = false;
            if (!all) break;
        }
        if (all) return {true, N};
    }
    return {false, 0};
}

AlphabetRankStats alphabet_rank_stats(const DirectiveSequence& ds, int depth) {
    AlphabetRankStats stats;
    int limit = depth;
    if (ds.cycle.empty())
        limit = std::min(limit, static_cast<int>(ds.alphabet_sizes.size()) - 1);
    stats.min_size = ds.alphabet_size(0);
    for (int i = 0; i <= limit; ++i)
        stats.min_size = std::min(stats.min_size, ds.alphabet_size(i));
    if (!ds.cycle.empty()) {
        stats.certified = true;
        int lim = ds.cycle[0].target_size;
        for (const Morphism& m : ds.cycle) lim = std::min(lim, m.source_size);
        stats.liminf = lim;
    }
    return stats;
}

SadicConversion sadic_to_rank_construction(const DirectiveSequence& ds, int K,
                                           bool recognizable_declared) {
    auto violations = validate_directive(ds);
    if (!violations.empty())
        throw std::invalid_argument("invalid directive sequence: " +
                                    violations.front());
    int depth = static_cast<int>(ds.prefix.size());
    if (!ds.cycle.empty()) depth += static_cast<int>(ds.cycle.size());
    if (depth < 1) throw std::invalid_argument("directive sequence is empty");

    for (int i = 1; i <= depth; ++i)
        if (ds.alphabet_size(i) != K)
            throw std::invalid_argument("alphabet " + std::to_string(i) +
                                        " size != K");
    for (int i = 1; i < depth; ++i) {
        const Morphism& m = ds.morphism(i);
        for (int b = 1; b <= m.source_size; ++b) {
            std::vector<bool> seen(m.target_size + 1, false);
            for (int letter : m.rules[b - 1]) seen[letter] = true;
            for (int a = 1; a <= m.target_size; ++a)
                if (!seen[a])
                    throw std::invalid_argument(
                        "morphism " + std::to_string(i) + " rule " +
                        std::to_string(b) + " misses letter " + std::to_string(a));
        }
    }

    // start-chain by backward dynamic programming over letters
    std::vector<std::vector<int>> reach(depth + 1);
    for (int i = 1; i <= depth; ++i) reach[i].assign(K + 1, i);
    for (int i = depth - 1; i >= 1; --i) {
        const Morphism& m = ds.morphism(i);
        for (int a = 1; a <= K; ++a)
            for (int b = 1; b <= K; ++b)
                if (m.rules[b - 1][0] == a)
                    reach[i][a] = std::max(reach[i][a], reach[i + 1][b]);
    }
    std::vector<int> chain(depth + 1, 0);
    for (int a = 1; a <= K; ++a)
        if (chain[1] == 0 || reach[1][a] > reach[1][chain[1]]) chain[1] = a;
    if (reach[1][chain[1]] < depth)
        throw std::runtime_error("no start-chain; telescope or split");
    for (int i = 1; i < depth; ++i) {
        const Morphism& m = ds.morphism(i);
        int pick = 0;
        for (int b = 1; b <= K; ++b) {
            if (m.rules[b - 1][0] != chain[i]) continue;
            if (pick == 0 || reach[i + 1][b] > reach[i + 1][pick]) pick = b;
        }
        chain[i + 1] = pick;
    }

    std::vector<std::vector<int>> old_to_new(depth + 1);
    for (int i = 1; i <= depth; ++i) {
        old_to_new[i].assign(K + 1, 0);
        old_to_new[i][chain[i]] = 1;
        int next = 2;
        for (int a = 1; a <= K; ++a)
            if (a != chain[i]) old_to_new[i][a] = next++;
    }
    std::vector<std::vector<int>> new_to_old(depth + 1);
    for (int i = 1; i <= depth; ++i) {
        new_to_old[i].assign(K + 1, 0);
        for (int a = 1; a <= K; ++a) new_to_old[i][old_to_new[i][a]] = a;
    }

    std::vector<LevelStep> steps;
    {
        const Morphism& tau0 = ds.morphism(0);
        LevelStep st;
        for (int j = 1; j <= K; ++j) {
            int a = new_to_old[1][j];
            long long L = static_cast<long long>(tau0.rules[a - 1].size());
            long long need = 2LL * K + 4LL * j + 3;
            if (L < need)
                throw std::invalid_argument(
                    "letter " + std::to_string(j) + ": |tau_0| = " +
                    std::to_string(L) + " below required " + std::to_string(need));
            long long mid = L - 2 * K - 4 * j - 2;
            std::string bits = "0";
            for (int t = 0; t < j; ++t) bits += "01";
            bits.append(static_cast<std::size_t>(mid), '0');
            for (int t = 0; t < j + K; ++t) bits += "10";
            bits += "0";
            st.buildings.push_back(building_from_zeros(Word(bits)));
        }
        steps.push_back(std::move(st));
    }
    for (int i = 1; i < depth; ++i) {
        const Morphism& m = ds.morphism(i);
        LevelStep st;
        for (int j = 1; j <= K; ++j) {
            int b = new_to_old[i + 1][j];
            Building bld;
            for (int letter : m.rules[b - 1])
                bld.blocks.push_back(old_to_new[i][letter]);
            bld.spacers.assign(bld.blocks.size() - 1, 0);
            st.buildings.push_back(std::move(bld));
        }
        steps.push_back(std::move(st));
    }
    SadicConversion out{RankConstruction(1, std::move(steps)),
                        recognizable_declared};
    return out;
}

}  // namespace symbrank

#include "symbrank/words.hpp"

#include <cmath>
#include <stdexcept>

namespace symbrank {

Word::Word(std::string bits) : bits_(std::move(bits)) {
    for (char c : bits_) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("word symbols must be 0 or 1");
    }
}

Word Word::zeros(std::size_t n) {
    Word w;
    w.bits_.assign(n, '0');
    return w;
}

Word Word::ones(std::size_t n) {
    Word w;
    w.bits_.assign(n, '1');
    return w;
}

Word Word::sub(std::size_t pos, std::size_t len) const {
    if (pos > bits_.size() || pos + len > bits_.size())
        throw std::out_of_range("subword range out of bounds");
    Word w;
    w.bits_ = bits_.substr(pos, len);
    return w;
}

Word Word::operator+(const Word& other) const {
    Word w;
    w.bits_.reserve(bits_.size() + other.bits_.size());
    w.bits_ = bits_ + other.bits_;
    return w;
}

Word Word::pow(std::size_t k) const {
    Word w;
    w.bits_.reserve(bits_.size() * k);
    for (std::size_t i = 0; i < k; ++i) w.bits_ += bits_;
    return w;
}

bool is_fword(const Word& w) {
    return !w.empty() && w[0] == '0' && w[w.size() - 1] == '0';
}

std::vector<std::size_t> occurrences(const Word& u, const Word& w) {
    if (u.empty()) throw std::invalid_argument("empty pattern");
    std::vector<std::size_t> out;
    if (u.size() > w.size()) return out;
    const std::string& hay = w.bits();
    const std::string& pat = u.bits();
    for (std::size_t s = hay.find(pat); s != std::string::npos;
         s = hay.find(pat, s + 1)) {
        out.push_back(s);
    }
    return out;
}

LanguageSnapshot subwords(const Word& w, std::size_t n) {
    if (n < 1) throw std::invalid_argument("subword length must be >= 1");
    LanguageSnapshot snap;
    snap.n = n;
    if (w.size() >= n) {
        for (std::size_t s = 0; s + n <= w.size(); ++s)
            snap.members.insert(w.sub(s, n));
    }
    return snap;
}

std::size_t max_run(const Word& w, char symbol) {
    std::size_t best = 0, cur = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == symbol) {
            ++cur;
            if (cur > best) best = cur;
        } else {
            cur = 0;
        }
    }
    return best;
}

double DistanceReport::value() const {
    return std::ldexp(1.0, -static_cast<int>(n_star));
}

std::string DistanceReport::to_string() const {
    if (exact) return "2^-" + std::to_string(n_star);
    return "<= 2^-" + std::to_string(n_star);
}

DistanceReport language_distance(const std::vector<LanguageSnapshot>& a,
                                 const std::vector<LanguageSnapshot>& b,
                                 std::size_t max_n) {
    if (a.size() < max_n || b.size() < max_n)
        throw std::invalid_argument("language profile shorter than max_n");
    for (std::size_t n = 1; n <= max_n; ++n) {
        const LanguageSnapshot& sa = a[n - 1];
        const LanguageSnapshot& sb = b[n - 1];
        if (sa.n != n || sb.n != n)
            throw std::invalid_argument("language profile misindexed");
        if (!sa.stabilized || !sb.stabilized)
            throw std::runtime_error("language not certified at n=" +
                                     std::to_string(n));
        if (sa.members != sb.members) {
            DistanceReport r;
            r.exact = true;
            r.n_star = n;
            return r;
        }
    }
    DistanceReport r;
    r.exact = false;
    r.n_star = max_n;
    return r;
}

}  // namespace symbrank

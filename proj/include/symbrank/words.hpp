#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace symbrank {

using BigInt = boost::multiprecision::cpp_int;

// Finite binary word. Immutable value; all operations allocate fresh values.
class Word {
public:
    Word() = default;
    explicit Word(std::string bits);  // validates symbols

    static Word zeros(std::size_t n);
    static Word ones(std::size_t n);

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    char operator[](std::size_t i) const { return bits_[i]; }
    const std::string& bits() const { return bits_; }

    Word sub(std::size_t pos, std::size_t len) const;
    Word operator+(const Word& other) const;
    Word pow(std::size_t k) const;

    auto operator<=>(const Word&) const = default;

private:
    std::string bits_;
};

// Words that begin and end with 0 (the set F).
bool is_fword(const Word& w);

struct LanguageSnapshot {
    std::size_t n = 0;
    std::set<Word> members;
    int depth = 0;
    bool stabilized = false;
};

// All start positions of u in w, ascending. Throws on empty pattern.
std::vector<std::size_t> occurrences(const Word& u, const Word& w);

// Distinct length-n subwords of w. stabilized is left false here.
LanguageSnapshot subwords(const Word& w, std::size_t n);

// Longest constant run of the symbol ('0' or '1'); 0 if absent.
std::size_t max_run(const Word& w, char symbol);

// Distance between two language profiles. A profile holds snapshots for
// n = 1..max_n at positions 0..max_n-1. Exact reports give 2^-n_star where
// n_star is the first n with differing member sets; otherwise the report is
// the upper bound 2^-max_n.
struct DistanceReport {
    bool exact = false;
    std::size_t n_star = 0;  // first differing n when exact, else max_n
    double value() const;
    std::string to_string() const;
};

DistanceReport language_distance(const std::vector<LanguageSnapshot>& a,
                                 const std::vector<LanguageSnapshot>& b,
                                 std::size_t max_n);

}  // namespace symbrank

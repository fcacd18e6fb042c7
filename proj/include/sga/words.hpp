#ifndef SGA_WORDS_HPP
#define SGA_WORDS_HPP

#include <string>
#include <vector>

namespace sga {

// A letter of the free group alphabet S ∪ S⁻¹. Ordering is
// (index ascending, non-inverted before inverted): a < A < b < B < ...
struct Generator {
    int index = 0;
    bool inverted = false;

    Generator inverse() const { return {index, !inverted}; }

    friend bool operator==(const Generator& a, const Generator& b) {
        return a.index == b.index && a.inverted == b.inverted;
    }
    friend bool operator<(const Generator& a, const Generator& b) {
        if (a.index != b.index) return a.index < b.index;
        return !a.inverted && b.inverted;
    }
};

// Freely reduced word; the empty sequence is the identity e.
struct ReducedWord {
    std::vector<Generator> letters;

    bool is_identity() const { return letters.empty(); }
    std::size_t length() const { return letters.size(); }
    bool is_reduced() const;
    ReducedWord inverse() const;

    friend bool operator==(const ReducedWord& a, const ReducedWord& b) {
        return a.letters == b.letters;
    }
    // (length, lexicographic) order; matches enumeration order.
    friend bool operator<(const ReducedWord& a, const ReducedWord& b);
};

// All reduced words of length <= r over m generators, ordered by
// (length, lexicographic); identity first. Over m >= 2 generators the count
// is 1 + 2m((2m-1)^r - 1)/(2m-2); over one generator it is 1 + 2r.
std::vector<ReducedWord> enumerate_words(int s_size, int r);

// Free reduction of the concatenation uv.
ReducedWord multiply_reduce(const ReducedWord& u, const ReducedWord& v);

// "e" for the identity, otherwise one ASCII letter per generator:
// generator i -> (i+1)-th lowercase letter, inverse -> uppercase.
std::string word_to_string(const ReducedWord& w);
ReducedWord word_from_string(const std::string& s);

// Number of reduced words of length <= r (the size of enumerate_words output).
std::size_t word_ball_size(int s_size, int r);

} // namespace sga

#endif

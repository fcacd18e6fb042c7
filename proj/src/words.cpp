#include "sga/words.hpp"

#include <stdexcept>

#include "sga/error.hpp"

namespace sga {

bool ReducedWord::is_reduced() const {
    for (std::size_t i = 1; i < letters.size(); ++i)
        if (letters[i] == letters[i - 1].inverse()) return false;
    return true;
}

ReducedWord ReducedWord::inverse() const {
    ReducedWord w;
    w.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        w.letters.push_back(it->inverse());
    return w;
}

bool operator<(const ReducedWord& a, const ReducedWord& b) {
    if (a.letters.size() != b.letters.size())
        return a.letters.size() < b.letters.size();
    for (std::size_t i = 0; i < a.letters.size(); ++i) {
        if (a.letters[i] == b.letters[i]) continue;
        return a.letters[i] < b.letters[i];
    }
    return false;
}

std::vector<ReducedWord> enumerate_words(int s_size, int r) {
    if (s_size < 1) throw bad_parameter("enumerate_words: S_size must be >= 1");
    if (r < 0) throw bad_parameter("enumerate_words: r must be >= 0");

    std::vector<Generator> alphabet;
    alphabet.reserve(2 * (std::size_t)s_size);
    for (int i = 0; i < s_size; ++i) {
        alphabet.push_back({i, false});
        alphabet.push_back({i, true});
    }

    std::vector<ReducedWord> words;
    words.push_back(ReducedWord{});
    std::size_t level_begin = 0;
    for (int len = 1; len <= r; ++len) {
        std::size_t level_end = words.size();
        for (std::size_t i = level_begin; i < level_end; ++i) {
            for (const Generator& g : alphabet) {
                const ReducedWord& w = words[i];
                if (!w.letters.empty() && w.letters.back() == g.inverse()) continue;
                ReducedWord longer = w;
                longer.letters.push_back(g);
                words.push_back(std::move(longer));
            }
        }
        level_begin = level_end;
    }
    return words;
}

std::size_t word_ball_size(int s_size, int r) {
    std::size_t total = 1;
    std::size_t level = 1;
    for (int len = 1; len <= r; ++len) {
        level *= (len == 1) ? 2 * (std::size_t)s_size : (2 * (std::size_t)s_size - 1);
        total += level;
    }
    return total;
}

ReducedWord multiply_reduce(const ReducedWord& u, const ReducedWord& v) {
    ReducedWord w = u;
    for (const Generator& g : v.letters) {
        if (!w.letters.empty() && w.letters.back() == g.inverse())
            w.letters.pop_back();
        else
            w.letters.push_back(g);
    }
    return w;
}

std::string word_to_string(const ReducedWord& w) {
    if (w.is_identity()) return "e";
    std::string s;
    s.reserve(w.letters.size());
    for (const Generator& g : w.letters) {
        if (g.index > 25) throw bad_parameter("word_to_string: more than 26 generators");
        s.push_back((char)((g.inverted ? 'A' : 'a') + g.index));
    }
    return s;
}

ReducedWord word_from_string(const std::string& s) {
    if (s == "e") return ReducedWord{};
    ReducedWord w;
    w.letters.reserve(s.size());
    for (char c : s) {
        if (c >= 'a' && c <= 'z')
            w.letters.push_back({c - 'a', false});
        else if (c >= 'A' && c <= 'Z')
            w.letters.push_back({c - 'A', true});
        else
            throw parse_error(std::string("bad word character '") + c + "'");
    }
    if (!w.is_reduced()) throw parse_error("word is not reduced: " + s);
    return w;
}

} // namespace sga

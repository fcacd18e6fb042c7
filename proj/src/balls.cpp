#include "sga/balls.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "sga/error.hpp"

namespace sga {

namespace {

struct WordCache {
    std::mutex mu;
    std::map<std::pair<int, int>, std::vector<ReducedWord>> tables;
    std::map<std::pair<int, int>, std::unordered_map<std::string, int>> indices;
};

WordCache& cache() {
    static WordCache c;
    return c;
}

} // namespace

const std::vector<ReducedWord>& word_table(int s_size, int r) {
    auto& c = cache();
    std::lock_guard<std::mutex> lock(c.mu);
    auto key = std::make_pair(s_size, r);
    auto it = c.tables.find(key);
    if (it == c.tables.end())
        it = c.tables.emplace(key, enumerate_words(s_size, r)).first;
    return it->second;
}

int word_index(int s_size, int r, const ReducedWord& w) {
    auto& c = cache();
    auto key = std::make_pair(s_size, r);
    {
        std::lock_guard<std::mutex> lock(c.mu);
        auto it = c.indices.find(key);
        if (it != c.indices.end()) {
            auto jt = it->second.find(word_to_string(w));
            if (jt == it->second.end())
                throw shape_mismatch("word " + word_to_string(w) + " not in W^{" +
                                     std::to_string(r) + ",S}");
            return jt->second;
        }
    }
    const auto& table = word_table(s_size, r);
    std::unordered_map<std::string, int> idx;
    idx.reserve(table.size());
    for (std::size_t i = 0; i < table.size(); ++i)
        idx.emplace(word_to_string(table[i]), (int)i);
    std::lock_guard<std::mutex> lock(c.mu);
    auto it = c.indices.emplace(key, std::move(idx)).first;
    auto jt = it->second.find(word_to_string(w));
    if (jt == it->second.end())
        throw shape_mismatch("word " + word_to_string(w) + " not in W^{" + std::to_string(r) +
                             ",S}");
    return jt->second;
}

std::string BallCode::serialize() const {
    const auto& words = word_table(s_size, r);
    std::ostringstream os;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (b) os << '|';
        for (std::size_t j = 0; j < blocks[b].size(); ++j) {
            if (j) os << ',';
            os << word_to_string(words[blocks[b][j]]);
        }
        if (is_colored()) os << ':' << colors[b];
    }
    return os.str();
}

BallCode BallCode::truncate(int new_r) const {
    if (new_r > r) throw shape_mismatch("cannot truncate to a larger radius");
    // enumerate_words(m, new_r) is a prefix of enumerate_words(m, r), so the
    // restriction keeps exactly the indices below the smaller ball size.
    int cutoff = (int)word_ball_size(s_size, new_r);
    BallCode out;
    out.r = new_r;
    out.s_size = s_size;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        std::vector<int> kept;
        for (int w : blocks[b])
            if (w < cutoff) kept.push_back(w);
        if (kept.empty()) continue;
        out.blocks.push_back(std::move(kept));
        if (is_colored()) out.colors.push_back(colors[b]);
    }
    // Blocks stay sorted by minimal word index because restriction preserves
    // each block's minimum ordering.
    std::vector<std::size_t> order(out.blocks.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return out.blocks[a].front() < out.blocks[b].front();
    });
    BallCode sorted;
    sorted.r = out.r;
    sorted.s_size = out.s_size;
    for (std::size_t i : order) {
        sorted.blocks.push_back(std::move(out.blocks[i]));
        if (out.is_colored()) sorted.colors.push_back(out.colors[i]);
    }
    return sorted;
}

BallCode BallCode::uncolored() const {
    BallCode out = *this;
    out.colors.clear();
    return out;
}

BallCode ball_code(const LabeledSchreierGraph& g, int x, int r) {
    if (x < 0 || x >= g.vertex_count())
        throw vertex_out_of_range("vertex " + std::to_string(x));
    const auto& words = word_table(g.generator_count(), r);
    BallCode code;
    code.r = r;
    code.s_size = g.generator_count();
    std::unordered_map<int, int> vertex_to_block;
    vertex_to_block.reserve(words.size());
    for (std::size_t i = 0; i < words.size(); ++i) {
        int v = g.evaluate(words[i], x);
        auto it = vertex_to_block.find(v);
        if (it == vertex_to_block.end()) {
            vertex_to_block.emplace(v, (int)code.blocks.size());
            code.blocks.push_back({(int)i});
        } else {
            code.blocks[it->second].push_back((int)i);
        }
    }
    // Words are scanned in global order, so blocks are already ordered by
    // minimal word index and each block is increasing.
    return code;
}

BallCode colored_ball_code(const LabeledSchreierGraph& g, int x, int r, const Coloring& c) {
    c.validate(g.vertex_count());
    BallCode code = ball_code(g, x, r);
    const auto& words = word_table(g.generator_count(), r);
    code.colors.resize(code.blocks.size());
    for (std::size_t b = 0; b < code.blocks.size(); ++b) {
        int v = g.evaluate(words[code.blocks[b].front()], x);
        code.colors[b] = c.colors[v];
    }
    return code;
}

BallCode parse_ball_code(const std::string& s, int s_size, int r) {
    BallCode code;
    code.r = r;
    code.s_size = s_size;
    std::size_t expected = word_ball_size(s_size, r);
    std::size_t seen = 0;
    bool any_color = s.find(':') != std::string::npos;
    std::istringstream os(s);
    std::string block_str;
    while (std::getline(os, block_str, '|')) {
        int color = 0;
        auto colon = block_str.rfind(':');
        if (colon != std::string::npos) {
            color = std::stoi(block_str.substr(colon + 1));
            block_str = block_str.substr(0, colon);
        } else if (any_color) {
            throw parse_error("mixed colored and uncolored blocks in code: " + s);
        }
        std::vector<int> block;
        std::istringstream bs(block_str);
        std::string word_str;
        while (std::getline(bs, word_str, ','))
            block.push_back(word_index(s_size, r, word_from_string(word_str)));
        if (block.empty()) throw parse_error("empty block in code: " + s);
        std::sort(block.begin(), block.end());
        seen += block.size();
        code.blocks.push_back(std::move(block));
        if (any_color) code.colors.push_back(color);
    }
    if (seen != expected)
        throw parse_error("code covers " + std::to_string(seen) + " words, expected " +
                          std::to_string(expected));
    std::sort(code.blocks.begin(), code.blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return code;
}

bool refines(const BallCode& p, const BallCode& q) {
    if (p.r != q.r || p.s_size != q.s_size)
        throw shape_mismatch("refines: codes have different (r, S_size)");
    if (p.is_colored() || q.is_colored())
        throw shape_mismatch("refines: defined for uncolored codes only");
    std::size_t nwords = word_ball_size(p.s_size, p.r);
    std::vector<int> q_block_of(nwords, -1);
    for (std::size_t b = 0; b < q.blocks.size(); ++b)
        for (int w : q.blocks[b]) q_block_of[w] = (int)b;
    for (const auto& block : p.blocks) {
        int target = q_block_of[block.front()];
        for (int w : block)
            if (q_block_of[w] != target) return false;
    }
    return true;
}

TypePoset height_poset(int s_size, int r, const std::vector<BallCode>& observed) {
    TypePoset poset;
    poset.codes = observed;
    std::size_t n = observed.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j)
            if (observed[i] == observed[j])
                throw shape_mismatch("height_poset: duplicate codes");
        if (observed[i].r != r || observed[i].s_size != s_size)
            throw shape_mismatch("height_poset: code shape mismatch");
    }
    poset.below.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            poset.below[i][j] = refines(observed[i], observed[j]);

    poset.heights.assign(n, 0);
    int level = 0;
    std::size_t assigned = 0;
    while (assigned < n) {
        ++level;
        std::vector<std::size_t> minimal;
        for (std::size_t i = 0; i < n; ++i) {
            if (poset.heights[i] != 0) continue;
            bool is_minimal = true;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i || poset.heights[j] != 0) continue;
                if (poset.below[j][i]) { is_minimal = false; break; }
            }
            if (is_minimal) minimal.push_back(i);
        }
        for (std::size_t i : minimal) poset.heights[i] = level;
        assigned += minimal.size();
    }
    return poset;
}

} // namespace sga

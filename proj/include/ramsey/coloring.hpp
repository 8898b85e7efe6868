#pragma once

// 2-colorings of complete graphs: the core TwoColoring type, the generator
// families used in experiments (random, Paley, cycle, clique unions, joins)
// and the text file format.
//
// Vertices are 0-indexed. Storage is one red-neighborhood bitset per vertex;
// the blue neighborhood is the complement minus self.

#include <cstdint>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ramsey {

enum class Color : uint8_t { Red, Blue };

inline Color complement(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }

inline char color_char(Color c) { return c == Color::Red ? 'R' : 'B'; }

// Fixed-size bitset over vertex indices, sized at construction.
class VertexSet {
public:
    VertexSet() : n_(0) {}
    explicit VertexSet(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int universe() const { return n_; }

    void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += __builtin_popcountll(w);
        return c;
    }
    bool empty() const {
        for (uint64_t w : w_) if (w) return false;
        return true;
    }

    VertexSet& operator&=(const VertexSet& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }

    // All vertices of the universe.
    static VertexSet full(int n) {
        VertexSet s(n);
        for (size_t i = 0; i < s.w_.size(); ++i) s.w_[i] = ~uint64_t(0);
        int tail = n & 63;
        if (tail && !s.w_.empty()) s.w_.back() = (uint64_t(1) << tail) - 1;
        return s;
    }

    VertexSet complement_set() const {
        VertexSet s = full(n_);
        for (size_t i = 0; i < w_.size(); ++i) s.w_[i] &= ~w_[i];
        return s;
    }

    // Drop every member <= u.
    void keep_above(int u) {
        size_t wi = size_t(u) >> 6;
        if (wi >= w_.size()) return;
        for (size_t i = 0; i < wi; ++i) w_[i] = 0;
        int b = u & 63;
        w_[wi] &= (b == 63) ? 0 : ~((uint64_t(2) << b) - 1);
    }

    // The k lowest-index members.
    VertexSet lowest(int k) const {
        VertexSet s(n_);
        for (int v = 0; v < n_ && k > 0; ++v)
            if (test(v)) { s.set(v); --k; }
        return s;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (size_t wi = 0; wi < w_.size(); ++wi) {
            uint64_t w = w_[wi];
            while (w) {
                int b = __builtin_ctzll(w);
                f(int(wi * 64 + b));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        for_each([&](int i) { v.push_back(i); });
        return v;
    }

    bool operator==(const VertexSet& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator<(const VertexSet& o) const { return w_ < o.w_; }

    size_t hash() const {
        size_t h = 1469598103934665603ull;
        for (uint64_t w : w_) { h ^= w; h *= 1099511628211ull; }
        return h;
    }

private:
    int n_;
    std::vector<uint64_t> w_;
};

// Immutable 2-coloring of the complete graph K_n. Safe to share across
// threads once built.
class TwoColoring {
public:
    explicit TwoColoring(int n) : n_(n) {
        if (n < 1) throw std::invalid_argument("TwoColoring: n must be >= 1");
        red_.assign(n, VertexSet(n));
        blue_.assign(n, VertexSet(n));
    }

    int n() const { return n_; }

    Color color(int i, int j) const {
        check_pair(i, j);
        return red_[i].test(j) ? Color::Red : Color::Blue;
    }

    void set_color(int i, int j, Color c) {
        check_pair(i, j);
        if (c == Color::Red) {
            red_[i].set(j); red_[j].set(i);
            blue_[i].reset(j); blue_[j].reset(i);
        } else {
            blue_[i].set(j); blue_[j].set(i);
            red_[i].reset(j); red_[j].reset(i);
        }
    }

    const VertexSet& neighbors(int v, Color c) const {
        return c == Color::Red ? red_[v] : blue_[v];
    }
    const VertexSet& red_neighbors(int v) const { return red_[v]; }
    const VertexSet& blue_neighbors(int v) const { return blue_[v]; }

    int degree(int v, Color c) const { return neighbors(v, c).count(); }

    bool operator==(const TwoColoring& o) const {
        return n_ == o.n_ && red_ == o.red_;
    }

private:
    void check_pair(int i, int j) const {
        if (i < 0 || j < 0 || i >= n_ || j >= n_)
            throw std::out_of_range("vertex index out of range");
        if (i == j) throw std::invalid_argument("self-pair has no color");
    }

    int n_;
    std::vector<VertexSet> red_, blue_;
};

// --- generators ---------------------------------------------------------

// Each pair independently Red with probability 1/2. PRNG is std::mt19937_64
// seeded with `seed`; pairs are drawn in row-major order (i<j), one engine
// output per pair, Red iff the low bit is set. Fixed here so test vectors
// stay stable across platforms.
inline TwoColoring random_coloring(int n, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_coloring: n must be >= 1");
    TwoColoring g(n);
    std::mt19937_64 rng(seed);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            g.set_color(i, j, (rng() & 1) ? Color::Red : Color::Blue);
    return g;
}

inline bool is_prime(long long q) {
    if (q < 2) return false;
    for (long long d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

// Pair {i,j} Red iff (i-j) is a nonzero quadratic residue mod q.
inline TwoColoring paley_coloring(int q) {
    if (!is_prime(q) || q % 4 != 1)
        throw std::invalid_argument("paley_coloring: q must be a prime = 1 (mod 4)");
    std::vector<bool> residue(q, false);
    for (int x = 1; x < q; ++x) residue[int((long long)x * x % q)] = true;
    TwoColoring g(q);
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j)
            g.set_color(i, j, residue[(j - i) % q] ? Color::Red : Color::Blue);
    return g;
}

// Red edges form the n-cycle 0-1-...-(n-1)-0; everything else Blue.
inline TwoColoring cycle_coloring(int n) {
    if (n < 3) throw std::invalid_argument("cycle_coloring: n must be >= 3");
    TwoColoring g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int d = j - i;
            bool adj = (d == 1) || (d == n - 1);
            g.set_color(i, j, adj ? Color::Red : Color::Blue);
        }
    return g;
}

// t disjoint red cliques of size s, all cross pairs Blue.
inline TwoColoring clique_union_coloring(int t, int s) {
    if (t < 1 || s < 1) throw std::invalid_argument("clique_union_coloring: t,s must be >= 1");
    int n = t * s;
    TwoColoring g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            g.set_color(i, j, (i / s == j / s) ? Color::Red : Color::Blue);
    return g;
}

// Disjoint union with all cross pairs colored `cross`; g2's vertices are
// re-indexed after g1's.
inline TwoColoring join_colorings(const TwoColoring& g1, const TwoColoring& g2, Color cross) {
    int n1 = g1.n(), n2 = g2.n();
    TwoColoring g(n1 + n2);
    for (int i = 0; i < n1; ++i)
        for (int j = i + 1; j < n1; ++j) g.set_color(i, j, g1.color(i, j));
    for (int i = 0; i < n2; ++i)
        for (int j = i + 1; j < n2; ++j) g.set_color(n1 + i, n1 + j, g2.color(i, j));
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n2; ++j) g.set_color(i, n1 + j, cross);
    return g;
}

inline TwoColoring swap_colors(const TwoColoring& g) {
    TwoColoring out(g.n());
    for (int i = 0; i < g.n(); ++i)
        for (int j = i + 1; j < g.n(); ++j)
            out.set_color(i, j, complement(g.color(i, j)));
    return out;
}

// --- file format ---------------------------------------------------------
//
// Line 1: decimal n. Then for i = 0..n-2 one row of exactly n-1-i characters
// from {R,B}; character k is color(i, i+1+k). Lines starting '#' are skipped.

inline void write_coloring(const TwoColoring& g, std::ostream& os) {
    os << g.n() << "\n";
    for (int i = 0; i + 1 < g.n(); ++i) {
        for (int j = i + 1; j < g.n(); ++j) os << color_char(g.color(i, j));
        os << "\n";
    }
}

inline std::string write_coloring(const TwoColoring& g) {
    std::ostringstream os;
    write_coloring(g, os);
    return os.str();
}

inline TwoColoring read_coloring(std::istream& is) {
    auto next_line = [&](std::string& line, int& lineno) -> bool {
        while (std::getline(is, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty() && line[0] == '#') continue;
            return true;
        }
        return false;
    };
    std::string line;
    int lineno = 0;
    if (!next_line(line, lineno))
        throw std::runtime_error("coloring parse error: missing header line");
    int n = 0;
    try {
        size_t pos = 0;
        n = std::stoi(line, &pos);
        if (pos != line.size()) throw std::invalid_argument("");
    } catch (...) {
        throw std::runtime_error("coloring parse error at line " + std::to_string(lineno) +
                                 ": header is not a vertex count");
    }
    if (n < 1)
        throw std::runtime_error("coloring parse error at line " + std::to_string(lineno) +
                                 ": vertex count must be >= 1");
    TwoColoring g(n);
    for (int i = 0; i + 1 < n; ++i) {
        if (!next_line(line, lineno))
            throw std::runtime_error("coloring parse error: missing row for vertex " +
                                     std::to_string(i));
        if ((int)line.size() != n - 1 - i)
            throw std::runtime_error("coloring parse error at line " + std::to_string(lineno) +
                                     ": expected " + std::to_string(n - 1 - i) + " characters, got " +
                                     std::to_string(line.size()));
        for (int k = 0; k < (int)line.size(); ++k) {
            char c = line[k];
            if (c != 'R' && c != 'B')
                throw std::runtime_error("coloring parse error at line " + std::to_string(lineno) +
                                         ": illegal character '" + std::string(1, c) + "'");
            g.set_color(i, i + 1 + k, c == 'R' ? Color::Red : Color::Blue);
        }
    }
    return g;
}

inline TwoColoring read_coloring(const std::string& text) {
    std::istringstream is(text);
    return read_coloring(is);
}

}  // namespace ramsey

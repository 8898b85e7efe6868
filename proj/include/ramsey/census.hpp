#pragma once

// Exact census of monochromatic complete subgraphs. Counts are computed by
// recursive candidate-set intersection over per-vertex bitsets, one pass per
// color; subsets are never materialized. All derived statistics (total C,
// average A, maximum M) stay in exact arithmetic.

#include "ramsey/coloring.hpp"
#include "ramsey/numbers.hpp"

#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

namespace ramsey {

// How sizes 0 and 1 are accounted. Default matches the convention that makes
// the 5-cycle census come out as C_1 = C_2 = 10: each vertex is a complete
// subgraph once per color, the empty set is excluded. BlueOnly + include_empty
// mirrors the accounting where "the empty set and the sets of size 1 are blue".
struct Convention {
    enum class Singletons { BothColors, BlueOnly };
    Singletons singletons = Singletons::BothColors;
    bool include_empty = false;

    bool operator==(const Convention&) const = default;
};

struct Profile {
    int n = 0;
    Convention convention;
    std::vector<Count> red, blue;  // indexed by size, length n+1

    const Count& count(Color c, int k) const {
        return c == Color::Red ? red.at(k) : blue.at(k);
    }
    bool operator==(const Profile&) const = default;
};

namespace detail {

// Adds, for each k, the number of k-cliques of color c (k >= 1) whose lowest
// vertex v satisfies v % stride == phase. Restricting the candidate set to an
// induced subgraph is done by passing `within`.
inline void count_cliques(const TwoColoring& g, Color c, std::vector<Count>& counts,
                          int max_size, const VertexSet& within,
                          int phase = 0, int stride = 1) {
    const int n = g.n();
    std::vector<VertexSet> scratch(n + 2, VertexSet(n));

    // depth = number of vertices already fixed; cand = common same-color
    // neighborhood of the fixed clique, restricted to indices above the last.
    auto dfs = [&](auto&& self, const VertexSet& cand, int depth) -> void {
        cand.for_each([&](int u) {
            counts[depth + 1] += 1;
            if (depth + 1 < max_size) {
                VertexSet& next = scratch[depth + 1];
                next = cand;
                next &= g.neighbors(u, c);
                next.keep_above(u);
                if (!next.empty()) self(self, next, depth + 1);
            }
        });
    };

    for (int v = phase; v < n; v += stride) {
        if (!within.test(v)) continue;
        counts[1] += 1;
        if (max_size < 2) continue;
        VertexSet& cand = scratch[0];
        cand = within;
        cand &= g.neighbors(v, c);
        cand.keep_above(v);
        if (!cand.empty()) dfs(dfs, cand, 1);
    }
}

inline void apply_convention(Profile& p) {
    const Count n = p.n;
    switch (p.convention.singletons) {
        case Convention::Singletons::BothColors:
            p.red[1] = n;
            p.blue[1] = n;
            break;
        case Convention::Singletons::BlueOnly:
            p.red[1] = 0;
            p.blue[1] = n;
            break;
    }
    p.red[0] = 0;
    p.blue[0] = 0;
    if (p.convention.include_empty) {
        // The empty set is counted in each color class the convention enables.
        if (p.convention.singletons == Convention::Singletons::BothColors) p.red[0] = 1;
        p.blue[0] = 1;
    }
}

}  // namespace detail

// Exact profile of monochromatic complete subgraph counts by (color, size).
// `max_size` 0 means unbounded; when positive, counts above it are left zero
// (useful for large n where only small sizes are needed). `threads` splits the
// enumeration by lowest clique vertex; the reduction is pure addition, so the
// result is independent of the worker count.
inline Profile count_profile(const TwoColoring& g, Convention conv = {},
                             int max_size = 0, int threads = 1) {
    const int n = g.n();
    Profile p;
    p.n = n;
    p.convention = conv;
    p.red.assign(n + 1, 0);
    p.blue.assign(n + 1, 0);
    const int cap = (max_size <= 0 || max_size > n) ? n : max_size;
    const VertexSet all = VertexSet::full(n);

    if (threads <= 1) {
        detail::count_cliques(g, Color::Red, p.red, cap, all);
        detail::count_cliques(g, Color::Blue, p.blue, cap, all);
    } else {
        std::vector<std::vector<Count>> partial(2 * threads, std::vector<Count>(n + 1, 0));
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                detail::count_cliques(g, Color::Red, partial[2 * t], cap, all, t, threads);
                detail::count_cliques(g, Color::Blue, partial[2 * t + 1], cap, all, t, threads);
            });
        }
        for (auto& th : pool) th.join();
        for (int t = 0; t < threads; ++t)
            for (int k = 0; k <= n; ++k) {
                p.red[k] += partial[2 * t][k];
                p.blue[k] += partial[2 * t + 1][k];
            }
    }
    detail::apply_convention(p);
    return p;
}

struct MonoStats {
    Count total;                   // C
    Rat average;                   // A, reduced fraction
    int max_size = 0;              // M
    std::vector<Count> per_size;   // filtered counts by size
};

// C, A, M over the profile, optionally restricted to one color.
inline MonoStats stats(const Profile& p, std::optional<Color> color_filter = std::nullopt) {
    MonoStats s;
    s.per_size.assign(p.n + 1, 0);
    Count weighted = 0;
    s.total = 0;
    for (int k = 0; k <= p.n; ++k) {
        Count c = 0;
        if (!color_filter || *color_filter == Color::Red) c += p.red[k];
        if (!color_filter || *color_filter == Color::Blue) c += p.blue[k];
        s.per_size[k] = c;
        s.total += c;
        weighted += Count(k) * c;
        if (c > 0) s.max_size = k;
    }
    if (s.total == 0) throw std::domain_error("stats: empty census, average undefined");
    s.average = Rat(weighted, s.total);
    return s;
}

// C_i for every vertex: the number of monochromatic complete subgraphs
// containing vertex i. Satisfies sum_i C_i = A(G) * C(G) exactly.
inline std::vector<Count> per_vertex_counts(const TwoColoring& g, Convention conv = {}) {
    const int n = g.n();
    Count singleton = (conv.singletons == Convention::Singletons::BothColors) ? 2 : 1;
    std::vector<Count> out(n, 0);
    for (int i = 0; i < n; ++i) {
        out[i] = singleton;
        // Subgraphs of size >= 2 containing i: any same-color clique inside
        // the matching neighborhood of i, extended by i.
        for (Color c : {Color::Red, Color::Blue}) {
            std::vector<Count> counts(n + 1, 0);
            detail::count_cliques(g, c, counts, n, g.neighbors(i, c));
            for (int k = 1; k <= n; ++k) out[i] += counts[k];
        }
    }
    return out;
}

// Independent oracle: iterates all 2^n vertex subsets and tests pairs.
inline Profile brute_force_profile(const TwoColoring& g, Convention conv = {}) {
    const int n = g.n();
    if (n > 20) throw std::invalid_argument("brute_force_profile: n capped at 20");
    Profile p;
    p.n = n;
    p.convention = conv;
    p.red.assign(n + 1, 0);
    p.blue.assign(n + 1, 0);
    std::vector<int> verts;
    for (uint32_t mask = 1; mask < (uint32_t(1) << n); ++mask) {
        int k = __builtin_popcount(mask);
        if (k < 2) continue;
        verts.clear();
        for (int v = 0; v < n; ++v)
            if (mask & (uint32_t(1) << v)) verts.push_back(v);
        Color c = g.color(verts[0], verts[1]);
        bool mono = true;
        for (size_t a = 0; a < verts.size() && mono; ++a)
            for (size_t b = a + 1; b < verts.size(); ++b)
                if (g.color(verts[a], verts[b]) != c) { mono = false; break; }
        if (mono) (c == Color::Red ? p.red : p.blue)[k] += 1;
    }
    detail::apply_convention(p);
    return p;
}

// Closed form for clique_union_coloring(t, s): red[k] = t*C(s,k), and a blue
// k-set needs one vertex from each of k distinct groups: blue[k] = C(t,k)*s^k.
inline Profile analytic_profile_clique_union(int t, int s, Convention conv = {}) {
    if (t < 1 || s < 1) throw std::invalid_argument("analytic_profile_clique_union: t,s >= 1");
    const int n = t * s;
    Profile p;
    p.n = n;
    p.convention = conv;
    p.red.assign(n + 1, 0);
    p.blue.assign(n + 1, 0);
    Count spow = s;
    for (int k = 2; k <= n; ++k) {
        p.red[k] = Count(t) * binomial(s, k);
        spow *= s;
        p.blue[k] = binomial(t, k) * spow;  // spow = s^k here
    }
    detail::apply_convention(p);
    return p;
}

// Restriction of g to all vertices except `drop`, re-indexed.
inline TwoColoring remove_vertex(const TwoColoring& g, int drop) {
    if (g.n() < 2) throw std::invalid_argument("remove_vertex: n must be >= 2");
    TwoColoring out(g.n() - 1);
    for (int i = 0, oi = 0; i < g.n(); ++i) {
        if (i == drop) continue;
        for (int j = i + 1, oj = oi + 1; j < g.n(); ++j) {
            if (j == drop) continue;
            out.set_color(oi, oj, g.color(i, j));
            ++oj;
        }
        ++oi;
    }
    return out;
}

}  // namespace ramsey

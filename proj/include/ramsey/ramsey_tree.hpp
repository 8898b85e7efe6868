#pragma once

// Ramsey tree machinery: level counts of the general tree (GRT), restricted
// trees (RRT) under a per-level bias schedule, full-path streaming for the
// bias-1/2 tree, and the auxiliary bipartite graph built from restricted-tree
// paths. Node-level inequality checkers live here too; they are theorems, so
// a reported violation always means an implementation bug.
//
// Conventions shared by all trees: the super-root sits at level -1 with bag V
// (so s(-1) = n) and is never counted; level 0 holds one root per vertex.

#include "ramsey/census.hpp"
#include "ramsey/coloring.hpp"
#include "ramsey/numbers.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ramsey {

// --- bias schedules -------------------------------------------------------

// Piecewise-constant bias by level: "0:0.5,8:0.4" means b(i)=1/2 for i<8 and
// b(i)=2/5 from level 8 on. All nodes on a level share the bias.
class BiasSchedule {
public:
    static BiasSchedule constant(const Rat& b) {
        BiasSchedule s;
        s.steps_.emplace_back(0, b);
        s.check();
        return s;
    }

    static BiasSchedule from_steps(std::vector<std::pair<int, Rat>> steps) {
        BiasSchedule s;
        s.steps_ = std::move(steps);
        s.check();
        return s;
    }

    // Comma list of level_from:bias; bias is a decimal ("0.4") or a fraction
    // ("2/5").
    static BiasSchedule parse(const std::string& spec) {
        BiasSchedule s;
        std::istringstream is(spec);
        std::string item;
        while (std::getline(is, item, ',')) {
            auto colon = item.find(':');
            if (colon == std::string::npos)
                throw std::invalid_argument("bias schedule: expected level:bias, got '" + item + "'");
            int level = std::stoi(item.substr(0, colon));
            s.steps_.emplace_back(level, parse_rat(item.substr(colon + 1)));
        }
        s.check();
        return s;
    }

    Rat bias(int level) const {
        Rat b = steps_.front().second;
        for (const auto& [from, v] : steps_)
            if (level >= from) b = v;
        return b;
    }

    const std::vector<std::pair<int, Rat>>& steps() const { return steps_; }

private:
    static Rat parse_rat(const std::string& txt) {
        auto slash = txt.find('/');
        if (slash != std::string::npos)
            return Rat(Count(txt.substr(0, slash)), Count(txt.substr(slash + 1)));
        auto dot = txt.find('.');
        if (dot == std::string::npos) return Rat(Count(txt));
        std::string digits = txt.substr(0, dot) + txt.substr(dot + 1);
        Count den = 1;
        for (size_t i = dot + 1; i < txt.size(); ++i) den *= 10;
        return Rat(Count(digits), den);
    }

    void check() const {
        if (steps_.empty()) throw std::invalid_argument("bias schedule: empty");
        if (steps_.front().first != 0)
            throw std::invalid_argument("bias schedule: must start at level 0");
        for (size_t i = 0; i < steps_.size(); ++i) {
            if (i && steps_[i].first <= steps_[i - 1].first)
                throw std::invalid_argument("bias schedule: levels must be increasing");
            if (steps_[i].second < 0 || steps_[i].second > 1)
                throw std::invalid_argument("bias schedule: bias must be in [0,1]");
        }
    }

    std::vector<std::pair<int, Rat>> steps_;
};

// --- general tree level counts ---------------------------------------------

struct GrtLevelStats {
    std::vector<Count> q;  // q[i] = |Q_i|, number of nodes on level i
};

namespace detail {

struct VBagKey {
    int v;
    VertexSet bag;
    bool operator==(const VBagKey& o) const { return v == o.v && bag == o.bag; }
};

struct VBagHash {
    size_t operator()(const VBagKey& k) const { return k.bag.hash() * 31 + size_t(k.v); }
};

}  // namespace detail

// |Q_i| for 0 <= i <= max_level. The subtree below a node is a function of
// (vertex, bag) only, so per-depth descendant counts are memoized on that
// pair; the tree itself is never materialized. Full depth is practical up to
// roughly n = 12 (node counts grow factorially).
inline GrtLevelStats grt_level_counts(const TwoColoring& g, int max_level) {
    const int n = g.n();
    if (max_level < 0 || max_level > n - 1)
        throw std::invalid_argument("grt_level_counts: max_level must be in [0, n-1]");

    // memo[(v, bag)][d] = number of descendants d levels below the node,
    // counting the node itself at d = 0.
    std::unordered_map<detail::VBagKey, std::vector<Count>, detail::VBagHash> memo;

    auto subtree = [&](auto&& self, int v, const VertexSet& bag, int depth_left)
        -> const std::vector<Count>& {
        detail::VBagKey key{v, bag};
        auto it = memo.find(key);
        if (it != memo.end() && (int)it->second.size() > depth_left) return it->second;
        std::vector<Count> counts(depth_left + 1, 0);
        counts[0] = 1;
        if (depth_left > 0) {
            for (Color c : {Color::Red, Color::Blue}) {
                VertexSet side = bag & g.neighbors(v, c);
                side.for_each([&](int w) {
                    VertexSet child_bag = side;
                    child_bag.reset(w);
                    const auto& sub = self(self, w, child_bag, depth_left - 1);
                    for (int d = 0; d + 1 <= depth_left && d < (int)sub.size(); ++d)
                        counts[d + 1] += sub[d];
                });
            }
        }
        return memo[key] = std::move(counts);
    };

    GrtLevelStats stats;
    stats.q.assign(max_level + 1, 0);
    for (int r = 0; r < n; ++r) {
        VertexSet bag = VertexSet::full(n);
        bag.reset(r);
        const auto& sub = subtree(subtree, r, bag, max_level);
        for (int d = 0; d <= max_level && d < (int)sub.size(); ++d) stats.q[d] += sub[d];
    }
    return stats;
}

struct CheckReport {
    bool ok = true;
    std::vector<std::string> failures;

    void fail(std::string msg) {
        ok = false;
        failures.push_back(std::move(msg));
    }
};

// Level-ratio inequalities, exact rational comparisons:
//   |Q_{i+1}|/|Q_i| >= |Q_i|/(2|Q_{i-1}|) - 1   for i >= 1 with |Q_i| > 0
//   |Q_{i+1}|/|Q_i| >  n/2^i - 2                for i >= 0 with |Q_i| > 0
inline CheckReport grt_lemma_checks(const GrtLevelStats& stats, int n) {
    CheckReport rep;
    const auto& q = stats.q;
    for (size_t i = 0; i + 1 < q.size(); ++i) {
        if (q[i] == 0) continue;  // vacuous past tree exhaustion
        Rat ratio(q[i + 1], q[i]);
        if (i >= 1 && q[i - 1] > 0) {
            Rat rhs = Rat(q[i], 2 * q[i - 1]) - 1;
            if (ratio < rhs)
                rep.fail("level ratio at i=" + std::to_string(i) + ": " + ratio.str() +
                         " < " + rhs.str());
        }
        Rat rhs2 = Rat(n) / pow2_rat((long long)i) - 2;
        if (!(ratio > rhs2))
            rep.fail("level growth at i=" + std::to_string(i) + ": " + ratio.str() +
                     " <= " + rhs2.str());
    }
    return rep;
}

struct PropagationReport {
    bool premise_holds = false;
    bool propagated = true;  // meaningful only when the premise holds
    std::vector<std::string> failures;
};

// Given delta >= 0, if |Q_{i+1}|/|Q_i| >= n^{1+delta}/2^{i+1} - 2 at level i,
// the same bound must hold at every later level with nodes. n^{1+delta} is
// irrational in general, so this check runs in 50-digit reals.
inline PropagationReport grt_growth_propagation(const GrtLevelStats& stats, int n, int i,
                                                const Real& delta) {
    if (delta < 0) throw std::invalid_argument("grt_growth_propagation: delta must be >= 0");
    PropagationReport rep;
    const auto& q = stats.q;
    Real npow = pow(Real(n), Real(1) + delta);
    auto rhs = [&](int j) { return npow / to_real(pow2_rat(j + 1)) - 2; };
    auto ratio = [&](int j) { return Real(q[j + 1]) / Real(q[j]); };
    if (i < 0 || i + 1 >= (int)q.size() || q[i] == 0) return rep;
    rep.premise_holds = ratio(i) >= rhs(i);
    if (!rep.premise_holds) return rep;
    for (int j = i + 1; j + 1 < (int)q.size() && q[j] > 0; ++j) {
        if (ratio(j) < rhs(j)) {
            rep.propagated = false;
            rep.failures.push_back("propagation failed at j=" + std::to_string(j));
        }
    }
    return rep;
}

struct LevelCensusBounds {
    Real total_lower;      // sqrt(|Q_l| / (l+1)!) <= total monochromatic count
    Count size_upper;      // floor(|Q_l| / (l+1)!) >= count of size l+1
};

inline LevelCensusBounds census_bounds_from_levels(const GrtLevelStats& stats, int l) {
    if (l < 0 || l >= (int)stats.q.size())
        throw std::invalid_argument("census_bounds_from_levels: level out of range");
    Rat ratio(stats.q[l], factorial(unsigned(l + 1)));
    return {sqrt(to_real(ratio)), rat_floor(ratio)};
}

// --- restricted trees -------------------------------------------------------

using SubsetPolicy = std::function<VertexSet(const VertexSet&, int)>;

inline VertexSet lowest_index_policy(const VertexSet& from, int k) { return from.lowest(k); }

struct RrtLevel {
    Color color;       // c(i), shared by all nodes on the level
    Rat q;             // realized ratio, b(i) or 1-b(i)
    int bag_size = 0;  // s(i)
    Count node_count;  // |Q'_i|
};

struct RrtLevels {
    int n = 0;
    std::vector<RrtLevel> levels;

    int last_level() const { return (int)levels.size() - 1; }
    // s(i) with the s(-1) = n convention.
    int s(int i) const {
        if (i < -1 || i >= (int)levels.size()) throw std::out_of_range("RrtLevels::s");
        return i == -1 ? n : levels[i].bag_size;
    }
};

// Builds the restricted tree level by level. Nodes with equal (vertex, bag)
// have identical subtrees, so each level is a multiplicity map rather than a
// node list; counts stay exact. Per level the construction keeps the color
// class with strictly more nodes, Blue on ties. A node is Red when its red
// side reaches the bias threshold (|L| >= b(s-1)), which on the childless
// last level (s-1 = 0) makes every node Red.
inline RrtLevels build_rrt(const TwoColoring& g, const BiasSchedule& schedule,
                           SubsetPolicy policy = lowest_index_policy) {
    const int n = g.n();
    RrtLevels out;
    out.n = n;

    using NodeMap = std::unordered_map<detail::VBagKey, Count, detail::VBagHash>;
    // Parents of the next level: (vertex, bag) -> node multiplicity. The
    // super-root is modeled as a single parent with bag V.
    NodeMap parents;
    parents[{-1, VertexSet::full(n)}] = 1;
    int parent_bag_size = n;  // s(level-1)

    for (int level = 0;; ++level) {
        Rat b = schedule.bias(level);
        Rat threshold = b * Rat(parent_bag_size - 1);
        NodeMap red_children, blue_children;
        Count red_total = 0, blue_total = 0;
        for (const auto& [key, mult] : parents) {
            key.bag.for_each([&](int w) {
                VertexSet left = key.bag & g.red_neighbors(w);
                bool is_red = Rat(left.count()) >= threshold;
                Rat qv = is_red ? b : Rat(1) - b;
                int size = (int)rat_ceil(qv * Rat(parent_bag_size - 1));
                VertexSet source = is_red ? left : (key.bag & g.blue_neighbors(w));
                VertexSet bag = policy(source, size);
                if (bag.count() != size)
                    throw std::logic_error("build_rrt: subset policy returned wrong size");
                if (is_red) {
                    red_children[{w, std::move(bag)}] += mult;
                    red_total += mult;
                } else {
                    blue_children[{w, std::move(bag)}] += mult;
                    blue_total += mult;
                }
            });
        }
        bool keep_red = red_total > blue_total;  // tie goes to Blue
        RrtLevel lvl;
        lvl.color = keep_red ? Color::Red : Color::Blue;
        lvl.q = keep_red ? b : Rat(1) - b;
        lvl.bag_size = (int)rat_ceil(lvl.q * Rat(parent_bag_size - 1));
        lvl.node_count = keep_red ? red_total : blue_total;
        out.levels.push_back(lvl);
        if (lvl.bag_size == 0 || lvl.node_count == 0) break;  // last level reached
        parents = keep_red ? std::move(red_children) : std::move(blue_children);
        parent_bag_size = lvl.bag_size;
    }
    return out;
}

// Lower bound n * prod_{j<=i} q(j) - p/(1-p) on s(i), valid when q(j) <= p < 1
// for all j <= i. Evaluated against the realized ratios of a built tree.
inline Rat rrt_bag_floor(const RrtLevels& levels, int i, const Rat& p) {
    if (p >= 1) throw std::invalid_argument("rrt_bag_floor: requires p < 1");
    if (i < 0 || i > levels.last_level())
        throw std::out_of_range("rrt_bag_floor: level out of range");
    Rat prod = 1;
    for (int j = 0; j <= i; ++j) {
        if (levels.levels[j].q > p)
            throw std::invalid_argument("rrt_bag_floor: q(j) > p at level " + std::to_string(j));
        prod *= levels.levels[j].q;
    }
    return Rat(levels.n) * prod - p / (1 - p);
}

struct RrtWeight {
    Count w;          // prod_{i in S} s(i-1)
    bool w1_defined;  // false when some s(i-1) = 0
    Real w1;          // log2 w, meaningful only when defined
};

inline RrtWeight rrt_weights(const RrtLevels& levels, const std::vector<int>& S) {
    Count w = 1;
    for (int i : S) w *= levels.s(i - 1);
    if (w == 0) return {0, false, Real(0)};
    return {w, true, log2_real(Real(w))};
}

// Guaranteed count of monochromatic complete subgraphs of size |S| when every
// level in S shares one color: prod_{i in S} s(i-1) / (2^{l+1} (l+1)!).
inline Rat rrt_monochromatic_lower_bound(const RrtLevels& levels, const std::vector<int>& S) {
    if (S.empty()) throw std::invalid_argument("rrt_monochromatic_lower_bound: S is empty");
    for (int i : S) {
        if (i < 0 || i > levels.last_level())
            throw std::out_of_range("rrt_monochromatic_lower_bound: level out of range");
        if (levels.levels[i].color != levels.levels[S[0]].color)
            throw std::invalid_argument("rrt_monochromatic_lower_bound: S mixes colors");
    }
    int l = levels.last_level();
    Count num = 1;
    for (int i : S) num *= levels.s(i - 1);
    return Rat(num) / (pow2_rat(l + 1) * Rat(factorial(unsigned(l + 1))));
}

// --- bias-1/2 tree full paths ------------------------------------------------

struct FullPath {
    std::vector<int> vertices;   // v(0..L)
    std::vector<Color> colors;   // per node
};

inline std::string path_debug_string(const FullPath& p) {
    std::ostringstream os;
    for (size_t i = 0; i < p.vertices.size(); ++i) {
        if (i) os << ' ';
        os << 'v' << p.vertices[i] << ':' << color_char(p.colors[i]);
    }
    return os.str();
}

namespace detail {

inline int log2_exact(int n) {
    int q = 0;
    while ((1 << q) < n) ++q;
    if ((1 << q) != n) throw std::invalid_argument("vertex count must be a power of two");
    return q;
}

}  // namespace detail

// Streams every root-to-level-q path of the bias-1/2 tree on n = 2^q vertices
// in root-index order. Levels 0..q-1 are colored by the bias rule; the
// level-q node is Red iff the q nodes above it include at least q/2 red ones.
// There are exactly 2^{q(q+1)/2} paths, so keep q <= 4 for exhaustive runs.
template <typename F>
inline void rt_full_paths(const TwoColoring& g, F&& emit,
                          SubsetPolicy policy = lowest_index_policy) {
    const int n = g.n();
    const int q = detail::log2_exact(n);
    const Rat half(1, 2);

    FullPath path;
    auto descend = [&](auto&& self, const VertexSet& parent_bag, int level, int reds) -> void {
        parent_bag.for_each([&](int w) {
            if (level == q) {
                path.vertices.push_back(w);
                path.colors.push_back(2 * reds >= q ? Color::Red : Color::Blue);
                emit(path);
                path.vertices.pop_back();
                path.colors.pop_back();
                return;
            }
            int sp = parent_bag.count();
            VertexSet left = parent_bag & g.red_neighbors(w);
            bool is_red = Rat(left.count()) >= half * Rat(sp - 1);
            int size = (int)rat_ceil(half * Rat(sp - 1));
            VertexSet bag = policy(is_red ? left : (parent_bag & g.blue_neighbors(w)), size);
            path.vertices.push_back(w);
            path.colors.push_back(is_red ? Color::Red : Color::Blue);
            self(self, bag, level + 1, reds + (is_red ? 1 : 0));
            path.vertices.pop_back();
            path.colors.pop_back();
        });
    };
    descend(descend, VertexSet::full(n), 0, 0);
}

inline std::vector<FullPath> rt_full_paths(const TwoColoring& g,
                                           SubsetPolicy policy = lowest_index_policy) {
    std::vector<FullPath> out;
    rt_full_paths(g, [&](const FullPath& p) { out.push_back(p); }, policy);
    return out;
}

struct PathCliques {
    VertexSet red, blue;
};

// Splits a path's vertices by node color and verifies each side is
// monochromatic in g; a failure is an implementation bug.
inline PathCliques extract_cliques(const FullPath& p, const TwoColoring& g) {
    PathCliques out{VertexSet(g.n()), VertexSet(g.n())};
    for (size_t i = 0; i < p.vertices.size(); ++i)
        (p.colors[i] == Color::Red ? out.red : out.blue).set(p.vertices[i]);
    for (Color c : {Color::Red, Color::Blue}) {
        auto verts = (c == Color::Red ? out.red : out.blue).to_vector();
        for (size_t a = 0; a < verts.size(); ++a)
            for (size_t b = a + 1; b < verts.size(); ++b)
                if (g.color(verts[a], verts[b]) != c)
                    throw std::logic_error("extract_cliques: path set not monochromatic");
    }
    return out;
}

struct PathCounters {
    std::vector<int> c_r, c_b;    // prefix counts through level i
    std::vector<int> cp_r, cp_b;  // suffix counts from level i to the end
};

inline PathCounters path_color_counters(const FullPath& p) {
    const int L = (int)p.vertices.size() - 1;
    PathCounters c;
    c.c_r.assign(L + 1, 0);
    c.c_b.assign(L + 1, 0);
    c.cp_r.assign(L + 1, 0);
    c.cp_b.assign(L + 1, 0);
    for (int i = 0; i <= L; ++i) {
        c.c_r[i] = (i ? c.c_r[i - 1] : 0) + (p.colors[i] == Color::Red);
        c.c_b[i] = (i ? c.c_b[i - 1] : 0) + (p.colors[i] == Color::Blue);
    }
    for (int i = L; i >= 0; --i) {
        c.cp_r[i] = (i < L ? c.cp_r[i + 1] : 0) + (p.colors[i] == Color::Red);
        c.cp_b[i] = (i < L ? c.cp_b[i + 1] : 0) + (p.colors[i] == Color::Blue);
    }
    return c;
}

// --- restricted-tree paths and the auxiliary bipartite graph ---------------

// Streams the full paths of the bias-1/2 restricted tree: the bias-1/2 tree
// filtered to the per-level majority color recorded in `levels`.
template <typename F>
inline void rrt_full_paths(const TwoColoring& g, const RrtLevels& levels, F&& emit,
                           SubsetPolicy policy = lowest_index_policy) {
    const int n = g.n();
    const Rat half(1, 2);
    FullPath path;
    auto descend = [&](auto&& self, const VertexSet& parent_bag, int level) -> void {
        int sp = level == 0 ? n : levels.s(level - 1);
        Rat threshold = half * Rat(sp - 1);
        parent_bag.for_each([&](int w) {
            VertexSet left = parent_bag & g.red_neighbors(w);
            bool is_red = Rat(left.count()) >= threshold;
            if ((is_red ? Color::Red : Color::Blue) != levels.levels[level].color) return;
            path.vertices.push_back(w);
            path.colors.push_back(levels.levels[level].color);
            if (level == levels.last_level()) {
                emit(path);
            } else {
                int size = levels.levels[level].bag_size;
                VertexSet bag = policy(is_red ? left : (parent_bag & g.blue_neighbors(w)), size);
                self(self, bag, level + 1);
            }
            path.vertices.pop_back();
            path.colors.pop_back();
        });
    };
    descend(descend, VertexSet::full(n), 0);
}

struct AuxBipartite {
    std::vector<VertexSet> w_sets;               // red vertex-sets of full paths
    std::vector<VertexSet> z_sets;               // blue vertex-sets
    std::set<std::pair<int, int>> edges;         // (w index, z index)
    std::vector<Count> deg_w, deg_z;
    std::map<std::pair<int, int>, FullPath> witness;  // one realizing path per edge
    RrtLevels levels;
    Count path_count;
};

// Builds H(W,Z) from the full paths of the bias-1/2 restricted tree. Capped
// at n in {4, 16} (n = 2^{2t}), where exhaustive path streaming is cheap.
inline AuxBipartite build_aux_bipartite(const TwoColoring& g,
                                        SubsetPolicy policy = lowest_index_policy) {
    if (g.n() != 4 && g.n() != 16)
        throw std::invalid_argument("build_aux_bipartite: n must be 4 or 16");
    AuxBipartite aux;
    aux.levels = build_rrt(g, BiasSchedule::constant(Rat(1, 2)), policy);
    aux.path_count = 0;
    std::map<VertexSet, int> w_index, z_index;
    rrt_full_paths(g, aux.levels, [&](const FullPath& p) {
        aux.path_count += 1;
        VertexSet red(g.n()), blue(g.n());
        for (size_t i = 0; i < p.vertices.size(); ++i)
            (p.colors[i] == Color::Red ? red : blue).set(p.vertices[i]);
        auto [wi, wnew] = w_index.emplace(red, (int)aux.w_sets.size());
        if (wnew) aux.w_sets.push_back(red);
        auto [zi, znew] = z_index.emplace(blue, (int)aux.z_sets.size());
        if (znew) aux.z_sets.push_back(blue);
        auto edge = std::make_pair(wi->second, zi->second);
        if (aux.edges.insert(edge).second) aux.witness.emplace(edge, p);
    }, policy);
    aux.deg_w.assign(aux.w_sets.size(), 0);
    aux.deg_z.assign(aux.z_sets.size(), 0);
    for (const auto& [w, z] : aux.edges) {
        aux.deg_w[w] += 1;
        aux.deg_z[z] += 1;
    }
    return aux;
}

namespace detail {

// Per-level prefix/suffix color counters of the restricted tree; every full
// path shares them because level colors are uniform.
struct LevelCounters {
    std::vector<int> c_r, c_b, cp_r, cp_b;
};

inline LevelCounters rrt_level_counters(const RrtLevels& levels) {
    const int l = levels.last_level();
    LevelCounters c;
    c.c_r.assign(l + 1, 0);
    c.c_b.assign(l + 1, 0);
    c.cp_r.assign(l + 1, 0);
    c.cp_b.assign(l + 1, 0);
    for (int i = 0; i <= l; ++i) {
        c.c_r[i] = (i ? c.c_r[i - 1] : 0) + (levels.levels[i].color == Color::Red);
        c.c_b[i] = (i ? c.c_b[i - 1] : 0) + (levels.levels[i].color == Color::Blue);
    }
    for (int i = l; i >= 0; --i) {
        c.cp_r[i] = (i < l ? c.cp_r[i + 1] : 0) + (levels.levels[i].color == Color::Red);
        c.cp_b[i] = (i < l ? c.cp_b[i + 1] : 0) + (levels.levels[i].color == Color::Blue);
    }
    return c;
}

}  // namespace detail

// With q = the maximum monochromatic subgraph size of g (so no size-(q+1)
// subgraph exists), every level of the bias-1/2 restricted tree satisfies
// s(i-1) < C(2q-i, q-c_b(i-1)).
inline CheckReport szekely_bag_check(const RrtLevels& levels, int q) {
    CheckReport rep;
    auto c = detail::rrt_level_counters(levels);
    for (int i = 0; i <= levels.last_level(); ++i) {
        int cb = i == 0 ? 0 : c.c_b[i - 1];
        Count rhs = binomial(2LL * q - i, q - cb);
        if (!(Count(levels.s(i - 1)) < rhs))
            rep.fail("bag bound at i=" + std::to_string(i) + ": s=" +
                     std::to_string(levels.s(i - 1)) + " !< " + rhs.str());
    }
    return rep;
}

// Degree bounds on the auxiliary graph, again under q = max monochromatic
// size. The W side is bounded through the blue levels, the Z side through the
// red levels; both use the shared level counters.
inline CheckReport aux_degree_checks(const AuxBipartite& aux, int q) {
    CheckReport rep;
    const int l = aux.levels.last_level();
    const int two_t_plus_1 = l + 1;  // nodes per full path
    auto c = detail::rrt_level_counters(aux.levels);
    Count fact = factorial(unsigned(two_t_plus_1));

    Count w_bound = fact, z_bound = fact;
    for (int i = 0; i <= l; ++i) {
        int cr_prev = i == 0 ? 0 : c.c_r[i - 1];
        int cb_prev = i == 0 ? 0 : c.c_b[i - 1];
        int cpb_next = i == l ? 0 : c.cp_b[i + 1];
        int cpr_next = i == l ? 0 : c.cp_r[i + 1];
        if (aux.levels.levels[i].color == Color::Blue)
            w_bound *= binomial(2LL * q - cpb_next - cr_prev, q - cr_prev);
        else
            z_bound *= binomial(2LL * q - cpr_next - cb_prev, q - cb_prev);
    }
    for (size_t w = 0; w < aux.deg_w.size(); ++w)
        if (!(aux.deg_w[w] < w_bound))
            rep.fail("W degree bound: d=" + aux.deg_w[w].str() + " !< " + w_bound.str());
    for (size_t z = 0; z < aux.deg_z.size(); ++z)
        if (!(aux.deg_z[z] < z_bound))
            rep.fail("Z degree bound: d=" + aux.deg_z[z].str() + " !< " + z_bound.str());

    // Degree-sum pigeonhole: |W| >= E/max deg_w, |Z| >= E/max deg_z.
    Count e = aux.edges.size();
    Count dw = 0, dz = 0;
    for (const Count& d : aux.deg_w) dw = std::max(dw, d);
    for (const Count& d : aux.deg_z) dz = std::max(dz, d);
    if (dw > 0 && Count(aux.w_sets.size()) * dw < e)
        rep.fail("pigeonhole |W| * d_H^W < E(H)");
    if (dz > 0 && Count(aux.z_sets.size()) * dz < e)
        rep.fail("pigeonhole |Z| * d_H^Z < E(H)");
    return rep;
}

}  // namespace ramsey

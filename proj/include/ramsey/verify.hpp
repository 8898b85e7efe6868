#pragma once

// Property suites tying census, trees and bounds together. Every check here
// is theorem-backed: a failure means an implementation bug, and each failure
// record carries the serialized coloring so it can be replayed in isolation.

#include "ramsey/bounds.hpp"
#include "ramsey/census.hpp"
#include "ramsey/coloring.hpp"
#include "ramsey/ramsey_tree.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

namespace ramsey {

struct SuiteFailure {
    std::string instance;  // human-readable instance id
    std::string detail;    // which inequality broke, with both sides
    std::string coloring;  // serialized instance, sufficient to reproduce
};

struct SuiteReport {
    std::string suite;
    long long instances = 0;
    std::vector<SuiteFailure> failures;
    double wall_ms = 0;

    bool ok() const { return failures.empty(); }

    void merge(const SuiteReport& o) {
        instances += o.instances;
        failures.insert(failures.end(), o.failures.begin(), o.failures.end());
        wall_ms += o.wall_ms;
    }
};

// Timing is opt-in so that identical runs serialize byte-identically.
inline nlohmann::json suite_report_json(const SuiteReport& r, bool include_timing = false) {
    nlohmann::json fails = nlohmann::json::array();
    for (const auto& f : r.failures)
        fails.push_back({{"instance", f.instance}, {"detail", f.detail}, {"coloring", f.coloring}});
    nlohmann::json j = {
        {"suite", r.suite},
        {"instances", r.instances},
        {"failures", fails},
        {"ok", r.ok()},
    };
    if (include_timing) j["wall_ms"] = r.wall_ms;
    return j;
}

namespace detail {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

struct Checker {
    SuiteReport& rep;
    const TwoColoring& g;
    std::string instance;

    void require(bool cond, const std::string& detail) {
        if (!cond) rep.failures.push_back({instance, detail, write_coloring(g)});
    }
};

// Census-level invariants: engine vs oracle, pair partition, swap duality,
// per-vertex identities, and the max-vs-average facts for n >= 6.
inline void census_checks(Checker& c, const Profile& p) {
    const TwoColoring& g = c.g;
    const int n = g.n();
    if (n <= 14) c.require(p == brute_force_profile(g), "census != subset-scan oracle");
    c.require(p.red[2] + p.blue[2] == binomial(n, 2), "red[2]+blue[2] != C(n,2)");
    if (n <= 12) {
        Profile swapped = count_profile(swap_colors(g));
        c.require(swapped.red == p.blue && swapped.blue == p.red, "color swap duality broken");
    }

    MonoStats s = stats(p);
    auto per_vertex = per_vertex_counts(g);
    Count sum = 0, maxc = 0;
    for (const Count& ci : per_vertex) {
        sum += ci;
        if (ci > maxc) maxc = ci;
    }
    c.require(Rat(sum) == s.average * Rat(s.total), "sum_i C_i != A*C");
    c.require(Rat(maxc) * Rat(n) >= s.average * Rat(s.total), "max_j C_j < A*C/n");

    if (n >= 6) {
        c.require(Rat(s.max_size) - s.average >= Rat(1, 2), "M - A < 1/2");
        if (s.max_size >= 3)
            c.require(s.per_size[s.max_size] <= s.per_size[s.max_size - 1], "C_M > C_{M-1}");
    }
}

inline void deletion_checks(Checker& c, const Profile& p) {
    MonoStats s = stats(p);
    auto per_vertex = per_vertex_counts(c.g);
    for (int j = 0; j < c.g.n(); ++j) {
        MonoStats rest = stats(count_profile(remove_vertex(c.g, j)));
        c.require(s.total == per_vertex[j] + rest.total,
                  "deletion identity broken at vertex " + std::to_string(j));
    }
}

inline void grt_checks(Checker& c, const Profile& p) {
    const int n = c.g.n();
    GrtLevelStats stats_q = grt_level_counts(c.g, n - 1);
    c.require(stats_q.q[0] == n, "|Q_0| != n");
    if (n >= 2) c.require(stats_q.q[1] == Count(n) * (n - 1), "|Q_1| != n(n-1)");

    auto rep = grt_lemma_checks(stats_q, n);
    for (const auto& f : rep.failures) c.require(false, "tree level lemma: " + f);

    MonoStats s = stats(p);
    for (int l = 0; l < (int)stats_q.q.size(); ++l) {
        if (stats_q.q[l] == 0) break;
        auto b = census_bounds_from_levels(stats_q, l);
        c.require(Real(s.total) >= b.total_lower,
                  "total census below sqrt level bound at l=" + std::to_string(l));
        // The upper bound counts vertex sets; sizes 0/1 in the profile are
        // convention artifacts, so size 1 compares against n distinct sets.
        Count sets = l == 0 ? Count(n) : s.per_size[l + 1];
        c.require(sets <= b.size_upper,
                  "size-(l+1) census above level bound at l=" + std::to_string(l));
    }
}

inline std::vector<BiasSchedule> standard_schedules() {
    return {
        BiasSchedule::constant(Rat(1, 2)),
        BiasSchedule::parse("0:0.5,3:0.125"),
        BiasSchedule::parse("0:0.5,3:0.4"),
    };
}

inline void rrt_checks(Checker& c, const Profile& p) {
    MonoStats s = stats(p);
    for (const BiasSchedule& sched : standard_schedules()) {
        RrtLevels levels = build_rrt(c.g, sched);
        // bag recurrence, recomputed from the realized ratios
        Rat max_q = 0;
        for (int i = 0; i <= levels.last_level(); ++i) {
            const RrtLevel& l = levels.levels[i];
            c.require(Count(l.bag_size) == rat_ceil(l.q * Rat(levels.s(i - 1) - 1)),
                      "bag recurrence broken at level " + std::to_string(i));
            if (l.q > max_q) max_q = l.q;
        }
        if (max_q < 1) {
            for (int i = 0; i <= levels.last_level(); ++i)
                c.require(Rat(levels.s(i)) >= rrt_bag_floor(levels, i, max_q),
                          "bag floor above s(i) at level " + std::to_string(i));
        }
        // guaranteed subgraph counts for every same-color level set
        for (Color col : {Color::Red, Color::Blue}) {
            std::vector<int> lv;
            for (int i = 0; i <= levels.last_level(); ++i)
                if (levels.levels[i].color == col) lv.push_back(i);
            for (uint32_t mask = 1; mask < (uint32_t(1) << lv.size()); ++mask) {
                std::vector<int> subset;
                for (size_t b = 0; b < lv.size(); ++b)
                    if (mask & (uint32_t(1) << b)) subset.push_back(lv[b]);
                Count need = rat_ceil(rrt_monochromatic_lower_bound(levels, subset));
                Count have = (int)subset.size() == 1
                                 ? Count(c.g.n())  // distinct singleton sets
                                 : s.per_size[subset.size()];
                c.require(have >= need, "level-set subgraph bound broken, |S|=" +
                                            std::to_string(subset.size()));
            }
        }
    }
}

inline bool is_power_of_two(int n) { return n >= 1 && (n & (n - 1)) == 0; }

inline void path_checks(Checker& c) {
    const int n = c.g.n();
    if (!is_power_of_two(n) || n > 16) return;
    int q = 0;
    while ((1 << q) < n) ++q;
    Count expected = Count(1) << unsigned(q * (q + 1) / 2);
    Count seen = 0;
    rt_full_paths(c.g, [&](const FullPath& path) {
        seen += 1;
        try {
            PathCliques pc = extract_cliques(path, c.g);
            int bigger = std::max(pc.red.count(), pc.blue.count());
            c.require(bigger >= (q + 1) / 2 + 1, "larger path clique smaller than ceil(q/2)+1");
            c.require(pc.red.count() + pc.blue.count() == q + 1, "path cliques do not partition");
        } catch (const std::logic_error& e) {
            c.require(false, e.what());
        }
        auto pcs = path_color_counters(path);
        for (int i = 0; i <= q; ++i) {
            c.require(pcs.c_r[i] + pcs.c_b[i] == i + 1, "prefix counter identity broken");
            c.require(pcs.cp_r[i] + pcs.cp_b[i] == q - i + 1, "suffix counter identity broken");
        }
    });
    c.require(seen == expected, "full path count != 2^{q(q+1)/2}: " + seen.str());
}

inline void szekely_checks(Checker& c, const Profile& p) {
    const int n = c.g.n();
    if (!is_power_of_two(n)) return;
    MonoStats s = stats(p);
    int q = s.max_size;
    RrtLevels levels = build_rrt(c.g, BiasSchedule::constant(Rat(1, 2)));
    auto rep = szekely_bag_check(levels, q);
    for (const auto& f : rep.failures) c.require(false, "restricted bag bound: " + f);
    if (n == 4 || n == 16) {
        AuxBipartite aux = build_aux_bipartite(c.g);
        auto rep2 = aux_degree_checks(aux, q);
        for (const auto& f : rep2.failures) c.require(false, "aux graph: " + f);
    }
}

inline void sandwich_checks(Checker& c, const Profile& p) {
    const int n = c.g.n();
    MonoStats s = stats(p);
    // guaranteed lower bounds on per-size counts
    for (int t = 2; 2 * t - 3 <= 30 && (1 << (2 * t - 3)) <= n; ++t)
        c.require(s.per_size[t] >= rat_ceil(thm_lower_size_t(t).exact),
                  "size-" + std::to_string(t) + " count below guaranteed minimum");
    for (int k = 2; n >= (1LL << (2 * k)); ++k)
        c.require(s.per_size[k] >= rat_ceil(cor_lower_size_k(n, k).exact),
                  "size-" + std::to_string(k) + " count below binomial lower bound");
    // upper bound from forbidden size M+1
    int t = s.max_size + 1;
    for (int k = 2; k < t; ++k) {
        Rat ub = szekely_upper_product(t, k).exact;
        c.require(Rat(s.per_size[k]) <= ub,
                  "size-" + std::to_string(k) + " count above product upper bound");
    }
}

inline void check_instance(SuiteReport& rep, const TwoColoring& g, const std::string& name) {
    rep.instances += 1;
    Checker c{rep, g, name};
    const int n = g.n();
    Profile p = count_profile(g);
    census_checks(c, p);
    if (n <= 10) deletion_checks(c, p);
    if (n <= 11) grt_checks(c, p);
    rrt_checks(c, p);
    path_checks(c);
    szekely_checks(c, p);
    sandwich_checks(c, p);
}

}  // namespace detail

// All 2^15 colorings of the 6-vertex complete graph: census equals the
// subset-scan oracle, M - A >= 1/2 in exact rationals, the mode inequality
// C_M <= C_{M-1} when M >= 3, and the per-vertex identities.
inline SuiteReport exhaustive_sweep_n6() {
    detail::Stopwatch sw;
    SuiteReport rep;
    rep.suite = "n6_exhaustive";
    const int n = 6;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    for (uint32_t mask = 0; mask < (uint32_t(1) << pairs.size()); ++mask) {
        TwoColoring g(n);
        for (size_t b = 0; b < pairs.size(); ++b)
            g.set_color(pairs[b].first, pairs[b].second,
                        (mask >> b) & 1 ? Color::Red : Color::Blue);
        rep.instances += 1;
        detail::Checker c{rep, g, "n6 mask=" + std::to_string(mask)};
        Profile p = count_profile(g);
        c.require(p == brute_force_profile(g), "census != subset-scan oracle");
        MonoStats s = stats(p);
        c.require(Rat(s.max_size) - s.average >= Rat(1, 2), "M - A < 1/2");
        if (s.max_size >= 3)
            c.require(s.per_size[s.max_size] <= s.per_size[s.max_size - 1], "C_M > C_{M-1}");
        auto per_vertex = per_vertex_counts(g);
        Count sum = 0, maxc = 0;
        for (const Count& ci : per_vertex) {
            sum += ci;
            if (ci > maxc) maxc = ci;
        }
        c.require(Rat(sum) == s.average * Rat(s.total), "sum_i C_i != A*C");
        c.require(Rat(maxc) * Rat(n) >= s.average * Rat(s.total), "max_j C_j < A*C/n");
    }
    rep.wall_ms = sw.ms();
    return rep;
}

// Cross-module invariants over one generator family. `sizes` are vertex
// counts (for paley: the primes; for clique_union: n, split over all (t,s)
// factorizations). `seeds` only matters for random/join.
inline SuiteReport run_property_suite(const std::string& family, const std::vector<int>& sizes,
                                      const std::vector<uint64_t>& seeds) {
    detail::Stopwatch sw;
    SuiteReport rep;
    rep.suite = "properties_" + family;
    auto name = [&](int n, uint64_t seed) {
        return family + " n=" + std::to_string(n) + " seed=" + std::to_string(seed);
    };
    if (family == "random") {
        for (int n : sizes)
            for (uint64_t s : seeds) detail::check_instance(rep, random_coloring(n, s), name(n, s));
    } else if (family == "paley") {
        for (int q : sizes) detail::check_instance(rep, paley_coloring(q), name(q, 0));
    } else if (family == "cycle") {
        for (int n : sizes) detail::check_instance(rep, cycle_coloring(n), name(n, 0));
    } else if (family == "clique_union") {
        for (int n : sizes)
            for (int t = 1; t <= n; ++t) {
                if (n % t) continue;
                auto g = clique_union_coloring(t, n / t);
                detail::check_instance(rep, g,
                                       family + " t=" + std::to_string(t) + " s=" +
                                           std::to_string(n / t));
            }
    } else if (family == "join") {
        for (int n : sizes) {
            if (n < 6) throw std::invalid_argument("join suite needs n >= 6");
            for (uint64_t s : seeds) {
                int k = n / 2 < 3 ? 3 : n / 2;
                auto g = join_colorings(cycle_coloring(k), random_coloring(n - k, s),
                                        s % 2 ? Color::Red : Color::Blue);
                detail::check_instance(rep, g, name(n, s));
            }
        }
    } else {
        throw std::invalid_argument("unknown family: " + family);
    }
    rep.wall_ms = sw.ms();
    return rep;
}

inline std::vector<uint64_t> default_seeds(int k) {
    std::vector<uint64_t> s;
    for (int i = 0; i < k; ++i) s.push_back(1000 + i);
    return s;
}

// Named suites: fast (< 10 s), standard (< 2 min), deep (minutes; adds the
// n = 64 restricted-tree and bag-bound runs), and the n6 sweep by itself.
inline SuiteReport run_suite(const std::string& suite, int seed_count = 0) {
    auto seeds = [&](int dflt) { return default_seeds(seed_count > 0 ? seed_count : dflt); };
    SuiteReport rep;
    rep.suite = suite;
    if (suite == "n6") {
        rep.merge(exhaustive_sweep_n6());
    } else if (suite == "fast") {
        rep.merge(run_property_suite("random", {4, 6, 8, 16}, seeds(5)));
        rep.merge(run_property_suite("paley", {5, 13}, {}));
        rep.merge(run_property_suite("cycle", {5, 6, 8}, {}));
        rep.merge(run_property_suite("clique_union", {4, 9}, {}));
        rep.merge(run_property_suite("join", {8}, seeds(3)));
    } else if (suite == "standard") {
        rep.merge(exhaustive_sweep_n6());
        rep.merge(run_property_suite("random", {4, 5, 6, 7, 8, 9, 10, 11, 12}, seeds(10)));
        rep.merge(run_property_suite("random", {16, 32}, seeds(10)));
        rep.merge(run_property_suite("paley", {5, 13, 17}, {}));
        rep.merge(run_property_suite("cycle", {5, 6, 7, 8, 12}, {}));
        rep.merge(run_property_suite("clique_union", {4, 6, 9, 12}, {}));
        rep.merge(run_property_suite("join", {8, 10}, seeds(5)));
    } else if (suite == "deep") {
        rep.merge(run_suite("standard", seed_count));
        rep.merge(run_property_suite("random", {64}, seeds(20)));
    } else {
        throw std::invalid_argument("unknown suite: " + suite);
    }
    rep.suite = suite;
    return rep;
}

}  // namespace ramsey

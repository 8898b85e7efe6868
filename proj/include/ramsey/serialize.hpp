#pragma once

// Machine-readable output: profile JSON, tree CSV reports, bound-value JSON
// and the g1/g2 figure CSV. All formatting is deterministic.

#include "ramsey/bounds.hpp"
#include "ramsey/census.hpp"
#include "ramsey/ramsey_tree.hpp"

#include <json.hpp>

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>

namespace ramsey {

inline std::string rat_str(const Rat& x) {
    return numerator(x).str() + "/" + denominator(x).str();
}

inline std::string real_str(const Real& x, int digits = 20) {
    std::ostringstream os;
    os << std::setprecision(digits) << x;
    return os.str();
}

inline nlohmann::json profile_json(const Profile& p) {
    nlohmann::json j;
    j["n"] = p.n;
    j["convention"] = {
        {"singleton_mode",
         p.convention.singletons == Convention::Singletons::BothColors ? "both" : "blue_only"},
        {"include_empty", p.convention.include_empty},
    };
    auto strings = [](const std::vector<Count>& v) {
        std::vector<std::string> out;
        out.reserve(v.size());
        for (const Count& c : v) out.push_back(c.str());
        return out;
    };
    j["red"] = strings(p.red);
    j["blue"] = strings(p.blue);
    MonoStats s = stats(p);
    j["total"] = s.total.str();
    j["average"] = rat_str(s.average);
    j["max_size"] = s.max_size;
    return j;
}

inline void grt_csv(const GrtLevelStats& stats, std::ostream& os) {
    os << "level,node_count\n";
    for (size_t i = 0; i < stats.q.size(); ++i) os << i << ',' << stats.q[i].str() << '\n';
}

inline void rrt_csv(const RrtLevels& levels, std::ostream& os) {
    os << "level,color,q,bag_size,node_count\n";
    for (size_t i = 0; i < levels.levels.size(); ++i) {
        const RrtLevel& l = levels.levels[i];
        os << i << ',' << color_char(l.color) << ',' << rat_str(l.q) << ',' << l.bag_size
           << ',' << l.node_count.str() << '\n';
    }
}

inline nlohmann::json bound_json(const std::string& formula, nlohmann::json params,
                                 const BoundValue& v) {
    return {
        {"formula", formula},
        {"params", std::move(params)},
        {"value", v.str()},
        {"mode", v.mode == BoundValue::Mode::Exact ? "exact" : "approx"},
    };
}

// Curve data for g1 and g2 on [0, 2]; g1 is zero beyond 1/2 and g2's formula
// extends continuously to the right endpoint.
inline void figure_csv(const Rat& step, std::ostream& os) {
    if (step <= 0 || step > 2) throw std::invalid_argument("figure_csv: step in (0,2]");
    os << "c,g1,g2\n";
    for (Rat c = 0; c <= 2; c += step) {
        Real cr = to_real(c);
        Real g1 = c > Rat(1, 2) ? Real(0) : profile_function(ProfileKind::g1, cr).as_real();
        Real g2 = cr - cr * cr / 2;
        os << real_str(cr, 10) << ',' << real_str(g1, 12) << ',' << real_str(g2, 12) << '\n';
    }
}

}  // namespace ramsey

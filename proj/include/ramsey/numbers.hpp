#pragma once

// Exact arithmetic used throughout: arbitrary-precision integers for counts,
// rationals for averages and bound formulas, 50-digit decimal floats for the
// few genuinely transcendental quantities (logs, entropy, Barnes-G).

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/cpp_dec_float.hpp>

#include <stdexcept>
#include <string>

namespace ramsey {

using Count = boost::multiprecision::cpp_int;
using Rat   = boost::multiprecision::cpp_rational;
using Real  = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<50>>;

inline Count factorial(unsigned n) {
    Count r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

// C(n, k); zero outside the triangle.
inline Count binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Count r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

// 2^e as an exact rational, e may be negative.
inline Rat pow2_rat(long long e) {
    Count p = Count(1) << static_cast<unsigned>(e < 0 ? -e : e);
    return e >= 0 ? Rat(p) : Rat(1, p);
}

inline Count rat_ceil(const Rat& x) {
    Count n = numerator(x), d = denominator(x);  // d > 0 canonical
    Count q = n / d;
    if (n > q * d) ++q;
    return q;
}

inline Count rat_floor(const Rat& x) {
    Count n = numerator(x), d = denominator(x);
    Count q = n / d;
    if (n < q * d) --q;
    return q;
}

inline Real to_real(const Rat& x) {
    return Real(numerator(x)) / Real(denominator(x));
}

inline Real to_real(const Count& x) { return Real(x); }

inline Real log2_real(const Real& x) {
    if (x <= 0) throw std::domain_error("log2 of non-positive value");
    static const Real ln2 = log(Real(2));
    return log(x) / ln2;
}

// Tagged result of a bound formula: exact rational where the formula is
// rational, 50-digit real otherwise.
struct BoundValue {
    enum class Mode { Exact, Approx };
    Mode mode;
    Rat  exact;   // valid when mode == Exact
    Real approx;  // valid when mode == Approx

    static BoundValue make_exact(Rat v) { return {Mode::Exact, std::move(v), Real(0)}; }
    static BoundValue make_approx(Real v) { return {Mode::Approx, Rat(0), std::move(v)}; }

    Real as_real() const { return mode == Mode::Exact ? to_real(exact) : approx; }

    std::string str() const {
        if (mode == Mode::Exact) {
            if (denominator(exact) == 1) return numerator(exact).str();
            return numerator(exact).str() + "/" + denominator(exact).str();
        }
        return approx.str();
    }
};

}  // namespace ramsey

#pragma once

// Closed-form bounds, identities, estimates and profile functions. Everything
// rational is exact; transcendental values use 50-digit reals. Log convention:
// log = base 2, ln = natural.

#include "ramsey/numbers.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace ramsey {

// R(s,t) <= C(s+t-2, s-1).
inline BoundValue ramsey_binomial_bound(int s, int t) {
    if (s < 1 || t < 1) throw std::invalid_argument("ramsey_binomial_bound: s,t >= 1");
    return BoundValue::make_exact(Rat(binomial(s + t - 2, s - 1)));
}

struct CtBounds {
    Rat lower;  // 1 / C(R_t, t)
    Rat upper;  // 2^{1 - C(t,2)}
};

// Bracketing of the Ramsey multiplicity constant c_t; R_t supplied by the
// caller (a known Ramsey number or its binomial bound).
inline CtBounds erdos_ct_bounds(int t, long long r_t) {
    if (t < 2) throw std::invalid_argument("erdos_ct_bounds: t >= 2");
    if (r_t < t) throw std::invalid_argument("erdos_ct_bounds: R_t >= t required");
    return {Rat(1, binomial(r_t, t)), pow2_rat(1 - (long long)binomial(t, 2))};
}

// Guaranteed count of monochromatic size-t subgraphs in any coloring of the
// complete graph on 2^{2t-3} vertices: (1/t!) 2^{C(t,2)-2}.
inline BoundValue thm_lower_size_t(int t) {
    if (t < 2) throw std::invalid_argument("thm_lower_size_t: t >= 2");
    return BoundValue::make_exact(pow2_rat((long long)binomial(t, 2) - 2) / Rat(factorial(unsigned(t))));
}

// Guaranteed count of monochromatic size-k subgraphs in any coloring of K_n
// for 2 <= k <= (log2 n)/2: 2^{(-3k^2+5k-4)/2} C(n,k). The exponent numerator
// is always even.
inline BoundValue cor_lower_size_k(long long n, int k) {
    if (k < 2) throw std::invalid_argument("cor_lower_size_k: k >= 2");
    // k <= (1/2) log2 n  <=>  n >= 2^{2k}
    if (2 * k > 62 || n < (1LL << (2 * k)))
        throw std::invalid_argument("cor_lower_size_k: requires k <= (log2 n)/2");
    long long e = (-3LL * k * k + 5 * k - 4) / 2;
    return BoundValue::make_exact(pow2_rat(e) * Rat(binomial(n, k)));
}

// Upper bound on the size-k count of any coloring with no monochromatic
// subgraph of size t: (2/k!) prod_{r=0}^{k-1} C(2t-2-r, t-1).
inline BoundValue szekely_upper_product(int t, int k) {
    if (k < 2 || k >= t) throw std::invalid_argument("szekely_upper_product: 2 <= k < t");
    Count prod = 1;
    for (int r = 0; r < k; ++r) prod *= binomial(2LL * t - 2 - r, t - 1);
    return BoundValue::make_exact(Rat(2 * prod, factorial(unsigned(k))));
}

// H(p) = -p log2 p - (1-p) log2 (1-p), endpoints 0 by continuity.
inline BoundValue binary_entropy(const Real& p) {
    if (p < 0 || p > 1) throw std::domain_error("binary_entropy: p in [0,1]");
    Real h = 0;
    if (p > 0) h -= p * log2_real(p);
    if (p < 1) h -= (1 - p) * log2_real(1 - p);
    return BoundValue::make_approx(h);
}

enum class ProfileKind { g, g1, g2 };

namespace detail {

inline Real log2e() {
    static const Real v = Real(1) / log(Real(2));
    return v;
}

// Two-branch exponent function on [0,1]; continuous at 1 by construction.
inline Real g_profile(const Real& c) {
    if (c < 0 || c > 1) throw std::domain_error("g: c in [0,1]");
    if (c == 1) return (Real(4) - log2e()) / 2;
    Real term = Real(4) - c * log2e();
    if (c > 0) term += (1 - c) * (1 - c) * log2_real(1 - c);
    return (term - (2 - c) * (2 - c) * log2_real(2 - c)) / 2;
}

}  // namespace detail

inline BoundValue profile_function(ProfileKind kind, const Real& c) {
    switch (kind) {
        case ProfileKind::g:
            return BoundValue::make_approx(detail::g_profile(c));
        case ProfileKind::g1:
            if (c < 0) throw std::domain_error("g1: c >= 0");
            if (c > Real(1) / 2) return BoundValue::make_approx(Real(0));
            return BoundValue::make_approx(detail::g_profile(2 * c) / 4);
        case ProfileKind::g2:
            if (c < 0 || c >= 2) throw std::domain_error("g2: c in [0,2)");
            return BoundValue::make_approx(c - c * c / 2);
    }
    throw std::logic_error("profile_function: unknown kind");
}

enum class BarnesMode { Exact, Asymptotic };

// ln G(n) for G(n) = prod_{k=0}^{n} k!. Exact mode sums ln of the integer
// product, ln G(n) = sum_{j=2}^{n} (n-j+1) ln j; asymptotic mode is
// n^2 (ln(n)/2 - 3/4).
inline BoundValue log_barnes_g(long long n, BarnesMode mode) {
    if (n < 1) throw std::invalid_argument("log_barnes_g: n >= 1");
    if (mode == BarnesMode::Asymptotic)
        return BoundValue::make_approx(Real(n) * Real(n) * (log(Real(n)) / 2 - Real(3) / 4));
    Real sum = 0;
    for (long long j = 2; j <= n; ++j) sum += Real(n - j + 1) * log(Real(j));
    return BoundValue::make_approx(sum);
}

struct LnEstimates {
    bool first;              // ln(1+x) > x - x^2/2, for x > 0
    bool second_applicable;  // domain of the second estimate is 0 < x < 0.69
    bool second;             // ln(1-x) > -x - x^2
};

inline LnEstimates ln_estimates_check(const Real& x) {
    if (x <= 0) throw std::domain_error("ln_estimates_check: x > 0");
    LnEstimates r;
    r.first = log(1 + x) > x - x * x / 2;
    r.second_applicable = x < Real(69) / 100;
    r.second = r.second_applicable && log(1 - x) > -x - x * x;
    return r;
}

// C(n+t, k+t) <= C(n,k) ((n+t)/k)^t, exact rational comparison.
inline bool binom_shift_check(long long n, long long k, long long t) {
    if (k < 1 || n < k || t < 0) throw std::invalid_argument("binom_shift_check: n >= k >= 1, t >= 0");
    Rat rhs(binomial(n, k));
    Rat base(n + t, k);
    for (long long i = 0; i < t; ++i) rhs *= base;
    return Rat(binomial(n + t, k + t)) <= rhs;
}

// 1 + d^2/2 + log2(0.4) d(1-d) + log2(0.6) (1-d)^2 / 2.
inline BoundValue f_delta(const Real& delta) {
    static const Real l04 = log2_real(Real(2) / 5);
    static const Real l06 = log2_real(Real(3) / 5);
    Real d = delta;
    return BoundValue::make_approx(1 + d * d / 2 + l04 * d * (1 - d) + l06 * (1 - d) * (1 - d) / 2);
}

struct SubsetSum {
    Rat closed;     // 2^t / prod_{i=1}^{t} (2^i - 1)
    Rat truncated;  // sum over t-subsets S of {0..N} of 2^{-sum(S)}
};

// Infinite subset-sum identity vs its finite truncation; the truncation
// increases to the closed form as N grows.
inline SubsetSum subset_sum_identity(int t, int n_trunc) {
    if (t < 1 || n_trunc < t) throw std::invalid_argument("subset_sum_identity: t >= 1, N >= t");
    Count den = 1;
    for (int i = 1; i <= t; ++i) den *= (Count(1) << i) - 1;
    Rat closed = pow2_rat(t) / Rat(den);
    // dp[s] = sum of 2^{-sum(S)} over s-subsets of the items seen so far
    std::vector<Rat> dp(t + 1, 0);
    dp[0] = 1;
    for (int item = 0; item <= n_trunc; ++item) {
        Rat w = pow2_rat(-item);
        for (int s = t; s >= 1; --s) dp[s] += dp[s - 1] * w;
    }
    return {closed, dp[t]};
}

// prod_{i=1}^{m} (1 - 2^{-i}); decreasing in m with limit > 1/4.
inline BoundValue pentagonal_partial_product(int m) {
    if (m < 1) throw std::invalid_argument("pentagonal_partial_product: m >= 1");
    Rat prod = 1;
    for (int i = 1; i <= m; ++i) prod *= Rat(1) - pow2_rat(-i);
    return BoundValue::make_exact(prod);
}

struct MidRangeParams {
    int q;   // floor(t / sqrt(2)), i.e. the largest q with 2q^2 <= t^2
    Rat m;   // 2^{C(q,2)-1} / (4t)^t
};

inline MidRangeParams thm36_params(int t) {
    if (t < 2) throw std::invalid_argument("thm36_params: t >= 2");
    int q = 0;
    while (2LL * (q + 1) * (q + 1) <= (long long)t * t) ++q;
    Count den = 1;
    for (int i = 0; i < t; ++i) den *= 4 * t;
    return {q, pow2_rat((long long)binomial(q, 2) - 1) / Rat(den)};
}

// e^{sum_{i=2}^{n} A(i)/i} for per-size average lower bounds A(2..n).
inline BoundValue avg_chain_lower(const std::vector<Rat>& a_from_2) {
    Real s = 0;
    for (size_t idx = 0; idx < a_from_2.size(); ++idx) {
        const Rat& a = a_from_2[idx];
        if (a < 0) throw std::invalid_argument("avg_chain_lower: A(i) >= 0");
        s += to_real(a) / Real(idx + 2);
    }
    return BoundValue::make_approx(exp(s));
}

// Balancing parameters derived from epsilon.
struct AsymptoticParams {
    Real epsilon, d, d1, d2;

    explicit AsymptoticParams(const Real& eps) : epsilon(eps) {
        if (!(eps > 0 && eps < Real(1) / 10000))
            throw std::invalid_argument("AsymptoticParams: epsilon in (0, 1e-4)");
        Real root = sqrt(sqrt(eps));
        d = 3 * root;
        d1 = 5 * root;
        d2 = 6 * root;
    }
};

}  // namespace ramsey

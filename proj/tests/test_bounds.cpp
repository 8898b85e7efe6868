#include <catch2/catch_amalgamated.hpp>

#include "ramsey/bounds.hpp"

using namespace ramsey;

namespace {
Real tol(const char* s) { return Real(s); }
}

TEST_CASE("ramsey binomial bound") {
    REQUIRE(ramsey_binomial_bound(3, 3).exact == 6);
    REQUIRE(ramsey_binomial_bound(4, 4).exact == 20);
    REQUIRE(ramsey_binomial_bound(1, 5).exact == 1);
    REQUIRE(ramsey_binomial_bound(2, 2).exact == 2);
    REQUIRE_THROWS_AS(ramsey_binomial_bound(0, 3), std::invalid_argument);
}

TEST_CASE("multiplicity constant bracket") {
    CtBounds b3 = erdos_ct_bounds(3, 6);
    REQUIRE(b3.lower == Rat(1, 20));
    REQUIRE(b3.upper == Rat(1, 4));
    CtBounds b2 = erdos_ct_bounds(2, 2);
    REQUIRE(b2.lower == 1);
    REQUIRE(b2.upper == 1);
    CtBounds b4 = erdos_ct_bounds(4, 18);
    REQUIRE(b4.lower == Rat(1, 3060));
    REQUIRE(b4.upper == Rat(1, 32));
    for (int t = 2; t <= 6; ++t) {
        CtBounds b = erdos_ct_bounds(
            t, rat_ceil(ramsey_binomial_bound(t, t).exact).convert_to<long long>());
        REQUIRE(b.lower <= b.upper);
    }
    REQUIRE_THROWS_AS(erdos_ct_bounds(1, 2), std::invalid_argument);
    REQUIRE_THROWS_AS(erdos_ct_bounds(4, 3), std::invalid_argument);
}

TEST_CASE("guaranteed size-t counts") {
    REQUIRE(thm_lower_size_t(2).exact == Rat(1, 4));
    REQUIRE(thm_lower_size_t(3).exact == Rat(1, 3));
    REQUIRE(thm_lower_size_t(4).exact == Rat(2, 3));
    REQUIRE_THROWS_AS(thm_lower_size_t(1), std::invalid_argument);
}

TEST_CASE("guaranteed size-k counts at large n") {
    REQUIRE(cor_lower_size_k(16, 2).exact == 15);
    REQUIRE(cor_lower_size_k(64, 3).exact == Rat(651, 4));
    REQUIRE(cor_lower_size_k(256, 2).exact == 4080);
    REQUIRE_THROWS_AS(cor_lower_size_k(15, 2), std::invalid_argument);
    REQUIRE_THROWS_AS(cor_lower_size_k(16, 3), std::invalid_argument);
    REQUIRE_THROWS_AS(cor_lower_size_k(16, 1), std::invalid_argument);
}

TEST_CASE("product upper bound under a forbidden size") {
    REQUIRE(szekely_upper_product(3, 2).exact == 18);
    REQUIRE(szekely_upper_product(4, 3).exact == Rat(800, 3));
    REQUIRE_THROWS_AS(szekely_upper_product(3, 3), std::invalid_argument);
    REQUIRE_THROWS_AS(szekely_upper_product(3, 1), std::invalid_argument);
}

TEST_CASE("binary entropy") {
    REQUIRE(abs(binary_entropy(Real(1) / 2).approx - 1) < tol("1e-40"));
    REQUIRE(binary_entropy(Real(0)).approx == 0);
    REQUIRE(binary_entropy(Real(1)).approx == 0);
    REQUIRE_THROWS_AS(binary_entropy(Real(-1) / 10), std::domain_error);
    // C(n, pn) <= 2^{n H(p)}
    for (auto [n, k] : {std::pair{10, 3}, {20, 10}, {16, 4}}) {
        Real rhs = pow(Real(2), Real(n) * binary_entropy(Real(k) / n).approx);
        REQUIRE(Real(binomial(n, k)) <= rhs);
    }
}

TEST_CASE("profile exponent functions") {
    REQUIRE(profile_function(ProfileKind::g, Real(0)).as_real() == 0);
    Real g1v = profile_function(ProfileKind::g, Real(1)).as_real();
    REQUIRE(abs(g1v - Real("1.2786524795555183")) < tol("1e-12"));
    REQUIRE(abs(profile_function(ProfileKind::g1, Real(1) / 2).as_real() -
                Real("0.3196631198888796")) < tol("1e-12"));
    REQUIRE(profile_function(ProfileKind::g1, Real("0.6")).as_real() == 0);
    REQUIRE(profile_function(ProfileKind::g2, Real(1)).as_real() == Real(1) / 2);
    REQUIRE_THROWS_AS(profile_function(ProfileKind::g, Real(2)), std::domain_error);
    REQUIRE_THROWS_AS(profile_function(ProfileKind::g1, Real(-1)), std::domain_error);
    REQUIRE_THROWS_AS(profile_function(ProfileKind::g2, Real(2)), std::domain_error);

    SECTION("g is increasing and concave on a 1e-3 grid") {
        const Real step = Real(1) / 1000;
        Real prev = 0, prev_diff = 0;
        bool first = true;
        for (int i = 1; i <= 1000; ++i) {
            Real v = profile_function(ProfileKind::g, i * step).as_real();
            Real diff = v - prev;
            REQUIRE(diff > -tol("1e-12"));
            if (!first) REQUIRE(diff <= prev_diff + tol("1e-12"));
            prev = v;
            prev_diff = diff;
            first = false;
        }
    }
}

TEST_CASE("iterated-factorial log") {
    REQUIRE(log_barnes_g(1, BarnesMode::Exact).as_real() == 0);
    // n = 3: 0! 1! 2! 3! = 12
    REQUIRE(abs(log_barnes_g(3, BarnesMode::Exact).as_real() - log(Real(12))) < tol("1e-40"));
    REQUIRE_THROWS_AS(log_barnes_g(0, BarnesMode::Exact), std::invalid_argument);
    // the asymptotic form closes in at the n log n scale
    Real prev_rel = 1;
    for (long long n : {50, 100, 200}) {
        Real exact = log_barnes_g(n, BarnesMode::Exact).as_real();
        Real asym = log_barnes_g(n, BarnesMode::Asymptotic).as_real();
        Real rel = abs(exact - asym) / exact;
        REQUIRE(rel < prev_rel);
        prev_rel = rel;
    }
    REQUIRE(prev_rel < Real("0.02"));
}

TEST_CASE("logarithm estimates") {
    for (const char* x : {"0.5", "1e-8", "0.68"}) {
        LnEstimates e = ln_estimates_check(Real(x));
        REQUIRE(e.first);
        REQUIRE(e.second_applicable);
        REQUIRE(e.second);
    }
    REQUIRE_FALSE(ln_estimates_check(Real("0.7")).second_applicable);
    REQUIRE(ln_estimates_check(Real(5)).first);
    REQUIRE_THROWS_AS(ln_estimates_check(Real(0)), std::domain_error);
}

TEST_CASE("binomial shift inequality") {
    REQUIRE(binom_shift_check(5, 2, 3));
    REQUIRE(binom_shift_check(5, 2, 0));
    for (long long n = 1; n <= 20; ++n)
        for (long long k = 1; k <= n; ++k)
            for (long long t = 0; t <= 10; ++t) REQUIRE(binom_shift_check(n, k, t));
    REQUIRE_THROWS_AS(binom_shift_check(2, 3, 1), std::invalid_argument);
}

TEST_CASE("two-fifths exponent function") {
    REQUIRE(abs(f_delta(Real(1)).as_real() - Real(3) / 2) < tol("1e-40"));
    REQUIRE(abs(f_delta(Real(0)).as_real() - (1 + log2_real(Real(3) / 5) / 2)) < tol("1e-40"));
    // grid minimum stays above 4/7 + 1e-4
    Real floor = Real(4) / 7 + tol("1e-4");
    const Real step = Real(1) / 10000;
    Real best = 100;
    for (int i = 0; i <= 10000; ++i) {
        Real v = f_delta(i * step).as_real();
        if (v < best) best = v;
    }
    REQUIRE(best >= floor);
}

TEST_CASE("subset-sum identity") {
    REQUIRE(subset_sum_identity(1, 1).closed == 2);
    REQUIRE(subset_sum_identity(2, 2).closed == Rat(4, 3));
    REQUIRE(subset_sum_identity(3, 3).closed == Rat(8, 21));
    for (int t = 1; t <= 8; ++t) {
        SubsetSum s = subset_sum_identity(t, 40);
        REQUIRE(s.truncated < s.closed);
        REQUIRE(to_real(s.closed - s.truncated) < tol("1e-10"));
    }
    // truncation increases with N
    REQUIRE(subset_sum_identity(3, 10).truncated < subset_sum_identity(3, 20).truncated);
    REQUIRE_THROWS_AS(subset_sum_identity(0, 5), std::invalid_argument);
    REQUIRE_THROWS_AS(subset_sum_identity(5, 3), std::invalid_argument);
}

TEST_CASE("partial products of (1 - 2^-i)") {
    REQUIRE(pentagonal_partial_product(1).exact == Rat(1, 2));
    REQUIRE(pentagonal_partial_product(2).exact == Rat(3, 8));
    Rat prev = 1;
    for (int m = 1; m <= 64; ++m) {
        Rat v = pentagonal_partial_product(m).exact;
        REQUIRE(v < prev);
        REQUIRE(v > Rat(1, 4));
        prev = v;
    }
    REQUIRE(abs(to_real(pentagonal_partial_product(64).exact) - Real("0.2887880950866024")) <
            tol("1e-9"));
    REQUIRE_THROWS_AS(pentagonal_partial_product(0), std::invalid_argument);
}

TEST_CASE("mid-range parameters") {
    MidRangeParams p2 = thm36_params(2);
    REQUIRE(p2.q == 1);
    REQUIRE(p2.m == Rat(1, 128));
    MidRangeParams p4 = thm36_params(4);
    REQUIRE(p4.q == 2);
    REQUIRE(p4.m == Rat(1, 65536));
    REQUIRE(thm36_params(10).q == 7);
    for (int t = 2; t <= 30; ++t) {
        int q = thm36_params(t).q;
        REQUIRE(2LL * q * q <= (long long)t * t);
        REQUIRE(2LL * (q + 1) * (q + 1) > (long long)t * t);
    }
    REQUIRE_THROWS_AS(thm36_params(1), std::invalid_argument);
}

TEST_CASE("average chain lower bound") {
    REQUIRE(avg_chain_lower({}).as_real() == 1);
    REQUIRE(avg_chain_lower({Rat(0), Rat(0), Rat(0)}).as_real() == 1);
    // A(i) = i makes the exponent sum to n-1
    REQUIRE(abs(avg_chain_lower({Rat(2), Rat(3), Rat(4)}).as_real() - exp(Real(3))) <
            tol("1e-40"));
    REQUIRE_THROWS_AS(avg_chain_lower({Rat(-1)}), std::invalid_argument);

    // A(i) = log2(i): the exponent tracks the integral of log2(x)/x,
    // which is ln(x)^2 / (2 ln 2)
    std::vector<Rat> a;
    Real direct = 0;
    for (int i = 2; i <= 200; ++i) {
        a.emplace_back(i);  // placeholder, replaced below
        direct += log2_real(Real(i)) / i;
    }
    // avg_chain_lower takes rationals; approximate log2(i) to 1e-9
    for (int i = 2; i <= 200; ++i) {
        Real l = log2_real(Real(i)) * 1000000000;
        a[i - 2] = Rat(Count(l.convert_to<long long>()), 1000000000);
    }
    Real got = log(avg_chain_lower(a).as_real());
    REQUIRE(abs(got - direct) < tol("1e-5"));
    Real integral = log(Real(200)) * log(Real(200)) / (2 * log(Real(2)));
    REQUIRE(abs(got - integral) < 1);  // sum-vs-integral gap is O(1) here
}

TEST_CASE("asymptotic balancing parameters") {
    AsymptoticParams p(Real("1e-8"));
    REQUIRE(p.d > 0);
    REQUIRE(p.d < p.d1);
    REQUIRE(p.d1 < p.d2);
    REQUIRE(abs(p.d - Real(3) / 100) < tol("1e-40"));  // (1e-8)^{1/4} = 1e-2
    REQUIRE_THROWS_AS(AsymptoticParams(Real(0)), std::invalid_argument);
    REQUIRE_THROWS_AS(AsymptoticParams(Real("1e-4")), std::invalid_argument);
}

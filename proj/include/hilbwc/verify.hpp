#pragma once

#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hilbwc/hilbwc.hpp"

namespace hilbwc::verify {

struct CheckResult {
    int id = 0;
    std::string name;
    std::string anchor; // the identity or formula being reproduced
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

struct Outcome {
    bool passed = true;
    std::string detail;

    /// Records the first failure only; later ones are usually consequences.
    void expect(bool ok, const std::string& what)
    {
        if (!ok && passed) {
            passed = false;
            detail = what;
        }
    }
};

namespace detail {

inline std::string show(int n, const InsertionList& ks) { return "n=" + std::to_string(n) + " " + ks.to_string(); }

inline LaurentPoly t_power(const Rational& c, int e) { return LaurentPoly::monomial(c, e); }

/// exp(q/t^2) to the given order.
inline LaurentSeries exp_q_over_t2(int order)
{
    return qs_exp(LaurentSeries::monomial(t_power(Rational(1), -2), 1, order));
}

inline LaurentSeries q_monomial(const LaurentPoly& c, int k, int order) { return LaurentSeries::monomial(c, k, order); }

} // namespace detail

/// Closed forms for <ch_4>, <ch_5>, <ch_6> in closed form, encoded term by term.
inline LaurentSeries displayed_ch_series(int k, int order)
{
    using detail::q_monomial;
    using detail::t_power;
    const LaurentSeries e = detail::exp_q_over_t2(order);
    LaurentSeries s(order);
    auto fact = [](int m) { return Rational::factorial(m); };
    switch (k) {
    case 4:
        s += q_monomial(t_power(Rational(-1, 16), 0), 2, order);
        for (int n = 4; n <= order; ++n)
            s += q_monomial(t_power(Rational(n - 3) / (Rational(16) * fact(n - 2)), -2 * (n - 2)), n, order);
        s -= q_monomial(t_power(Rational(5, 144), -2), 3, order) * e;
        break;
    case 5:
        s += q_monomial(t_power(Rational(1, 60), 1), 2, order);
        for (int n = 4; n <= order; ++n)
            s -= q_monomial(t_power(Rational(n - 3) / (Rational(60) * fact(n - 2)), -(2 * (n - 2) - 1)), n, order);
        s -= q_monomial(t_power(Rational(1, 60), -1), 3, order) * e;
        break;
    case 6:
        s += q_monomial(t_power(Rational(-1, 288), 2), 2, order);
        s += q_monomial(t_power(Rational(77, 4320), 0), 3, order);
        for (int n = 5; n <= order; ++n) {
            s -= q_monomial(t_power(Rational(77 * (n - 4)) / (Rational(4320) * fact(n - 3)), -2 * (n - 3)), n, order);
            s -= q_monomial(t_power((Rational(576 * (n - 2)) * fact(n - 5)).inverse(), -2 * (n - 3)), n, order);
        }
        s += q_monomial(t_power(Rational(77, 4320), -2), 4, order) * e;
        break;
    default:
        hilbwc::detail::fail("no displayed closed form for ch_" + std::to_string(k));
    }
    return s;
}

inline Outcome check_normalization()
{
    Outcome o;
    for (int n = 1; n <= 10; ++n)
        o.expect(hilb_integral(n, {}) == detail::t_power(Rational::factorial(n).inverse(), -2 * n),
                 "<1>_" + std::to_string(n) + " != 1/(n! t^2n)");
    return o;
}

inline Outcome check_vanishing()
{
    Outcome o;
    for (int n = 1; n <= 10; ++n)
        o.expect(hilb_integral(n, {1}).is_zero(), "<ch_1>_" + std::to_string(n) + " != 0");
    return o;
}

inline Outcome check_closed_forms()
{
    Outcome o;
    for (int n = 2; n <= 10; ++n) {
        const Rational f = Rational::factorial(n - 2);
        o.expect(hilb_integral(n, {2}) == detail::t_power(-(Rational(4) * f).inverse(), -2 * (n - 1)),
                 "<ch_2>_" + std::to_string(n) + " mismatch");
        o.expect(hilb_integral(n, {3}) == detail::t_power((Rational(6) * f).inverse(), -(2 * n - 3)),
                 "<ch_3>_" + std::to_string(n) + " mismatch");
    }
    return o;
}

inline Outcome check_ch_series()
{
    Outcome o;
    for (int k = 4; k <= 6; ++k) {
        const LaurentSeries computed = ch_series(k, 10);
        const LaurentSeries expected = displayed_ch_series(k, 10);
        for (int n = 1; n <= 10; ++n)
            o.expect(computed[n] == expected[n], "ch_" + std::to_string(k) + " q^" + std::to_string(n) + ": " +
                                                      computed[n].to_string() + " vs closed form " +
                                                      expected[n].to_string());
    }
    for (int k = 0; k <= 6; ++k) {
        const LaurentSeries computed = ch_series(k, 8);
        for (int n = 1; n <= 8; ++n) {
            const LaurentPoly direct = hilb_integral(n, {k});
            o.expect(computed[n] == direct, "ch_" + std::to_string(k) + " q^" + std::to_string(n) + ": " +
                                                computed[n].to_string() + " vs localization " + direct.to_string());
        }
    }
    return o;
}

inline Outcome check_euler_identity(int d)
{
    Outcome o;
    for (int c = -6; c <= 6; ++c) {
        const auto wc = euler_series_wc(d, c, 20);
        const auto closed = euler_series_closed(d, c, 20);
        o.expect(wc.order() == 20 && wc == closed, "d=" + std::to_string(d) + " c=" + std::to_string(c) + ": " +
                                                       wc.to_string() + " vs " + closed.to_string());
    }
    return o;
}

inline Outcome check_dt_identity()
{
    Outcome o;
    for (int c = -6; c <= 6; ++c)
        o.expect(dt_identity_check(c, 16), "c=" + std::to_string(c));
    return o;
}

inline Outcome check_dilaton_closure()
{
    Outcome o;
    for (int d = 1; d <= 3; ++d) {
        for (int k = 0; k <= 8; ++k) {
            const ChernSymbol stepwise = reduce_pure_tilde(k, d);
            const Rational sign = (d * k) % 2 == 0 ? Rational(1) : Rational(-1);
            const std::string tag = "d=" + std::to_string(d) + " k=" + std::to_string(k);
            o.expect(stepwise == ChernSymbol::falling_factorial(d, k) * sign, tag + ": " + stepwise.to_string());
            // Degree k plus agreement at k+1 integer points pins the polynomial;
            // values come from integer binomials, independent of the rewrite.
            o.expect(stepwise.degree() == k, tag + ": wrong degree");
            for (int c = 0; c <= k + 3; ++c)
                o.expect(stepwise.evaluate(Rational(c)) == sign * Rational::factorial(k) * Rational::binomial(c, k),
                         tag + ": value at c=" + std::to_string(c));
        }
    }
    return o;
}

inline Outcome check_tn_calculus()
{
    Outcome o;
    o.expect(tn_integral(2, 1, 0) == Rational(-1), "int_{T_2} psi1 != -1");
    o.expect(tn_integral(2, 0, 1) == Rational(1), "int_{T_2} psiinf != 1");
    for (int n = 2; n <= 10; ++n)
        for (int a = 0; a <= 25; ++a)
            for (int b = 0; a + b <= 25; ++b)
                if (!tn_integral(n, a, b).is_zero())
                    o.expect(a + b == 2 * n - 3, "degree selection N=" + std::to_string(n));
    for (int n = 3; n <= 10; ++n) {
        for (int a = 0; a <= 2 * n - 3; ++a) {
            const int b = 2 * n - 3 - a;
            Rational rec(0);
            if (a >= 2)
                rec -= tn_integral(n - 1, a - 2, b);
            if (b >= 2)
                rec += tn_integral(n - 1, a, b - 2);
            o.expect(tn_integral(n, a, b) == rec, "Pascal recursion N=" + std::to_string(n) + " a=" + std::to_string(a));
        }
    }
    return o;
}

/// Random insertion lists: up to four insertions with 0 <= k <= 8.
inline std::vector<InsertionList> sample_insertion_lists(int count, unsigned seed)
{
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> len(0, 4);
    std::uniform_int_distribution<int> deg(0, 8);
    std::vector<InsertionList> out;
    for (int i = 0; i < count; ++i) {
        std::vector<int> ks(static_cast<std::size_t>(len(rng)));
        for (int& k : ks)
            k = deg(rng);
        out.emplace_back(std::move(ks));
    }
    return out;
}

inline Outcome check_property_suites()
{
    Outcome o;
    for (const InsertionList& ks : sample_insertion_lists(200, 20240611u)) {
        for (int n = 1; n <= 6; ++n) {
            const EpsSeries sum = localization_sum(n, ks);
            o.expect(sum.is_regular(), "eps pole survives for " + detail::show(n, ks));
            if (!sum.is_regular())
                continue;
            o.expect(sum.coeff(0).is_homogeneous_of_degree(ks.total_degree() - 2 * n),
                     "not homogeneous for " + detail::show(n, ks));
        }
    }
    const auto lists = sample_insertion_lists(8, 7u);
    for (int n = 1; n <= 8; ++n)
        for (const Partition& lambda : enumerate_partitions(n))
            for (const InsertionList& ks : lists)
                o.expect(full_torus_contribution(lambda, ks).swapped() ==
                             full_torus_contribution(lambda.conjugate(), ks),
                         "transpose symmetry fails at " + lambda.to_string());
    return o;
}

/// Every multiset of positive k's with sum <= max_sum.
inline std::vector<InsertionList> insertion_lists_up_to(int max_sum)
{
    std::vector<InsertionList> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        out.emplace_back(cur);
        for (int k = std::min(remaining, max_part); k >= 1; --k) {
            cur.push_back(k);
            rec(remaining - k, k);
            cur.pop_back();
        }
    };
    rec(max_sum, max_sum);
    return out;
}

inline Outcome check_ifunction_threshold()
{
    Outcome o;
    for (const InsertionList& ks : insertion_lists_up_to(14)) {
        for (int n = 1; n <= 6; ++n) {
            const UMonomial m = nonpolar_ifunction(n, ks);
            const LaurentPoly bracket = hilb_integral(n, ks);
            const bool expect_zero = ks.total_degree() < 2 * n - 2 || bracket.is_zero();
            o.expect(m.is_zero() == expect_zero, "threshold fails for " + detail::show(n, ks));
            if (!m.is_zero())
                o.expect(m.exp == ks.total_degree() - 2 * n + 2 && m.coeff == bracket.coeff(m.exp - 2),
                         "exponent law fails for " + detail::show(n, ks));
        }
    }
    return o;
}

/// Ordered set partitions (retained, N_1..N_k) of {0..m-1}, built block by
/// block from bitmasks.
inline std::set<std::vector<unsigned>> brute_force_ordered_partitions(int m, int k)
{
    std::set<std::vector<unsigned>> out;
    const unsigned full = (1u << m) - 1;
    std::vector<unsigned> blocks;
    std::function<void(unsigned)> rec = [&](unsigned used) {
        if (static_cast<int>(blocks.size()) == k) {
            std::vector<unsigned> term{full & ~used};
            term.insert(term.end(), blocks.begin(), blocks.end());
            out.insert(term);
            return;
        }
        for (unsigned sub = 0; sub <= full; ++sub) {
            if (sub & used)
                continue;
            blocks.push_back(sub);
            rec(used | sub);
            blocks.pop_back();
        }
    };
    rec(0);
    return out;
}

inline Outcome check_combinatorics()
{
    Outcome o;
    for (int n = 1; n <= 12; ++n)
        o.expect(expand_full_crossing(n, 0).size() == (std::size_t{1} << (n - 1)),
                 "full crossing count n=" + std::to_string(n));
    auto mask = [](const std::vector<int>& idx) {
        unsigned m = 0;
        for (int i : idx)
            m |= 1u << i;
        return m;
    };
    for (int n = 1; n <= 6; ++n) {
        for (int m = 0; m <= 4; ++m) {
            for (int n0 = 1; n0 <= n; ++n0) {
                const auto terms = expand_wall_terms(n, m, WallSpec{n0});
                std::set<std::pair<int, std::vector<unsigned>>> seen;
                for (const WallTerm& t : terms) {
                    std::vector<unsigned> key{mask(t.retained)};
                    for (const auto& b : t.blocks)
                        key.push_back(mask(b));
                    seen.insert({t.k, key});
                }
                std::size_t expected = 0;
                bool same = seen.size() == terms.size();
                for (int k = 1; k * n0 <= n; ++k) {
                    const auto brute = brute_force_ordered_partitions(m, k);
                    expected += brute.size();
                    for (const auto& key : brute)
                        same = same && seen.count({k, key}) == 1;
                }
                o.expect(same && terms.size() == expected, "wall terms n=" + std::to_string(n) + " m=" +
                                                               std::to_string(m) + " n0=" + std::to_string(n0));
            }
        }
    }
    return o;
}

struct Criterion {
    int id;
    const char* name;
    const char* anchor;
    double time_limit_seconds; // 0 means no limit
    std::function<Outcome()> run;
};

inline std::vector<Criterion> criteria()
{
    return {
        {1, "normalization", "<1> = exp(q/t^2), n <= 10", 1.0, check_normalization},
        {2, "vanishing", "<ch_1> = 0, n <= 10", 0.0, check_vanishing},
        {3, "closed forms", "<ch_2>_n = -1/(4(n-2)! t^(2n-2)), <ch_3>_n = 1/(6(n-2)! t^(2n-3))", 0.0,
         check_closed_forms},
        {4, "ch_k generating series", "closed-form <ch_4>..<ch_6> series, q^10; localization k<=6, n<=8", 30.0,
         check_ch_series},
        {5, "Macdonald identity", "(1/(1-q))^c to q^20, |c| <= 6", 0.0, [] { return check_euler_identity(1); }},
        {6, "Goettsche identity", "f(q)^c to q^20, |c| <= 6", 0.0, [] { return check_euler_identity(2); }},
        {7, "d=3 substitution identity", "exp(c q')|_{q'=log M(-q)} = M(-q)^c to q^16", 0.0, check_dt_identity},
        {8, "dilaton closure", "<psi~...psi~>_k = (-1)^(dk) k! binom(c_d, k), k <= 8", 0.0, check_dilaton_closure},
        {9, "T_N calculus", "int_{T_2} psi1 = -1, int_{T_2} psiinf = 1, string recursion", 0.0, check_tn_calculus},
        {10, "property suites", "homogeneity, eps-regularity, transpose symmetry", 0.0, check_property_suites},
        {11, "I-function threshold", "nonpolar part vanishes iff sum k < 2n-2 or bracket = 0", 0.0,
         check_ifunction_threshold},
        {12, "combinatorics", "2^(n-1) full-crossing terms; wall terms vs brute force", 0.0, check_combinatorics},
    };
}

inline CheckResult run(const Criterion& c)
{
    CheckResult r{c.id, c.name, c.anchor, false, {}, 0.0};
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = c.run();
    } catch (const std::exception& e) {
        o.passed = false;
        o.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.passed = o.passed;
    r.detail = o.detail;
    if (r.passed && c.time_limit_seconds > 0 && r.seconds >= c.time_limit_seconds) {
        r.passed = false;
        r.detail = "exceeded time limit of " + std::to_string(c.time_limit_seconds) + " s";
    }
    return r;
}

inline std::vector<CheckResult> run_all()
{
    std::vector<CheckResult> out;
    for (const Criterion& c : criteria())
        out.push_back(run(c));
    return out;
}

} // namespace hilbwc::verify

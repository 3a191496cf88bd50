#include <doctest.h>

#include <ramlab/breakcalc.hpp>

#include <random>

using namespace ramlab;

namespace {

// Independent oracle: lower breaks by the recursion
// b_(1) = u_1, b_(i+1) = b_(i) + (b^(i+1) - b^(i)) q^i.
std::vector<Int> lower_breaks_by_recursion(const FieldShape& s) {
    auto ub = upper_breaks(s);
    std::vector<Int> lb{Int(ub[0])};
    for (size_t i = 0; i + 1 < ub.size(); ++i)
        lb.push_back(lb.back() + Int(ub[i + 1] - ub[i]) * int_pow(s.q(), i + 1));
    return lb;
}

// Independent oracle: different as a literal sum over t of (Card G_t - 1),
// walking the lower-numbering filtration point by point.  Only for small
// profiles.
Int different_by_point_sum(const FieldShape& s, const BreakProfile& prof) {
    auto psi = psi_of_profile(s, prof);
    Int g0 = int_pow(Int(s.p()), prof.total_dim());
    Int total = 0;
    Int tmax = psi.break_values().back();
    for (Int t = 0; t <= tmax; ++t) {
        // Card G_t = g0 / (G^0 : G^u) on the segment containing t
        Int card = g0;
        for (size_t i = 0; i < psi.break_values().size(); ++i)
            if (t > psi.break_values()[i]) card = exact_div(g0, psi.slopes_after()[i]);
        total += card - 1;
    }
    return total;
}

}  // namespace

TEST_CASE("a(i) and c(m)") {
    CHECK(a_of(1, 3) == 0);
    CHECK(a_of(4, 3) == 1);
    CHECK(a_of(5, 2) == 4);
    CHECK(c_of(0, 3) == 0);
    CHECK(c_of(5, 3) == 4);
    CHECK(c_of(7, 7) == 6);
    // c(m) counts the integers in [1,m] prime to p
    for (long p : {2L, 3L, 5L}) {
        for (long m = 0; m <= 30; ++m) {
            long n = 0;
            for (long k = 1; k <= m; ++k)
                if (k % p != 0) ++n;
            CHECK(c_of(m, p) == n);
        }
    }
}

TEST_CASE("FieldShape validation") {
    CHECK_THROWS_AS(FieldShape(4, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(FieldShape(3, 0, 1), std::invalid_argument);
    FieldShape s(3, 2, 2);
    CHECK(s.e() == 4);
    CHECK(s.top() == 6);
    CHECK(s.q() == 9);
}

TEST_CASE("upper breaks") {
    CHECK(upper_breaks(FieldShape(3, 1, 1)) == std::vector<long>{1, 2, 3});
    CHECK(upper_breaks(FieldShape(2, 1, 1)) == std::vector<long>{1, 2});
    CHECK(upper_breaks(FieldShape(3, 2, 1)) == std::vector<long>{1, 2, 4, 5, 6});
    // all but the last prime to p, strictly increasing
    for (long p : {2L, 3L, 5L}) {
        FieldShape s(p, 3, 2);
        auto ub = upper_breaks(s);
        CHECK(ub.size() == size_t(s.e() + 1));
        for (size_t i = 0; i + 1 < ub.size(); ++i) {
            CHECK(ub[i] < ub[i + 1]);
            CHECK(ub[i] % p != 0);
        }
        CHECK(ub.back() == s.top());
    }
}

TEST_CASE("lower breaks: closed form vs recursion vs psi") {
    CHECK(lower_breaks(FieldShape(3, 1, 1)) == std::vector<Int>{1, 4, 13});
    CHECK(lower_breaks(FieldShape(2, 1, 1)) == std::vector<Int>{1, 3});
    // upper breaks 1, 3, 4; recursion gives 1, 1 + 2*2, 5 + 1*4
    CHECK(lower_breaks(FieldShape(2, 2, 1)) == std::vector<Int>{1, 5, 9});

    for (long p : {2L, 3L, 5L}) {
        for (long e1 : {1L, 2L}) {
            for (long f : {1L, 2L}) {
                FieldShape s(p, e1, f);
                auto lb = lower_breaks(s);
                CHECK(lb == lower_breaks_by_recursion(s));
                // psi over the maximal profile reproduces them
                std::vector<BreakStep> steps;
                auto ub = upper_breaks(s);
                for (long i = 0; i < s.e(); ++i) steps.push_back({ub[i], f});
                steps.push_back({s.top(), 1});
                auto psi = psi_of_profile(s, BreakProfile(s, steps, true));
                for (size_t i = 0; i < lb.size(); ++i) {
                    CHECK(psi.at_integer(Int(ub[i])) == lb[i]);
                    CHECK(lb[i] % p == 1);  // every lower break ≡ 1 mod p
                }
            }
        }
    }
}

TEST_CASE("psi evaluation and inverse") {
    FieldShape s(3, 1, 1);
    BreakProfile full(s, {{1, 1}, {2, 1}, {3, 1}}, false);
    auto psi = psi_of_profile(s, full);
    CHECK(psi.at_integer(3) == 13);
    CHECK(psi.at_integer(2) == 4);  // 1 + (2-1)*3
    CHECK(psi(Rat(1) / 2) == Rat(1) / 2);  // slope 1 before the first break

    // single step: identity below the break
    BreakProfile single(FieldShape(2, 3, 1), {{5, 1}}, false);
    auto psi1 = psi_of_profile(FieldShape(2, 3, 1), single);
    CHECK(psi1(Rat(5)) == Rat(5));
    CHECK(psi1(Rat(3)) == Rat(3));

    // phi(psi(w)) == w on and between break points, including non-integers
    std::vector<Rat> samples{Rat(0),      Rat(1) / 3, Rat(1),     Rat(3) / 2,
                             Rat(2),      Rat(7) / 3, Rat(3),     Rat(7) / 2,
                             Rat(10),     Rat(-1) / 2};
    for (const auto& w : samples) {
        CHECK(psi.inverse_at(psi(w)) == w);
        CHECK(psi(psi.inverse_at(w)) == w);
    }
}

TEST_CASE("psi and phi are exact mutual inverses on random profiles") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        const long ps[] = {2, 3, 5};
        FieldShape s(ps[rng() % 3], 1 + long(rng() % 3), 1 + long(rng() % 3));
        auto ub = upper_breaks(s);
        std::vector<BreakStep> steps;
        for (long b : ub) {
            if (rng() % 2 == 0) continue;
            steps.push_back({b, b == s.top() ? 1 : 1 + long(rng() % s.f())});
        }
        if (steps.empty()) steps.push_back({ub[0], 1});
        auto psi = psi_of_profile(s, BreakProfile(s, steps, false));
        // sample on the breaks, between them, and past the last one
        std::vector<Rat> samples{Rat(0)};
        for (const auto& st : steps) {
            samples.emplace_back(st.upper);
            samples.emplace_back(Rat(2 * st.upper - 1) / 2);
            samples.emplace_back(Rat(3 * st.upper + 1) / 3);
        }
        samples.emplace_back(Rat(s.top()) + Rat(5) / 7);
        for (const auto& w : samples) {
            CHECK(psi.inverse_at(psi(w)) == w);
            CHECK(psi(psi.inverse_at(w)) == w);
        }
    }
}

TEST_CASE("profile admissibility rules") {
    FieldShape s(3, 1, 1);
    CHECK_THROWS_WITH_AS(BreakProfile(s, {{3, 1}, {1, 1}}, false),
                         doctest::Contains("increasing"), AdmissibilityError);
    CHECK_THROWS_AS(BreakProfile(s, {{7, 1}}, false), AdmissibilityError);
    CHECK_THROWS_AS(BreakProfile(FieldShape(3, 2, 1), {{3, 1}}, false),
                    AdmissibilityError);  // 3 divisible by p, not the top 6
    CHECK_THROWS_AS(BreakProfile(s, {{3, 2}}, false), AdmissibilityError);  // top dim
    CHECK_THROWS_AS(BreakProfile(FieldShape(3, 1, 1), {{1, 2}}, false),
                    AdmissibilityError);  // dim > f
    try {
        BreakProfile(s, {{3, 2}}, false);
        CHECK(false);
    } catch (const AdmissibilityError& e) {
        CHECK(e.rule() == "top-dimension");
    }
}

TEST_CASE("different from profile: break-data formula vs point-by-point sum") {
    FieldShape s2(2, 1, 1);
    BreakProfile prof(s2, {{1, 1}, {2, 1}}, false);
    CHECK(different_from_profile(s2, prof, Int(4)) == 8);
    CHECK(different_by_point_sum(s2, prof) == 8);

    FieldShape s3(3, 1, 1);
    BreakProfile prof3(s3, {{1, 1}, {2, 1}, {3, 1}}, false);
    CHECK(different_from_profile(s3, prof3, Int(27)) == 94);
    CHECK(different_by_point_sum(s3, prof3) == 94);
    // the closed form p^{p+1} + p^p - p^{p-1} - ... - p - 2 from the example
    Int closed = int_pow(Int(3), 4) + int_pow(Int(3), 3) - 9 - 3 - 2;
    CHECK(closed == 94);

    // single break (u = m, d = 1): (p-1)(1+m)
    for (long p : {2L, 3L, 5L}) {
        FieldShape s(p, 2, 2);
        for (long m : {1L, s.top() - 1}) {
            BreakProfile single(s, {{m, 1}}, false);
            CHECK(different_from_profile(s, single, Int(p)) == Int(p - 1) * (1 + m));
        }
    }

    CHECK_THROWS_AS(different_from_profile(s2, BreakProfile(s2, {}, false), Int(1)),
                    std::domain_error);
}

TEST_CASE("maximal extension report") {
    auto r2 = maximal_extension_report(FieldShape(2, 1, 1));
    CHECK(r2.different_valuation == 8);
    CHECK(r2.discriminant_valuation == 16);
    CHECK(r2.residual_degree == 2);
    CHECK(r2.has_unramified_part);

    auto r3 = maximal_extension_report(FieldShape(3, 1, 1));
    CHECK(r3.different_valuation == 94);
    CHECK(r3.discriminant_valuation == 282);

    // (1 + p e1) p q^e - b_(e+1) - 1 with b_(3) = 9; the FDPF route confirms
    // it: p * 30 == 60 == the closed form (5)
    auto r22 = maximal_extension_report(FieldShape(2, 2, 1));
    CHECK(r22.different_valuation == (1 + 4) * 2 * 4 - 9 - 1);  // 30
    CHECK(fdpf_discriminant(FieldShape(2, 2, 1)) == 60);
    CHECK(r22.inertia_order == 8);  // p q^e
    CHECK(r22.degree == 16);
}

TEST_CASE("dim of G^n and bar U_n, perfect pairing") {
    for (long p : {2L, 3L, 5L}) {
        for (long e1 : {1L, 2L}) {
            for (long f : {1L, 3L}) {
                FieldShape s(p, e1, f);
                const long full = 2 + s.e() * f;
                CHECK(dim_upper_group(s, 1) == 1 + s.e() * f);
                CHECK(dim_upper_group(s, s.top()) == 1);
                CHECK(dim_upper_group(s, s.top() + 1) == 0);
                CHECK(dim_bar_u(s, 0) == full);
                CHECK(dim_bar_u(s, s.top()) == 1);
                CHECK(dim_bar_u(s, s.top() + 1) == 0);
                for (long n = 1; n <= s.top() + 1; ++n)
                    CHECK(dim_upper_group(s, n) + dim_bar_u(s, s.top() - n + 1) == full);
            }
        }
    }
}

TEST_CASE("count of single-break extensions") {
    FieldShape s21(2, 1, 1);
    CHECK(count_single_break(s21, 1) == 2);
    CHECK(count_single_break(s21, 2) == 4);  // n_{e+1} = p q^e
    CHECK(count_single_break(FieldShape(3, 1, 1), 2) == 9);
    CHECK_THROWS_AS(count_single_break(FieldShape(3, 2, 1), 3), AdmissibilityError);

    // (p-1) sum_{i=1}^{e} n_i == p (q^e - 1)
    for (long p : {2L, 3L, 5L, 7L}) {
        for (long f : {1L, 2L}) {
            FieldShape s(p, 2, f);
            Int sum = 0;
            auto ub = upper_breaks(s);
            for (long i = 0; i < s.e(); ++i) sum += count_single_break(s, ub[i]);
            CHECK(Int(p - 1) * sum == Int(p) * (int_pow(s.q(), s.e()) - 1));
        }
    }
}

TEST_CASE("conductor-discriminant product formula") {
    CHECK(fdpf_discriminant(FieldShape(2, 1, 1)) == 16);
    CHECK(fdpf_discriminant(FieldShape(3, 1, 1)) == 282);
    for (long f : {1L, 2L}) {
        FieldShape s(2, 1, f);
        CHECK(fdpf_discriminant(s) ==
              Int(2) * maximal_extension_report(s).different_valuation);
    }
}

TEST_CASE("custom extension report") {
    FieldShape s(3, 1, 1);
    auto r = custom_extension_report(s, BreakProfile(s, {{1, 1}, {2, 1}, {3, 1}}, false));
    CHECK(r.different_valuation == 94);
    CHECK(r.lower_breaks == std::vector<Int>{1, 4, 13});
    CHECK(r.degree == 27);
    CHECK(r.residual_degree == 1);

    // single break u with dim j: discriminant (p^j - 1)(1 + u)
    FieldShape s2(2, 2, 3);
    for (long j = 1; j <= 3; ++j) {
        auto rj = custom_extension_report(s2, BreakProfile(s2, {{3, j}}, false));
        CHECK(rj.discriminant_valuation == (int_pow(Int(2), j) - 1) * (1 + 3));
    }

    // unramified-only profile
    auto ru = custom_extension_report(s, BreakProfile(s, {}, true));
    CHECK(ru.different_valuation == 0);
    CHECK(ru.degree == 3);
    CHECK(ru.residual_degree == 3);
}

TEST_CASE("extremal discriminants and the Tate bound") {
    FieldShape s(2, 1, 1);
    auto [vmax, wmax] = extremal_discriminant(s, 1, ExtremalMode::max);
    CHECK(vmax == 3);
    CHECK(wmax.steps() == std::vector<BreakStep>{{2, 1}});
    auto [vmin, wmin] = extremal_discriminant(s, 1, ExtremalMode::min);
    CHECK(vmin == 2);
    CHECK(wmin.steps() == std::vector<BreakStep>{{1, 1}});

    auto [v22, w22] = extremal_discriminant(FieldShape(2, 1, 2), 2, ExtremalMode::max);
    CHECK(v22 == 8);

    CHECK_THROWS_AS(extremal_discriminant(s, 3, ExtremalMode::max), std::domain_error);
}

TEST_CASE("different on random admissible profiles vs point sum") {
    std::mt19937_64 rng(20260810);
    for (int trial = 0; trial < 40; ++trial) {
        // shapes kept small: the oracle walks the filtration point by point
        const long ps[] = {2, 3};
        FieldShape s(ps[rng() % 2], 1 + long(rng() % 2), 1 + long(rng() % 2));
        auto ub = upper_breaks(s);
        std::vector<BreakStep> steps;
        for (long b : ub) {
            if (rng() % 2 == 0) continue;
            long dmax = b == s.top() ? 1 : s.f();
            steps.push_back({b, 1 + long(rng() % dmax)});
        }
        if (steps.empty()) continue;
        BreakProfile prof(s, steps, false);
        Int g0 = int_pow(Int(s.p()), prof.total_dim());
        CHECK(different_from_profile(s, prof, g0) == different_by_point_sum(s, prof));
    }
}

TEST_CASE("cyclotomic tables") {
    auto t23 = cyclotomic_table(2, 3);
    CHECK(t23.disc_valuation == 8);  // (a-1) 2^{a-1}
    CHECK(t23.herbrand_ok);
    CHECK(t23.g0 == 4);
    CHECK(t23.kummer_break.value() == 3);  // 2^{m-1} - 1

    auto t32 = cyclotomic_table(3, 2);
    CHECK(t32.disc_valuation == 9);  // 2*6 - 3
    CHECK(t32.herbrand_ok);

    auto t21 = cyclotomic_table(2, 1);
    CHECK(t21.trivial);
    CHECK(t21.disc_valuation == 0);

    auto t31 = cyclotomic_table(3, 1);
    CHECK(t31.disc_valuation == 1);  // p - 2
    CHECK_FALSE(t31.kummer_break.has_value());
}

TEST_CASE("class field example tables") {
    auto t32 = classfield_example_table(3, 1, 2);
    CHECK(t32.disc_valuation == 9);
    CHECK(t32.upper_breaks == std::vector<long>{0, 1});
    CHECK(t32.lower_breaks == std::vector<Int>{0, 2});

    auto t21 = classfield_example_table(2, 1, 1);
    CHECK(t21.trivial);
    CHECK(t21.disc_valuation == 0);

    auto t51 = classfield_example_table(5, 1, 1);
    CHECK(t51.disc_valuation == 3);
    CHECK(t51.upper_breaks == std::vector<long>{0});

    auto t24 = classfield_example_table(2, 1, 4);  // q = 2, m > 1
    CHECK(t24.upper_breaks == std::vector<long>{1, 2, 3});
    CHECK(t24.disc_valuation == Int(4) * 8 - 8);
}

TEST_CASE("non-kummerian maximal extension") {
    auto r = nonkummerian_maximal_report(3, 1, 1);
    CHECK(r.different_valuation == 4);  // 2(p-1)
    CHECK(nonkummerian_maximal_report(5, 1, 1).different_valuation == 8);
    CHECK(r.has_unramified_part);
    CHECK(r.residual_degree == 3);
    CHECK_THROWS_AS(nonkummerian_maximal_report(2, 1, 1), std::domain_error);

    // e = 4, f = 1: (1 + b^(4)) q^4 - (1 + b_(4)) with b^(4) = 5
    auto r4 = nonkummerian_maximal_report(3, 4, 1);
    CHECK(r4.upper_breaks.back() == 5);
    CHECK(r4.different_valuation ==
          Int(6) * int_pow(Int(3), 4) - (1 + r4.lower_breaks.back()));
}

TEST_CASE("lambda maps") {
    CHECK(lambda_numberfield(3, 2, 1) == std::min(3L, 3L));
    // crossover at n = e1: p e1 == e1 + e
    CHECK(lambda_numberfield(5, 8, 2) == 10);
    CHECK(lambda_funcfield(3, 3) == 3);
    CHECK(lambda_funcfield(3, -2) == -6);
    CHECK_THROWS_AS(lambda_numberfield(3, 2, 0), std::domain_error);
}

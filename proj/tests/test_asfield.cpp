#include <doctest.h>

#include <ramlab/asfield.hpp>

#include <random>

using namespace ramlab;

namespace {

LaurentSeries random_series(std::mt19937_64& rng, const std::shared_ptr<const FqField>& k,
                            int emin, int emax, int precision) {
    std::vector<std::pair<int, FqElem>> terms;
    for (int e = emin; e < emax; ++e)
        terms.emplace_back(e, k->element_by_index(long(rng() % k->q())));
    return LaurentSeries::from_terms(k, terms, precision);
}

}  // namespace

TEST_CASE("class reduction") {
    auto k = FqField::make(3, 1);
    auto a = LaurentSeries::monomial(k, -9, k->one(), 1);
    auto c = reduce_class(a);
    CHECK(c.kind == ASClass::Kind::ramified);
    CHECK(c.level == 1);
    CHECK(c.poles.size() == 1);
    CHECK(c.poles.at(1) == k->one());

    // constants with nonzero trace give the unramified class
    auto k4 = FqField::make(2, 2);
    auto g = k4->element({0, 1});  // trace 1
    auto cu = reduce_class(LaurentSeries::monomial(k4, 0, g, 1));
    CHECK(cu.kind == ASClass::Kind::unramified);
    CHECK(cu.level == 0);
    CHECK(cu.trace_part == 1);

    // anything of positive valuation is the zero class
    auto cz = reduce_class(LaurentSeries::monomial(k, 3, k->from_int(2), 5));
    CHECK(cz.kind == ASClass::Kind::zero);

    CHECK_THROWS_AS(reduce_class(LaurentSeries::monomial(k, -2, k->one(), 0)),
                    std::domain_error);
}

TEST_CASE("reduction is a coset map: reduce(a + wp(r)) == reduce(a)") {
    std::mt19937_64 rng(101);
    for (long p : {2L, 3L, 5L}) {
        for (long f : {1L, 2L}) {
            auto k = FqField::make(p, f);
            for (int t = 0; t < 25; ++t) {
                auto a = random_series(rng, k, -9, 1, 1);
                auto r = random_series(rng, k, -4, 3, LaurentSeries::exact_precision);
                CHECK(reduce_class(a + wp(r)) == reduce_class(a));
            }
        }
    }
}

TEST_CASE("reduction is idempotent on canonical representatives") {
    std::mt19937_64 rng(102);
    auto k = FqField::make(3, 2);
    for (int t = 0; t < 25; ++t) {
        auto c = reduce_class(random_series(rng, k, -9, 1, 1));
        CHECK(reduce_class(c.representative()) == c);
    }
}

TEST_CASE("line break and uniformiser exponents") {
    auto k3 = FqField::make(3, 1);
    CHECK(line_break(reduce_class(LaurentSeries::monomial(k3, -9, k3->one(), 1))) == 1);
    auto k2 = FqField::make(2, 1);
    CHECK(line_break(reduce_class(LaurentSeries::monomial(k2, -3, k2->one(), 1))) == 3);
    CHECK_THROWS_AS(line_break(reduce_class(LaurentSeries(k2, 4))), std::domain_error);

    CHECK(uniformiser_exponents(1, 2) == std::pair<long, long>{1, 1});
    CHECK(uniformiser_exponents(3, 2) == std::pair<long, long>{1, 2});
    CHECK(uniformiser_exponents(2, 5) == std::pair<long, long>{2, 1});
    for (long p : {2L, 3L, 5L, 7L}) {
        for (long m = 1; m <= 25; ++m) {
            if (m % p == 0) continue;
            auto [x, y] = uniformiser_exponents(m, p);
            CHECK(-m * x + p * y == 1);
            CHECK(x >= 1);
            CHECK(x <= p - 1);
        }
    }
    CHECK_THROWS_AS(uniformiser_exponents(6, 3), std::domain_error);
}

TEST_CASE("degree-p reports") {
    auto k2 = FqField::make(2, 1);
    auto c1 = reduce_class(LaurentSeries::monomial(k2, -1, k2->one(), 1));
    auto r1 = degree_p_report(c1);
    CHECK(r1.different_valuation == 2);
    CHECK(r1.degree == 2);
    CHECK(r1.steps == std::vector<BreakStep>{{1, 1}});

    auto k3 = FqField::make(3, 1);
    auto c5 = reduce_class(LaurentSeries::monomial(k3, -5, k3->one(), 1));
    CHECK(degree_p_report(c5).different_valuation == 12);  // 2 * 6

    auto ku = degree_p_report(reduce_class(LaurentSeries::monomial(k3, 0, k3->one(), 1)));
    CHECK(ku.different_valuation == 0);
    CHECK(ku.has_unramified_part);
    CHECK(ku.residual_degree == 3);

    CHECK_THROWS_AS(degree_p_report(reduce_class(LaurentSeries(k3, 3))),
                    std::domain_error);
}

TEST_CASE("measured break equals m + 1") {
    for (long p : {2L, 3L, 5L}) {
        auto k = FqField::make(p, 1);
        for (long m = 1; m <= 20; ++m) {
            if (m % p == 0) continue;
            auto c = reduce_class(LaurentSeries::monomial(k, int(-m), k->one(), 1));
            CHECK(verify_break_oracle(c, 6) == m + 1);
        }
    }
    // also away from f = 1
    auto k9 = FqField::make(3, 2);
    auto c = reduce_class(LaurentSeries::monomial(k9, -7, k9->element({1, 2}), 1));
    CHECK(verify_break_oracle(c, 6) == 8);

    CHECK_THROWS_AS(verify_break_oracle(c, 0), std::domain_error);
    auto k2 = FqField::make(2, 1);
    CHECK_THROWS_AS(
        verify_break_oracle(reduce_class(LaurentSeries::monomial(k2, 0, k2->one(), 1)), 4),
        std::domain_error);  // unramified class has no break to measure
}

TEST_CASE("extension reports") {
    auto k = FqField::make(2, 1);
    auto gen = [&](int e) { return LaurentSeries::monomial(k, e, k->one(), 1); };

    auto r1 = extension_report({gen(-1)});
    CHECK(r1.degree == 2);
    CHECK(r1.steps == std::vector<BreakStep>{{1, 1}});
    CHECK(r1.different_valuation == 2);

    // generators of bar p^{-3} for p = 2, f = 1: breaks -1, 1, 3
    auto tau = LaurentSeries::monomial(k, 0, k->tau0(), 1);
    auto r3 = extension_report({gen(-1), gen(-3), tau});
    CHECK(r3.degree == 8);
    CHECK(r3.has_unramified_part);
    CHECK(r3.steps == std::vector<BreakStep>{{1, 1}, {3, 1}});
    CHECK(r3.lower_breaks == std::vector<Int>{1, 5});
    CHECK(r3.different_valuation == 10);
    CHECK(r3.discriminant_valuation == 20);
    CHECK(r3.residual_degree == 2);

    // duplicates do not change the span
    auto rdup = extension_report({gen(-1), gen(-1), gen(-3), tau, tau});
    CHECK(rdup.degree == r3.degree);
    CHECK(rdup.different_valuation == r3.different_valuation);
    CHECK(rdup.steps == r3.steps);

    // non-canonical generators reduce first: pi^{-9} over F_3 has level 1
    auto k3 = FqField::make(3, 1);
    auto r9 = extension_report({LaurentSeries::monomial(k3, -9, k3->one(), 1)});
    CHECK(r9.steps == std::vector<BreakStep>{{1, 1}});
    CHECK(r9.degree == 3);
}

TEST_CASE("extension report matches the closed forms for bar p^{-m}") {
    for (long p : {2L, 3L}) {
        for (long f : {1L, 2L}) {
            auto k = FqField::make(p, f);
            for (long m = 1; m <= 9; ++m) {
                std::vector<LaurentSeries> gens;
                for (long j = 1; j <= m; ++j) {
                    if (j % p == 0) continue;
                    for (long b = 0; b < f; ++b) {
                        std::vector<int> coeffs(f, 0);
                        coeffs[b] = 1;
                        gens.push_back(LaurentSeries::monomial(k, int(-j),
                                                               k->element(coeffs), 1));
                    }
                }
                gens.push_back(LaurentSeries::monomial(k, 0, k->tau0(), 1));
                auto r = extension_report(gens);

                const long cm = c_of(m, p);
                const Int q = int_pow(Int(p), f);
                CHECK(r.dimension == 1 + cm * f);
                CHECK(r.degree == int_pow(Int(p), 1 + cm * f));
                CHECK(r.has_unramified_part);
                REQUIRE(r.steps.size() == size_t(cm));
                for (long i = 1; i <= cm; ++i) {
                    CHECK(r.steps[i - 1].upper == i + a_of(i, p));
                    CHECK(r.steps[i - 1].dim == f);
                }
                // closed-form lower breaks and the break-data different
                Int b_low = 0;
                for (long j = 0; j <= cm - 1; ++j) b_low += int_pow(q, j);
                for (long j = 1; j <= a_of(cm, p); ++j) b_low += int_pow(q, j * (p - 1));
                CHECK(r.lower_breaks.back() == b_low);
                CHECK(r.different_valuation ==
                      Int(1 + r.steps.back().upper) * int_pow(q, cm) - (1 + b_low));
            }
        }
    }
}

TEST_CASE("level law: dimension steps are f exactly at the exponents prime to p") {
    for (long p : {2L, 3L}) {
        for (long f : {1L, 2L}) {
            for (long m = 1; m <= 12; ++m) {
                long d = brute_dimension(p, f, m) - brute_dimension(p, f, m - 1);
                CHECK(d == (m % p == 0 ? 0 : f));
            }
        }
    }
}

TEST_CASE("brute-force dimension of bar p^{-m}") {
    CHECK(brute_dimension(2, 1, 0) == 1);
    CHECK(brute_dimension(2, 1, 3) == 3);
    CHECK(brute_dimension(3, 2, 4) == 7);
    for (long p : {2L, 3L}) {
        for (long f : {1L, 2L}) {
            for (long m = 0; m <= 12; ++m)
                CHECK(brute_dimension(p, f, m) == 1 + c_of(m, p) * f);
        }
    }
    CHECK_THROWS_AS(brute_dimension(2, 1, 100, 50), std::domain_error);
}

TEST_CASE("trace pairing: Frobenius moves a wp-root by the trace") {
    // beta a root of T^p - T - b in k[T]/(T^p - T - b); then
    // beta^{p^f} - beta == S_{k|F_p}(b), which is the Artin-Schreier pairing
    // of Frobenius with b.
    for (long p : {2L, 3L, 5L}) {
        for (long f : {1L, 2L, 3L}) {
            auto k = FqField::make(p, f);
            for (long i = 0; i < k->q(); ++i) {
                const FqElem b = k->element_by_index(i);
                // arithmetic in R = k[T]/(T^p - T - b), elements as coeff
                // vectors of length p
                using RElem = std::vector<FqElem>;
                auto mul = [&](const RElem& x, const RElem& y) {
                    std::vector<FqElem> prod(2 * p - 1, k->zero());
                    for (long s = 0; s < p; ++s)
                        for (long t = 0; t < p; ++t) prod[s + t] += x[s] * y[t];
                    for (long d = 2 * p - 2; d >= p; --d) {
                        prod[d - p + 1] += prod[d];
                        prod[d - p] += prod[d] * b;
                        prod[d] = k->zero();
                    }
                    prod.resize(p);
                    return prod;
                };
                RElem beta(p, k->zero());
                beta[1] = k->one();
                RElem acc = beta;
                // beta^{p^f} by f successive p-th powers
                for (long step = 0; step < f; ++step) {
                    RElem pw(p, k->zero());
                    pw[0] = k->one();
                    for (long c = 0; c < p; ++c) pw = mul(pw, acc);
                    acc = pw;
                }
                acc[1] -= k->one();  // beta^{p^f} - beta
                CHECK(acc[0] == k->from_int(b.trace()));
                for (long c = 1; c < p; ++c) CHECK(acc[c].is_zero());
            }
        }
    }
}

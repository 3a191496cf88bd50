#include <doctest.h>

#include <ramlab/padic.hpp>

#include <random>

using namespace ramlab;

TEST_CASE("PadicInt basics") {
    PadicInt x(3, 4, 82);  // 82 = 1 + 81 ≡ 1 mod 81
    CHECK(x.residue() == 1);
    CHECK(x.congruent_one_mod(4));
    CHECK(PadicInt(3, 4, 10).congruent_one_mod(2));
    CHECK_FALSE(PadicInt(3, 4, 10).congruent_one_mod(3));
    CHECK(PadicInt(5, 3, 50).valuation() == 2);
    CHECK_THROWS_AS(PadicInt(5, 2, 25).valuation(), std::domain_error);
    CHECK(PadicInt(2, 5, 7).is_unit());
}

TEST_CASE("cyclotomic modulus") {
    CHECK(CycloRing::make(2, 1, 4)->cyclo_modulus() == std::vector<Int>{1, 1});
    CHECK(CycloRing::make(2, 2, 4)->cyclo_modulus() == std::vector<Int>{1, 0, 1});
    CHECK(CycloRing::make(3, 1, 4)->cyclo_modulus() == std::vector<Int>{1, 1, 1});
    CHECK(CycloRing::make(3, 2, 4)->cyclo_modulus() ==
          std::vector<Int>{1, 0, 0, 1, 0, 0, 1});
    CHECK(CycloRing::make(2, 3, 4)->phi() == 4);
}

TEST_CASE("xi has the right multiplicative order") {
    auto ring = CycloRing::make(3, 2, 5);
    auto xi = ring->xi();
    CHECK(xi.pow(9) == ring->one());
    CHECK_FALSE(xi.pow(3) == ring->one());
    auto r21 = CycloRing::make(2, 1, 5);
    CHECK(r21->xi().pow(2) == r21->one());
}

TEST_CASE("absolute norms") {
    // constants: N(c) = c^phi
    auto ring = CycloRing::make(3, 2, 6);
    CHECK(absolute_norm(ring->from_int(2)).residue() == 64);

    // N(1 - xi) = p, across several (p, m)
    for (auto [p, m] : std::vector<std::pair<long, long>>{{2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}}) {
        auto r = CycloRing::make(p, m, int(m) + 4);
        CHECK(absolute_norm(r->one_minus_xi()).residue() == p);
    }

    // N_{Q_2(i)|Q_2}(2 + i) = 5
    auto r22 = CycloRing::make(2, 2, 6);
    auto x = r22->element({2, 1});
    CHECK(absolute_norm(x).residue() == 5);

    // N(xi) is a unit
    for (auto [p, m] : std::vector<std::pair<long, long>>{{2, 2}, {3, 2}, {5, 1}})
        CHECK(absolute_norm(CycloRing::make(p, m, 5)->xi()).is_unit());

    // multiplicativity on random pairs
    std::mt19937_64 rng(5);
    auto r32 = CycloRing::make(3, 2, 5);
    for (int t = 0; t < 15; ++t) {
        std::vector<Int> a(6), b(6);
        for (auto& v : a) v = Int(rng() % 243);
        for (auto& v : b) v = Int(rng() % 243);
        CycloElem xa = r32->element(a), xb = r32->element(b);
        CHECK(absolute_norm(xa * xb) == absolute_norm(xa) * absolute_norm(xb));
    }
}

TEST_CASE("valuation with respect to 1 - xi") {
    auto ring = CycloRing::make(3, 2, 10);
    CHECK(val_pi(ring->one_minus_xi()) == 1);
    CHECK(val_pi(ring->one()) == 0);
    CHECK(val_pi(ring->from_int(3)) == 6);  // phi(9): total ramification
    CHECK(val_pi(ring->xi()) == 0);

    auto r21 = CycloRing::make(2, 1, 8);
    CHECK(val_pi(r21->from_int(2)) == 1);

    CHECK_THROWS_AS(val_pi(ring->zero()), std::domain_error);
    // not enough precision to resolve a deep valuation
    CHECK_THROWS_AS(val_pi(CycloRing::make(3, 2, 2)->from_int(9)), std::domain_error);

    // additivity on random nonzero pairs
    std::mt19937_64 rng(6);
    auto r22 = CycloRing::make(2, 2, 12);
    for (int t = 0; t < 15; ++t) {
        auto draw = [&] {
            std::vector<Int> v(2);
            for (auto& c : v) c = Int(rng() % 4096);
            return r22->element(v);
        };
        auto a = draw(), b = draw();
        if (a.is_zero() || b.is_zero() || (a * b).is_zero()) continue;
        int va, vb, vab;
        try {
            va = val_pi(a);
            vb = val_pi(b);
            vab = val_pi(a * b);
        } catch (const std::domain_error&) {
            continue;  // precision exhausted on an unlucky draw
        }
        CHECK(vab == va + vb);
    }
}

TEST_CASE("p-primary unit generator") {
    auto s = random_p_primary_unit_sample(3, 1, 6, 42);
    CHECK(val_pi(s.alpha) == 0);
    // alpha * gamma^{-p} = beta lies in U_{p^m}
    CHECK(val_pi(s.beta - s.beta.ring()->one()) >= 3);

    // determinism
    auto a1 = random_p_primary_unit(3, 1, 6, 7);
    auto a2 = random_p_primary_unit(3, 1, 6, 7);
    CHECK(a1 == a2);
    auto a3 = random_p_primary_unit(3, 1, 6, 8);
    CHECK_FALSE(a1 == a3);

    // alpha = 1 for u = 0, gamma = 1 is the degenerate instance
    auto ring = CycloRing::make(3, 1, 6);
    auto one = ring->one();
    CHECK(absolute_norm(one).residue() == 1);
}

TEST_CASE("p-primary norm congruence at desk scale") {
    auto rep = pisolkar_check(3, 1, 10, 6, 20260810);
    CHECK(rep.ok());
    CHECK(rep.trials == 10);
    auto rep2 = pisolkar_check(2, 2, 10, 7, 1);
    CHECK(rep2.ok());
    CHECK_THROWS_AS(pisolkar_check(2, 9, 5, 12, 1), std::domain_error);  // guard
}

TEST_CASE("unit norms land in V_m") {
    auto rep = unit_norm_level_check(3, 2, 10, 7, 99);
    CHECK(rep.ok());
    auto rep2 = unit_norm_level_check(2, 3, 10, 8, 99);
    CHECK(rep2.ok());
}

TEST_CASE("val_pi of beta - 1 certifies membership in U_{p^m}") {
    // the generator's beta = 1 + (1-xi)^{p^m} u must sit at level >= p^m
    for (auto [p, m] : std::vector<std::pair<long, long>>{{2, 2}, {3, 1}}) {
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            auto s = random_p_primary_unit_sample(p, m, int(m) + 6, seed);
            auto one = s.beta.ring()->one();
            if ((s.beta - one).is_zero()) continue;  // u drew 0
            CHECK(val_pi(s.beta - one) >=
                  int(int_pow(Int(p), m).convert_to<long>()));
        }
    }
}

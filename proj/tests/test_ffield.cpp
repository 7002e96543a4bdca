#include <doctest.h>

#include <qprofile/ffield.hpp>
#include <qprofile/fqpoly.hpp>
#include <random>

using namespace qprofile;

TEST_CASE("prime field construction") {
    FieldCtx f2 = make_field(2, 1);
    CHECK(f2.q == 2);
    CHECK(f2.modulus == std::vector<std::uint32_t>{0, 1});  // x
    CHECK(f2.add(1, 1) == 0);
}

TEST_CASE("F_4 uses the unique irreducible quadratic") {
    FieldCtx f4 = make_field(2, 2);
    CHECK(f4.q == 4);
    CHECK(f4.modulus == std::vector<std::uint32_t>{1, 1, 1});  // x^2 + x + 1
    // x * x = x + 1
    CHECK(f4.mul(2, 2) == 3);
}

TEST_CASE("F_9 modulus has the smallest encoding among irreducible quadratics") {
    // hand enumeration over F_3: x^2 (code 0) has root 0; x^2 + 1 (code 1)
    // has no root (1, 2, 2), so it is the minimum
    FieldCtx f9 = make_field(3, 2);
    CHECK(f9.modulus == std::vector<std::uint32_t>{1, 0, 1});
}

TEST_CASE("modulus irreducibility cross-checked by fqpoly") {
    for (auto [p, e] : {std::pair<unsigned, unsigned>{2, 4}, {3, 2}, {5, 2}, {2, 8}}) {
        FieldCtx F = make_field(p, e);
        FieldCtx Fp = make_field(p, 1);
        std::vector<fq_t> coeffs(F.modulus.begin(), F.modulus.end());
        CHECK(is_irreducible(PolyFq(Fp, coeffs)));
    }
}

TEST_CASE("invalid field parameters") {
    CHECK_THROWS_AS(make_field(6, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_field(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_field(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(make_field(2, 17), std::invalid_argument);  // q > 2^16
    CHECK_THROWS_AS(make_field_from_q(6), std::invalid_argument);
    CHECK(make_field_from_q(8).e == 3);
    CHECK(make_field_from_q(49).p == 7);
}

TEST_CASE("F_5 inverse") {
    FieldCtx f5 = make_field(5, 1);
    CHECK(f5.inv(2) == 3);
    CHECK_THROWS_AS(f5.inv(0), std::domain_error);
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(7);
    for (auto [p, e] : {std::pair<unsigned, unsigned>{2, 3}, {3, 2}, {7, 1}, {2, 6}}) {
        FieldCtx F = make_field(p, e);
        for (int t = 0; t < 200; ++t) {
            fq_t a = rng() % F.q, b = rng() % F.q, c = rng() % F.q;
            CHECK(F.add(a, b) == F.add(b, a));
            CHECK(F.mul(a, b) == F.mul(b, a));
            CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
            CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
            CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            CHECK(F.sub(F.add(a, b), b) == a);
        }
    }
}

TEST_CASE("multiplicative group has order q-1, exhaustive for q <= 64") {
    for (auto [p, e] : {std::pair<unsigned, unsigned>{2, 6}, {3, 3}, {5, 2}, {61, 1}}) {
        FieldCtx F = make_field(p, e);
        for (fq_t a = 1; a < F.q; ++a) {
            CHECK(F.mul(a, F.inv(a)) == 1);
            CHECK(F.pow(a, F.q - 1) == 1);
        }
    }
}

#include <doctest.h>

#include <qprofile/counting.hpp>

using namespace qprofile;

namespace {
BigInt binom(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    BigInt r = 1;
    for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}
}  // namespace

TEST_CASE("partition enumeration") {
    auto p4 = partitions_of(4);
    REQUIRE(p4.size() == 5);
    // reverse-lexicographic order
    CHECK(p4[0] == Partition({4}));
    CHECK(p4[1] == Partition({3, 1}));
    CHECK(p4[2] == Partition({2, 2}));
    CHECK(p4[3] == Partition({2, 1, 1}));
    CHECK(p4[4] == Partition({1, 1, 1, 1}));

    auto f2 = partitions_with_first_part(4, 2);
    REQUIRE(f2.size() == 2);
    CHECK(f2[0] == Partition({2, 2}));
    CHECK(f2[1] == Partition({2, 1, 1}));

    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(0)[0].empty());
}

TEST_CASE("conjugate") {
    CHECK(conjugate(Partition({2, 1, 1})) == Partition({3, 1}));
    CHECK(conjugate(Partition({3, 1})) == Partition({2, 1, 1}));
    CHECK(conjugate(Partition(std::vector<std::size_t>{})) == Partition(std::vector<std::size_t>{}));
    for (const auto& mu : partitions_of(7)) CHECK(conjugate(conjugate(mu)) == mu);
}

TEST_CASE("partition validation") {
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK(Partition({2, 1, 0, 0}) == Partition({2, 1}));  // trailing zeros dropped
}

TEST_CASE("q-binomials") {
    CHECK(q_binomial(5, 0) == QPolynomial::one());
    CHECK(q_binomial(3, 1) == QPolynomial({1, 1, 1}));
    CHECK(q_binomial(3, 1).eval(2) == 7);
    CHECK(q_binomial(4, 2).eval(2) == 35);
    CHECK(q_binomial(2, 3).is_zero());
}

TEST_CASE("q-binomial symmetry and Pascal recurrence, symbolic n <= 20") {
    for (std::size_t n = 0; n <= 20; ++n)
        for (std::size_t k = 0; k <= n; ++k) {
            CHECK(q_binomial(n, k) == q_binomial(n, n - k));
            if (n > 0 && k > 0 && k < n)
                CHECK(q_binomial(n, k) ==
                      q_binomial(n - 1, k - 1) +
                          QPolynomial::monomial(1, k) * q_binomial(n - 1, k));
        }
}

TEST_CASE("q = 1 degenerates to classical binomials") {
    for (std::size_t n = 0; n <= 12; ++n)
        for (std::size_t k = 0; k <= n; ++k)
            CHECK(q_binomial(n, k).eval(1) == binom(n, k));
}

TEST_CASE("gamma_q") {
    CHECK(gamma_q(0) == QPolynomial::one());
    CHECK(gamma_q(2).eval(2) == 6);
    CHECK(gamma_q(3).eval(2) == 168);
    // overflows 64 bits at q=2, k=9; exact value = prod (2^9 - 2^i)
    BigInt expect = 1;
    for (int i = 0; i < 9; ++i) expect *= BigInt(512) - (BigInt(1) << i);
    CHECK(gamma_q(9).eval(2) == expect);
}

TEST_CASE("sigma polynomial examples") {
    CHECK(sigma_poly(Partition({5})) == QPolynomial::one());
    CHECK(sigma_poly(Partition({2, 1})) == QPolynomial({1, 1, 1}));
    CHECK(sigma_value(Partition({2, 1}), 2) == 7);
    // frozen from brute-force enumeration over F_2^4 under companion(x^4+x+1)
    CHECK(sigma_value(Partition({2, 2}), 2) == 20);
    CHECK(sigma_value(Partition({2, 1, 1}), 2) == 15);
    // (1^n): every line, (q^n - 1)/(q - 1)
    CHECK(sigma_value(Partition({1, 1, 1, 1}), 3) == 40);
    CHECK_THROWS_AS(sigma_poly(Partition(std::vector<std::size_t>{})), std::invalid_argument);
    CHECK_THROWS_AS(sigma_value(Partition({2, 1}), 6), std::invalid_argument);
}

TEST_CASE("column sums equal q-binomials, symbolic n <= 8") {
    for (std::size_t n = 1; n <= 8; ++n)
        for (std::size_t k = 0; k < n; ++k) {
            QPolynomial sum;
            for (const auto& mu : partitions_with_first_part(n, n - k))
                sum = sum + sigma_poly(mu);
            CHECK(sum == q_binomial(n, n - k));
        }
}

TEST_CASE("simple map counts with given defect") {
    CHECK(simple_maps_with_defect_count(Partition({3}), 3, 2) == 1);  // empty map
    CHECK(simple_maps_with_defect_count(Partition({2, 1}), 3, 2) == 6);
    CHECK(simple_maps_with_defect_count(Partition({2, 2}), 4, 2) == 96);
    CHECK_THROWS_AS(simple_maps_with_defect_count(Partition({2, 1}), 4, 2),
                    std::invalid_argument);
}

TEST_CASE("extension count formulas") {
    CHECK(simple_extension_count(3, 1, 2) == 4);
    CHECK(simple_extension_count(4, 0, 2) == 14);
    CHECK(simple_extension_count(5, 3, 2) == 16);  // q^n - q^{n-1}
    CHECK_THROWS_AS(simple_extension_count(3, 2, 2), std::invalid_argument);

    CHECK(charpoly_extension_count(3, 2, 2) == 1);  // empty product
    CHECK(charpoly_extension_count(3, 1, 2) == 4);
    CHECK(charpoly_extension_count(4, 1, 2) == 96);
}

TEST_CASE("splitting subspace counts") {
    CHECK(splitting_count(1, 4, 2) == 15);  // all lines of F_2^4
    CHECK(splitting_count(2, 2, 2) == 20);
    CHECK(splitting_count(2, 2, 3) == 90);
    for (std::uint64_t q : {2, 3, 4, 5})
        for (std::size_t m = 1; m <= 6; ++m)
            for (std::size_t d = 1; m * d <= 12; ++d) {
                std::vector<std::size_t> parts(d, m);
                CHECK(splitting_count(m, d, q) == sigma_value(Partition(parts), q));
            }
}

TEST_CASE("whittaker coefficients") {
    for (std::size_t n = 1; n <= 12; ++n) {
        auto c = whittaker_coefficient(Partition({n}));
        CHECK(c.sign == 1);
        CHECK(c.magnitude == QPolynomial::one());
    }
    auto c11 = whittaker_coefficient(Partition({1, 1}));
    CHECK(c11.sign == -1);
    CHECK(c11.magnitude == QPolynomial({1, 1}));  // (q^2-1)/(q-1) = q+1
    auto c21 = whittaker_coefficient(Partition({2, 1}));
    CHECK(c21.sign == -1);
    CHECK(c21.magnitude == QPolynomial({1, 1, 1}));
}

TEST_CASE("whittaker magnitude times q-power equals sigma, n <= 12") {
    for (std::size_t n = 1; n <= 12; ++n)
        for (const auto& mu : partitions_of(n)) {
            std::size_t esum = 0;
            for (std::size_t j = 1; j < mu.length(); ++j)
                esum += mu.parts[j] * (mu.parts[j] - 1) / 2;
            CHECK(sigma_poly(mu) ==
                  whittaker_coefficient(mu).magnitude * QPolynomial::monomial(1, esum));
        }
}

TEST_CASE("orbit-stabilizer identity") {
    CHECK(orbit_stabilizer_identity_check(5, 0));
    CHECK(orbit_stabilizer_identity_check(4, 2));
    CHECK(orbit_stabilizer_identity_check(10, 3));
    for (std::size_t n = 0; n <= 10; ++n)
        for (std::size_t k = 0; k <= n; ++k)
            CHECK(orbit_stabilizer_identity_check(n, k));
}

TEST_CASE("exact division rejects non-divisors") {
    CHECK_THROWS_AS(divide_exact(QPolynomial({1, 1, 1}), QPolynomial({-1, 1})),
                    std::domain_error);
    CHECK(divide_exact(QPolynomial({-1, 0, 1}), QPolynomial({-1, 1})) == QPolynomial({1, 1}));
}

#ifndef QPROFILE_COUNTING_HPP
#define QPROFILE_COUNTING_HPP

#include <map>
#include <stdexcept>

#include "qprofile/partition.hpp"
#include "qprofile/qpolynomial.hpp"

namespace qprofile {

// Gaussian binomial [n k]_q via the q-Pascal recurrence
// [n k] = [n-1 k-1] + q^k [n-1 k]. Zero polynomial outside 0 <= k <= n.
inline QPolynomial q_binomial(std::size_t n, std::size_t k) {
    if (k > n) return {};
    static std::map<std::pair<std::size_t, std::size_t>, QPolynomial> cache;
    if (k == 0 || k == n) return QPolynomial::one();
    auto it = cache.find({n, k});
    if (it != cache.end()) return it->second;
    QPolynomial r = q_binomial(n - 1, k - 1) +
                    QPolynomial::monomial(1, k) * q_binomial(n - 1, k);
    cache.emplace(std::make_pair(n, k), r);
    return r;
}

// |GL_k(F_q)| = prod_{i=0}^{k-1} (q^k - q^i); empty product for k = 0.
inline QPolynomial gamma_q(std::size_t k) {
    QPolynomial r = QPolynomial::one();
    for (std::size_t i = 0; i < k; ++i)
        r = r * (QPolynomial::monomial(1, k) - QPolynomial::monomial(1, i));
    return r;
}

// The number of subspaces with a given profile under a simple operator:
//   sigma(mu) = (q^n - 1)/(q^{mu_1} - 1) * q^{sum_{j>=2} mu_j^2 - mu_j}
//               * prod_i [mu_i mu_{i+1}]_q.
// The quotient is assembled first and divided exactly; a nonzero remainder
// would be an internal arithmetic bug.
inline QPolynomial sigma_poly(const Partition& mu) {
    if (mu.empty()) throw std::invalid_argument("sigma_poly needs a nonempty partition");
    std::size_t n = mu.weight();
    std::size_t esum = 0;
    for (std::size_t j = 1; j < mu.length(); ++j)
        esum += mu.parts[j] * mu.parts[j] - mu.parts[j];
    QPolynomial num = q_pow_minus_one(n) * QPolynomial::monomial(1, esum);
    for (std::size_t i = 0; i < mu.length(); ++i)
        num = num * q_binomial(mu.parts[i], mu.part(i + 1));
    return divide_exact(num, q_pow_minus_one(mu.parts[0]));
}

inline bool is_prime_power(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        return n == 1;
    }
    return true;  // n itself prime
}

inline BigInt sigma_value(const Partition& mu, std::uint64_t q) {
    if (!is_prime_power(q))
        throw std::invalid_argument("q must be a prime power for subspace counts");
    return sigma_poly(mu).eval(q);
}

// Number of simple maps on a fixed k-dimensional proper subspace of F_q^n
// with defect dimensions mu (a partition of n with mu_1 = n - k):
//   q^{sum_{j>=2} mu_j^2} * gamma_q(k) * prod_i [mu_i mu_{i+1}]_q.
inline QPolynomial simple_maps_with_defect_poly(const Partition& mu, std::size_t n) {
    if (mu.empty() || mu.weight() != n)
        throw std::invalid_argument("mu must be a nonempty partition of n");
    std::size_t k = n - mu.parts[0];  // mu_1 = n - k, so k < n automatically
    std::size_t esum = 0;
    for (std::size_t j = 1; j < mu.length(); ++j) esum += mu.parts[j] * mu.parts[j];
    QPolynomial r = QPolynomial::monomial(1, esum) * gamma_q(k);
    for (std::size_t i = 0; i < mu.length(); ++i)
        r = r * q_binomial(mu.parts[i], mu.part(i + 1));
    return r;
}

inline BigInt simple_maps_with_defect_count(const Partition& mu, std::size_t n,
                                            std::uint64_t q) {
    return simple_maps_with_defect_poly(mu, n).eval(q);
}

// Extensions of a simple map on a k-dimensional subspace to a simple map on a
// containing (k+1)-dimensional subspace: q^n - q^{k+1}, for 0 <= k < n-1.
inline BigInt simple_extension_count(std::size_t n, std::size_t k, std::uint64_t q) {
    if (k + 1 >= n) throw std::invalid_argument("need k < n - 1");
    BigInt bq = q;
    return boost::multiprecision::pow(bq, static_cast<unsigned>(n)) -
           boost::multiprecision::pow(bq, static_cast<unsigned>(k + 1));
}

// Extensions of a simple map on a k-dimensional subspace to an operator on
// F_q^n with a designated irreducible characteristic polynomial:
// prod_{j=k+1}^{n-1} (q^n - q^j); the empty product is 1.
inline BigInt charpoly_extension_count(std::size_t n, std::size_t k, std::uint64_t q) {
    if (k > n) throw std::invalid_argument("need k <= n");
    BigInt bq = q, r = 1;
    BigInt qn = boost::multiprecision::pow(bq, static_cast<unsigned>(n));
    for (std::size_t j = k + 1; j < n; ++j)
        r *= qn - boost::multiprecision::pow(bq, static_cast<unsigned>(j));
    return r;
}

// Number of m-dimensional alpha-splitting subspaces of F_{q^{md}}:
// (q^{md} - 1)/(q^m - 1) * q^{m(m-1)(d-1)}.
inline BigInt splitting_count(std::size_t m, std::size_t d, std::uint64_t q) {
    if (m < 1 || d < 1) throw std::invalid_argument("need m, d >= 1");
    QPolynomial p = divide_exact(q_pow_minus_one(m * d), q_pow_minus_one(m)) *
                    QPolynomial::monomial(1, m * (m - 1) * (d - 1));
    return p.eval(q);
}

// Coefficient of W_mu(x;q) in the q-Whittaker expansion of the power sum p_n:
// sign (-1)^{n - mu_1}, magnitude
//   (q^n - 1)/(q^{mu_1} - 1) * q^{sum_{j>=2} C(mu_j, 2)} * prod_i [mu_i mu_{i+1}]_q.
inline SignedQPolynomial whittaker_coefficient(const Partition& mu) {
    if (mu.empty() || mu.weight() < 1)
        throw std::invalid_argument("whittaker_coefficient needs a partition of n >= 1");
    std::size_t n = mu.weight();
    std::size_t esum = 0;
    for (std::size_t j = 1; j < mu.length(); ++j)
        esum += mu.parts[j] * (mu.parts[j] - 1) / 2;
    QPolynomial num = q_pow_minus_one(n) * QPolynomial::monomial(1, esum);
    for (std::size_t i = 0; i < mu.length(); ++i)
        num = num * q_binomial(mu.parts[i], mu.part(i + 1));
    SignedQPolynomial r;
    r.sign = (n - mu.parts[0]) % 2 == 0 ? 1 : -1;
    r.magnitude = divide_exact(num, q_pow_minus_one(mu.parts[0]));
    return r;
}

// gamma_q(n) = gamma_q(k) gamma_q(n-k) q^{k(n-k)} [n k]_q, as polynomials.
inline bool orbit_stabilizer_identity_check(std::size_t n, std::size_t k) {
    if (k > n) throw std::invalid_argument("need 0 <= k <= n");
    QPolynomial rhs = gamma_q(k) * gamma_q(n - k) *
                      QPolynomial::monomial(1, k * (n - k)) * q_binomial(n, k);
    return gamma_q(n) == rhs;
}

}  // namespace qprofile

#endif

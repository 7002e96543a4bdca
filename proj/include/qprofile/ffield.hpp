#ifndef QPROFILE_FFIELD_HPP
#define QPROFILE_FFIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qprofile {

// Element of F_q, stored as the integer code sum c_i p^i of its
// coefficient vector with respect to the power basis of the modulus.
using fq_t = std::uint32_t;

namespace detail {

// Polynomials over F_p as plain coefficient vectors (constant term first),
// used only while constructing a field context.
inline void modp_trim(std::vector<std::uint32_t>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::vector<std::uint32_t> modp_mul(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b,
                                           std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = static_cast<std::uint32_t>(
                (c[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    modp_trim(c);
    return c;
}

inline std::vector<std::uint32_t> modp_rem(std::vector<std::uint32_t> a,
                                           const std::vector<std::uint32_t>& f,
                                           std::uint32_t p) {
    // f must be monic
    while (a.size() >= f.size() && !a.empty()) {
        std::uint32_t lead = a.back();
        std::size_t shift = a.size() - f.size();
        for (std::size_t i = 0; i < f.size(); ++i) {
            std::uint64_t t = static_cast<std::uint64_t>(lead) * f[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - t) % p);
        }
        modp_trim(a);
    }
    return a;
}

inline std::vector<std::uint32_t> modp_gcd(std::vector<std::uint32_t> a,
                                           std::vector<std::uint32_t> b,
                                           std::uint32_t p) {
    while (!b.empty()) {
        // make b monic so modp_rem applies
        std::uint32_t lb = b.back(), li = 1;
        // inverse of lb mod p by Fermat
        {
            std::uint64_t base = lb, acc = 1;
            for (std::uint32_t k = p - 2; k; k >>= 1) {
                if (k & 1) acc = acc * base % p;
                base = base * base % p;
            }
            li = static_cast<std::uint32_t>(acc);
        }
        for (auto& c : b) c = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * li % p);
        auto r = modp_rem(std::move(a), b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline std::vector<std::uint32_t> modp_powmod_x(std::uint64_t exp_base,
                                                std::uint32_t exp_pow,
                                                const std::vector<std::uint32_t>& f,
                                                std::uint32_t p) {
    // x^(exp_base^exp_pow) mod f
    std::vector<std::uint32_t> r = {0, 1};
    r = modp_rem(std::move(r), f, p);
    for (std::uint32_t i = 0; i < exp_pow; ++i) {
        std::vector<std::uint32_t> acc = {1}, sq = r;
        std::uint64_t k = exp_base;
        while (k) {
            if (k & 1) acc = modp_rem(modp_mul(acc, sq, p), f, p);
            k >>= 1;
            if (k) sq = modp_rem(modp_mul(sq, sq, p), f, p);
        }
        r = std::move(acc);
    }
    return r;
}

// Rabin irreducibility test over F_p for a monic polynomial.
inline bool modp_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p) {
    std::size_t n = f.size() - 1;
    if (n == 0) return false;
    if (n == 1) return true;
    // x^(p^n) == x mod f
    auto xpn = modp_powmod_x(p, static_cast<std::uint32_t>(n), f, p);
    std::vector<std::uint32_t> x = modp_rem({0, 1}, f, p);
    if (xpn != x) return false;
    // for each prime divisor d of n: gcd(x^(p^(n/d)) - x, f) == 1
    std::size_t m = n;
    for (std::size_t d = 2; d * d <= m; ++d) {
        if (m % d) continue;
        while (m % d == 0) m /= d;
        auto g = modp_powmod_x(p, static_cast<std::uint32_t>(n / d), f, p);
        // g - x
        if (g.size() < 2) g.resize(2, 0);
        g[1] = (g[1] + p - 1) % p;
        modp_trim(g);
        auto gc = modp_gcd(f, g, p);
        if (gc.size() != 1) return false;
    }
    if (m > 1) {
        auto g = modp_powmod_x(p, static_cast<std::uint32_t>(n / m), f, p);
        if (g.size() < 2) g.resize(2, 0);
        g[1] = (g[1] + p - 1) % p;
        modp_trim(g);
        auto gc = modp_gcd(f, g, p);
        if (gc.size() != 1) return false;
    }
    return true;
}

inline bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace detail

// A finite field F_q with q = p^e, fixed by the monic irreducible modulus of
// degree e over F_p with the smallest coefficient encoding. Immutable after
// construction; all element operations are pure.
class FieldCtx {
public:
    std::uint32_t p = 0;
    std::uint32_t e = 0;
    std::uint32_t q = 0;
    // coefficients of the modulus, constant term first, length e+1, monic
    std::vector<std::uint32_t> modulus;

    static constexpr std::uint32_t kMaxQ = 1u << 16;

    FieldCtx(std::uint32_t p_, std::uint32_t e_) : p(p_), e(e_) {
        if (!detail::is_prime_u32(p)) throw std::invalid_argument("p is not prime: " + std::to_string(p));
        if (e < 1) throw std::invalid_argument("extension degree must be >= 1");
        std::uint64_t qq = 1;
        for (std::uint32_t i = 0; i < e; ++i) {
            qq *= p;
            if (qq > kMaxQ) throw std::invalid_argument("q exceeds enumeration cap 2^16");
        }
        q = static_cast<std::uint32_t>(qq);
        modulus = find_modulus();
        build_tables();
    }

    fq_t add(fq_t a, fq_t b) const {
        if (p == 2) return a ^ b;
        if (e == 1) return (a + b) % p;
        fq_t r = 0, mul = 1;
        for (std::uint32_t i = 0; i < e; ++i) {
            r += ((a % p + b % p) % p) * mul;
            a /= p; b /= p; mul *= p;
        }
        return r;
    }

    fq_t neg(fq_t a) const {
        if (p == 2) return a;
        if (e == 1) return a == 0 ? 0 : p - a;
        fq_t r = 0, mul = 1;
        for (std::uint32_t i = 0; i < e; ++i) {
            fq_t d = a % p;
            r += (d == 0 ? 0 : p - d) * mul;
            a /= p; mul *= p;
        }
        return r;
    }

    fq_t sub(fq_t a, fq_t b) const { return add(a, neg(b)); }

    fq_t mul(fq_t a, fq_t b) const {
        if (a == 0 || b == 0) return 0;
        return exp_tab_[log_tab_[a] + log_tab_[b]];
    }

    fq_t inv(fq_t a) const {
        if (a == 0) throw std::domain_error("division by zero in F_q");
        return exp_tab_[(q - 1) - log_tab_[a]];
    }

    fq_t div(fq_t a, fq_t b) const { return mul(a, inv(b)); }

    fq_t pow(fq_t a, std::uint64_t k) const {
        if (a == 0) return k == 0 ? 1 : 0;
        std::uint64_t l = static_cast<std::uint64_t>(log_tab_[a]) * (k % (q - 1)) % (q - 1);
        return exp_tab_[l];
    }

    bool operator==(const FieldCtx& o) const { return p == o.p && e == o.e; }

private:
    // exp_tab_ has length 2(q-1)+1 so that mul can skip the modular reduction
    std::vector<fq_t> exp_tab_;
    std::vector<std::uint32_t> log_tab_;

    std::vector<std::uint32_t> find_modulus() const {
        if (e == 1) return {0, 1};  // x
        std::vector<std::uint32_t> f(e + 1, 0);
        f[e] = 1;
        for (std::uint32_t code = 0; code < q; ++code) {
            std::uint32_t c = code;
            for (std::uint32_t i = 0; i < e; ++i) { f[i] = c % p; c /= p; }
            if (detail::modp_irreducible(f, p)) return f;
        }
        throw std::logic_error("no irreducible modulus found");  // unreachable
    }

    // product in F_q by direct polynomial reduction; used only to seed tables
    fq_t raw_mul(fq_t a, fq_t b) const {
        std::vector<std::uint32_t> pa(e, 0), pb(e, 0);
        for (std::uint32_t i = 0; i < e; ++i) { pa[i] = a % p; a /= p; }
        for (std::uint32_t i = 0; i < e; ++i) { pb[i] = b % p; b /= p; }
        auto prod = detail::modp_mul(pa, pb, p);
        prod = detail::modp_rem(std::move(prod), modulus, p);
        fq_t r = 0, mul = 1;
        for (std::size_t i = 0; i < prod.size(); ++i) { r += prod[i] * mul; mul *= p; }
        return r;
    }

    void build_tables() {
        log_tab_.assign(q, 0);
        exp_tab_.assign(2 * (q - 1) + 1, 1);
        if (q == 2) { log_tab_[1] = 0; exp_tab_[0] = exp_tab_[1] = exp_tab_[2] = 1; return; }
        for (fq_t g = 2; g < q; ++g) {
            fq_t x = 1;
            std::uint32_t ord = 0;
            do { x = raw_mul(x, g); ++ord; } while (x != 1);
            if (ord != q - 1) continue;
            x = 1;
            for (std::uint32_t i = 0; i < q - 1; ++i) {
                exp_tab_[i] = x;
                log_tab_[x] = i;
                x = raw_mul(x, g);
            }
            for (std::uint32_t i = q - 1; i <= 2 * (q - 1); ++i)
                exp_tab_[i] = exp_tab_[i - (q - 1)];
            return;
        }
        throw std::logic_error("no generator found");  // unreachable
    }
};

inline FieldCtx make_field(std::uint32_t p, std::uint32_t e) { return FieldCtx(p, e); }

// Parse a field size: either a prime power N or the explicit form "P^E".
inline FieldCtx make_field_from_q(std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("q must be at least 2");
    for (std::uint32_t p = 2; static_cast<std::uint64_t>(p) * p <= n; ++p) {
        if (n % p == 0) {
            std::uint64_t m = n;
            std::uint32_t e = 0;
            while (m % p == 0) { m /= p; ++e; }
            if (m != 1) throw std::invalid_argument(std::to_string(n) + " is not a prime power");
            return FieldCtx(p, e);
        }
    }
    return FieldCtx(static_cast<std::uint32_t>(n), 1);  // n itself prime
}

}  // namespace qprofile

#endif

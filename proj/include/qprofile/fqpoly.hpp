#ifndef QPROFILE_FQPOLY_HPP
#define QPROFILE_FQPOLY_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qprofile/ffield.hpp"
#include "qprofile/fqlinalg.hpp"
#include "qprofile/partial_map.hpp"

namespace qprofile {

// Univariate polynomial over F_q, coefficients constant term first, no
// trailing zeros. The zero polynomial has an empty coefficient list.
struct PolyFq {
    const FieldCtx* ctx = nullptr;
    std::vector<fq_t> coeffs;

    PolyFq() = default;
    explicit PolyFq(const FieldCtx& c) : ctx(&c) {}
    PolyFq(const FieldCtx& c, std::vector<fq_t> cs) : ctx(&c), coeffs(std::move(cs)) {
        trim();
    }

    void trim() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }

    bool is_zero() const { return coeffs.empty(); }
    // degree of the zero polynomial is -1 by convention
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_one() const { return coeffs.size() == 1 && coeffs[0] == 1; }
    bool is_monic() const { return !coeffs.empty() && coeffs.back() == 1; }
    fq_t lead() const { return coeffs.back(); }

    bool operator==(const PolyFq& o) const { return coeffs == o.coeffs; }
};

inline PolyFq poly_zero(const FieldCtx& c) { return PolyFq(c); }
inline PolyFq poly_one(const FieldCtx& c) { return PolyFq(c, {1}); }
inline PolyFq poly_x(const FieldCtx& c) { return PolyFq(c, {0, 1}); }
inline PolyFq poly_const(const FieldCtx& c, fq_t a) { return PolyFq(c, {a}); }

inline PolyFq poly_add(const PolyFq& a, const PolyFq& b) {
    const FieldCtx& F = *a.ctx;
    std::vector<fq_t> c(std::max(a.coeffs.size(), b.coeffs.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        fq_t x = i < a.coeffs.size() ? a.coeffs[i] : 0;
        fq_t y = i < b.coeffs.size() ? b.coeffs[i] : 0;
        c[i] = F.add(x, y);
    }
    return PolyFq(F, std::move(c));
}

inline PolyFq poly_neg(const PolyFq& a) {
    const FieldCtx& F = *a.ctx;
    std::vector<fq_t> c = a.coeffs;
    for (auto& x : c) x = F.neg(x);
    return PolyFq(F, std::move(c));
}

inline PolyFq poly_sub(const PolyFq& a, const PolyFq& b) { return poly_add(a, poly_neg(b)); }

inline PolyFq poly_mul(const PolyFq& a, const PolyFq& b) {
    const FieldCtx& F = *a.ctx;
    if (a.is_zero() || b.is_zero()) return PolyFq(F);
    std::vector<fq_t> c(a.coeffs.size() + b.coeffs.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            c[i + j] = F.add(c[i + j], F.mul(a.coeffs[i], b.coeffs[j]));
    return PolyFq(F, std::move(c));
}

inline PolyFq poly_scale(const PolyFq& a, fq_t s) {
    const FieldCtx& F = *a.ctx;
    std::vector<fq_t> c = a.coeffs;
    for (auto& x : c) x = F.mul(x, s);
    return PolyFq(F, std::move(c));
}

// quotient and remainder; b must be nonzero
inline std::pair<PolyFq, PolyFq> poly_divmod(const PolyFq& a, const PolyFq& b) {
    const FieldCtx& F = *a.ctx;
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {PolyFq(F), a};
    std::vector<fq_t> rem = a.coeffs;
    std::vector<fq_t> quo(a.coeffs.size() - b.coeffs.size() + 1, 0);
    fq_t linv = F.inv(b.lead());
    for (std::size_t i = rem.size(); i-- >= b.coeffs.size();) {
        if (rem[i] == 0) {
            if (i + 1 == b.coeffs.size()) break;
            continue;
        }
        fq_t f = F.mul(rem[i], linv);
        std::size_t shift = i + 1 - b.coeffs.size();
        quo[shift] = f;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            rem[shift + j] = F.sub(rem[shift + j], F.mul(f, b.coeffs[j]));
        if (i + 1 == b.coeffs.size()) break;
    }
    return {PolyFq(F, std::move(quo)), PolyFq(F, std::move(rem))};
}

inline PolyFq poly_mod(const PolyFq& a, const PolyFq& b) { return poly_divmod(a, b).second; }

inline PolyFq poly_monic(const PolyFq& a) {
    if (a.is_zero()) return a;
    return poly_scale(a, a.ctx->inv(a.lead()));
}

inline PolyFq poly_gcd(PolyFq a, PolyFq b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
    while (!b.is_zero()) {
        PolyFq r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(a);
}

inline PolyFq poly_powmod(const PolyFq& base, std::uint64_t k, const PolyFq& mod) {
    const FieldCtx& F = *base.ctx;
    PolyFq acc = poly_one(F), sq = poly_mod(base, mod);
    while (k) {
        if (k & 1) acc = poly_mod(poly_mul(acc, sq), mod);
        k >>= 1;
        if (k) sq = poly_mod(poly_mul(sq, sq), mod);
    }
    return acc;
}

// Rabin criterion: f of degree n is irreducible over F_q iff x^(q^n) = x
// (mod f) and gcd(x^(q^(n/d)) - x, f) = 1 for every prime d | n.
inline bool is_irreducible(const PolyFq& f) {
    if (f.degree() < 1) throw std::invalid_argument("irreducibility needs degree >= 1");
    const FieldCtx& F = *f.ctx;
    std::size_t n = static_cast<std::size_t>(f.degree());
    if (n == 1) return true;
    auto frob_power = [&](std::size_t k) {
        // x^(q^k) mod f by k-fold q-th powering
        PolyFq r = poly_mod(poly_x(F), f);
        for (std::size_t i = 0; i < k; ++i) r = poly_powmod(r, F.q, f);
        return r;
    };
    PolyFq x = poly_mod(poly_x(F), f);
    if (!(frob_power(n) == x)) return false;
    std::size_t m = n;
    std::vector<std::size_t> prime_divs;
    for (std::size_t d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            prime_divs.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) prime_divs.push_back(m);
    for (std::size_t d : prime_divs) {
        PolyFq g = poly_sub(frob_power(n / d), x);
        if (g.is_zero()) return false;
        if (!poly_gcd(f, g).is_one()) return false;
    }
    return true;
}

// The monic irreducible of degree n over F_q with the smallest coefficient
// tuple (c_0, ..., c_{n-1}) read as a base-q integer.
inline PolyFq smallest_irreducible(const FieldCtx& F, std::size_t n) {
    if (n < 1) throw std::invalid_argument("degree must be >= 1");
    std::vector<fq_t> c(n + 1, 0);
    c[n] = 1;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= F.q;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t t = code;
        for (std::size_t i = 0; i < n; ++i) { c[i] = static_cast<fq_t>(t % F.q); t /= F.q; }
        PolyFq f(F, c);
        if (is_irreducible(f)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

// Companion matrix with subdiagonal ones and the negated coefficients of f in
// the last column: e_1 -> e_2 -> ... -> e_n -> -(c_0 e_1 + ... + c_{n-1} e_n).
inline MatrixFq companion_matrix(const PolyFq& f) {
    if (!f.is_monic()) throw std::invalid_argument("companion matrix needs a monic polynomial");
    const FieldCtx& F = *f.ctx;
    std::size_t n = static_cast<std::size_t>(f.degree());
    MatrixFq m(F, n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) m.at(i + 1, i) = 1;
    for (std::size_t i = 0; i < n; ++i) m.at(i, n - 1) = F.neg(f.coeffs[i]);
    return m;
}

// Matrix with polynomial entries, all sharing one field context.
struct PolyMatrix {
    const FieldCtx* ctx = nullptr;
    std::size_t nrows = 0, ncols = 0;
    std::vector<PolyFq> entries;

    PolyMatrix() = default;
    PolyMatrix(const FieldCtx& c, std::size_t r, std::size_t cl)
        : ctx(&c), nrows(r), ncols(cl), entries(r * cl, PolyFq(c)) {}

    PolyFq& at(std::size_t i, std::size_t j) { return entries[i * ncols + j]; }
    const PolyFq& at(std::size_t i, std::size_t j) const { return entries[i * ncols + j]; }
};

// The n x k pencil of a partial map: column j is x * b_j - T(b_j), where b_j
// runs over the canonical RREF basis of the domain.
inline PolyMatrix pencil_of(const PartialMap& pm) {
    const FieldCtx& F = *pm.ctx;
    std::size_t n = pm.ambient, k = pm.domain.dim();
    PolyMatrix m(F, n, k);
    for (std::size_t j = 0; j < k; ++j) {
        VecFq b = pm.domain.basis.row(j);
        const VecFq& y = pm.images[j];
        for (std::size_t i = 0; i < n; ++i)
            m.at(i, j) = PolyFq(F, {F.neg(y[i]), b[i]});
    }
    return m;
}

// Smith normal form over F_q[x] by elementary operations. Pivot: nonzero
// entry of minimal degree, ties broken by smallest (row, column). Returns the
// diagonal entries, made monic, in divisibility order.
inline std::vector<PolyFq> smith_diagonal(PolyMatrix m) {
    const FieldCtx& F = *m.ctx;
    std::size_t rmax = std::min(m.nrows, m.ncols);
    std::vector<PolyFq> diag;
    for (std::size_t t = 0; t < rmax; ++t) {
        // locate pivot
        bool found = false;
        std::size_t pi = t, pj = t;
        int best = -1;
        for (std::size_t i = t; i < m.nrows; ++i)
            for (std::size_t j = t; j < m.ncols; ++j) {
                const PolyFq& e = m.at(i, j);
                if (e.is_zero()) continue;
                if (!found || e.degree() < best) {
                    found = true;
                    best = e.degree();
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;
        for (std::size_t j = 0; j < m.ncols; ++j) std::swap(m.at(t, j), m.at(pi, j));
        for (std::size_t i = 0; i < m.nrows; ++i) std::swap(m.at(i, t), m.at(i, pj));
        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < m.nrows; ++i) {
                if (m.at(i, t).is_zero()) continue;
                auto [q, r] = poly_divmod(m.at(i, t), m.at(t, t));
                for (std::size_t j = t; j < m.ncols; ++j)
                    m.at(i, j) = poly_sub(m.at(i, j), poly_mul(q, m.at(t, j)));
                if (!m.at(i, t).is_zero()) {
                    // remainder has smaller degree; promote it to pivot
                    for (std::size_t j = 0; j < m.ncols; ++j) std::swap(m.at(t, j), m.at(i, j));
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < m.ncols; ++j) {
                if (m.at(t, j).is_zero()) continue;
                auto [q, r] = poly_divmod(m.at(t, j), m.at(t, t));
                for (std::size_t i = t; i < m.nrows; ++i)
                    m.at(i, j) = poly_sub(m.at(i, j), poly_mul(q, m.at(i, t)));
                if (!m.at(t, j).is_zero()) {
                    for (std::size_t i = 0; i < m.nrows; ++i) std::swap(m.at(i, t), m.at(i, j));
                    clean = false;
                }
            }
            if (!clean) continue;
            // enforce divisibility of every remaining entry by the pivot
            bool divisible = true;
            for (std::size_t i = t + 1; i < m.nrows && divisible; ++i)
                for (std::size_t j = t + 1; j < m.ncols && divisible; ++j) {
                    if (m.at(i, j).is_zero()) continue;
                    if (!poly_mod(m.at(i, j), m.at(t, t)).is_zero()) {
                        for (std::size_t c = 0; c < m.ncols; ++c)
                            m.at(t, c) = poly_add(m.at(t, c), m.at(i, c));
                        divisible = false;
                    }
                }
            if (divisible) break;
        }
        diag.push_back(poly_monic(m.at(t, t)));
    }
    return diag;
}

// The k invariant factors f_1 | f_2 | ... | f_k of a partial map, the monic
// diagonal of the Smith normal form of its pencil. The pencil has full column
// rank, so exactly k factors come out.
inline std::vector<PolyFq> invariant_factors(const PartialMap& pm) {
    auto diag = smith_diagonal(pencil_of(pm));
    if (diag.size() != pm.domain.dim())
        throw std::logic_error("pencil lost column rank in Smith reduction");
    return diag;
}

// Characteristic polynomial det(xI - T), as the product of the invariant
// factors of the full pencil. Always monic of degree n.
inline PolyFq char_poly(const MatrixFq& t) {
    if (t.nrows != t.ncols) throw std::invalid_argument("characteristic polynomial needs a square matrix");
    const FieldCtx& F = *t.ctx;
    std::size_t n = t.nrows;
    PolyMatrix m(F, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j)
                m.at(i, j) = PolyFq(F, {F.neg(t.at(i, j)), 1});
            else if (t.at(i, j) != 0)
                m.at(i, j) = poly_const(F, F.neg(t.at(i, j)));
        }
    auto diag = smith_diagonal(std::move(m));
    PolyFq f = poly_one(F);
    for (const auto& d : diag) f = poly_mul(f, d);
    return f;
}

}  // namespace qprofile

#endif

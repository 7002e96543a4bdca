#ifndef QPROFILE_ORACLE_HPP
#define QPROFILE_ORACLE_HPP

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "qprofile/counting.hpp"
#include "qprofile/ffield.hpp"
#include "qprofile/fqlinalg.hpp"
#include "qprofile/fqpoly.hpp"
#include "qprofile/profiles.hpp"

namespace qprofile {

constexpr std::uint64_t kDefaultBudget = 10'000'000;

inline void check_budget(const BigInt& work, std::uint64_t budget, const std::string& what) {
    if (work > budget)
        throw std::runtime_error("enumeration budget exceeded for " + what +
                                 ": estimated " + work.str() + " > " +
                                 std::to_string(budget));
}

// Every k-dimensional subspace of F_q^n exactly once: pivot-column sets in
// lexicographic order, then free entries lexicographically by code (the last
// free position varies fastest). The oracle stays a dumb enumerator on
// purpose.
template <class Fn>
inline void for_each_subspace(const FieldCtx& F, std::size_t n, std::size_t k, Fn&& fn,
                              std::uint64_t budget = kDefaultBudget) {
    if (k > n) throw std::invalid_argument("need 0 <= k <= n");
    check_budget(q_binomial(n, k).eval(F.q), budget, "subspace enumeration");
    if (k == 0) {
        fn(zero_subspace(F, n));
        return;
    }
    std::vector<std::size_t> pivots(k);
    for (std::size_t i = 0; i < k; ++i) pivots[i] = i;
    for (;;) {
        // free positions for this pivot pattern, row-major
        std::vector<bool> is_pivot(n, false);
        for (std::size_t c : pivots) is_pivot[c] = true;
        std::vector<std::pair<std::size_t, std::size_t>> free_pos;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = pivots[i] + 1; j < n; ++j)
                if (!is_pivot[j]) free_pos.emplace_back(i, j);
        std::vector<fq_t> vals(free_pos.size(), 0);
        for (;;) {
            Subspace s;
            s.ctx = &F;
            s.ambient = n;
            s.basis = MatrixFq(F, k, n);
            for (std::size_t i = 0; i < k; ++i) s.basis.at(i, pivots[i]) = 1;
            for (std::size_t t = 0; t < free_pos.size(); ++t)
                s.basis.at(free_pos[t].first, free_pos[t].second) = vals[t];
            fn(s);
            std::size_t pos = vals.size();
            bool done = true;
            while (pos > 0) {
                --pos;
                if (++vals[pos] < F.q) { done = false; break; }
                vals[pos] = 0;
            }
            if (done) break;
        }
        // next pivot combination, lexicographic
        std::size_t i = k;
        bool more = false;
        while (i > 0) {
            --i;
            if (pivots[i] + (k - i) < n) {
                ++pivots[i];
                for (std::size_t j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
                more = true;
                break;
            }
        }
        if (!more) break;
    }
}

inline std::vector<Subspace> enumerate_subspaces(const FieldCtx& F, std::size_t n,
                                                 std::size_t k,
                                                 std::uint64_t budget = kDefaultBudget) {
    std::vector<Subspace> out;
    for_each_subspace(F, n, k, [&](const Subspace& s) { out.push_back(s); }, budget);
    return out;
}

// Histogram of T-profiles over all subspaces (or all of one dimension). The
// zero subspace contributes the empty partition. Works for arbitrary T.
struct ProfileHistogram {
    std::map<Partition, BigInt> counts;
    std::size_t n = 0;
    std::uint64_t q = 0;
    std::optional<std::size_t> dim_filter;

    BigInt total() const {
        BigInt t = 0;
        for (const auto& [mu, c] : counts) t += c;
        return t;
    }
};

inline ProfileHistogram profile_histogram(const MatrixFq& t,
                                          std::optional<std::size_t> dim_filter = {},
                                          std::uint64_t budget = kDefaultBudget) {
    if (t.nrows != t.ncols) throw std::invalid_argument("operator must be square");
    const FieldCtx& F = *t.ctx;
    std::size_t n = t.nrows;
    ProfileHistogram h;
    h.n = n;
    h.q = F.q;
    h.dim_filter = dim_filter;
    std::size_t klo = dim_filter ? *dim_filter : 0;
    std::size_t khi = dim_filter ? *dim_filter : n;
    for (std::size_t k = klo; k <= khi; ++k)
        for_each_subspace(F, n, k, [&](const Subspace& w) { h.counts[profile(t, w)] += 1; },
                          budget);
    return h;
}

struct VerificationRow {
    Partition mu;
    BigInt enumerated;
    BigInt formula;
    bool match = false;
};

struct VerificationReport {
    std::string description;
    std::vector<VerificationRow> rows;
    bool pass = false;
    double seconds = 0.0;
    std::uint64_t seed = 0;
};

// Compares the brute-force profile histogram of a simple operator against
// sigma_value for every partition of n. The zero subspace must be the unique
// subspace outside the partition rows.
inline VerificationReport verify_sigma(const FieldCtx& F, std::size_t n,
                                       std::optional<PolyFq> f = {},
                                       std::uint64_t budget = kDefaultBudget) {
    auto t0 = std::chrono::steady_clock::now();
    PolyFq cp = f ? *f : smallest_irreducible(F, n);
    if (!is_irreducible(cp))
        throw std::invalid_argument("characteristic polynomial must be irreducible");
    if (cp.degree() != static_cast<int>(n))
        throw std::invalid_argument("polynomial degree must equal n");
    MatrixFq t = companion_matrix(cp);
    ProfileHistogram h = profile_histogram(t, {}, budget);

    VerificationReport rep;
    rep.description = "sigma(mu) vs enumeration, q=" + std::to_string(F.q) +
                      ", n=" + std::to_string(n);
    rep.pass = true;
    BigInt accounted = 0;
    for (const auto& mu : partitions_of(n)) {
        VerificationRow row;
        row.mu = mu;
        auto it = h.counts.find(mu);
        row.enumerated = it == h.counts.end() ? BigInt(0) : it->second;
        row.formula = sigma_value(mu, F.q);
        row.match = row.enumerated == row.formula;
        accounted += row.enumerated;
        rep.pass = rep.pass && row.match;
        rep.rows.push_back(std::move(row));
    }
    // only the zero subspace may fall outside the partition rows
    BigInt expected_total = 0;
    for (std::size_t k = 0; k <= n; ++k) expected_total += q_binomial(n, k).eval(F.q);
    auto zit = h.counts.find(Partition{});
    BigInt zero_count = zit == h.counts.end() ? BigInt(0) : zit->second;
    if (zero_count != 1 || accounted + zero_count != h.total() ||
        h.total() != expected_total)
        rep.pass = false;
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

// All maps W -> F_q^n by image-tuple code order; counts the simple ones with
// the given defect dimensions.
inline BigInt count_simple_maps_brute(const Subspace& w, const Partition& mu,
                                      std::uint64_t budget = kDefaultBudget) {
    const FieldCtx& F = *w.ctx;
    std::size_t n = w.ambient, k = w.dim();
    BigInt work = boost::multiprecision::pow(BigInt(F.q), static_cast<unsigned>(n * k));
    check_budget(work, budget, "map enumeration");
    PartialMap empty(zero_subspace(F, n), {});
    BigInt count = 0;
    for_each_extension(empty, w, [&](const PartialMap& pm) {
        if (is_simple_map(pm) && defect_dimensions(pm) == mu) count += 1;
    });
    return count;
}

// Extensions of a simple map by one dimension that stay simple.
inline BigInt count_simple_extensions_brute(const PartialMap& pm, const Subspace& w_prime,
                                            std::uint64_t budget = kDefaultBudget) {
    if (!is_simple_map(pm)) throw std::invalid_argument("base map must be simple");
    const FieldCtx& F = *pm.ctx;
    std::size_t added = w_prime.dim() - pm.domain.dim();
    BigInt work = boost::multiprecision::pow(BigInt(F.q),
                                             static_cast<unsigned>(pm.ambient * added));
    check_budget(work, budget, "extension enumeration");
    BigInt count = 0;
    for_each_extension(pm, w_prime, [&](const PartialMap& ext) {
        if (is_simple_map(ext)) count += 1;
    });
    return count;
}

// Full extensions of a simple map whose characteristic polynomial equals f.
inline BigInt count_charpoly_extensions_brute(const PartialMap& pm, const PolyFq& f,
                                              std::uint64_t budget = kDefaultBudget) {
    if (!is_simple_map(pm)) throw std::invalid_argument("base map must be simple");
    const FieldCtx& F = *pm.ctx;
    std::size_t added = pm.ambient - pm.domain.dim();
    BigInt work = boost::multiprecision::pow(BigInt(F.q),
                                             static_cast<unsigned>(pm.ambient * added));
    check_budget(work, budget, "extension enumeration");
    Subspace full = full_space(F, pm.ambient);
    BigInt count = 0;
    for_each_extension(pm, full, [&](const PartialMap& ext) {
        if (char_poly(ext.as_operator()) == f) count += 1;
    });
    return count;
}

// Number of m-dimensional W with F_q^{md} = W + TW + ... + T^{d-1}W of full
// dimension (which forces the sum to be direct), T the companion of f.
inline BigInt splitting_brute(const FieldCtx& F, std::size_t m, std::size_t d,
                              const PolyFq& f, std::uint64_t budget = kDefaultBudget) {
    if (!is_irreducible(f)) throw std::invalid_argument("f must be irreducible");
    std::size_t n = m * d;
    if (f.degree() != static_cast<int>(n))
        throw std::invalid_argument("f must have degree m*d");
    MatrixFq t = companion_matrix(f);
    BigInt count = 0;
    for_each_subspace(F, n, m, [&](const Subspace& w) {
        Subspace s = w;
        for (std::size_t i = 1; i < d; ++i) s = subspace_sum(s, image(t, s));
        if (s.dim() == n) count += 1;
    }, budget);
    return count;
}

inline MatrixFq random_matrix(const FieldCtx& F, std::size_t n, std::mt19937_64& rng) {
    MatrixFq m(F, n, n);
    for (auto& e : m.entries) e = static_cast<fq_t>(rng() % F.q);
    return m;
}

// profile(T, W) = defect_dimensions of the dual restriction, for `trials`
// seeded random operators (singular and non-simple included) and every
// subspace W.
inline VerificationReport verify_duality(const FieldCtx& F, std::size_t n,
                                         std::size_t trials, std::uint64_t seed = 1,
                                         std::uint64_t budget = kDefaultBudget) {
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.description = "profile/defect duality, q=" + std::to_string(F.q) +
                      ", n=" + std::to_string(n) + ", trials=" + std::to_string(trials);
    rep.seed = seed;
    rep.pass = true;
    std::mt19937_64 rng(seed);
    BigInt checked = 0, mismatches = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        MatrixFq op = random_matrix(F, n, rng);
        for (std::size_t k = 0; k <= n; ++k)
            for_each_subspace(F, n, k, [&](const Subspace& w) {
                checked += 1;
                if (!(profile(op, w) == defect_dimensions(dual_restriction(op, w))))
                    mismatches += 1;
            }, budget);
    }
    VerificationRow row;
    row.mu = Partition{};
    row.enumerated = mismatches;
    row.formula = 0;
    row.match = mismatches == 0;
    rep.rows.push_back(row);
    rep.pass = mismatches == 0;
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace qprofile

#endif

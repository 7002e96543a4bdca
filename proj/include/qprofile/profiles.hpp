#ifndef QPROFILE_PROFILES_HPP
#define QPROFILE_PROFILES_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qprofile/fqlinalg.hpp"
#include "qprofile/fqpoly.hpp"
#include "qprofile/partial_map.hpp"
#include "qprofile/partition.hpp"

namespace qprofile {

// T-profile of W: the partition of dimension increments of the chain
// W, W + TW, W + TW + T^2 W, ... The chain stabilizes, which justifies
// truncation. The zero subspace has the empty profile.
inline Partition profile(const MatrixFq& t, const Subspace& w) {
    if (t.nrows != t.ncols || t.nrows != w.ambient)
        throw std::invalid_argument("operator size must match ambient dimension");
    if (w.dim() == 0) return {};
    std::vector<std::size_t> parts;
    Subspace s = w;        // W + TW + ... + T^{j-1} W
    Subspace last = w;     // most recently added layer's source
    std::size_t prev = 0;
    for (;;) {
        std::size_t d = s.dim();
        if (d == prev) break;
        parts.push_back(d - prev);
        prev = d;
        s = subspace_sum(s, image(t, s));
    }
    return Partition(std::move(parts));
}

// Inverse image of U under a partial map: {w in domain : pm(w) in U}.
inline Subspace partial_preimage(const PartialMap& pm, const Subspace& u) {
    const FieldCtx& F = *pm.ctx;
    std::size_t n = pm.ambient, k = pm.domain.dim();
    Subspace ann = annihilator(u);
    if (ann.dim() == 0) return pm.domain;
    // condition on domain coordinates t: Ann(U) * (Images * t) = 0
    MatrixFq m(F, ann.dim(), k);
    for (std::size_t i = 0; i < ann.dim(); ++i)
        for (std::size_t j = 0; j < k; ++j) {
            fq_t s = 0;
            for (std::size_t l = 0; l < n; ++l)
                s = F.add(s, F.mul(ann.basis.at(i, l), pm.images[j][l]));
            m.at(i, j) = s;
        }
    Subspace tker = kernel(m);
    std::vector<VecFq> gens;
    for (std::size_t i = 0; i < tker.dim(); ++i) {
        VecFq w(n, 0);
        for (std::size_t j = 0; j < k; ++j) {
            fq_t c = tker.basis.at(i, j);
            if (c == 0) continue;
            for (std::size_t l = 0; l < n; ++l)
                w[l] = F.add(w[l], F.mul(c, pm.domain.basis.at(j, l)));
        }
        gens.push_back(std::move(w));
    }
    return span(F, n, gens);
}

struct DefectChain {
    std::vector<std::size_t> dims;  // d_0, d_1, ..., d_ell
    std::size_t ell = 0;
    Subspace w_ell;  // the maximal invariant subspace
};

// The chain W_0 = V, W_1 = W, W_{i+1} = W_i intersect T^{-1} W_i, computed
// until it stabilizes.
inline DefectChain defect_chain(const PartialMap& pm) {
    const FieldCtx& F = *pm.ctx;
    DefectChain dc;
    Subspace cur = full_space(F, pm.ambient);
    dc.dims.push_back(pm.ambient);
    Subspace next = pm.domain;
    while (!(next == cur)) {
        cur = next;
        dc.dims.push_back(cur.dim());
        next = subspace_intersect(cur, partial_preimage(pm, cur));
    }
    dc.ell = dc.dims.size() - 1;
    dc.w_ell = cur;
    return dc;
}

// Defect dimensions: the drops d_{i-1} - d_i along the chain; a partition of
// n - dim W_ell with first part n - dim W for proper domains.
inline Partition defect_dimensions(const PartialMap& pm) {
    DefectChain dc = defect_chain(pm);
    std::vector<std::size_t> parts;
    for (std::size_t i = 1; i < dc.dims.size(); ++i)
        parts.push_back(dc.dims[i - 1] - dc.dims[i]);
    return Partition(std::move(parts));
}

// A partial map is simple iff its maximal invariant subspace is trivial.
inline bool is_simple_map(const PartialMap& pm) {
    DefectChain dc = defect_chain(pm);
    return dc.w_ell.dim() == 0 || dc.w_ell.dim() == pm.ambient;
}

// An operator is simple iff its characteristic polynomial is irreducible.
inline bool is_simple_operator(const MatrixFq& t) {
    if (t.nrows != t.ncols) throw std::invalid_argument("operator must be square");
    if (t.nrows == 0) throw std::invalid_argument("operator must be nonempty");
    return is_irreducible(char_poly(t));
}

// The restriction of T^* to the annihilator of W, with functionals realized
// as coordinate vectors via the standard pairing.
inline PartialMap dual_restriction(const MatrixFq& t, const Subspace& w) {
    if (t.nrows != t.ncols || t.nrows != w.ambient)
        throw std::invalid_argument("operator size must match ambient dimension");
    Subspace dom = annihilator(w);
    MatrixFq tt = transpose(t);
    std::vector<VecFq> images;
    for (std::size_t i = 0; i < dom.dim(); ++i)
        images.push_back(tt.apply(dom.basis.row(i)));
    return PartialMap(std::move(dom), std::move(images));
}

// Deterministic complement: canonical basis rows of w_prime that are
// independent from the domain, in row order.
inline std::vector<VecFq> extension_directions(const PartialMap& pm, const Subspace& w_prime) {
    if (!w_prime.contains(pm.domain))
        throw std::invalid_argument("extension target must contain the domain");
    std::vector<VecFq> dirs;
    Subspace cur = pm.domain;
    for (std::size_t i = 0; i < w_prime.dim(); ++i) {
        VecFq v = w_prime.basis.row(i);
        if (cur.contains_vector(v)) continue;
        dirs.push_back(v);
        std::vector<VecFq> gens;
        for (std::size_t j = 0; j < cur.dim(); ++j) gens.push_back(cur.basis.row(j));
        gens.push_back(v);
        cur = span(*pm.ctx, pm.ambient, gens);
    }
    return dirs;
}

// Extension of pm to w_prime sending the i-th extension direction to
// extra_images[i].
inline PartialMap extend_map(const PartialMap& pm, const Subspace& w_prime,
                             const std::vector<VecFq>& extra_images) {
    std::vector<VecFq> dirs = extension_directions(pm, w_prime);
    if (dirs.size() != extra_images.size())
        throw std::invalid_argument("one extra image per added dimension required");
    std::vector<VecFq> gens = pm.basis_rows(), images = pm.images;
    gens.insert(gens.end(), dirs.begin(), dirs.end());
    images.insert(images.end(), extra_images.begin(), extra_images.end());
    return partial_map_from_action(*pm.ctx, pm.ambient, gens, images);
}

inline VecFq vector_from_code(const FieldCtx& F, std::size_t n, std::uint64_t code) {
    VecFq v(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        v[j] = static_cast<fq_t>(code % F.q);
        code /= F.q;
    }
    return v;
}

inline std::uint64_t vector_code(const FieldCtx& F, const VecFq& v) {
    std::uint64_t code = 0;
    for (std::size_t j = v.size(); j-- > 0;) code = code * F.q + v[j];
    return code;
}

// All q^{n * (dim W' - dim W)} extensions of pm to w_prime, each exactly
// once, ordered lexicographically by the codes of the extra image tuple (the
// last added direction varies fastest).
template <class Fn>
inline void for_each_extension(const PartialMap& pm, const Subspace& w_prime, Fn&& fn) {
    const FieldCtx& F = *pm.ctx;
    std::size_t n = pm.ambient;
    std::vector<VecFq> dirs = extension_directions(pm, w_prime);
    std::size_t m = dirs.size();
    std::uint64_t per = 1;
    for (std::size_t i = 0; i < n; ++i) per *= F.q;
    std::vector<std::uint64_t> codes(m, 0);
    for (;;) {
        std::vector<VecFq> extra;
        for (std::size_t i = 0; i < m; ++i) extra.push_back(vector_from_code(F, n, codes[i]));
        fn(extend_map(pm, w_prime, extra));
        std::size_t pos = m;
        while (pos > 0) {
            --pos;
            if (++codes[pos] < per) break;
            codes[pos] = 0;
            if (pos == 0) return;
        }
        if (m == 0) return;
    }
}

}  // namespace qprofile

#endif

#ifndef QPROFILE_FQLINALG_HPP
#define QPROFILE_FQLINALG_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "qprofile/ffield.hpp"

namespace qprofile {

using VecFq = std::vector<fq_t>;

// Dense row-major matrix over F_q. The context must outlive the matrix.
struct MatrixFq {
    const FieldCtx* ctx = nullptr;
    std::size_t nrows = 0, ncols = 0;
    std::vector<fq_t> entries;

    MatrixFq() = default;
    MatrixFq(const FieldCtx& c, std::size_t r, std::size_t cl)
        : ctx(&c), nrows(r), ncols(cl), entries(r * cl, 0) {}

    fq_t& at(std::size_t i, std::size_t j) { return entries[i * ncols + j]; }
    fq_t at(std::size_t i, std::size_t j) const { return entries[i * ncols + j]; }

    static MatrixFq identity(const FieldCtx& c, std::size_t n) {
        MatrixFq m(c, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static MatrixFq from_rows(const FieldCtx& c, const std::vector<VecFq>& rows,
                              std::size_t ncols) {
        MatrixFq m(c, rows.size(), ncols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != ncols) throw std::invalid_argument("row length mismatch");
            for (std::size_t j = 0; j < ncols; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    VecFq row(std::size_t i) const {
        return VecFq(entries.begin() + i * ncols, entries.begin() + (i + 1) * ncols);
    }

    // matrix * column vector
    VecFq apply(const VecFq& v) const {
        if (v.size() != ncols) throw std::invalid_argument("matrix/vector size mismatch");
        VecFq r(nrows, 0);
        for (std::size_t i = 0; i < nrows; ++i) {
            fq_t s = 0;
            for (std::size_t j = 0; j < ncols; ++j)
                s = ctx->add(s, ctx->mul(at(i, j), v[j]));
            r[i] = s;
        }
        return r;
    }

    bool operator==(const MatrixFq& o) const {
        return nrows == o.nrows && ncols == o.ncols && entries == o.entries;
    }
};

inline MatrixFq transpose(const MatrixFq& m) {
    MatrixFq t(*m.ctx, m.ncols, m.nrows);
    for (std::size_t i = 0; i < m.nrows; ++i)
        for (std::size_t j = 0; j < m.ncols; ++j)
            t.at(j, i) = m.at(i, j);
    return t;
}

// In-place reduced row echelon form; returns the rank.
inline std::size_t rref_inplace(MatrixFq& m) {
    const FieldCtx& F = *m.ctx;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.ncols && rank < m.nrows; ++col) {
        std::size_t piv = rank;
        while (piv < m.nrows && m.at(piv, col) == 0) ++piv;
        if (piv == m.nrows) continue;
        if (piv != rank)
            for (std::size_t j = 0; j < m.ncols; ++j)
                std::swap(m.at(piv, j), m.at(rank, j));
        fq_t iv = F.inv(m.at(rank, col));
        for (std::size_t j = col; j < m.ncols; ++j)
            m.at(rank, j) = F.mul(m.at(rank, j), iv);
        for (std::size_t i = 0; i < m.nrows; ++i) {
            if (i == rank) continue;
            fq_t f = m.at(i, col);
            if (f == 0) continue;
            for (std::size_t j = col; j < m.ncols; ++j)
                m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(rank, j)));
        }
        ++rank;
    }
    return rank;
}

inline std::pair<MatrixFq, std::size_t> rref(MatrixFq m) {
    std::size_t r = rref_inplace(m);
    return {std::move(m), r};
}

// Subspace of F_q^n in canonical RREF basis form. Equality of subspaces as
// sets is equality of representations.
struct Subspace {
    const FieldCtx* ctx = nullptr;
    std::size_t ambient = 0;
    MatrixFq basis;  // dim x ambient, RREF, no zero rows

    Subspace() = default;

    std::size_t dim() const { return basis.nrows; }
    bool is_zero() const { return basis.nrows == 0; }
    bool is_full() const { return basis.nrows == ambient; }

    bool contains(const Subspace& other) const;
    bool contains_vector(const VecFq& v) const;

    bool operator==(const Subspace& o) const {
        return ambient == o.ambient && basis == o.basis;
    }
    bool operator<(const Subspace& o) const {
        if (basis.nrows != o.basis.nrows) return basis.nrows < o.basis.nrows;
        return basis.entries < o.basis.entries;
    }
};

inline Subspace zero_subspace(const FieldCtx& ctx, std::size_t ambient) {
    Subspace s;
    s.ctx = &ctx;
    s.ambient = ambient;
    s.basis = MatrixFq(ctx, 0, ambient);
    return s;
}

inline Subspace span(const FieldCtx& ctx, std::size_t ambient,
                     const std::vector<VecFq>& generators) {
    MatrixFq m = MatrixFq::from_rows(ctx, generators, ambient);
    std::size_t rank = rref_inplace(m);
    Subspace s;
    s.ctx = &ctx;
    s.ambient = ambient;
    s.basis = MatrixFq(ctx, rank, ambient);
    std::copy(m.entries.begin(), m.entries.begin() + rank * ambient,
              s.basis.entries.begin());
    return s;
}

inline Subspace full_space(const FieldCtx& ctx, std::size_t ambient) {
    Subspace s;
    s.ctx = &ctx;
    s.ambient = ambient;
    s.basis = MatrixFq::identity(ctx, ambient);
    return s;
}

inline Subspace subspace_sum(const Subspace& u, const Subspace& v) {
    if (u.ambient != v.ambient) throw std::invalid_argument("ambient mismatch");
    std::vector<VecFq> gens;
    for (std::size_t i = 0; i < u.dim(); ++i) gens.push_back(u.basis.row(i));
    for (std::size_t i = 0; i < v.dim(); ++i) gens.push_back(v.basis.row(i));
    return span(*u.ctx, u.ambient, gens);
}

// Kernel of m as a subspace of F_q^ncols.
inline Subspace kernel(const MatrixFq& m) {
    const FieldCtx& F = *m.ctx;
    auto [r, rank] = rref(m);
    std::size_t n = m.ncols;
    std::vector<bool> is_pivot(n, false);
    std::vector<std::size_t> pivot_row(n, 0);
    for (std::size_t i = 0, col = 0; i < rank; ++i) {
        while (r.at(i, col) == 0) ++col;
        is_pivot[col] = true;
        pivot_row[col] = i;
        ++col;
    }
    std::vector<VecFq> gens;
    for (std::size_t j = 0; j < n; ++j) {
        if (is_pivot[j]) continue;
        VecFq v(n, 0);
        v[j] = 1;
        for (std::size_t c = 0; c < j; ++c)
            if (is_pivot[c]) v[c] = F.neg(r.at(pivot_row[c], j));
        gens.push_back(std::move(v));
    }
    return span(F, n, gens);
}

// Functionals vanishing on W, realized in F_q^n via the standard pairing.
inline Subspace annihilator(const Subspace& w) {
    if (w.dim() == 0) return full_space(*w.ctx, w.ambient);
    return kernel(w.basis);
}

inline Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
    if (u.ambient != v.ambient) throw std::invalid_argument("ambient mismatch");
    return annihilator(subspace_sum(annihilator(u), annihilator(v)));
}

// Span of T*b over the basis vectors b of W.
inline Subspace image(const MatrixFq& t, const Subspace& w) {
    if (t.nrows != w.ambient || t.ncols != w.ambient)
        throw std::invalid_argument("operator size must match ambient dimension");
    std::vector<VecFq> gens;
    for (std::size_t i = 0; i < w.dim(); ++i)
        gens.push_back(t.apply(w.basis.row(i)));
    return span(*w.ctx, w.ambient, gens);
}

// {v : Tv in W}; kernel of (annihilator of W applied after T), so singular T
// is handled uniformly and ker T is always contained.
inline Subspace preimage(const MatrixFq& t, const Subspace& w) {
    if (t.nrows != w.ambient || t.ncols != w.ambient)
        throw std::invalid_argument("operator size must match ambient dimension");
    Subspace ann = annihilator(w);
    if (ann.dim() == 0) return full_space(*w.ctx, w.ambient);
    MatrixFq m(*w.ctx, ann.dim(), w.ambient);
    const FieldCtx& F = *w.ctx;
    for (std::size_t i = 0; i < ann.dim(); ++i)
        for (std::size_t j = 0; j < w.ambient; ++j) {
            fq_t s = 0;
            for (std::size_t l = 0; l < w.ambient; ++l)
                s = F.add(s, F.mul(ann.basis.at(i, l), t.at(l, j)));
            m.at(i, j) = s;
        }
    return kernel(m);
}

inline bool Subspace::contains_vector(const VecFq& v) const {
    const FieldCtx& F = *ctx;
    VecFq r = v;
    for (std::size_t i = 0, col = 0; i < dim(); ++i) {
        while (basis.at(i, col) == 0) ++col;
        fq_t f = r[col];
        if (f != 0)
            for (std::size_t j = col; j < ambient; ++j)
                r[j] = F.sub(r[j], F.mul(f, basis.at(i, j)));
        ++col;
    }
    return std::all_of(r.begin(), r.end(), [](fq_t x) { return x == 0; });
}

inline bool Subspace::contains(const Subspace& other) const {
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains_vector(other.basis.row(i))) return false;
    return true;
}

// Coordinates of target in terms of the given (independent) vectors, or empty
// if target is outside their span.
inline std::pair<bool, VecFq> solve_coordinates(const FieldCtx& F,
                                                const std::vector<VecFq>& vecs,
                                                const VecFq& target) {
    std::size_t n = target.size(), k = vecs.size();
    MatrixFq m(F, n, k + 1);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < n; ++i)
            m.at(i, j) = vecs[j][i];
    for (std::size_t i = 0; i < n; ++i) m.at(i, k) = target[i];
    auto [r, rank] = rref(m);
    VecFq coords(k, 0);
    for (std::size_t i = 0, col = 0; i < rank; ++i) {
        while (col <= k && r.at(i, col) == 0) ++col;
        if (col == k) return {false, {}};  // pivot in the target column
        coords[col] = r.at(i, k);
        ++col;
    }
    return {true, coords};
}

}  // namespace qprofile

#endif

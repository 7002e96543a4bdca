#ifndef QPROFILE_PARTIAL_MAP_HPP
#define QPROFILE_PARTIAL_MAP_HPP

#include <stdexcept>
#include <vector>

#include "qprofile/fqlinalg.hpp"

namespace qprofile {

// A linear map from a subspace W of F_q^n into F_q^n. images[i] is the image
// of the i-th canonical RREF basis vector of W.
struct PartialMap {
    const FieldCtx* ctx = nullptr;
    std::size_t ambient = 0;
    Subspace domain;
    std::vector<VecFq> images;

    PartialMap() = default;
    PartialMap(Subspace dom, std::vector<VecFq> imgs)
        : ctx(dom.ctx), ambient(dom.ambient), domain(std::move(dom)), images(std::move(imgs)) {
        if (images.size() != domain.dim())
            throw std::invalid_argument("one image per domain basis vector required");
        for (const auto& v : images)
            if (v.size() != ambient) throw std::invalid_argument("image vector length mismatch");
    }

    bool full_domain() const { return domain.dim() == ambient; }

    VecFq apply(const VecFq& v) const {
        auto [ok, coords] = solve_coordinates(*ctx, basis_rows(), v);
        if (!ok) throw std::invalid_argument("vector outside the domain");
        VecFq r(ambient, 0);
        for (std::size_t i = 0; i < coords.size(); ++i)
            for (std::size_t j = 0; j < ambient; ++j)
                r[j] = ctx->add(r[j], ctx->mul(coords[i], images[i][j]));
        return r;
    }

    // As an operator matrix; only valid for full-domain maps.
    MatrixFq as_operator() const {
        if (!full_domain()) throw std::logic_error("partial map is not defined on all of F_q^n");
        MatrixFq t(*ctx, ambient, ambient);
        for (std::size_t j = 0; j < ambient; ++j) {
            VecFq ej(ambient, 0);
            ej[j] = 1;
            VecFq img = apply(ej);
            for (std::size_t i = 0; i < ambient; ++i) t.at(i, j) = img[i];
        }
        return t;
    }

    std::vector<VecFq> basis_rows() const {
        std::vector<VecFq> rows;
        for (std::size_t i = 0; i < domain.dim(); ++i) rows.push_back(domain.basis.row(i));
        return rows;
    }

    bool operator==(const PartialMap& o) const {
        return domain == o.domain && images == o.images;
    }
};

// Build a partial map from an action given on arbitrary independent
// generators: gens[i] maps to raw_images[i]. Internally re-expressed on the
// canonical RREF basis of span(gens).
inline PartialMap partial_map_from_action(const FieldCtx& ctx, std::size_t ambient,
                                          const std::vector<VecFq>& gens,
                                          const std::vector<VecFq>& raw_images) {
    if (gens.size() != raw_images.size())
        throw std::invalid_argument("generator/image count mismatch");
    Subspace dom = span(ctx, ambient, gens);
    if (dom.dim() != gens.size())
        throw std::invalid_argument("generators must be linearly independent");
    std::vector<VecFq> images;
    for (std::size_t i = 0; i < dom.dim(); ++i) {
        auto [ok, coords] = solve_coordinates(ctx, gens, dom.basis.row(i));
        if (!ok) throw std::logic_error("canonical basis not in generator span");
        VecFq img(ambient, 0);
        for (std::size_t j = 0; j < gens.size(); ++j)
            for (std::size_t l = 0; l < ambient; ++l)
                img[l] = ctx.add(img[l], ctx.mul(coords[j], raw_images[j][l]));
        images.push_back(std::move(img));
    }
    return PartialMap(std::move(dom), std::move(images));
}

}  // namespace qprofile

#endif

#include "modloci/ext.hpp"

#include "modloci/errors.hpp"

namespace modloci {

PolyMatrix block_diag(const PolyMatrix& b, std::size_t count) {
    PolyMatrix m(b.rows() * count, b.cols() * count, b.nvars());
    for (std::size_t k = 0; k < count; ++k)
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < b.cols(); ++c)
                m.at(k * b.rows() + r, k * b.cols() + c) = b.at(r, c);
    return m;
}

namespace {

/// First `take` coordinates of each kernel column of [a | b], tidied.
PolyMatrix kernel_projection(const AffineRing& ring, const PolyMatrix& a, const PolyMatrix& b,
                             std::size_t take, const Budget& budget) {
    PolyMatrix ker = syzygies(ring, hcat(a, b), budget);
    std::vector<PolyVec> cols;
    for (std::size_t c = 0; c < ker.cols(); ++c) {
        PolyVec v(take, Polynomial(ring.nvars()));
        for (std::size_t r = 0; r < take; ++r) v[r] = ring.reduce(ker.at(r, c));
        if (!vec_is_zero(v)) cols.push_back(std::move(v));
    }
    return tidy_columns(PolyMatrix::from_columns(take, cols, ring.nvars()), ring.order());
}

}  // namespace

ModulePresentation ext_module(const ModulePresentation& m, const ModulePresentation& n, int i,
                              const Budget& budget) {
    if (i < 0) throw Error("ext_module: negative degree");
    FreeResolution res = free_resolution(m, i + 1, budget);
    return ext_from_resolution(m.ring(), res, n, i, budget);
}

ModulePresentation ext_from_resolution(const RingPtr& ring_ptr, const FreeResolution& res,
                                       const ModulePresentation& n, int i, const Budget& budget) {
    if (i < 0) throw Error("ext_module: negative degree");
    const AffineRing& ring = *ring_ptr;
    std::size_t nv = ring.nvars();
    std::size_t gn = n.generators();
    if (gn == 0 || ring.is_zero_ring()) return ModulePresentation::zero(ring_ptr);
    if (i > res.length()) {
        if (!res.complete) throw Error("ext_from_resolution: resolution too short");
        return ModulePresentation::zero(ring_ptr);
    }
    std::size_t ri = static_cast<std::size_t>(res.ranks[static_cast<std::size_t>(i)]);
    if (ri == 0) return ModulePresentation::zero(ring_ptr);
    std::size_t hom_gens = ri * gn;
    const PolyMatrix& bn = n.relations();

    // Cocycles: preimage of the relations of N^{r_{i+1}} under Hom(d_{i+1}, N).
    PolyMatrix cocycles;
    if (i < res.length()) {
        const PolyMatrix& d_up = res.diffs[static_cast<std::size_t>(i)];
        PolyMatrix hom_up = tensor_identity(d_up.transpose(), gn);
        std::size_t r_next = static_cast<std::size_t>(res.ranks[static_cast<std::size_t>(i) + 1]);
        cocycles = kernel_projection(ring, hom_up, block_diag(bn, r_next), hom_gens, budget);
    } else {
        cocycles = PolyMatrix::identity(hom_gens, nv);  // resolution ended: everything is a cocycle
    }
    if (cocycles.cols() == 0) return ModulePresentation::zero(ring_ptr);

    // Coboundaries plus N-relations, against which the cocycles are presented.
    PolyMatrix boundary(hom_gens, 0, nv);
    if (i > 0) {
        const PolyMatrix& d_down = res.diffs[static_cast<std::size_t>(i) - 1];
        boundary = tensor_identity(d_down.transpose(), gn);
    }
    PolyMatrix denominators = hcat(boundary, block_diag(bn, ri));

    PolyMatrix rel =
        kernel_projection(ring, cocycles, denominators, cocycles.cols(), budget);
    ModulePresentation ext(ring_ptr, cocycles.cols(), rel);
    return prune_presentation(ext, budget);
}

ModulePresentation hom_module(const ModulePresentation& m, const ModulePresentation& n,
                              const Budget& budget) {
    return ext_module(m, n, 0, budget);
}

ModulePresentation as_s_module(const ModulePresentation& m, const Budget& budget) {
    const AffineRing& ring = *m.ring();
    if (ring.is_polynomial_ring()) return m;
    auto s_ring = AffineRing::polynomial_ring(ring.vars(), budget);
    return ModulePresentation(s_ring, m.generators(), m.relations_over_s());
}

}  // namespace modloci

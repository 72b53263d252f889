#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "modloci/affine_ring.hpp"
#include "modloci/module_gb.hpp"

namespace modloci {

/// Finitely presented module M = coker(relations) over R = S/J.  Relation
/// columns are S-lifts reduced mod J; the columns J*e_i are implicit for
/// every generator.
class ModulePresentation {
public:
    ModulePresentation(RingPtr ring, std::size_t generators, PolyMatrix relations);

    static ModulePresentation free_module(RingPtr ring, std::size_t rank);
    static ModulePresentation cyclic(RingPtr ring, const Ideal& ideal);
    static ModulePresentation zero(RingPtr ring);

    const RingPtr& ring() const { return ring_; }
    std::size_t generators() const { return gens_; }
    const PolyMatrix& relations() const { return rel_; }

    /// Relations with the implicit J columns made explicit (an S-presentation
    /// of the same cokernel).
    PolyMatrix relations_over_s() const;

    /// Groebner basis of the relation submodule (with J columns), cached.
    const ModuleBasis& relation_basis(const Budget& budget = Budget::defaults()) const;

    bool operator==(const ModulePresentation& o) const {
        return gens_ == o.gens_ && rel_ == o.rel_;
    }

private:
    RingPtr ring_;
    std::size_t gens_;
    PolyMatrix rel_;
    mutable std::shared_ptr<const ModuleBasis> basis_cache_;
};

/// J-multiple columns j_k * e_i for every generator index.
PolyMatrix relation_block_for_ring(const AffineRing& ring, std::size_t generators);

/// Columns generate ker(A : R^cols -> R^rows) as an R-module, computed via
/// the lifted S-matrix augmented with J-multiples of the standard basis.
PolyMatrix syzygies(const AffineRing& ring, const PolyMatrix& a,
                    const Budget& budget = Budget::defaults());

/// v lies in the relation submodule (i.e. v = 0 in M).
bool in_relations(const ModulePresentation& m, const PolyVec& v,
                  const Budget& budget = Budget::defaults());
bool is_zero_module(const ModulePresentation& m, const Budget& budget = Budget::defaults());

/// Fitt_r(M): ideal of (g-r)-minors of the relation matrix (with the J
/// columns), plus J.  Fitt_r = R for r >= g; (0) when the minor size
/// exceeds the matrix.
Ideal fitting_ideal(const ModulePresentation& m, int r,
                    const Budget& budget = Budget::defaults());

/// Ann M, integral with the zero-module convention (unit ideal).
Ideal annihilator(const ModulePresentation& m, const Budget& budget = Budget::defaults());

/// {f : f*v lies in the relations of M} as an S-ideal containing J.
Ideal colon_into_relations(const ModulePresentation& m, const PolyVec& v,
                           const Budget& budget = Budget::defaults());

/// {w : x*w = 0 in M}: generators of the kernel of multiplication by x.
/// Returned as a presentation of that kernel submodule of M.
ModulePresentation multiplication_kernel(const ModulePresentation& m, const Polynomial& x,
                                         const Budget& budget = Budget::defaults());

/// x is a nonzerodivisor on M: (relations : x) = relations.
bool is_nonzerodivisor(const Polynomial& x, const ModulePresentation& m,
                       const Budget& budget = Budget::defaults());

/// M/IM as a module over R/(J+I).
ModulePresentation quotient_module(const ModulePresentation& m, const Ideal& ideal,
                                   const Budget& budget = Budget::defaults());

/// Presentation of the submodule generated by the given columns (elements
/// of M), as a quotient of a free module on those columns.
ModulePresentation submodule_presentation(const ModulePresentation& m, const PolyMatrix& cols,
                                          const Budget& budget = Budget::defaults());

/// Unit-entry cancellation on a single presentation matrix, plus tidying;
/// the cokernel is unchanged.
ModulePresentation prune_presentation(const ModulePresentation& m,
                                      const Budget& budget = Budget::defaults());

/// xs is an M-regular sequence: each x_i is a nonzerodivisor on
/// M/(x_1..x_{i-1})M and the final quotient is nonzero.
bool is_regular_sequence(const std::vector<Polynomial>& xs, const ModulePresentation& m,
                         const Budget& budget = Budget::defaults());

}  // namespace modloci

#pragma once

#include "modloci/resolution.hpp"

namespace modloci {

/// Ext^i(M, N) as a finitely presented module over the common ring:
/// cohomology of Hom(F., N) for the pruned free resolution F. of M.
ModulePresentation ext_module(const ModulePresentation& m, const ModulePresentation& n, int i,
                              const Budget& budget = Budget::defaults());

/// Same, reusing a resolution of the first argument (computed to length at
/// least i+1 unless it completed earlier).
ModulePresentation ext_from_resolution(const RingPtr& ring, const FreeResolution& res,
                                       const ModulePresentation& n, int i,
                                       const Budget& budget = Budget::defaults());

/// Hom(M, N) = Ext^0(M, N).
ModulePresentation hom_module(const ModulePresentation& m, const ModulePresentation& n,
                              const Budget& budget = Budget::defaults());

/// The same cokernel viewed over the ambient polynomial ring (J columns
/// made explicit).
ModulePresentation as_s_module(const ModulePresentation& m,
                               const Budget& budget = Budget::defaults());

/// Identity-blocks stacked along the diagonal: count copies of b.
PolyMatrix block_diag(const PolyMatrix& b, std::size_t count);

}  // namespace modloci

#pragma once

#include <string>
#include <vector>

#include "modloci/module_presentation.hpp"

namespace modloci {

/// Chain of free modules F_len -> ... -> F_1 -> F_0 with coker(d_1) = M
/// (up to pruning of unit-entry summands).  diffs[k] is d_{k+1} : F_{k+1}
/// -> F_k, of shape ranks[k] x ranks[k+1].
struct FreeResolution {
    std::vector<int> ranks;
    std::vector<PolyMatrix> diffs;
    /// The last computed kernel vanished (the resolution is the whole
    /// minimal-length story, not a truncation).
    bool complete = false;
    /// "finite" or "infinite-or-unknown-pd" when truncated at the cutoff.
    std::string status;

    int length() const { return static_cast<int>(diffs.size()); }
};

/// Resolution by iterated syzygies over the module's ring, pruned of
/// unit-entry summands at every stage; stops early on a vanishing kernel.
FreeResolution free_resolution(const ModulePresentation& m, int length,
                               const Budget& budget = Budget::defaults());

/// Default cutoff: nvars + dim R + budget.resolution_extra.
int default_resolution_cutoff(const AffineRing& ring, const Budget& budget);

/// The i-th syzygy module in the pruned resolution: coker(d_{i+1}) for the
/// computed resolution (= image of d_i up to free summands).  Requires a
/// resolution computed to length >= i+1 unless it completed earlier.
ModulePresentation syzygy_module(const ModulePresentation& m, const FreeResolution& res, int i);

/// In-place cancellation of unit entries across the whole complex; adjacent
/// differentials are fixed up so d.d = 0 and exactness are preserved.
void minimize_complex(std::vector<int>& ranks, std::vector<PolyMatrix>& diffs,
                      const AffineRing& ring);

}  // namespace modloci

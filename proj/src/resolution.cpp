#include "modloci/resolution.hpp"

#include "modloci/errors.hpp"

namespace modloci {

int default_resolution_cutoff(const AffineRing& ring, const Budget& budget) {
    int d = ring.dim() < 0 ? 0 : ring.dim();
    return static_cast<int>(ring.nvars()) + d + budget.resolution_extra;
}

void minimize_complex(std::vector<int>& ranks, std::vector<PolyMatrix>& diffs,
                      const AffineRing& ring) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k < diffs.size() && !changed; ++k) {
            PolyMatrix& d = diffs[k];
            for (std::size_t i = 0; i < d.rows() && !changed; ++i) {
                for (std::size_t j = 0; j < d.cols() && !changed; ++j) {
                    if (!d.at(i, j).is_unit_constant()) continue;
                    Rational u = d.at(i, j).terms().begin()->second;

                    // Column ops on d clear row i; mirror as row ops on the
                    // next differential.
                    for (std::size_t c = 0; c < d.cols(); ++c) {
                        if (c == j || d.at(i, c).is_zero()) continue;
                        Polynomial factor = d.at(i, c).scaled(1 / u);
                        for (std::size_t r = 0; r < d.rows(); ++r)
                            d.at(r, c) = ring.reduce(d.at(r, c) - factor * d.at(r, j));
                        if (k + 1 < diffs.size()) {
                            PolyMatrix& next = diffs[k + 1];
                            for (std::size_t s = 0; s < next.cols(); ++s)
                                next.at(j, s) =
                                    ring.reduce(next.at(j, s) + factor * next.at(c, s));
                        }
                    }
                    // Row ops on d clear column j; mirror as column ops on
                    // the previous differential.
                    for (std::size_t r = 0; r < d.rows(); ++r) {
                        if (r == i || d.at(r, j).is_zero()) continue;
                        Polynomial factor = d.at(r, j).scaled(1 / u);
                        for (std::size_t c = 0; c < d.cols(); ++c)
                            d.at(r, c) = ring.reduce(d.at(r, c) - factor * d.at(i, c));
                        if (k > 0) {
                            PolyMatrix& prev = diffs[k - 1];
                            for (std::size_t s = 0; s < prev.rows(); ++s)
                                prev.at(s, i) =
                                    ring.reduce(prev.at(s, i) + factor * prev.at(s, r));
                        }
                    }

                    // The cleared row/column leave the neighbours with a zero
                    // row j (next) and zero column i (prev); drop everything.
                    d = d.without_row_col(i, j);
                    if (k + 1 < diffs.size()) {
                        PolyMatrix& next = diffs[k + 1];
                        PolyMatrix slim(next.rows() - 1, next.cols(), next.nvars());
                        for (std::size_t r = 0, rr = 0; r < next.rows(); ++r) {
                            if (r == j) continue;
                            for (std::size_t c = 0; c < next.cols(); ++c)
                                slim.at(rr, c) = next.at(r, c);
                            ++rr;
                        }
                        next = slim;
                    }
                    if (k > 0) {
                        PolyMatrix& prev = diffs[k - 1];
                        PolyMatrix slim(prev.rows(), prev.cols() - 1, prev.nvars());
                        for (std::size_t c = 0, cc = 0; c < prev.cols(); ++c) {
                            if (c == i) continue;
                            for (std::size_t r = 0; r < prev.rows(); ++r)
                                slim.at(r, cc) = prev.at(r, c);
                            ++cc;
                        }
                        prev = slim;
                    }
                    ranks[k] -= 1;
                    ranks[k + 1] -= 1;
                    changed = true;
                }
            }
        }
    }
}

FreeResolution free_resolution(const ModulePresentation& m, int length, const Budget& budget) {
    const AffineRing& ring = *m.ring();
    FreeResolution res;
    ModulePresentation pruned = prune_presentation(m, budget);
    res.ranks = {static_cast<int>(pruned.generators())};
    res.status = "finite";
    if (pruned.relations().cols() == 0 || pruned.generators() == 0 || length <= 0) {
        res.complete = pruned.relations().cols() == 0 || pruned.generators() == 0;
        if (!res.complete) res.status = "infinite-or-unknown-pd";
        return res;
    }
    res.diffs.push_back(pruned.relations());
    res.ranks.push_back(static_cast<int>(pruned.relations().cols()));
    minimize_complex(res.ranks, res.diffs, ring);
    for (int step = 1; step < length; ++step) {
        if (res.diffs.empty() || res.diffs.back().cols() == 0) break;
        PolyMatrix ker = syzygies(ring, res.diffs.back(), budget);
        if (ker.cols() == 0) {
            res.complete = true;
            return res;
        }
        res.diffs.push_back(ker);
        res.ranks.push_back(static_cast<int>(ker.cols()));
        minimize_complex(res.ranks, res.diffs, ring);
    }
    if (res.diffs.empty() || res.diffs.back().cols() == 0) {
        res.complete = true;
        return res;
    }
    // One more probe so a vanishing kernel at the cutoff still counts as
    // complete.
    PolyMatrix ker = syzygies(ring, res.diffs.back(), budget);
    if (ker.cols() == 0) {
        res.complete = true;
    } else {
        res.status = "infinite-or-unknown-pd";
    }
    return res;
}

ModulePresentation syzygy_module(const ModulePresentation& m, const FreeResolution& res, int i) {
    if (i == 0) return prune_presentation(m);
    if (i > res.length() && !res.complete)
        throw Error("syzygy_module: resolution too short");
    if (i > res.length()) return ModulePresentation::zero(m.ring());
    std::size_t gens = static_cast<std::size_t>(res.ranks[i]);
    if (i == res.length()) {
        if (res.complete) return ModulePresentation::free_module(m.ring(), gens);
        throw Error("syzygy_module: truncated resolution end");
    }
    return ModulePresentation(m.ring(), gens, res.diffs[static_cast<std::size_t>(i)]);
}

}  // namespace modloci

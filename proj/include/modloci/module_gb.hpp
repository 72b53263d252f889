#pragma once

#include <optional>
#include <vector>

#include "modloci/budget.hpp"
#include "modloci/poly_matrix.hpp"
#include "modloci/term_order.hpp"

namespace modloci {

/// Groebner machinery for submodules of a free module S^k.  Terms are
/// (component, monomial) pairs ordered position-over-term with lower
/// components dominating, so a basis simultaneously eliminates leading
/// components — which is exactly what the syzygy and colon computations
/// below need.
class ModuleBasis {
public:
    ModuleBasis(std::size_t components, TermOrder ord) : comps_(components), ord_(std::move(ord)) {}

    std::size_t components() const { return comps_; }
    const TermOrder& order() const { return ord_; }
    const std::vector<PolyVec>& elements() const { return elements_; }

    void set_elements(std::vector<PolyVec> els) { elements_ = std::move(els); }

    /// Leading (component, monomial) of a nonzero vector.
    std::pair<std::size_t, Monomial> leading(const PolyVec& v) const;
    Rational leading_coeff(const PolyVec& v) const;

private:
    std::size_t comps_;
    TermOrder ord_;
    std::vector<PolyVec> elements_;
};

bool vec_is_zero(const PolyVec& v);
PolyVec vec_sub_scaled(const PolyVec& a, const PolyVec& b, const Monomial& m, const Rational& c);

/// Buchberger for submodules of S^k (no pair criteria; those do not carry
/// over from the ring case unchanged).
ModuleBasis module_groebner(std::size_t components, const std::vector<PolyVec>& gens,
                            const TermOrder& ord, const Budget& budget = Budget::defaults());

/// Full normal form against the basis; zero iff the vector lies in the
/// submodule the basis generates (when the basis is a Groebner basis).
PolyVec module_normal_form(const PolyVec& v, const ModuleBasis& basis);

bool module_member(const PolyVec& v, const ModuleBasis& basis);

/// Kernel of the free-module map given by the columns of A (over S).
/// Columns of the result generate ker(A : S^cols -> S^rows).
PolyMatrix kernel_free(const PolyMatrix& a, const TermOrder& ord,
                       const Budget& budget = Budget::defaults());

/// Drops zero columns, scalar-duplicate columns, and normalizes each column
/// to a monic leading coefficient; deterministic column order.
PolyMatrix tidy_columns(const PolyMatrix& a, const TermOrder& ord);

}  // namespace modloci

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "modloci/budget.hpp"
#include "modloci/polynomial.hpp"

namespace modloci {

/// Finitely generated ideal of S = Q[x_1..x_n].  Generators are nonzero and
/// normalized; the zero ideal is the empty list.
class Ideal {
public:
    Ideal() = default;
    explicit Ideal(std::size_t nvars) : nvars_(nvars) {}
    Ideal(std::size_t nvars, std::vector<Polynomial> gens);

    static Ideal zero(std::size_t nvars) { return Ideal(nvars); }
    static Ideal unit(std::size_t nvars);

    std::size_t nvars() const { return nvars_; }
    const std::vector<Polynomial>& gens() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }

    /// Storage comparison (deterministic container use).
    bool operator<(const Ideal& o) const { return gens_ < o.gens_; }
    bool operator==(const Ideal& o) const { return nvars_ == o.nvars_ && gens_ == o.gens_; }

private:
    std::size_t nvars_ = 0;
    std::vector<Polynomial> gens_;
};

class GroebnerBasis {
public:
    GroebnerBasis(TermOrder order, std::vector<Polynomial> basis, bool reduced)
        : order_(std::move(order)), basis_(std::move(basis)), reduced_(reduced) {}

    const TermOrder& order() const { return order_; }
    const std::vector<Polynomial>& basis() const { return basis_; }
    bool reduced() const { return reduced_; }

private:
    TermOrder order_;
    std::vector<Polynomial> basis_;
    bool reduced_;
};

/// Reduced Groebner basis via Buchberger with the normal selection strategy
/// and both standard pair criteria.  Deterministic for fixed input.
GroebnerBasis groebner_basis(const Ideal& ideal, const TermOrder& ord,
                             const Budget& budget = Budget::defaults());

/// Remainder of multivariate division by the basis; idempotent; zero iff
/// the ideal contains f (when the basis is a Groebner basis).
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

bool ideal_member(const Polynomial& f, const GroebnerBasis& gb);
bool contains_unit(const GroebnerBasis& gb);

/// (I : J) = { f | fJ is contained in I }.
Ideal ideal_quotient(const Ideal& ideal, const Ideal& divisor,
                     const Budget& budget = Budget::defaults());

/// I intersected with the subring on the kept variables (block order).
Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& vars_to_drop,
                const Budget& budget = Budget::defaults());

Ideal intersect(const Ideal& a, const Ideal& b, const Budget& budget = Budget::defaults());

/// f in the radical of I, via the auxiliary-variable trick.
bool radical_member(const Polynomial& f, const Ideal& ideal,
                    const Budget& budget = Budget::defaults());

/// Krull dimension of S/I (maximal independent variable set modulo the
/// leading-term ideal); -1 for the unit ideal.
int krull_dim(const Ideal& ideal, const Budget& budget = Budget::defaults());

/// (I : J^infinity) by iterated quotient until stabilization.
Ideal saturate(const Ideal& ideal, const Ideal& divisor,
               const Budget& budget = Budget::defaults());

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);

/// Canonical form: generators replaced by the reduced Groebner basis.
Ideal ideal_canonical(const Ideal& ideal, const TermOrder& ord,
                      const Budget& budget = Budget::defaults());
bool ideal_equal(const Ideal& a, const Ideal& b, const Budget& budget = Budget::defaults());
bool ideal_contains(const Ideal& outer, const Ideal& inner,
                    const Budget& budget = Budget::defaults());

/// All generators are single terms after reduction.
bool is_monomial_ideal(const GroebnerBasis& gb);

}  // namespace modloci

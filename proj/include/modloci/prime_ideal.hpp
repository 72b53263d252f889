#pragma once

#include <string>
#include <vector>

#include "modloci/groebner.hpp"

namespace modloci {

/// A prime of S (or of R = S/J when the ideal contains J), with primality
/// provenance.  MonomialChecked primes are generated by a subset of the
/// variables (such ideals are prime); Declared primes are asserted by a
/// fixture and re-verified for properness and the containments the fixture
/// claims.
class PrimeIdeal {
public:
    enum class Provenance { MonomialChecked, Declared };

    PrimeIdeal() = default;
    PrimeIdeal(Ideal ideal, Provenance provenance, std::string name = "")
        : ideal_(std::move(ideal)), provenance_(provenance), name_(std::move(name)) {}

    /// Prime generated by a subset of the variables (possibly empty: the
    /// zero ideal of the polynomial ring).
    static PrimeIdeal monomial(std::size_t nvars, const std::vector<std::size_t>& var_indices,
                               std::string name = "");

    const Ideal& ideal() const { return ideal_; }
    Provenance provenance() const { return provenance_; }
    const std::string& name() const { return name_; }
    std::size_t nvars() const { return ideal_.nvars(); }

    bool operator==(const PrimeIdeal& o) const { return ideal_ == o.ideal_; }
    bool operator<(const PrimeIdeal& o) const { return ideal_ < o.ideal_; }

private:
    Ideal ideal_;
    Provenance provenance_ = Provenance::MonomialChecked;
    std::string name_;
};

/// f lies in p (normal-form test against the prime's basis).
bool in_prime(const Polynomial& f, const PrimeIdeal& p, const Budget& budget = Budget::defaults());
/// Every generator of `inner` lies in p.
bool ideal_in_prime(const Ideal& inner, const PrimeIdeal& p,
                    const Budget& budget = Budget::defaults());
bool prime_contained_in(const PrimeIdeal& q, const PrimeIdeal& p,
                        const Budget& budget = Budget::defaults());

/// Minimal primes of I.  Exact for monomial ideals (variable-generated
/// decomposition).  Otherwise falls back to `declared`: each declared prime
/// must contain I, and every generator of their intersection must lie in
/// the radical of I; the minimal ones are returned.  As a convenience an
/// ideal that equals a known prime from `declared` is its own minimal prime.
///
/// Throws NotMonomialAndNotDeclared or DeclaredDecompositionInconsistent.
std::vector<PrimeIdeal> minimal_primes(const Ideal& ideal,
                                       const std::vector<PrimeIdeal>& declared = {},
                                       const Budget& budget = Budget::defaults());

}  // namespace modloci

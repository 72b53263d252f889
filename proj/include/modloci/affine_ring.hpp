#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "modloci/groebner.hpp"
#include "modloci/prime_ideal.hpp"

namespace modloci {

/// R = S/J for S = Q[x_1..x_n].  Elements and ideals of R are represented
/// by S-data reduced modulo the cached Groebner basis of J.
class AffineRing {
public:
    AffineRing(std::vector<std::string> vars, Ideal relations,
               const Budget& budget = Budget::defaults());

    static std::shared_ptr<const AffineRing> polynomial_ring(
        std::vector<std::string> vars, const Budget& budget = Budget::defaults());
    static std::shared_ptr<const AffineRing> quotient(std::vector<std::string> vars,
                                                      Ideal relations,
                                                      const Budget& budget = Budget::defaults());

    std::size_t nvars() const { return vars_.size(); }
    const std::vector<std::string>& vars() const { return vars_; }
    const TermOrder& order() const { return order_; }
    const Ideal& relations() const { return relations_; }
    const GroebnerBasis& relations_gb() const { return relations_gb_; }

    bool is_polynomial_ring() const { return relations_.is_zero(); }
    bool is_zero_ring() const { return zero_ring_; }
    /// dim R; -1 for the zero ring.
    int dim() const { return dim_; }

    Polynomial reduce(const Polynomial& f) const { return normal_form(f, relations_gb_); }
    PolyVec reduce(const PolyVec& v) const;
    PolyMatrix reduce(const PolyMatrix& m) const;

    /// Certified sufficient condition for R being a quotient of a Gorenstein
    /// ring by itself Gorenstein: the polynomial ring, a hypersurface, or a
    /// complete intersection (generator count = height of J).
    bool certified_gorenstein_quotient() const { return gorenstein_certified_; }

    /// Fixture-declared minimal primes of J, when the relations are not
    /// monomial; empty means "derive them".
    const std::vector<PrimeIdeal>& declared_min_primes() const { return declared_min_primes_; }
    void declare_min_primes(std::vector<PrimeIdeal> primes) {
        declared_min_primes_ = std::move(primes);
    }

    std::string poly_str(const Polynomial& f) const { return f.to_string(vars_, order_); }

private:
    std::vector<std::string> vars_;
    TermOrder order_;
    Ideal relations_;
    GroebnerBasis relations_gb_;
    bool zero_ring_ = false;
    bool gorenstein_certified_ = false;
    int dim_ = 0;
    std::vector<PrimeIdeal> declared_min_primes_;
};

using RingPtr = std::shared_ptr<const AffineRing>;

/// Minimal primes of J, combining the monomial path with any declared ones.
std::vector<PrimeIdeal> ring_min_primes(const AffineRing& ring,
                                        const std::vector<PrimeIdeal>& extra_known = {},
                                        const Budget& budget = Budget::defaults());

}  // namespace modloci

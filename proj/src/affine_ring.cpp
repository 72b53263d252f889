#include "modloci/affine_ring.hpp"

#include "modloci/errors.hpp"

namespace modloci {

AffineRing::AffineRing(std::vector<std::string> vars, Ideal relations, const Budget& budget)
    : vars_(std::move(vars)),
      order_(TermOrder::grevlex(vars_.size())),
      relations_(std::move(relations)),
      relations_gb_(groebner_basis(relations_, order_, budget)) {
    std::size_t presented_gens = relations_.gens().size();
    relations_ = Ideal(nvars(), relations_gb_.basis());
    zero_ring_ = contains_unit(relations_gb_);
    dim_ = zero_ring_ ? -1 : krull_dim(relations_, budget);
    if (!zero_ring_) {
        if (relations_.is_zero()) {
            gorenstein_certified_ = true;  // regular
        } else {
            std::size_t height = nvars() - static_cast<std::size_t>(dim_);
            // Complete intersection witnessed by the presented generators.
            gorenstein_certified_ = presented_gens == height;
        }
    }
}

std::shared_ptr<const AffineRing> AffineRing::polynomial_ring(std::vector<std::string> vars,
                                                              const Budget& budget) {
    std::size_t n = vars.size();
    return std::make_shared<AffineRing>(std::move(vars), Ideal::zero(n), budget);
}

std::shared_ptr<const AffineRing> AffineRing::quotient(std::vector<std::string> vars,
                                                       Ideal relations, const Budget& budget) {
    return std::make_shared<AffineRing>(std::move(vars), std::move(relations), budget);
}

PolyVec AffineRing::reduce(const PolyVec& v) const {
    PolyVec r = v;
    for (auto& p : r) p = reduce(p);
    return r;
}

PolyMatrix AffineRing::reduce(const PolyMatrix& m) const {
    PolyMatrix r = m;
    for (std::size_t i = 0; i < r.rows(); ++i)
        for (std::size_t j = 0; j < r.cols(); ++j) r.at(i, j) = reduce(r.at(i, j));
    return r;
}

std::vector<PrimeIdeal> ring_min_primes(const AffineRing& ring,
                                        const std::vector<PrimeIdeal>& extra_known,
                                        const Budget& budget) {
    std::vector<PrimeIdeal> known = ring.declared_min_primes();
    known.insert(known.end(), extra_known.begin(), extra_known.end());
    return minimal_primes(ring.relations(), known, budget);
}

}  // namespace modloci

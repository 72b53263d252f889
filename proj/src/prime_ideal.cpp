#include "modloci/prime_ideal.hpp"

#include <algorithm>
#include <map>

#include "modloci/errors.hpp"

namespace modloci {

PrimeIdeal PrimeIdeal::monomial(std::size_t nvars, const std::vector<std::size_t>& var_indices,
                                std::string name) {
    std::vector<Polynomial> gens;
    for (std::size_t v : var_indices) gens.push_back(Polynomial::variable(nvars, v));
    return PrimeIdeal(Ideal(nvars, std::move(gens)), Provenance::MonomialChecked,
                      std::move(name));
}

namespace {

std::map<std::vector<Polynomial>, GroebnerBasis>& prime_gb_cache() {
    static std::map<std::vector<Polynomial>, GroebnerBasis> cache;
    return cache;
}

const GroebnerBasis& prime_gb(const PrimeIdeal& p, const Budget& budget) {
    auto& cache = prime_gb_cache();
    auto it = cache.find(p.ideal().gens());
    if (it != cache.end()) return it->second;
    GroebnerBasis gb = groebner_basis(p.ideal(), TermOrder::grevlex(p.nvars()), budget);
    return cache.emplace(p.ideal().gens(), std::move(gb)).first->second;
}

}  // namespace

bool in_prime(const Polynomial& f, const PrimeIdeal& p, const Budget& budget) {
    return ideal_member(f, prime_gb(p, budget));
}

bool ideal_in_prime(const Ideal& inner, const PrimeIdeal& p, const Budget& budget) {
    const GroebnerBasis& gb = prime_gb(p, budget);
    for (const auto& g : inner.gens())
        if (!ideal_member(g, gb)) return false;
    return true;
}

bool prime_contained_in(const PrimeIdeal& q, const PrimeIdeal& p, const Budget& budget) {
    return ideal_in_prime(q.ideal(), p, budget);
}

namespace {

std::vector<PrimeIdeal> monomial_minimal_primes(const GroebnerBasis& gb, std::size_t nvars) {
    std::vector<std::vector<std::size_t>> supports;
    for (const auto& g : gb.basis()) {
        std::vector<std::size_t> supp;
        const Monomial& m = g.terms().begin()->first;
        for (std::size_t v = 0; v < nvars; ++v)
            if (m.exp(v) > 0) supp.push_back(v);
        supports.push_back(std::move(supp));
    }
    // Minimal variable sets hitting every generator's support.
    std::vector<std::vector<std::size_t>> hits;
    for (std::size_t mask = 0; mask < (std::size_t{1} << nvars); ++mask) {
        bool covers = true;
        for (const auto& supp : supports) {
            bool hit = false;
            for (std::size_t v : supp)
                if (mask & (std::size_t{1} << v)) hit = true;
            if (!hit) {
                covers = false;
                break;
            }
        }
        if (!covers) continue;
        std::vector<std::size_t> set;
        for (std::size_t v = 0; v < nvars; ++v)
            if (mask & (std::size_t{1} << v)) set.push_back(v);
        bool minimal = true;
        for (const auto& kept : hits) {
            if (std::includes(set.begin(), set.end(), kept.begin(), kept.end())) {
                minimal = false;
                break;
            }
        }
        if (minimal) {
            std::erase_if(hits, [&](const auto& kept) {
                return std::includes(kept.begin(), kept.end(), set.begin(), set.end());
            });
            hits.push_back(set);
        }
    }
    std::sort(hits.begin(), hits.end());
    std::vector<PrimeIdeal> primes;
    for (const auto& set : hits) primes.push_back(PrimeIdeal::monomial(nvars, set));
    return primes;
}

}  // namespace

std::vector<PrimeIdeal> minimal_primes(const Ideal& ideal, const std::vector<PrimeIdeal>& declared,
                                       const Budget& budget) {
    std::size_t n = ideal.nvars();
    GroebnerBasis gb = groebner_basis(ideal, TermOrder::grevlex(n), budget);
    if (contains_unit(gb)) return {};
    if (is_monomial_ideal(gb)) return monomial_minimal_primes(gb, n);

    Ideal canon(n, gb.basis());
    for (const auto& p : declared)
        if (ideal_equal(canon, p.ideal(), budget)) return {p};

    if (declared.empty())
        throw NotMonomialAndNotDeclared("ideal is not monomial and no decomposition declared");

    // Declared decomposition: keep the declared primes containing I, check
    // they cut out the radical of I, and return the minimal ones.
    std::vector<PrimeIdeal> over;
    for (const auto& p : declared)
        if (ideal_in_prime(canon, p, budget)) over.push_back(p);
    if (over.empty())
        throw DeclaredDecompositionInconsistent("no declared prime contains the ideal");
    std::optional<Ideal> meet;
    for (const auto& p : over) meet = meet ? intersect(*meet, p.ideal(), budget) : p.ideal();
    for (const auto& g : meet->gens())
        if (!radical_member(g, canon, budget))
            throw DeclaredDecompositionInconsistent(
                "declared primes do not cut out the radical");
    std::vector<PrimeIdeal> minimal;
    for (const auto& p : over) {
        bool is_min = true;
        for (const auto& q : over)
            if (!(q == p) && prime_contained_in(q, p, budget) && !prime_contained_in(p, q, budget))
                is_min = false;
        if (is_min) minimal.push_back(p);
    }
    std::sort(minimal.begin(), minimal.end());
    minimal.erase(std::unique(minimal.begin(), minimal.end(),
                              [](const PrimeIdeal& a, const PrimeIdeal& b) { return a == b; }),
                  minimal.end());
    return minimal;
}

}  // namespace modloci

#include "modloci/local_profile.hpp"

#include <algorithm>

#include "modloci/errors.hpp"

namespace modloci {

InvariantsEngine::InvariantsEngine(Budget budget, std::vector<PrimeIdeal> declared_primes)
    : budget_(budget), declared_(std::move(declared_primes)) {}

void InvariantsEngine::add_declared_primes(const std::vector<PrimeIdeal>& primes) {
    for (const auto& p : primes) {
        bool known = false;
        for (const auto& q : declared_)
            if (q == p) known = true;
        if (!known) declared_.push_back(p);
    }
}

InvariantsEngine::ModuleKey InvariantsEngine::key_of(const ModulePresentation& m) {
    return ModuleKey{m.ring()->relations().gens(), m.generators(), m.relations().columns()};
}

int InvariantsEngine::height_in_s(const PrimeIdeal& p) {
    auto it = dim_cache_.find(p.ideal().gens());
    int dim;
    if (it != dim_cache_.end()) {
        dim = it->second;
    } else {
        dim = krull_dim(p.ideal(), budget_);
        dim_cache_.emplace(p.ideal().gens(), dim);
    }
    return static_cast<int>(p.nvars()) - dim;
}

std::vector<PrimeIdeal> InvariantsEngine::ring_components(const AffineRing& ring) {
    std::vector<PrimeIdeal> known = ring.declared_min_primes();
    known.insert(known.end(), declared_.begin(), declared_.end());
    return minimal_primes(ring.relations(), known, budget_);
}

int InvariantsEngine::local_ring_dim(const AffineRing& ring, const PrimeIdeal& p) {
    if (ring.is_zero_ring()) throw ValidationError("local dimension over the zero ring");
    int dim_sp = static_cast<int>(p.nvars()) - height_in_s(p);
    int best = -1;
    for (const auto& q : ring_components(ring)) {
        if (!prime_contained_in(q, p, budget_)) continue;
        int dim_sq = krull_dim(q.ideal(), budget_);
        best = std::max(best, dim_sq - dim_sp);
    }
    if (best < 0) throw ValidationError("prime does not contain the ring relations");
    return best;
}

const Ideal& InvariantsEngine::cached_annihilator(const ModulePresentation& m) {
    ModuleKey key = key_of(m);
    auto it = ann_cache_.find(key);
    if (it != ann_cache_.end()) return it->second;
    return ann_cache_.emplace(std::move(key), annihilator(m, budget_)).first->second;
}

const std::vector<Ideal>& InvariantsEngine::ann_ext_s(const ModulePresentation& m) {
    ModuleKey key = key_of(m);
    auto it = ann_ext_cache_.find(key);
    if (it != ann_ext_cache_.end()) return it->second;
    ModulePresentation ms = as_s_module(m, budget_);
    std::size_t n = ms.ring()->nvars();
    FreeResolution res = free_resolution(ms, static_cast<int>(n) + 1, budget_);
    ModulePresentation s_free = ModulePresentation::free_module(ms.ring(), 1);
    std::vector<Ideal> anns;
    for (int j = 0; j <= static_cast<int>(n); ++j) {
        ModulePresentation ext = ext_from_resolution(ms.ring(), res, s_free, j, budget_);
        anns.push_back(annihilator(ext, budget_));
    }
    return ann_ext_cache_.emplace(std::move(key), std::move(anns)).first->second;
}

std::vector<PrimeIdeal> InvariantsEngine::ann_min_primes(const ModulePresentation& m) {
    std::vector<PrimeIdeal> known = m.ring()->declared_min_primes();
    known.insert(known.end(), declared_.begin(), declared_.end());
    return minimal_primes(cached_annihilator(m), known, budget_);
}

std::optional<int> InvariantsEngine::local_dim(const ModulePresentation& m, const PrimeIdeal& p) {
    const Ideal& ann = cached_annihilator(m);
    if (!ideal_in_prime(ann, p, budget_)) return std::nullopt;
    int dim_sp = static_cast<int>(p.nvars()) - height_in_s(p);
    int best = -1;
    for (const auto& q : ann_min_primes(m)) {
        if (!prime_contained_in(q, p, budget_)) continue;
        int dim_sq = krull_dim(q.ideal(), budget_);
        best = std::max(best, dim_sq - dim_sp);
    }
    if (best < 0) throw DecompositionUnavailable("no annihilator component inside the prime");
    return best;
}

std::optional<int> InvariantsEngine::local_pd(const ModulePresentation& m, const PrimeIdeal& p) {
    const Ideal& ann = cached_annihilator(m);
    if (!ideal_in_prime(ann, p, budget_)) return std::nullopt;
    const std::vector<Ideal>& anns = ann_ext_s(m);
    std::optional<int> pd;
    for (int j = 0; j < static_cast<int>(anns.size()); ++j)
        if (ideal_in_prime(anns[static_cast<std::size_t>(j)], p, budget_)) pd = j;
    if (!pd) throw Error("local_pd: no nonvanishing Ext although the localization is nonzero");
    return pd;
}

std::optional<int> InvariantsEngine::local_depth(const ModulePresentation& m,
                                                 const PrimeIdeal& p) {
    std::optional<int> pd = local_pd(m, p);
    if (!pd) return std::nullopt;
    return height_in_s(p) - *pd;
}

int InvariantsEngine::bass_top(const AffineRing& ring) const {
    return std::max(0, ring.dim()) + budget_.bass_window_extra;
}

std::vector<int> InvariantsEngine::bass_window(const PrimeIdeal& p, const ModulePresentation& m,
                                               int top) {
    auto key = std::make_pair(key_of(m), p.ideal().gens());
    auto it = bass_cache_.find(key);
    if (it != bass_cache_.end() && static_cast<int>(it->second.size()) > top) return it->second;

    const RingPtr& ring = m.ring();
    FreeResolution* res;
    auto rit = cyclic_res_cache_.find(p.ideal().gens());
    FreeResolution fresh;
    ModulePresentation cyclic = ModulePresentation::cyclic(ring, p.ideal());
    if (rit != cyclic_res_cache_.end() && rit->second.length() >= top + 1) {
        res = &rit->second;
    } else {
        fresh = free_resolution(cyclic, top + 1, budget_);
        res = &cyclic_res_cache_.insert_or_assign(p.ideal().gens(), std::move(fresh))
                   .first->second;
    }

    GroebnerBasis pgb = groebner_basis(p.ideal(), ring->order(), budget_);
    std::vector<int> window;
    for (int i = 0; i <= top; ++i) {
        ModulePresentation ext = ext_from_resolution(ring, *res, m, i, budget_);
        // Generic rank over the domain S/p: least j with Fitt_j(ext) not
        // inside p.
        int rank = 0;
        for (int j = 0; j <= static_cast<int>(ext.generators()); ++j) {
            Ideal fit = fitting_ideal(ext, j, budget_);
            bool outside = false;
            for (const auto& g : fit.gens())
                if (!ideal_member(g, pgb)) outside = true;
            if (outside) {
                rank = j;
                break;
            }
            rank = j + 1;
        }
        window.push_back(rank);
    }
    return bass_cache_.insert_or_assign(key, std::move(window)).first->second;
}

int InvariantsEngine::bass_number(const PrimeIdeal& p, const ModulePresentation& m, int i) {
    std::vector<int> window = bass_window(p, m, std::max(i, bass_top(*m.ring())));
    return window[static_cast<std::size_t>(i)];
}

GorensteinTypeResult InvariantsEngine::gorenstein_type(const ModulePresentation& m,
                                                       const PrimeIdeal& maximal) {
    GorensteinTypeResult out;
    const Ideal& ann = cached_annihilator(m);
    if (!ideal_in_prime(ann, maximal, budget_)) {
        out.status = GorensteinTypeResult::Status::Type;
        out.type = 0;  // the zero module is Gorenstein by convention
        return out;
    }
    int d = local_ring_dim(*m.ring(), maximal);
    int top = bass_top(*m.ring());
    if (top < d) {
        out.status = GorensteinTypeResult::Status::Inconclusive;
        return out;
    }
    out.bass = bass_window(maximal, m, top);
    for (int i = 0; i <= top; ++i) {
        if (i == d) continue;
        if (out.bass[static_cast<std::size_t>(i)] != 0) {
            out.status = GorensteinTypeResult::Status::NotGorensteinModule;
            return out;
        }
    }
    int r = out.bass[static_cast<std::size_t>(d)];
    if (r > 0) {
        out.status = GorensteinTypeResult::Status::Type;
        out.type = r;
    } else {
        out.status = GorensteinTypeResult::Status::Inconclusive;
    }
    return out;
}

ModulePresentation InvariantsEngine::ring_as_module(const AffineRing& ring) {
    auto self = std::make_shared<AffineRing>(ring.vars(), ring.relations(), budget_);
    self->declare_min_primes(ring.declared_min_primes());
    return ModulePresentation::free_module(self, 1);
}

bool InvariantsEngine::ring_not_cm_at(const AffineRing& ring, const PrimeIdeal& p) {
    ModulePresentation rm = ring_as_module(ring);
    std::optional<int> depth = local_depth(rm, p);
    if (!depth) throw ValidationError("ring localization vanished; not a prime of R");
    return *depth < local_ring_dim(ring, p);
}

std::optional<Polynomial> InvariantsEngine::regular_certificate(const AffineRing& ring,
                                                                const PrimeIdeal& p) {
    if (ring.is_zero_ring()) return std::nullopt;
    std::vector<PrimeIdeal> comps;
    try {
        comps = ring_components(ring);
    } catch (const Error&) {
        return std::nullopt;
    }
    std::vector<PrimeIdeal> inside, outside;
    for (const auto& q : comps)
        (prime_contained_in(q, p, budget_) ? inside : outside).push_back(q);
    if (inside.size() != 1) return std::nullopt;
    const PrimeIdeal& q = inside.front();
    if (q.provenance() != PrimeIdeal::Provenance::MonomialChecked) return std::nullopt;

    std::size_t n = ring.nvars();
    Polynomial f = Polynomial::constant(n, Rational(1));
    for (const auto& other : outside) {
        bool found = false;
        for (const auto& g : other.ideal().gens()) {
            if (!in_prime(g, p, budget_)) {
                f = f * g;
                found = true;
                break;
            }
        }
        if (!found) return std::nullopt;
    }
    // After inverting f the relations must become exactly the component.
    Ideal sat = saturate(ring.relations(), Ideal(n, {f}), budget_);
    if (!ideal_equal(sat, q.ideal(), budget_)) return std::nullopt;
    return f;
}

FidVerdict InvariantsEngine::fid_at_prime(const ModulePresentation& m, const PrimeIdeal& p) {
    FidVerdict v;
    const Ideal& ann = cached_annihilator(m);
    if (!ideal_in_prime(ann, p, budget_)) {
        v.status = FidVerdict::Status::Finite;
        v.certificate = "zero-localization";
        return v;
    }
    if (auto f = regular_certificate(*m.ring(), p)) {
        v.status = FidVerdict::Status::Finite;
        v.certificate = "regular-localization (inverted " + m.ring()->poly_str(*f) + ")";
        return v;
    }
    if (!m.ring()->is_polynomial_ring() && ring_not_cm_at(*m.ring(), p)) {
        v.status = FidVerdict::Status::Infinite;
        v.certificate = "localized ring is not Cohen-Macaulay";
        return v;
    }
    return fid_at_prime_bass(m, p);
}

FidVerdict InvariantsEngine::fid_at_prime_bass(const ModulePresentation& m, const PrimeIdeal& p) {
    FidVerdict v;
    const Ideal& ann = cached_annihilator(m);
    if (!ideal_in_prime(ann, p, budget_)) {
        v.status = FidVerdict::Status::Finite;
        v.certificate = "zero-localization";
        return v;
    }
    int d = local_ring_dim(*m.ring(), p);
    int top = bass_top(*m.ring());
    if (top <= d) {
        v.status = FidVerdict::Status::Inconclusive;
        v.certificate = "bass window exhausted below the local dimension";
        return v;
    }
    v.bass = bass_window(p, m, top);
    for (int i = d + 1; i <= top; ++i) {
        if (v.bass[static_cast<std::size_t>(i)] != 0) {
            v.status = FidVerdict::Status::Infinite;
            v.certificate = "bass number nonzero above the local dimension (i=" +
                            std::to_string(i) + ")";
            return v;
        }
    }
    v.status = FidVerdict::Status::Finite;
    v.certificate = "bass window vanishes above the local dimension";
    return v;
}

LocalProfile InvariantsEngine::profile(const ModulePresentation& m, const PrimeIdeal& p,
                                       bool with_bass) {
    LocalProfile lp;
    lp.prime = p;
    lp.height_s = height_in_s(p);
    lp.dim_r_local = local_ring_dim(*m.ring(), p);
    lp.dim_m_local = local_dim(m, p);
    lp.pd_local = local_pd(m, p);
    lp.depth_local = local_depth(m, p);
    if (with_bass) lp.bass = bass_window(p, m, bass_top(*m.ring()));
    return lp;
}

}  // namespace modloci

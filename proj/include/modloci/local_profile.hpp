#pragma once

#include <map>
#include <optional>
#include <vector>

#include "modloci/ext.hpp"

namespace modloci {

/// Local invariants of a module at an explicit prime.  nullopt encodes the
/// zero-localization conventions: dim "empty", pd minus infinity, depth
/// plus infinity.
struct LocalProfile {
    PrimeIdeal prime;
    int height_s = 0;
    int dim_r_local = 0;
    std::optional<int> dim_m_local;
    std::optional<int> pd_local;
    std::optional<int> depth_local;
    std::vector<int> bass;  // window 0..top when computed, else empty

    bool zero_at_p() const { return !dim_m_local.has_value(); }
};

struct GorensteinTypeResult {
    enum class Status { Type, NotGorensteinModule, Inconclusive };
    Status status = Status::Inconclusive;
    int type = 0;  // valid when status == Type (0 means the zero module)
    std::vector<int> bass;
};

struct FidVerdict {
    enum class Status { Finite, Infinite, Inconclusive };
    Status status = Status::Inconclusive;
    std::string certificate;
    std::vector<int> bass;  // window, when that route ran
};

/// Per-session engine caching the homological data the invariants reuse:
/// Ext_S(M, S) annihilators per module, resolutions of cyclic modules, and
/// Bass numbers per (module, prime, degree).
class InvariantsEngine {
public:
    explicit InvariantsEngine(Budget budget = Budget::defaults(),
                              std::vector<PrimeIdeal> declared_primes = {});

    const Budget& budget() const { return budget_; }
    const std::vector<PrimeIdeal>& declared_primes() const { return declared_; }
    void add_declared_primes(const std::vector<PrimeIdeal>& primes);

    /// Height of a prime of S: nvars - dim(S/p).
    int height_in_s(const PrimeIdeal& p);

    /// dim R_p by the catenary dimension formula over the minimal primes of
    /// the ring's relations.
    int local_ring_dim(const AffineRing& ring, const PrimeIdeal& p);

    /// dim M_p; nullopt when M_p = 0.
    std::optional<int> local_dim(const ModulePresentation& m, const PrimeIdeal& p);

    /// Largest j with Ann Ext^j_S(M, S) inside p; nullopt (minus infinity)
    /// when M_p = 0.
    std::optional<int> local_pd(const ModulePresentation& m, const PrimeIdeal& p);

    /// Auslander-Buchsbaum over the regular ambient localization:
    /// height_in_s(p) - local_pd; nullopt (plus infinity) when M_p = 0.
    std::optional<int> local_depth(const ModulePresentation& m, const PrimeIdeal& p);

    /// mu^i(p, M): generic rank over R/p of Ext^i_R(R/p, M).
    int bass_number(const PrimeIdeal& p, const ModulePresentation& m, int i);
    std::vector<int> bass_window(const PrimeIdeal& p, const ModulePresentation& m, int top);

    /// Bass window top index for the module's ring.
    int bass_top(const AffineRing& ring) const;

    GorensteinTypeResult gorenstein_type(const ModulePresentation& m, const PrimeIdeal& maximal);

    /// Pointwise finite-injective-dimension verdict at p.  Decides cheaply
    /// via the zero-localization, regular-localization, and non-CM-ring
    /// certificates, then falls back to the Bass window (a semi-decision;
    /// the certificate string records which route fired).
    FidVerdict fid_at_prime(const ModulePresentation& m, const PrimeIdeal& p);

    /// Pure Bass-window route (used by the cross-validation suites).
    FidVerdict fid_at_prime_bass(const ModulePresentation& m, const PrimeIdeal& p);

    LocalProfile profile(const ModulePresentation& m, const PrimeIdeal& p,
                         bool with_bass = false);

    /// Ann M (cached) and Ann Ext^j_S(M, S) for 0 <= j <= nvars (cached).
    const Ideal& cached_annihilator(const ModulePresentation& m);
    const std::vector<Ideal>& ann_ext_s(const ModulePresentation& m);

    /// Minimal primes of Ann M, via the monomial/known-prime/declared paths.
    std::vector<PrimeIdeal> ann_min_primes(const ModulePresentation& m);

    /// Minimal primes of the ring relations.
    std::vector<PrimeIdeal> ring_components(const AffineRing& ring);

    /// Is R_p a regular local ring, by the sufficient certificate: a unique
    /// coordinate-subspace component through p that generates the relations
    /// after inverting a witness avoiding p.  Returns the witness.
    std::optional<Polynomial> regular_certificate(const AffineRing& ring, const PrimeIdeal& p);

    /// depth R_p < dim R_p (the localized ring fails Cohen-Macaulayness).
    bool ring_not_cm_at(const AffineRing& ring, const PrimeIdeal& p);

private:
    struct ModuleKey {
        std::vector<Polynomial> ring_rel;
        std::size_t gens;
        std::vector<PolyVec> rel_cols;
        bool operator<(const ModuleKey& o) const {
            if (ring_rel != o.ring_rel) return ring_rel < o.ring_rel;
            if (gens != o.gens) return gens < o.gens;
            return rel_cols < o.rel_cols;
        }
    };
    static ModuleKey key_of(const ModulePresentation& m);

    ModulePresentation ring_as_module(const AffineRing& ring);

    Budget budget_;
    std::vector<PrimeIdeal> declared_;
    std::map<ModuleKey, Ideal> ann_cache_;
    std::map<ModuleKey, std::vector<Ideal>> ann_ext_cache_;
    std::map<std::vector<Polynomial>, FreeResolution> cyclic_res_cache_;
    std::map<std::pair<ModuleKey, std::vector<Polynomial>>, std::vector<int>> bass_cache_;
    std::map<std::vector<Polynomial>, int> dim_cache_;
};

}  // namespace modloci

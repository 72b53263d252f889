#include "modloci/groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "modloci/errors.hpp"

namespace modloci {

Budget Budget::from_env() {
    Budget b;
    if (const char* s = std::getenv("MODLOCI_GB_STEPS")) b.gb_steps = std::atoll(s);
    if (const char* s = std::getenv("MODLOCI_RES_CUTOFF")) b.resolution_extra = std::atoi(s);
    if (const char* s = std::getenv("MODLOCI_BASS_WINDOW")) b.bass_window_extra = std::atoi(s);
    return b;
}

Ideal::Ideal(std::size_t nvars, std::vector<Polynomial> gens) : nvars_(nvars) {
    for (auto& g : gens)
        if (!g.is_zero()) gens_.push_back(std::move(g));
}

Ideal Ideal::unit(std::size_t nvars) {
    return Ideal(nvars, {Polynomial::constant(nvars, Rational(1))});
}

namespace {

/// Full reduction: every term of the result is outside the leading-term
/// ideal of the reducers.
Polynomial reduce_full(const Polynomial& f, const std::vector<Polynomial>& reducers,
                       const TermOrder& ord) {
    Polynomial rem(f.nvars());
    Polynomial work = f;
    while (!work.is_zero()) {
        auto [lm, lc] = work.leading_term(ord);
        bool reduced = false;
        for (const auto& g : reducers) {
            const Monomial& gm = g.leading_monomial(ord);
            if (!gm.divides(lm)) continue;
            Rational factor = lc / g.leading_term(ord).second;
            work = work - g.times_term(lm / gm, factor);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.add_term(lm, lc);
            work.add_term(lm, -lc);
        }
    }
    return rem;
}

struct Pair {
    std::size_t i, j;
    Monomial lcm;
    int degree;
};

bool pair_less(const Pair& a, const Pair& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
}

}  // namespace

GroebnerBasis groebner_basis(const Ideal& ideal, const TermOrder& ord, const Budget& budget) {
    std::vector<Polynomial> basis;
    for (const auto& g : ideal.gens())
        if (!g.is_zero()) basis.push_back(g.monic(ord));

    std::vector<Pair> queue;
    auto push_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            Monomial l = Monomial::lcm(basis[i].leading_monomial(ord),
                                       basis[j].leading_monomial(ord));
            queue.push_back(Pair{i, j, l, l.degree()});
        }
        std::sort(queue.begin(), queue.end(), pair_less);
    };
    for (std::size_t j = 1; j < basis.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) {
            Monomial l = Monomial::lcm(basis[i].leading_monomial(ord),
                                       basis[j].leading_monomial(ord));
            queue.push_back(Pair{i, j, l, l.degree()});
        }
    std::sort(queue.begin(), queue.end(), pair_less);

    std::int64_t steps = 0;
    std::set<std::pair<std::size_t, std::size_t>> dropped;
    while (!queue.empty()) {
        Pair p = queue.front();
        queue.erase(queue.begin());
        if (++steps > budget.gb_steps) throw ResourceLimit("groebner step budget exceeded");

        const Monomial& mi = basis[p.i].leading_monomial(ord);
        const Monomial& mj = basis[p.j].leading_monomial(ord);
        // Product criterion.
        if (Monomial::coprime(mi, mj)) continue;
        // Chain criterion: a third element divides the lcm and both side
        // pairs were already handled.
        bool chained = false;
        for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == p.i || k == p.j) continue;
            if (!basis[k].leading_monomial(ord).divides(p.lcm)) continue;
            auto key1 = std::minmax(p.i, k);
            auto key2 = std::minmax(p.j, k);
            bool p1_done = dropped.count({key1.first, key1.second}) ||
                           std::none_of(queue.begin(), queue.end(), [&](const Pair& q) {
                               return std::minmax(q.i, q.j) == key1;
                           });
            bool p2_done = dropped.count({key2.first, key2.second}) ||
                           std::none_of(queue.begin(), queue.end(), [&](const Pair& q) {
                               return std::minmax(q.i, q.j) == key2;
                           });
            if (p1_done && p2_done) chained = true;
        }
        if (chained) {
            dropped.insert(std::minmax(p.i, p.j));
            continue;
        }

        Monomial ui = p.lcm / mi;
        Monomial uj = p.lcm / mj;
        Polynomial s = basis[p.i].times_term(ui, Rational(1)) -
                       basis[p.j].times_term(uj, Rational(1));
        Polynomial r = reduce_full(s, basis, ord);
        dropped.insert(std::minmax(p.i, p.j));
        if (!r.is_zero()) {
            basis.push_back(r.monic(ord));
            push_pairs(basis.size() - 1);
        }
    }

    // Interreduce to the unique reduced basis.
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const Monomial& mi = basis[i].leading_monomial(ord);
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& mj = basis[j].leading_monomial(ord);
            if (mj.divides(mi) && !(mi == mj && j > i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial r = others.empty() ? minimal[i] : reduce_full(minimal[i], others, ord);
        if (!r.is_zero()) reduced.push_back(r.monic(ord));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.less(a.leading_monomial(ord), b.leading_monomial(ord));
    });
    return GroebnerBasis(ord, std::move(reduced), true);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
    if (f.is_zero() || gb.basis().empty()) return f;
    return reduce_full(f, gb.basis(), gb.order());
}

bool ideal_member(const Polynomial& f, const GroebnerBasis& gb) {
    return normal_form(f, gb).is_zero();
}

bool contains_unit(const GroebnerBasis& gb) {
    for (const auto& g : gb.basis())
        if (g.is_unit_constant()) return true;
    return false;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    std::vector<Polynomial> gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return Ideal(a.nvars(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
    std::vector<Polynomial> gens;
    for (const auto& f : a.gens())
        for (const auto& g : b.gens()) gens.push_back(f * g);
    return Ideal(a.nvars(), std::move(gens));
}

Ideal ideal_canonical(const Ideal& ideal, const TermOrder& ord, const Budget& budget) {
    return Ideal(ideal.nvars(), groebner_basis(ideal, ord, budget).basis());
}

bool ideal_contains(const Ideal& outer, const Ideal& inner, const Budget& budget) {
    GroebnerBasis gb = groebner_basis(outer, TermOrder::grevlex(outer.nvars()), budget);
    for (const auto& g : inner.gens())
        if (!ideal_member(g, gb)) return false;
    return true;
}

bool ideal_equal(const Ideal& a, const Ideal& b, const Budget& budget) {
    TermOrder ord = TermOrder::grevlex(a.nvars());
    return ideal_canonical(a, ord, budget) == ideal_canonical(b, ord, budget);
}

bool is_monomial_ideal(const GroebnerBasis& gb) {
    for (const auto& g : gb.basis())
        if (g.term_count() != 1) return false;
    return true;
}

namespace {

/// Appends one fresh variable after the existing ones.
Polynomial lift_poly(const Polynomial& f, std::size_t new_nvars) {
    return f.with_nvars(new_nvars);
}

}  // namespace

Ideal ideal_quotient(const Ideal& ideal, const Ideal& divisor, const Budget& budget) {
    if (divisor.is_zero()) return Ideal::unit(ideal.nvars());
    std::optional<Ideal> acc;
    TermOrder ord = TermOrder::grevlex(ideal.nvars());
    for (const auto& g : divisor.gens()) {
        // (I : g) read off a kernel: a*g + sum b_i f_i = 0  <=>  a*g in I.
        // Computed by elimination: (I : g) = (1/g) * (I cap (g)).
        std::size_t n = ideal.nvars() + 1;
        std::vector<Polynomial> gens;
        Polynomial t = Polynomial::variable(n, n - 1);
        Polynomial one = Polynomial::constant(n, Rational(1));
        for (const auto& f : ideal.gens()) gens.push_back(lift_poly(f, n) * t);
        gens.push_back(lift_poly(g, n) * (one - t));
        Ideal mixed(n, std::move(gens));
        Ideal inter = eliminate(mixed, {n - 1}, budget);  // I cap (g), still in n vars
        std::vector<Polynomial> quot;
        for (const auto& h : inter.gens()) {
            // h = q*g exactly; divide by g via normal form bookkeeping.
            Polynomial hh = h.with_nvars(ideal.nvars());
            // Exact division: reduce hh by {g} and recover the quotient.
            Polynomial work = hh;
            Polynomial q(ideal.nvars());
            const Polynomial gg = g;
            const Monomial& gm = gg.leading_monomial(ord);
            Rational gc = gg.leading_term(ord).second;
            while (!work.is_zero()) {
                auto [lm, lc] = work.leading_term(ord);
                if (!gm.divides(lm)) throw Error("ideal_quotient: inexact division");
                Monomial u = lm / gm;
                Rational c = lc / gc;
                q.add_term(u, c);
                work = work - gg.times_term(u, c);
            }
            if (!q.is_zero()) quot.push_back(q);
        }
        Ideal qi = ideal_canonical(Ideal(ideal.nvars(), std::move(quot)), ord, budget);
        acc = acc ? intersect(*acc, qi, budget) : qi;
    }
    return ideal_canonical(*acc, ord, budget);
}

Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& vars_to_drop,
                const Budget& budget) {
    if (vars_to_drop.empty())
        return ideal_canonical(ideal, TermOrder::grevlex(ideal.nvars()), budget);
    std::size_t n = ideal.nvars();
    std::vector<bool> drop(n, false);
    for (std::size_t v : vars_to_drop) drop[v] = true;
    std::vector<int> precedence;
    for (std::size_t v = 0; v < n; ++v)
        if (drop[v]) precedence.push_back(static_cast<int>(v));
    std::size_t elim = precedence.size();
    for (std::size_t v = 0; v < n; ++v)
        if (!drop[v]) precedence.push_back(static_cast<int>(v));
    TermOrder ord = TermOrder::block(precedence, elim);
    GroebnerBasis gb = groebner_basis(ideal, ord, budget);
    std::vector<Polynomial> kept;
    for (const auto& g : gb.basis()) {
        bool uses_dropped = false;
        for (const auto& [m, c] : g.terms())
            for (std::size_t v = 0; v < n && !uses_dropped; ++v)
                if (drop[v] && m.exp(v) > 0) uses_dropped = true;
        if (!uses_dropped) kept.push_back(g);
    }
    return ideal_canonical(Ideal(n, std::move(kept)), TermOrder::grevlex(n), budget);
}

Ideal intersect(const Ideal& a, const Ideal& b, const Budget& budget) {
    // t*I + (1-t)*J, eliminate t.
    std::size_t n = a.nvars() + 1;
    Polynomial t = Polynomial::variable(n, n - 1);
    Polynomial one = Polynomial::constant(n, Rational(1));
    std::vector<Polynomial> gens;
    for (const auto& f : a.gens()) gens.push_back(f.with_nvars(n) * t);
    for (const auto& g : b.gens()) gens.push_back(g.with_nvars(n) * (one - t));
    Ideal mixed(n, std::move(gens));
    Ideal res = eliminate(mixed, {n - 1}, budget);
    std::vector<Polynomial> back;
    for (const auto& f : res.gens()) back.push_back(f.with_nvars(a.nvars()));
    return ideal_canonical(Ideal(a.nvars(), std::move(back)), TermOrder::grevlex(a.nvars()),
                           budget);
}

bool radical_member(const Polynomial& f, const Ideal& ideal, const Budget& budget) {
    if (f.is_zero()) return true;
    std::size_t n = ideal.nvars() + 1;
    Polynomial t = Polynomial::variable(n, n - 1);
    Polynomial one = Polynomial::constant(n, Rational(1));
    std::vector<Polynomial> gens;
    for (const auto& g : ideal.gens()) gens.push_back(g.with_nvars(n));
    gens.push_back(one - t * f.with_nvars(n));
    GroebnerBasis gb = groebner_basis(Ideal(n, std::move(gens)), TermOrder::grevlex(n), budget);
    return contains_unit(gb);
}

int krull_dim(const Ideal& ideal, const Budget& budget) {
    std::size_t n = ideal.nvars();
    GroebnerBasis gb = groebner_basis(ideal, TermOrder::grevlex(n), budget);
    if (contains_unit(gb)) return -1;
    std::vector<std::vector<std::size_t>> supports;
    for (const auto& g : gb.basis()) {
        const Monomial& lm = g.leading_monomial(gb.order());
        std::vector<std::size_t> supp;
        for (std::size_t v = 0; v < n; ++v)
            if (lm.exp(v) > 0) supp.push_back(v);
        supports.push_back(std::move(supp));
    }
    // A variable set is independent iff it contains no generator's support.
    int best = 0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        bool independent = true;
        for (const auto& supp : supports) {
            bool inside = !supp.empty();
            for (std::size_t v : supp)
                if (!(mask & (std::size_t{1} << v))) inside = false;
            if (inside) {
                independent = false;
                break;
            }
        }
        if (independent) best = std::max(best, __builtin_popcountll(mask));
    }
    return best;
}

Ideal saturate(const Ideal& ideal, const Ideal& divisor, const Budget& budget) {
    Ideal current = ideal_canonical(ideal, TermOrder::grevlex(ideal.nvars()), budget);
    for (int round = 0; round < budget.saturation_rounds; ++round) {
        Ideal next = ideal_quotient(current, divisor, budget);
        if (next == current) return current;
        current = next;
    }
    throw ResourceLimit("saturation did not stabilize");
}

}  // namespace modloci

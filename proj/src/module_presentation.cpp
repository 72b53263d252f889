#include "modloci/module_presentation.hpp"

#include <algorithm>

#include "modloci/errors.hpp"

namespace modloci {

ModulePresentation::ModulePresentation(RingPtr ring, std::size_t generators, PolyMatrix relations)
    : ring_(std::move(ring)), gens_(generators), rel_(std::move(relations)) {
    if (rel_.rows() == 0 && rel_.cols() == 0)
        rel_ = PolyMatrix(gens_, 0, ring_->nvars());
    if (rel_.rows() != gens_) throw Error("module presentation: row count != generators");
    rel_ = ring_->reduce(rel_);
    rel_ = tidy_columns(rel_, ring_->order());
}

ModulePresentation ModulePresentation::free_module(RingPtr ring, std::size_t rank) {
    std::size_t n = ring->nvars();
    return ModulePresentation(std::move(ring), rank, PolyMatrix(rank, 0, n));
}

ModulePresentation ModulePresentation::cyclic(RingPtr ring, const Ideal& ideal) {
    std::size_t n = ring->nvars();
    PolyMatrix rel(1, ideal.gens().size(), n);
    for (std::size_t j = 0; j < ideal.gens().size(); ++j) rel.at(0, j) = ideal.gens()[j];
    return ModulePresentation(std::move(ring), 1, std::move(rel));
}

ModulePresentation ModulePresentation::zero(RingPtr ring) {
    std::size_t n = ring->nvars();
    return ModulePresentation(std::move(ring), 0, PolyMatrix(0, 0, n));
}

PolyMatrix relation_block_for_ring(const AffineRing& ring, std::size_t generators) {
    const auto& jgens = ring.relations().gens();
    PolyMatrix block(generators, generators * jgens.size(), ring.nvars());
    for (std::size_t i = 0; i < generators; ++i)
        for (std::size_t k = 0; k < jgens.size(); ++k)
            block.at(i, i * jgens.size() + k) = jgens[k];
    return block;
}

PolyMatrix ModulePresentation::relations_over_s() const {
    return hcat(rel_, relation_block_for_ring(*ring_, gens_));
}

const ModuleBasis& ModulePresentation::relation_basis(const Budget& budget) const {
    if (!basis_cache_) {
        PolyMatrix full = relations_over_s();
        basis_cache_ = std::make_shared<const ModuleBasis>(
            module_groebner(gens_, full.columns(), ring_->order(), budget));
    }
    return *basis_cache_;
}

PolyMatrix syzygies(const AffineRing& ring, const PolyMatrix& a, const Budget& budget) {
    std::size_t m = a.cols();
    PolyMatrix augmented = hcat(a, relation_block_for_ring(ring, a.rows()));
    PolyMatrix ker = kernel_free(augmented, ring.order(), budget);
    // Keep the coordinates for the original columns.
    PolyMatrix out(m, 0, ring.nvars());
    std::vector<PolyVec> cols;
    for (std::size_t c = 0; c < ker.cols(); ++c) {
        PolyVec v(m, Polynomial(ring.nvars()));
        for (std::size_t r = 0; r < m; ++r) v[r] = ring.reduce(ker.at(r, c));
        if (!vec_is_zero(v)) cols.push_back(std::move(v));
    }
    return tidy_columns(PolyMatrix::from_columns(m, cols, ring.nvars()), ring.order());
}

bool in_relations(const ModulePresentation& m, const PolyVec& v, const Budget& budget) {
    if (m.generators() == 0) return true;
    return module_member(m.ring()->reduce(v), m.relation_basis(budget));
}

bool is_zero_module(const ModulePresentation& m, const Budget& budget) {
    if (m.ring()->is_zero_ring()) return true;
    for (std::size_t i = 0; i < m.generators(); ++i) {
        PolyVec e(m.generators(), Polynomial(m.ring()->nvars()));
        e[i] = Polynomial::constant(m.ring()->nvars(), Rational(1));
        if (!in_relations(m, e, budget)) return false;
    }
    return true;
}

namespace {

void all_minors(const PolyMatrix& a, std::size_t size, std::vector<Polynomial>& out) {
    std::size_t rows = a.rows(), cols = a.cols();
    if (size == 0 || size > rows || size > cols) return;
    std::vector<std::size_t> rsel(size), csel(size);
    std::iota(rsel.begin(), rsel.end(), 0);
    auto det = [&](const std::vector<std::size_t>& rs,
                   const std::vector<std::size_t>& cs) -> Polynomial {
        // Cofactor expansion; minors here are small.
        std::function<Polynomial(std::vector<std::size_t>, std::vector<std::size_t>)> go =
            [&](std::vector<std::size_t> r, std::vector<std::size_t> c) -> Polynomial {
            if (r.size() == 1) return a.at(r[0], c[0]);
            Polynomial acc(a.nvars());
            std::vector<std::size_t> rrest(r.begin() + 1, r.end());
            for (std::size_t k = 0; k < c.size(); ++k) {
                const Polynomial& pivot = a.at(r[0], c[k]);
                if (pivot.is_zero()) continue;
                std::vector<std::size_t> crest;
                for (std::size_t t = 0; t < c.size(); ++t)
                    if (t != k) crest.push_back(c[t]);
                Polynomial sub = go(rrest, crest);
                Polynomial contrib = pivot * sub;
                acc = (k % 2 == 0) ? acc + contrib : acc - contrib;
            }
            return acc;
        };
        return go(rs, cs);
    };
    std::function<void(std::size_t, std::size_t, std::vector<std::size_t>&)> choose_r =
        [&](std::size_t start, std::size_t left, std::vector<std::size_t>& acc) {
            if (left == 0) {
                std::vector<std::size_t> cacc;
                std::function<void(std::size_t, std::size_t)> choose_c = [&](std::size_t cstart,
                                                                             std::size_t cleft) {
                    if (cleft == 0) {
                        Polynomial d = det(acc, cacc);
                        if (!d.is_zero()) out.push_back(d);
                        return;
                    }
                    for (std::size_t c = cstart; c + cleft <= cols; ++c) {
                        cacc.push_back(c);
                        choose_c(c + 1, cleft - 1);
                        cacc.pop_back();
                    }
                };
                choose_c(0, size);
                return;
            }
            for (std::size_t r = start; r + left <= rows; ++r) {
                acc.push_back(r);
                choose_r(r + 1, left - 1, acc);
                acc.pop_back();
            }
        };
    std::vector<std::size_t> acc;
    choose_r(0, size, acc);
}

}  // namespace

Ideal fitting_ideal(const ModulePresentation& m, int r, const Budget& budget) {
    const AffineRing& ring = *m.ring();
    std::size_t n = ring.nvars();
    long g = static_cast<long>(m.generators());
    if (r >= g) return Ideal::unit(n);
    std::size_t size = static_cast<std::size_t>(g - r);
    PolyMatrix a = m.relations_over_s();
    std::vector<Polynomial> minors;
    all_minors(a, size, minors);
    std::vector<Polynomial> gens;
    for (auto& d : minors) {
        Polynomial red = ring.reduce(d);
        if (!red.is_zero()) gens.push_back(red);
    }
    for (const auto& j : ring.relations().gens()) gens.push_back(j);
    return ideal_canonical(Ideal(n, std::move(gens)), ring.order(), budget);
}

Ideal annihilator(const ModulePresentation& m, const Budget& budget) {
    const AffineRing& ring = *m.ring();
    std::size_t n = ring.nvars();
    if (m.generators() == 0 || ring.is_zero_ring()) return Ideal::unit(n);
    std::optional<Ideal> acc;
    for (std::size_t i = 0; i < m.generators(); ++i) {
        PolyVec e(m.generators(), Polynomial(n));
        e[i] = Polynomial::constant(n, Rational(1));
        Ideal coli = colon_into_relations(m, e, budget);
        acc = acc ? intersect(*acc, coli, budget) : coli;
    }
    return ideal_canonical(*acc, ring.order(), budget);
}

Ideal colon_into_relations(const ModulePresentation& m, const PolyVec& v, const Budget& budget) {
    const AffineRing& ring = *m.ring();
    std::size_t n = ring.nvars();
    PolyMatrix vm = PolyMatrix::from_columns(m.generators(), {ring.reduce(v)}, n);
    PolyMatrix full = hcat(vm, m.relations_over_s());
    PolyMatrix ker = kernel_free(full, ring.order(), budget);
    std::vector<Polynomial> gens;
    for (std::size_t c = 0; c < ker.cols(); ++c) {
        Polynomial f = ring.reduce(ker.at(0, c));
        if (!f.is_zero()) gens.push_back(f);
    }
    for (const auto& j : ring.relations().gens()) gens.push_back(j);
    return ideal_canonical(Ideal(n, std::move(gens)), ring.order(), budget);
}

ModulePresentation multiplication_kernel(const ModulePresentation& m, const Polynomial& x,
                                         const Budget& budget) {
    const AffineRing& ring = *m.ring();
    std::size_t n = ring.nvars();
    std::size_t g = m.generators();
    // {w in R^g : x*w in relations}: kernel of [x*I | relations] projected
    // onto the first block, then presented as a subquotient of M.
    PolyMatrix xid(g, g, n);
    for (std::size_t i = 0; i < g; ++i) xid.at(i, i) = ring.reduce(x);
    PolyMatrix full = hcat(xid, m.relations_over_s());
    PolyMatrix ker = kernel_free(full, ring.order(), budget);
    std::vector<PolyVec> cols;
    for (std::size_t c = 0; c < ker.cols(); ++c) {
        PolyVec w(g, Polynomial(n));
        for (std::size_t r = 0; r < g; ++r) w[r] = ring.reduce(ker.at(r, c));
        if (!vec_is_zero(w) && !in_relations(m, w, budget)) cols.push_back(std::move(w));
    }
    PolyMatrix gens_matrix = tidy_columns(PolyMatrix::from_columns(g, cols, n), ring.order());
    return submodule_presentation(m, gens_matrix, budget);
}

bool is_nonzerodivisor(const Polynomial& x, const ModulePresentation& m, const Budget& budget) {
    const AffineRing& ring = *m.ring();
    std::size_t n = ring.nvars();
    std::size_t g = m.generators();
    if (g == 0) return true;
    PolyMatrix xid(g, g, n);
    for (std::size_t i = 0; i < g; ++i) xid.at(i, i) = ring.reduce(x);
    PolyMatrix full = hcat(xid, m.relations_over_s());
    PolyMatrix ker = kernel_free(full, ring.order(), budget);
    for (std::size_t c = 0; c < ker.cols(); ++c) {
        PolyVec w(g, Polynomial(n));
        for (std::size_t r = 0; r < g; ++r) w[r] = ker.at(r, c);
        if (!in_relations(m, w, budget)) return false;
    }
    return true;
}

ModulePresentation quotient_module(const ModulePresentation& m, const Ideal& ideal,
                                   const Budget& budget) {
    const AffineRing& ring = *m.ring();
    Ideal jplus = ideal_sum(ring.relations(), ideal);
    auto new_ring = AffineRing::quotient(ring.vars(), jplus, budget);
    return ModulePresentation(new_ring, m.generators(), new_ring->reduce(m.relations()));
}

ModulePresentation submodule_presentation(const ModulePresentation& m, const PolyMatrix& cols,
                                          const Budget& budget) {
    const AffineRing& ring = *m.ring();
    std::size_t n = ring.nvars();
    std::size_t t = cols.cols();
    if (t == 0) return ModulePresentation::zero(m.ring());
    // Relations among the chosen generators inside M: kernel of
    // [cols | relations] projected to the first t coordinates.
    PolyMatrix full = hcat(cols, m.relations_over_s());
    PolyMatrix ker = kernel_free(full, ring.order(), budget);
    std::vector<PolyVec> rel_cols;
    for (std::size_t c = 0; c < ker.cols(); ++c) {
        PolyVec w(t, Polynomial(n));
        for (std::size_t r = 0; r < t; ++r) w[r] = ring.reduce(ker.at(r, c));
        if (!vec_is_zero(w)) rel_cols.push_back(std::move(w));
    }
    return ModulePresentation(m.ring(), t,
                              tidy_columns(PolyMatrix::from_columns(t, rel_cols, n), ring.order()));
}

ModulePresentation prune_presentation(const ModulePresentation& m, const Budget& budget) {
    const AffineRing& ring = *m.ring();
    PolyMatrix a = m.relations();
    std::size_t g = m.generators();
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < a.rows() && !changed; ++i) {
            for (std::size_t j = 0; j < a.cols() && !changed; ++j) {
                if (!a.at(i, j).is_unit_constant()) continue;
                Rational u = a.at(i, j).terms().begin()->second;
                // Clear row i and column j, then cancel the summand.
                for (std::size_t c = 0; c < a.cols(); ++c) {
                    if (c == j || a.at(i, c).is_zero()) continue;
                    Polynomial factor = a.at(i, c).scaled(1 / u);
                    for (std::size_t r = 0; r < a.rows(); ++r)
                        a.at(r, c) = ring.reduce(a.at(r, c) - factor * a.at(r, j));
                }
                a = a.without_row_col(i, j);
                g -= 1;
                changed = true;
            }
        }
    }
    (void)budget;
    return ModulePresentation(m.ring(), g, std::move(a));
}

bool is_regular_sequence(const std::vector<Polynomial>& xs, const ModulePresentation& m,
                         const Budget& budget) {
    ModulePresentation current = m;
    for (const auto& x : xs) {
        if (is_zero_module(current, budget)) return false;
        if (!is_nonzerodivisor(x, current, budget)) return false;
        current = quotient_module(current, Ideal(m.ring()->nvars(), {x}), budget);
    }
    return !is_zero_module(current, budget);
}

}  // namespace modloci

#include "modloci/module_gb.hpp"

#include <algorithm>

#include "modloci/errors.hpp"

namespace modloci {

namespace {

/// -1/0/+1 comparing module terms (c1,m1) vs (c2,m2), position over term,
/// lower component index dominating.
int mod_term_cmp(std::size_t c1, const Monomial& m1, std::size_t c2, const Monomial& m2,
                 const TermOrder& ord) {
    if (c1 != c2) return c1 < c2 ? 1 : -1;
    return ord.compare(m1, m2);
}

}  // namespace

bool vec_is_zero(const PolyVec& v) {
    for (const auto& p : v)
        if (!p.is_zero()) return false;
    return true;
}

std::pair<std::size_t, Monomial> ModuleBasis::leading(const PolyVec& v) const {
    for (std::size_t c = 0; c < v.size(); ++c)
        if (!v[c].is_zero()) return {c, v[c].leading_monomial(ord_)};
    throw ZeroPolynomial("leading term of zero module element");
}

Rational ModuleBasis::leading_coeff(const PolyVec& v) const {
    auto [c, m] = leading(v);
    return v[c].terms().at(m);
}

PolyVec vec_sub_scaled(const PolyVec& a, const PolyVec& b, const Monomial& m, const Rational& c) {
    PolyVec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] - b[i].times_term(m, c);
    return r;
}

namespace {

PolyVec scale_monic(const PolyVec& v, const ModuleBasis& ctx) {
    Rational lc = ctx.leading_coeff(v);
    PolyVec r = v;
    for (auto& p : r) p = p.scaled(1 / lc);
    return r;
}

/// One full reduction pass of v against basis elements.
PolyVec reduce_vec(const PolyVec& v, const std::vector<PolyVec>& basis, const ModuleBasis& ctx) {
    const TermOrder& ord = ctx.order();
    PolyVec rem(v.size(), Polynomial(ord.nvars()));
    PolyVec work = v;
    while (!vec_is_zero(work)) {
        auto [wc, wm] = ctx.leading(work);
        Rational wcoef = work[wc].terms().at(wm);
        bool reduced = false;
        for (const auto& g : basis) {
            if (vec_is_zero(g)) continue;
            auto [gc, gm] = ctx.leading(g);
            if (gc != wc || !gm.divides(wm)) continue;
            Rational gcoef = g[gc].terms().at(gm);
            work = vec_sub_scaled(work, g, wm / gm, wcoef / gcoef);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem[wc].add_term(wm, wcoef);
            Polynomial t = Polynomial::term(wm, wcoef);
            work[wc] = work[wc] - t;
        }
    }
    return rem;
}

}  // namespace

ModuleBasis module_groebner(std::size_t components, const std::vector<PolyVec>& gens,
                            const TermOrder& ord, const Budget& budget) {
    ModuleBasis ctx(components, ord);
    std::vector<PolyVec> basis;
    for (const auto& g : gens)
        if (!vec_is_zero(g)) basis.push_back(scale_monic(g, ctx));

    struct Pair {
        std::size_t i, j;
        int degree;
    };
    std::vector<Pair> queue;
    auto enqueue = [&](std::size_t i, std::size_t j) {
        auto [ci, mi] = ctx.leading(basis[i]);
        auto [cj, mj] = ctx.leading(basis[j]);
        if (ci != cj) return;  // S-pairs only share a leading component
        queue.push_back(Pair{i, j, Monomial::lcm(mi, mj).degree()});
    };
    for (std::size_t j = 1; j < basis.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) enqueue(i, j);

    std::int64_t steps = 0;
    while (!queue.empty()) {
        auto it = std::min_element(queue.begin(), queue.end(), [](const Pair& a, const Pair& b) {
            if (a.degree != b.degree) return a.degree < b.degree;
            if (a.i != b.i) return a.i < b.i;
            return a.j < b.j;
        });
        Pair p = *it;
        queue.erase(it);
        if (++steps > budget.gb_steps) throw ResourceLimit("module groebner step budget exceeded");

        auto [ci, mi] = ctx.leading(basis[p.i]);
        auto [cj, mj] = ctx.leading(basis[p.j]);
        Monomial l = Monomial::lcm(mi, mj);
        // s-vector: (l/mi)*g_i - (l/mj)*g_j, both monic.
        PolyVec s(components, Polynomial(ord.nvars()));
        for (std::size_t c = 0; c < components; ++c)
            s[c] = basis[p.i][c].times_term(l / mi, Rational(1)) -
                   basis[p.j][c].times_term(l / mj, Rational(1));

        PolyVec r = reduce_vec(s, basis, ctx);
        if (!vec_is_zero(r)) {
            basis.push_back(scale_monic(r, ctx));
            for (std::size_t i = 0; i + 1 < basis.size(); ++i) enqueue(i, basis.size() - 1);
        }
    }

    // Light interreduction: drop elements whose leading term another leading
    // term divides, then fully reduce tails.
    std::vector<PolyVec> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        auto [ci, mi] = ctx.leading(basis[i]);
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            auto [cj, mj] = ctx.leading(basis[j]);
            if (cj == ci && mj.divides(mi) && !(mi == mj && j > i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    std::vector<PolyVec> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<PolyVec> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        PolyVec r = others.empty() ? minimal[i] : reduce_vec(minimal[i], others, ctx);
        if (!vec_is_zero(r)) reduced.push_back(scale_monic(r, ctx));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const PolyVec& a, const PolyVec& b) {
        auto [ca, ma] = ctx.leading(a);
        auto [cb, mb] = ctx.leading(b);
        int c = mod_term_cmp(ca, ma, cb, mb, ord);
        if (c != 0) return c < 0;
        return a < b;
    });
    ctx.set_elements(std::move(reduced));
    return ctx;
}

PolyVec module_normal_form(const PolyVec& v, const ModuleBasis& basis) {
    if (vec_is_zero(v) || basis.elements().empty()) return v;
    return reduce_vec(v, basis.elements(), basis);
}

bool module_member(const PolyVec& v, const ModuleBasis& basis) {
    return vec_is_zero(module_normal_form(v, basis));
}

PolyMatrix kernel_free(const PolyMatrix& a, const TermOrder& ord, const Budget& budget) {
    std::size_t g = a.rows(), m = a.cols(), n = a.nvars();
    if (m == 0) return PolyMatrix(0, 0, n);
    // Augmented generators (a_j ; e_j) in S^{g+m}; with the top block
    // dominating, basis elements with zero top project onto the syzygies.
    std::vector<PolyVec> gens;
    for (std::size_t j = 0; j < m; ++j) {
        PolyVec v(g + m, Polynomial(n));
        for (std::size_t r = 0; r < g; ++r) v[r] = a.at(r, j);
        v[g + j] = Polynomial::constant(n, Rational(1));
        gens.push_back(std::move(v));
    }
    ModuleBasis basis = module_groebner(g + m, gens, ord, budget);
    std::vector<PolyVec> cols;
    for (const auto& e : basis.elements()) {
        bool top_zero = true;
        for (std::size_t r = 0; r < g; ++r)
            if (!e[r].is_zero()) top_zero = false;
        if (!top_zero) continue;
        cols.emplace_back(e.begin() + static_cast<long>(g), e.end());
    }
    return tidy_columns(PolyMatrix::from_columns(m, cols, n), ord);
}

PolyMatrix tidy_columns(const PolyMatrix& a, const TermOrder& ord) {
    ModuleBasis ctx(a.rows(), ord);
    std::vector<PolyVec> cols;
    for (std::size_t c = 0; c < a.cols(); ++c) {
        PolyVec v = a.column(c);
        if (vec_is_zero(v)) continue;
        cols.push_back(scale_monic(v, ctx));
    }
    std::sort(cols.begin(), cols.end(), [&](const PolyVec& x, const PolyVec& y) {
        auto [cx, mx] = ctx.leading(x);
        auto [cy, my] = ctx.leading(y);
        int c = mod_term_cmp(cx, mx, cy, my, ord);
        if (c != 0) return c > 0;
        return x < y;
    });
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    return PolyMatrix::from_columns(a.rows(), cols, a.nvars());
}

}  // namespace modloci

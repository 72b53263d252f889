#pragma once

#include <numeric>
#include <vector>

#include "modloci/monomial.hpp"

namespace modloci {

/// Monomial term order: total, multiplicative, with 1 as minimum.
///
/// `precedence` is a permutation of variable indices, most significant
/// first.  A block order compares the first `block` variables (in
/// precedence order) by graded reverse lexicographic, then the rest; it is
/// the elimination order used to drop those variables.
class TermOrder {
public:
    enum class Kind { Lex, Grevlex, Block };

    static TermOrder lex(std::size_t nvars) { return TermOrder(Kind::Lex, identity(nvars), 0); }
    static TermOrder grevlex(std::size_t nvars) {
        return TermOrder(Kind::Grevlex, identity(nvars), 0);
    }
    static TermOrder block(std::vector<int> precedence, std::size_t elim_count) {
        return TermOrder(Kind::Block, std::move(precedence), elim_count);
    }
    static TermOrder with_precedence(Kind kind, std::vector<int> precedence,
                                     std::size_t elim_count = 0) {
        return TermOrder(kind, std::move(precedence), elim_count);
    }

    Kind kind() const { return kind_; }
    std::size_t nvars() const { return precedence_.size(); }
    std::size_t elim_count() const { return elim_; }
    const std::vector<int>& precedence() const { return precedence_; }

    /// true iff a < b in this order.
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    /// -1, 0, +1.
    int compare(const Monomial& a, const Monomial& b) const {
        switch (kind_) {
            case Kind::Lex:
                return cmp_lex(a, b, 0, precedence_.size());
            case Kind::Grevlex:
                return cmp_grevlex(a, b, 0, precedence_.size());
            case Kind::Block: {
                int c = cmp_grevlex(a, b, 0, elim_);
                if (c != 0) return c;
                return cmp_grevlex(a, b, elim_, precedence_.size());
            }
        }
        return 0;
    }

    bool operator==(const TermOrder& o) const {
        return kind_ == o.kind_ && precedence_ == o.precedence_ && elim_ == o.elim_;
    }

private:
    TermOrder(Kind kind, std::vector<int> precedence, std::size_t elim)
        : kind_(kind), precedence_(std::move(precedence)), elim_(elim) {}

    static std::vector<int> identity(std::size_t n) {
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        return p;
    }

    int cmp_lex(const Monomial& a, const Monomial& b, std::size_t from, std::size_t to) const {
        for (std::size_t i = from; i < to; ++i) {
            int d = a.exp(precedence_[i]) - b.exp(precedence_[i]);
            if (d != 0) return d > 0 ? 1 : -1;
        }
        return 0;
    }

    int cmp_grevlex(const Monomial& a, const Monomial& b, std::size_t from,
                    std::size_t to) const {
        int da = 0, db = 0;
        for (std::size_t i = from; i < to; ++i) {
            da += a.exp(precedence_[i]);
            db += b.exp(precedence_[i]);
        }
        if (da != db) return da > db ? 1 : -1;
        for (std::size_t i = to; i-- > from;) {
            int d = a.exp(precedence_[i]) - b.exp(precedence_[i]);
            if (d != 0) return d < 0 ? 1 : -1;
        }
        return 0;
    }

    Kind kind_;
    std::vector<int> precedence_;
    std::size_t elim_;
};

}  // namespace modloci

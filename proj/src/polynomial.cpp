#include "modloci/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "modloci/errors.hpp"

namespace modloci {

Rational rat_from_string(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0) throw ParseError(0, "bad rational literal '" + text + "'");
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rational& q) { return q.get_str(); }

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& vars) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        if (m.exp(i) == 0) continue;
        if (!first) os << "*";
        os << vars[i];
        if (m.exp(i) > 1) os << "^" << m.exp(i);
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
    Polynomial p(nvars);
    if (c != 0) p.terms_.emplace(Monomial(nvars), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
    Polynomial p(nvars);
    std::vector<int> e(nvars, 0);
    e[index] = 1;
    p.terms_.emplace(Monomial(std::move(e)), Rational(1));
    return p;
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
    Polynomial p(m.nvars());
    if (c != 0) p.terms_.emplace(m, c);
    return p;
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r(nvars_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial r(nvars_);
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const Rational& c) const {
    Polynomial r(nvars_);
    if (c == 0) return r;
    for (const auto& [m1, c1] : terms_) r.terms_.emplace(m1 * m, c1 * c);
    return r;
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0) throw NegativeExponent("polynomial power " + std::to_string(e));
    Polynomial r = Polynomial::constant(nvars_, Rational(1));
    for (int i = 0; i < e; ++i) r = r * (*this);
    return r;
}

std::pair<Monomial, Rational> Polynomial::leading_term(const TermOrder& ord) const {
    if (terms_.empty()) throw ZeroPolynomial("leading term requested");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (ord.greater(it->first, best->first)) best = it;
    return {best->first, best->second};
}

const Monomial& Polynomial::leading_monomial(const TermOrder& ord) const {
    if (terms_.empty()) throw ZeroPolynomial("leading monomial requested");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (ord.greater(it->first, best->first)) best = it;
    return best->first;
}

Polynomial Polynomial::monic(const TermOrder& ord) const {
    if (terms_.empty()) return *this;
    return scaled(1 / leading_term(ord).second);
}

std::string Polynomial::to_string(const std::vector<std::string>& vars) const {
    return to_string(vars, TermOrder::grevlex(nvars_));
}

std::string Polynomial::to_string(const std::vector<std::string>& vars,
                                  const TermOrder& ord) const {
    if (terms_.empty()) return "0";
    std::vector<const TermMap::value_type*> sorted;
    sorted.reserve(terms_.size());
    for (const auto& t : terms_) sorted.push_back(&t);
    std::sort(sorted.begin(), sorted.end(),
              [&](const auto* a, const auto* b) { return ord.greater(a->first, b->first); });
    std::ostringstream os;
    bool first = true;
    for (const auto* t : sorted) {
        Rational c = t->second;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Rational a = abs(c);
        if (t->first.is_one()) {
            os << rat_to_string(a);
        } else {
            if (a != 1) os << rat_to_string(a) << "*";
            os << monomial_to_string(t->first, vars);
        }
        first = false;
    }
    return os.str();
}

Polynomial Polynomial::with_nvars(std::size_t nvars) const {
    Polynomial r(nvars);
    for (const auto& [m, c] : terms_) {
        std::vector<int> e(nvars, 0);
        for (std::size_t i = 0; i < m.nvars(); ++i) {
            if (m.exp(i) == 0) continue;
            if (i >= nvars) throw Error("with_nvars would drop a used variable");
            e[i] = m.exp(i);
        }
        r.terms_.emplace(Monomial(std::move(e)), c);
    }
    return r;
}

}  // namespace modloci

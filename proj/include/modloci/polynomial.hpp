#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "modloci/monomial.hpp"
#include "modloci/rational.hpp"
#include "modloci/term_order.hpp"

namespace modloci {

/// Immutable multivariate polynomial over the rationals.  Terms live in a
/// map keyed by the canonical storage order, so algebraically equal
/// polynomials have identical representations regardless of any term order.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational>;

    Polynomial() = default;
    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

    static Polynomial zero(std::size_t nvars) { return Polynomial(nvars); }
    static Polynomial constant(std::size_t nvars, const Rational& c);
    static Polynomial variable(std::size_t nvars, std::size_t index);
    static Polynomial term(const Monomial& m, const Rational& c);

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }
    /// Nonzero constant (a unit of the polynomial ring).
    bool is_unit_constant() const { return terms_.size() == 1 && terms_.begin()->first.is_one(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    int total_degree() const;  // -1 for the zero polynomial

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Rational& c) const;
    Polynomial times_term(const Monomial& m, const Rational& c) const;
    Polynomial pow(int e) const;

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return terms_ != o.terms_; }
    /// Storage comparison for deterministic container use.
    bool operator<(const Polynomial& o) const { return terms_ < o.terms_; }

    /// The ord-maximal term.  Throws ZeroPolynomial on zero input.
    std::pair<Monomial, Rational> leading_term(const TermOrder& ord) const;
    const Monomial& leading_monomial(const TermOrder& ord) const;

    /// Scales so the ord-leading coefficient is 1.
    Polynomial monic(const TermOrder& ord) const;

    void add_term(const Monomial& m, const Rational& c);  // builder use only

    std::string to_string(const std::vector<std::string>& vars) const;
    std::string to_string(const std::vector<std::string>& vars, const TermOrder& ord) const;

    /// Extends or restricts the ambient variable count; new variables get
    /// exponent 0, dropped variables must be unused.
    Polynomial with_nvars(std::size_t nvars) const;

private:
    std::size_t nvars_ = 0;
    TermMap terms_;
};

}  // namespace modloci

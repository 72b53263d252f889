#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace modloci {

/// Exponent vector of fixed length (= number of ring variables).
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {}

    std::size_t nvars() const { return exps_.size(); }
    int exp(std::size_t i) const { return exps_[i]; }
    const std::vector<int>& exps() const { return exps_; }

    int degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }
    bool is_one() const {
        for (int e : exps_)
            if (e != 0) return false;
        return true;
    }

    bool divides(const Monomial& other) const {
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > other.exps_[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& other) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
        return r;
    }

    /// Exact quotient; caller guarantees divisibility.
    Monomial operator/(const Monomial& other) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= other.exps_[i];
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (std::size_t i = 0; i < r.exps_.size(); ++i)
            if (b.exps_[i] > r.exps_[i]) r.exps_[i] = b.exps_[i];
        return r;
    }

    static bool coprime(const Monomial& a, const Monomial& b) {
        for (std::size_t i = 0; i < a.exps_.size(); ++i)
            if (a.exps_[i] > 0 && b.exps_[i] > 0) return false;
        return true;
    }

    /// Storage order (plain lexicographic on exponent vectors).  This is the
    /// canonical container key, independent of any term order.
    bool operator<(const Monomial& other) const { return exps_ < other.exps_; }
    bool operator==(const Monomial& other) const { return exps_ == other.exps_; }
    bool operator!=(const Monomial& other) const { return exps_ != other.exps_; }

private:
    std::vector<int> exps_;
};

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& vars);

}  // namespace modloci

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "modloci/polynomial.hpp"

namespace modloci {

using PolyVec = std::vector<Polynomial>;

/// Dense matrix of polynomials; columns are the module elements most
/// operations consume.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
        : rows_(rows), cols_(cols), data_(rows * cols, Polynomial(nvars)), nvars_(nvars) {}

    static PolyMatrix from_columns(std::size_t rows, const std::vector<PolyVec>& cols,
                                   std::size_t nvars);
    static PolyMatrix identity(std::size_t n, std::size_t nvars);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nvars() const { return nvars_; }

    const Polynomial& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Polynomial& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    PolyVec column(std::size_t c) const;
    std::vector<PolyVec> columns() const;
    PolyMatrix transpose() const;
    PolyMatrix without_row_col(std::size_t row, std::size_t col) const;

    bool operator==(const PolyMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    std::string to_string(const std::vector<std::string>& vars) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Polynomial> data_;
    std::size_t nvars_ = 0;
};

/// Horizontal concatenation.
PolyMatrix hcat(const PolyMatrix& a, const PolyMatrix& b);
/// Kronecker-style block expansion: replaces each scalar entry a_ij of `a`
/// with a_ij * I_k.
PolyMatrix tensor_identity(const PolyMatrix& a, std::size_t k);

}  // namespace modloci

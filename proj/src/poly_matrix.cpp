#include "modloci/poly_matrix.hpp"

#include <sstream>

#include "modloci/errors.hpp"

namespace modloci {

PolyMatrix PolyMatrix::from_columns(std::size_t rows, const std::vector<PolyVec>& cols,
                                    std::size_t nvars) {
    PolyMatrix m(rows, cols.size(), nvars);
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows) throw Error("from_columns: ragged column");
        for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = cols[c][r];
    }
    return m;
}

PolyMatrix PolyMatrix::identity(std::size_t n, std::size_t nvars) {
    PolyMatrix m(n, n, nvars);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Polynomial::constant(nvars, Rational(1));
    return m;
}

PolyVec PolyMatrix::column(std::size_t c) const {
    PolyVec v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
    return v;
}

std::vector<PolyVec> PolyMatrix::columns() const {
    std::vector<PolyVec> out;
    out.reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
    return out;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix m(cols_, rows_, nvars_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
    return m;
}

PolyMatrix PolyMatrix::without_row_col(std::size_t row, std::size_t col) const {
    PolyMatrix m(rows_ - 1, cols_ - 1, nvars_);
    for (std::size_t r = 0, rr = 0; r < rows_; ++r) {
        if (r == row) continue;
        for (std::size_t c = 0, cc = 0; c < cols_; ++c) {
            if (c == col) continue;
            m.at(rr, cc) = at(r, c);
            ++cc;
        }
        ++rr;
    }
    return m;
}

std::string PolyMatrix::to_string(const std::vector<std::string>& vars) const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
        os << "[";
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) os << ", ";
            os << at(r, c).to_string(vars);
        }
        os << "]\n";
    }
    return os.str();
}

PolyMatrix hcat(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows() == 0 && a.cols() == 0) return b;
    if (b.rows() == 0 && b.cols() == 0) return a;
    if (a.rows() != b.rows()) throw Error("hcat: row mismatch");
    PolyMatrix m(a.rows(), a.cols() + b.cols(), a.nvars());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) m.at(r, c) = a.at(r, c);
        for (std::size_t c = 0; c < b.cols(); ++c) m.at(r, a.cols() + c) = b.at(r, c);
    }
    return m;
}

PolyMatrix tensor_identity(const PolyMatrix& a, std::size_t k) {
    PolyMatrix m(a.rows() * k, a.cols() * k, a.nvars());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            for (std::size_t t = 0; t < k; ++t) m.at(r * k + t, c * k + t) = a.at(r, c);
    return m;
}

}  // namespace modloci

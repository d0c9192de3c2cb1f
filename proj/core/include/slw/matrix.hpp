#pragma once

#include <cstddef>
#include <vector>

#include "slw/rational.hpp"

namespace slw {

// Dense matrix over Q. The universal carrier for group elements, nilpotents
// and coset representatives; everything here is exact.
class QMatrix {
public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

    static QMatrix identity(std::size_t n);
    static QMatrix zero(std::size_t rows, std::size_t cols) { return QMatrix(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    bool operator==(const QMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const QMatrix& o) const { return !(*this == o); }

    QMatrix operator*(const QMatrix& o) const;
    QMatrix operator+(const QMatrix& o) const;
    QMatrix operator-(const QMatrix& o) const;
    QMatrix scaled(const Rational& c) const;

    QMatrix transpose() const;
    bool is_zero() const;
    bool is_identity() const;

    // Exact determinant; fraction-free Bareiss over a common-denominator
    // integer lift for orders above 4, cofactor expansion below.
    Rational det() const;

    // Inverse via exact Gauss-Jordan. Throws domain_error when singular.
    QMatrix inverse() const;

    void swap_rows(std::size_t i, std::size_t j);

private:
    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

// Determinant of the submatrix with the given rows/columns (0-based,
// strictly increasing). |rows| = |cols| <= min dimensions.
Rational minor_of(const QMatrix& m, const std::vector<std::size_t>& rows,
                  const std::vector<std::size_t>& cols);

// Antisymmetric pairing on two equally sized sets of n-vectors: the
// determinant of the matrix of mutual dot products.
Rational epsilon_product(const std::vector<std::vector<Rational>>& a,
                         const std::vector<std::vector<Rational>>& b);

struct GaussResult {
    QMatrix reduced;    // row echelon form
    QMatrix transform;  // invertible, transform * input = reduced
    std::size_t rank;
};

GaussResult gauss_eliminate(const QMatrix& m);

} // namespace slw

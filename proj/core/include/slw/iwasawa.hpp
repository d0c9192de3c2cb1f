#pragma once

#include <vector>

#include "slw/matrix.hpp"

namespace slw {

// Small dense double matrix; the archimedean side never needs exactness.
class DMatrix {
public:
    DMatrix() : rows_(0), cols_(0) {}
    DMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0.0) {}

    static DMatrix identity(std::size_t n);
    static DMatrix from_rational(const QMatrix& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    double& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    DMatrix operator*(const DMatrix& o) const;
    DMatrix transpose() const;
    double det() const; // LU with partial pivoting

private:
    std::size_t rows_, cols_;
    std::vector<double> a_;
};

namespace iwasawa {

// Coordinates of g = n(x) a(y) k: x upper-triangular entries, y the
// positive torus parameters y_1 .. y_{n-1}.
struct RealIwasawa {
    std::size_t n = 0;
    std::vector<std::vector<double>> x; // x[mu][nu], 0-based, mu < nu
    std::vector<double> y;              // y[0] = y_1, ...

    double x_at(std::size_t mu1, std::size_t nu1) const { return x[mu1 - 1][nu1 - 1]; }
    double y_at(std::size_t i1) const { return y[i1 - 1]; }

    DMatrix n_matrix() const;
    DMatrix a_matrix() const;
};

struct Tolerances {
    double det_tol = 1e-10;
    double orth_tol = 1e-9;
};

// Epsilon-product route: y from the Gram determinants of trailing row
// sets, x from the mixed products. det(g) must be 1 within det_tol;
// degenerate Gram blocks raise conditioning_error naming the level.
RealIwasawa real_iwasawa(const DMatrix& g, const Tolerances& tol = Tolerances{});

// |eta_1|_p .. |eta_{n-1}|_p of a determinant-one rational matrix:
// |eta_{n-k}|_p = (max over order-k minors of the bottom k rows)^(-1).
// The outer inverse is the convention fixed by the SL_2 sanity case
// diag(p, 1/p) -> |eta_1|_p = 1/p and by the diag(z,1,...,1,1/z) family,
// whose norms all equal |z|_p.
struct PAdicTorusNorms {
    Int prime;
    std::vector<Rational> eta_norms; // each an integer power of prime
};

PAdicTorusNorms padic_eta_norms(const QMatrix& g, const Int& p);

// The max-of-norms of order-k minors of the bottom k rows (the quantity
// the worked examples tabulate before inverting).
std::vector<Rational> bottom_minor_norm_maxima(const QMatrix& g, const Int& p);

} // namespace iwasawa
} // namespace slw

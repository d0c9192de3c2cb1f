#include "slw/iwasawa.hpp"

#include <cmath>
#include <string>

#include "slw/errors.hpp"
#include "slw/padic.hpp"

namespace slw {

DMatrix DMatrix::identity(std::size_t n) {
    DMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

DMatrix DMatrix::from_rational(const QMatrix& q) {
    DMatrix m(q.rows(), q.cols());
    for (std::size_t i = 0; i < q.rows(); ++i)
        for (std::size_t j = 0; j < q.cols(); ++j) m(i, j) = rat_to_double(q(i, j));
    return m;
}

DMatrix DMatrix::operator*(const DMatrix& o) const {
    if (cols_ != o.rows_) throw domain_error("matrix product dimension mismatch");
    DMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const double x = (*this)(i, k);
            if (x == 0.0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
        }
    return r;
}

DMatrix DMatrix::transpose() const {
    DMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

double DMatrix::det() const {
    if (rows_ != cols_) throw domain_error("determinant of non-square matrix");
    DMatrix a = *this;
    const std::size_t n = rows_;
    double d = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t i = col + 1; i < n; ++i)
            if (std::fabs(a(i, col)) > std::fabs(a(piv, col))) piv = i;
        if (a(piv, col) == 0.0) return 0.0;
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
            d = -d;
        }
        d *= a(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            const double f = a(i, col) / a(col, col);
            for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
        }
    }
    return d;
}

namespace iwasawa {

DMatrix RealIwasawa::n_matrix() const {
    DMatrix m = DMatrix::identity(n);
    for (std::size_t mu = 0; mu < n; ++mu)
        for (std::size_t nu = mu + 1; nu < n; ++nu) m(mu, nu) = x[mu][nu];
    return m;
}

DMatrix RealIwasawa::a_matrix() const {
    DMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const double up = (i < n - 1) ? y[i] : 1.0;
        const double down = (i > 0) ? y[i - 1] : 1.0;
        m(i, i) = up / down;
    }
    return m;
}

namespace {

// epsilon(A_1..A_m; B_1..B_m) as the determinant of the dot-product matrix.
double epsilon_double(const std::vector<const double*>& a,
                      const std::vector<const double*>& b, std::size_t n) {
    const std::size_t m = a.size();
    DMatrix gram(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            double dot = 0.0;
            for (std::size_t k = 0; k < n; ++k) dot += a[i][k] * b[j][k];
            gram(i, j) = dot;
        }
    return gram.det();
}

} // namespace

RealIwasawa real_iwasawa(const DMatrix& g, const Tolerances& tol) {
    const std::size_t n = g.rows();
    if (n < 2 || g.cols() != n) throw domain_error("real Iwasawa needs a square matrix, n >= 2");
    if (std::fabs(g.det() - 1.0) > tol.det_tol)
        throw domain_error("real Iwasawa needs det(g) = 1");

    std::vector<std::vector<double>> rows(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) rows[i][j] = g(i, j);

    RealIwasawa out;
    out.n = n;
    out.y.assign(n - 1, 0.0);
    out.x.assign(n, std::vector<double>(n, 0.0));

    // y_mu^{-2} = eps(V_{mu+1}, ..., V_n; same)
    for (std::size_t mu = 1; mu <= n - 1; ++mu) {
        std::vector<const double*> tail;
        for (std::size_t r = mu; r < n; ++r) tail.push_back(rows[r].data());
        const double y2inv = epsilon_double(tail, tail, n);
        if (!(y2inv > 1e-280))
            throw conditioning_error("degenerate Gram block at level mu = " + std::to_string(mu));
        out.y[mu - 1] = 1.0 / std::sqrt(y2inv);
    }

    // x_{mu nu} = y_{nu-1}^2 eps(V_mu, V_{nu+1}, ..., V_n; V_nu, V_{nu+1}, ..., V_n)
    for (std::size_t mu = 1; mu <= n - 1; ++mu)
        for (std::size_t nu = mu + 1; nu <= n; ++nu) {
            std::vector<const double*> a{rows[mu - 1].data()};
            std::vector<const double*> b{rows[nu - 1].data()};
            for (std::size_t r = nu; r < n; ++r) {
                a.push_back(rows[r].data());
                b.push_back(rows[r].data());
            }
            const double ynu1 = out.y[nu - 2]; // y_{nu-1}
            out.x[mu - 1][nu - 1] = ynu1 * ynu1 * epsilon_double(a, b, n);
        }
    return out;
}

std::vector<Rational> bottom_minor_norm_maxima(const QMatrix& g, const Int& p) {
    const std::size_t n = g.rows();
    if (g.cols() != n || n < 2) throw domain_error("eta norms need a square matrix, n >= 2");
    if (g.det() != 1) throw domain_error("eta norms need det(g) = 1 exactly");
    if (!padic::is_prime(p)) throw domain_error("eta norms: " + p.str() + " is not prime");

    std::vector<Rational> maxima(n - 1, Rational(0));
    for (std::size_t k = 1; k <= n - 1; ++k) {
        std::vector<std::size_t> rows;
        for (std::size_t r = n - k; r < n; ++r) rows.push_back(r);
        // all order-k column subsets, lexicographic
        std::vector<std::size_t> cols(k);
        for (std::size_t i = 0; i < k; ++i) cols[i] = i;
        Rational best = 0;
        while (true) {
            const Rational m = minor_of(g, rows, cols);
            if (m != 0) best = std::max(best, padic::norm(m, p));
            // next combination
            std::size_t i = k;
            while (i > 0) {
                --i;
                if (cols[i] != i + n - k) {
                    ++cols[i];
                    for (std::size_t j = i + 1; j < k; ++j) cols[j] = cols[j - 1] + 1;
                    i = k + 1;
                    break;
                }
            }
            if (i != k + 1) break;
        }
        // det(g) = 1 expands along the bottom k rows, so some minor is
        // nonzero; best > 0 here
        maxima[k - 1] = best;
    }
    return maxima;
}

PAdicTorusNorms padic_eta_norms(const QMatrix& g, const Int& p) {
    const std::vector<Rational> maxima = bottom_minor_norm_maxima(g, p);
    const std::size_t n = g.rows();
    PAdicTorusNorms out;
    out.prime = p;
    out.eta_norms.assign(n - 1, Rational(1));
    for (std::size_t k = 1; k <= n - 1; ++k)
        out.eta_norms[n - k - 1] = Rational(1) / maxima[k - 1]; // |eta_{n-k}|_p
    return out;
}

} // namespace iwasawa
} // namespace slw

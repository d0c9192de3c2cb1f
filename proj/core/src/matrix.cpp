#include "slw/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace slw {

std::string rat_to_string(const Rational& q) {
    std::ostringstream os;
    os << num(q);
    if (den(q) != 1) os << "/" << den(q);
    return os.str();
}

Rational rat_from_string(const std::string& s) {
    auto bad = [&]() { throw domain_error("malformed rational: '" + s + "'"); };
    std::string t;
    for (char c : s)
        if (!isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) bad();
    const auto slash = t.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(t));
        Int n(t.substr(0, slash));
        Int d(t.substr(slash + 1));
        if (d == 0) bad();
        return Rational(n, d);
    } catch (const std::runtime_error&) {
        bad();
    }
    return Rational(0); // unreachable
}

double rat_to_double(const Rational& q) { return q.convert_to<double>(); }

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    if (cols_ != o.rows_) throw domain_error("matrix product dimension mismatch");
    QMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& x = (*this)(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
        }
    return r;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw domain_error("matrix sum dimension mismatch");
    QMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw domain_error("matrix sum dimension mismatch");
    QMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

QMatrix QMatrix::scaled(const Rational& c) const {
    QMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
    return r;
}

QMatrix QMatrix::transpose() const {
    QMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

bool QMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Rational& q) { return q == 0; });
}

bool QMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != Rational(i == j ? 1 : 0)) return false;
    return true;
}

void QMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c)
        std::swap((*this)(i, c), (*this)(j, c));
}

namespace {

Rational det_cofactor(const QMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    Rational acc = 0;
    QMatrix sub(n - 1, n - 1);
    for (std::size_t k = 0; k < n; ++k) {
        if (m(0, k) == 0) continue;
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t jj = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == k) continue;
                sub(i - 1, jj++) = m(i, j);
            }
        }
        Rational term = m(0, k) * det_cofactor(sub);
        acc += (k % 2 == 0) ? term : -term;
    }
    return acc;
}

// Bareiss on the integer lift: clears denominators row by row, runs the
// fraction-free elimination, and divides the scale factors back out.
Rational det_bareiss(const QMatrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    Rational scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Int lcm = 1;
        for (std::size_t j = 0; j < n; ++j) {
            const Int d = den(m(i, j));
            lcm = boost::multiprecision::lcm(lcm, d);
        }
        scale /= Rational(lcm);
        for (std::size_t j = 0; j < n; ++j) {
            const Rational v = m(i, j) * Rational(lcm);
            a[i][j] = num(v);
        }
    }
    Int prev = 1;
    int sgn = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(a[k], a[piv]);
            sgn = -sgn;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return scale * Rational(sgn * a[n - 1][n - 1]);
}

} // namespace

Rational QMatrix::det() const {
    if (rows_ != cols_) throw domain_error("determinant of non-square matrix");
    if (rows_ <= 4) return det_cofactor(*this);
    return det_bareiss(*this);
}

QMatrix QMatrix::inverse() const {
    if (rows_ != cols_) throw domain_error("inverse of non-square matrix");
    const std::size_t n = rows_;
    QMatrix a = *this;
    QMatrix inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col) == 0) ++piv;
        if (piv == n) throw domain_error("matrix is singular");
        a.swap_rows(col, piv);
        inv.swap_rows(col, piv);
        const Rational p = a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) /= p;
            inv(col, j) /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a(i, col) == 0) continue;
            const Rational f = a(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

Rational minor_of(const QMatrix& m, const std::vector<std::size_t>& rows,
                  const std::vector<std::size_t>& cols) {
    if (rows.size() != cols.size())
        throw domain_error("minor selection: row and column counts differ");
    auto valid = [](const std::vector<std::size_t>& idx, std::size_t bound) {
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (idx[i] >= bound) return false;
            if (i > 0 && idx[i] <= idx[i - 1]) return false;
        }
        return true;
    };
    if (!valid(rows, m.rows()) || !valid(cols, m.cols()))
        throw domain_error("minor selection: indices out of range or not increasing");
    QMatrix sub(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) sub(i, j) = m(rows[i], cols[j]);
    return sub.det();
}

Rational epsilon_product(const std::vector<std::vector<Rational>>& a,
                         const std::vector<std::vector<Rational>>& b) {
    if (a.size() != b.size()) throw domain_error("epsilon product: set sizes differ");
    const std::size_t m = a.size();
    if (m == 0) return 1;
    const std::size_t n = a[0].size();
    for (const auto& v : a)
        if (v.size() != n) throw domain_error("epsilon product: vector lengths differ");
    for (const auto& v : b)
        if (v.size() != n) throw domain_error("epsilon product: vector lengths differ");
    if (m > n) throw domain_error("epsilon product: more vectors than dimensions");
    QMatrix gram(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Rational dot = 0;
            for (std::size_t k = 0; k < n; ++k) dot += a[i][k] * b[j][k];
            gram(i, j) = dot;
        }
    return gram.det();
}

GaussResult gauss_eliminate(const QMatrix& m) {
    GaussResult res{m, QMatrix::identity(m.rows()), 0};
    QMatrix& a = res.reduced;
    QMatrix& t = res.transform;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && a(piv, col) == 0) ++piv;
        if (piv == m.rows()) continue;
        a.swap_rows(row, piv);
        t.swap_rows(row, piv);
        for (std::size_t i = row + 1; i < m.rows(); ++i) {
            if (a(i, col) == 0) continue;
            const Rational f = a(i, col) / a(row, col);
            for (std::size_t j = 0; j < m.cols(); ++j) a(i, j) -= f * a(row, j);
            for (std::size_t j = 0; j < m.rows(); ++j) t(i, j) -= f * t(row, j);
        }
        ++row;
    }
    res.rank = row;
    return res;
}

} // namespace slw

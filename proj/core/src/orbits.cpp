#include "slw/orbits.hpp"

#include <algorithm>
#include <numeric>

#include "slw/errors.hpp"
#include "slw/padic.hpp"

namespace slw {
namespace orbits {

OrbitLabel::OrbitLabel(Partition p, Rational d_) : partition(std::move(p)), d(std::move(d_)) {
    if (partition.empty()) throw domain_error("empty partition");
    for (std::size_t i = 0; i < partition.size(); ++i) {
        if (partition[i] < 1) throw domain_error("partition parts must be positive");
        if (i > 0 && partition[i] > partition[i - 1])
            throw domain_error("partition must be weakly decreasing");
    }
    if (d == 0) throw domain_error("orbit class d must be nonzero");
    d = canonical_class_rep(d, partition_gcd(partition));
}

long partition_sum(const Partition& p) {
    return std::accumulate(p.begin(), p.end(), 0L);
}

long partition_gcd(const Partition& p) {
    long g = 0;
    for (long x : p) g = std::gcd(g, x);
    return g;
}

std::vector<Partition> partitions_of(long n) {
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, long rest, long maxpart) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (long part = std::min(rest, maxpart); part >= 1; --part) {
            cur.push_back(part);
            self(self, rest - part, part);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

Rational canonical_class_rep(const Rational& d, long k) {
    if (k <= 1) return Rational(1);
    // exponents mod k on the prime support; the sign is a k-th power when
    // k is odd
    Rational out = 1;
    for (const Int& p : padic::prime_support(d)) {
        long v = padic::valuation(d, p);
        long r = ((v % k) + k) % k;
        for (long i = 0; i < r; ++i) out *= Rational(p);
    }
    if (k % 2 == 0 && d < 0) out = -out;
    return out;
}

Partition jordan_type(const QMatrix& u) {
    if (u.rows() != u.cols()) throw domain_error("jordan type of non-square matrix");
    const std::size_t n = u.rows();
    std::vector<long> rank{static_cast<long>(n)}; // rank[k] = rank(u^k)
    QMatrix pow = u;
    while (rank.back() > 0 && rank.size() <= n) {
        rank.push_back(static_cast<long>(gauss_eliminate(pow).rank));
        pow = pow * u;
    }
    if (rank.back() != 0) throw domain_error("matrix is not nilpotent");
    rank.resize(n + 2, 0);
    Partition p;
    for (std::size_t k = n; k >= 1; --k) {
        // c_k = #parts >= k; exactly c_k - c_{k+1} parts equal k
        const long ck = rank[k - 1] - rank[k];
        const long ck1 = rank[k] - rank[k + 1];
        for (long i = 0; i < ck - ck1; ++i) p.push_back(static_cast<long>(k));
    }
    std::sort(p.begin(), p.end(), std::greater<long>());
    return p;
}

bool dominance_leq(const Partition& p, const Partition& q) {
    if (partition_sum(p) != partition_sum(q))
        throw domain_error("dominance order needs equal totals");
    long sp = 0, sq = 0;
    const std::size_t len = std::max(p.size(), q.size());
    for (std::size_t i = 0; i < len; ++i) {
        sp += i < p.size() ? p[i] : 0;
        sq += i < q.size() ? q[i] : 0;
        if (sp > sq) return false;
    }
    return true;
}

QMatrix orbit_representative(const OrbitLabel& label) {
    const long n = partition_sum(label.partition);
    QMatrix j(n, n);
    long off = 0;
    for (long part : label.partition) {
        for (long i = 1; i < part; ++i) j(off + i, off + i - 1) = 1;
        off += part;
    }
    for (long c = 0; c < n; ++c) j(n - 1, c) *= label.d; // D(d) scales the last row
    return j;
}

SemisimpleElement::SemisimpleElement(std::vector<Rational> d) : diag(std::move(d)) {
    Rational tr = 0;
    for (const Rational& x : diag) tr += x;
    if (tr != 0) throw domain_error("semisimple element must be traceless");
}

SemisimpleElement SemisimpleElement::trdiag(const std::vector<Rational>& entries) {
    Rational tr = 0;
    for (const Rational& x : entries) tr += x;
    const Rational shift = tr / Rational(static_cast<long>(entries.size()));
    std::vector<Rational> d;
    d.reserve(entries.size());
    for (const Rational& x : entries) d.push_back(x - shift);
    return SemisimpleElement(std::move(d));
}

SemisimpleElement s_Vi(std::size_t n, std::size_t i) {
    if (i < 1 || i > n - 1) throw domain_error("s_Vi needs 1 <= i <= n-1");
    std::vector<Rational> e(n);
    for (std::size_t a = 0; a < i; ++a) e[a] = Rational(2 * static_cast<long>(i - 1 - a));
    for (std::size_t a = i; a < n; ++a) e[a] = Rational(-2);
    return SemisimpleElement::trdiag(e);
}

SemisimpleElement s_Umi(std::size_t n, std::size_t m, std::size_t i) {
    if (m < 1 || m > n - 1 || i > m - 1)
        throw domain_error("s_Umi needs 1 <= m <= n-1, 0 <= i <= m-1");
    std::vector<Rational> e(n);
    std::size_t a = 0;
    for (; a < m - i; ++a) e[a] = Rational(2 * static_cast<long>(i));
    for (std::size_t k = 0; k < i; ++k, ++a) e[a] = Rational(2 * static_cast<long>(i - 1 - k));
    for (; a < n; ++a) e[a] = Rational(-2);
    return SemisimpleElement::trdiag(e);
}

SemisimpleElement s_m(std::size_t n, std::size_t m) {
    if (m < 1 || m > n - 1) throw domain_error("s_m needs 1 <= m <= n-1");
    std::vector<Rational> e(n);
    for (std::size_t a = 0; a < m; ++a) e[a] = 1;
    for (std::size_t a = m; a < n; ++a) e[a] = -1;
    return SemisimpleElement::trdiag(e);
}

std::set<std::pair<std::size_t, std::size_t>> whittaker_pair_subgroup(
    const SemisimpleElement& s, const QMatrix& u) {
    const std::size_t n = s.n();
    if (u.rows() != n || u.cols() != n) throw domain_error("Whittaker pair dimension mismatch");
    jordan_type(u); // nilpotency check

    // pair condition: u lies in the -2 eigenspace of ad(s)
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (u(i, j) != 0 && s.diag[i] - s.diag[j] != Rational(-2))
                throw domain_error("(s, u) is not a Whittaker pair");

    std::set<std::pair<std::size_t, std::size_t>> pos;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const Rational ev = s.diag[i] - s.diag[j];
            if (ev > 1) {
                pos.emplace(i, j);
            } else if (ev == 1) {
                QMatrix e(n, n);
                e(i, j) = 1;
                if ((e * u - u * e).is_zero())
                    pos.emplace(i, j);
                else
                    throw unsupported_error("g^s_1 cap g_u is not spanned by matrix positions");
            }
        }
    return pos;
}

QMatrix y_of_Y(std::size_t n, std::size_t m, const QMatrix& Y) {
    if (Y.rows() != n - m || Y.cols() != m) throw domain_error("Y block has wrong shape");
    QMatrix y(n, n);
    for (std::size_t i = 0; i < n - m; ++i)
        for (std::size_t j = 0; j < m; ++j) y(m + i, j) = Y(i, j);
    return y;
}

QMatrix Y_r(std::size_t n, std::size_t m, std::size_t r, const Rational& d) {
    if (m < 1 || m > n - 1) throw domain_error("Y_r needs 1 <= m <= n-1");
    if (r > std::min(m, n - m)) throw domain_error("rank exceeds min(m, n-m)");
    QMatrix Y(n - m, m);
    for (std::size_t i = 0; i < r; ++i)
        Y(i, m - 1 - i) = (i + 1 == r) ? d : Rational(1);
    return Y;
}

LeviNormalForm levi_normal_form(const QMatrix& Y, std::size_t n, std::size_t m) {
    if (Y.rows() != n - m || Y.cols() != m) throw domain_error("Y block has wrong shape");
    const std::size_t R = n - m, C = m;
    QMatrix w = Y;
    QMatrix A = QMatrix::identity(R);
    QMatrix B = QMatrix::identity(C);

    auto add_row = [&](std::size_t dst, std::size_t src, const Rational& f) {
        for (std::size_t c = 0; c < C; ++c) w(dst, c) += f * w(src, c);
        for (std::size_t c = 0; c < R; ++c) A(dst, c) += f * A(src, c);
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const Rational& f) {
        for (std::size_t i = 0; i < R; ++i) w(i, dst) += f * w(i, src);
        for (std::size_t i = 0; i < C; ++i) B(i, dst) += f * B(i, src);
    };
    auto scale_row = [&](std::size_t i, const Rational& f) {
        for (std::size_t c = 0; c < C; ++c) w(i, c) *= f;
        for (std::size_t c = 0; c < R; ++c) A(i, c) *= f;
    };
    auto swap_rows = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        w.swap_rows(i, j);
        A.swap_rows(i, j);
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r2 = 0; r2 < R; ++r2) std::swap(w(r2, i), w(r2, j));
        for (std::size_t r2 = 0; r2 < C; ++r2) std::swap(B(r2, i), B(r2, j));
    };

    // Anti-diagonal pivot at (i, C-1-i) per step, working the remaining
    // block rows >= i, cols <= C-1-i.
    std::size_t r = 0;
    for (std::size_t i = 0; i < std::min(R, C); ++i) {
        const std::size_t pcol = C - 1 - i;
        std::size_t fi = R, fj = C;
        for (std::size_t a = i; a < R && fi == R; ++a)
            for (std::size_t b = 0; b <= pcol; ++b)
                if (w(a, b) != 0) {
                    fi = a;
                    fj = b;
                    break;
                }
        if (fi == R) break;
        swap_rows(i, fi);
        swap_cols(pcol, fj);
        scale_row(i, Rational(1) / w(i, pcol));
        for (std::size_t k = 0; k < R; ++k)
            if (k != i && w(k, pcol) != 0) add_row(k, i, -w(k, pcol));
        ++r;
    }
    // pivot rows may have picked up entries in the leftover columns; the
    // pivot column is e_i now, so these column ops touch only row i
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j + r < C && j < C; ++j)
            if (w(i, j) != 0) add_col(j, C - 1 - i, -w(i, j));

    // Restore det(A) det(B) = 1 without leaving the normal form: scale a
    // zero row or zero column of w, or fold the factor into d when
    // n = 2r = 2m leaves no spare.
    const Rational delta = A.det() * B.det();
    if (delta != 1) {
        if (r < R)
            scale_row(R - 1, Rational(1) / delta);
        else if (r < C) {
            for (std::size_t i2 = 0; i2 < C; ++i2) B(i2, 0) /= delta;
        } else {
            scale_row(r - 1, Rational(1) / delta);
        }
    }

    const Rational d = (r == 0) ? Rational(1) : w(r - 1, C - r);
    return LeviNormalForm{r, d, A, B};
}

Partition cap_partition(Rep rep, long n) {
    if (rep == Rep::min) {
        if (n < 2) throw domain_error("cap partition needs n >= 2");
        Partition p{2};
        for (long i = 0; i < n - 2; ++i) p.push_back(1);
        return p;
    }
    if (n < 4) throw domain_error("next-to-minimal cap needs n >= 4");
    Partition p{2, 2};
    for (long i = 0; i < n - 4; ++i) p.push_back(1);
    return p;
}

bool coefficient_vanishes(Rep rep, const QMatrix& u) {
    const Partition t = jordan_type(u);
    return !dominance_leq(t, cap_partition(rep, partition_sum(t)));
}

} // namespace orbits
} // namespace slw

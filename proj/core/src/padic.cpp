#include "slw/padic.hpp"

#include <algorithm>
#include <cmath>

namespace slw {
namespace padic {

bool is_prime(const Int& p) {
    if (p < 2) return false;
    if (p < 4) return true;
    if (p % 2 == 0) return false;
    for (Int d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

std::vector<Int> prime_factors(const Int& n) {
    std::vector<Int> out;
    Int m = int_abs(n);
    if (m <= 1) return out;
    for (Int d = 2; d * d <= m; d == 2 ? d = 3 : d += 2) {
        if (m % d == 0) {
            out.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) out.push_back(m);
    return out;
}

std::vector<Int> prime_support(const Rational& q) {
    std::vector<Int> out = prime_factors(num(q));
    for (const Int& p : prime_factors(den(q)))
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    std::sort(out.begin(), out.end());
    return out;
}

long valuation(const Rational& q, const Int& p) {
    if (q == 0) throw domain_error("valuation of zero");
    long v = 0;
    Int n = int_abs(num(q));
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    Int d = den(q);
    while (d % p == 0) {
        d /= p;
        --v;
    }
    return v;
}

Rational norm(const Rational& q, const Int& p) {
    if (!is_prime(p)) throw domain_error("p-adic norm: " + p.str() + " is not prime");
    if (q == 0) return 0;
    const long v = valuation(q, p);
    Int pk = 1;
    for (long i = 0; i < std::labs(v); ++i) pk *= p;
    return v >= 0 ? Rational(1, pk) : Rational(pk);
}

Rational product_formula_check(const Rational& x) {
    if (x == 0) throw domain_error("product formula: x must be nonzero");
    Rational prod = rat_abs(x); // |x|_infty
    for (const Int& p : prime_support(x)) prod *= norm(x, p);
    return prod;
}

Int gcd_from_norms(const std::vector<Int>& xs) {
    std::vector<Int> nz;
    for (const Int& x : xs)
        if (x != 0) nz.push_back(int_abs(x));
    if (nz.empty()) throw domain_error("gcd of all-zero list");
    if (nz.size() == 1) return nz[0];

    std::vector<Int> primes;
    for (const Int& x : nz)
        for (const Int& p : prime_factors(x))
            if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);

    // k = prod_p (max_i |x_i|_p)^(-1); the max of norms is the min of
    // valuations, attained inside the finite prime support.
    Rational k = 1;
    for (const Int& p : primes) {
        Rational mx = 0;
        for (const Int& x : nz) mx = std::max(mx, norm(Rational(x), p));
        k /= mx;
    }
    return num(k);
}

namespace {

// Divisors are walked through the factorization; m stays far below
// anything that would need sieving.
std::vector<std::pair<Int, long>> factor_with_exponents(Int m) {
    std::vector<std::pair<Int, long>> out;
    for (Int d = 2; d * d <= m; d == 2 ? d = 3 : d += 2) {
        if (m % d == 0) {
            long e = 0;
            while (m % d == 0) {
                m /= d;
                ++e;
            }
            out.emplace_back(d, e);
        }
    }
    if (m > 1) out.emplace_back(m, 1);
    return out;
}

} // namespace

double divisor_sum(double s, const Int& m) {
    if (m < 1) throw domain_error("divisor sum needs m >= 1");
    double acc = 1.0;
    for (const auto& [p, e] : factor_with_exponents(m)) {
        const double pd = p.convert_to<double>();
        double geom = 1.0, term = 1.0;
        for (long i = 1; i <= e; ++i) {
            term *= std::pow(pd, -s);
            geom += term;
        }
        acc *= geom;
    }
    return acc;
}

Rational divisor_sum_exact(long s, const Int& m) {
    if (m < 1) throw domain_error("divisor sum needs m >= 1");
    const long t = -s; // sigma_{-s}(m) = sum d^{-s} = sum d^t
    Rational acc = 1;
    for (const auto& [p, e] : factor_with_exponents(m)) {
        Int pt = 1;
        for (long i = 0; i < std::labs(t); ++i) pt *= p;
        const Rational factor = t >= 0 ? Rational(pt) : Rational(1, pt);
        Rational geom = 1, term = 1;
        for (long i = 1; i <= e; ++i) {
            term *= factor;
            geom += term;
        }
        acc *= geom;
    }
    return acc;
}

int gaussian(const Rational& x, const Int& p) {
    if (x == 0) return 1;
    return norm(x, p) <= 1 ? 1 : 0;
}

CollapsedLocal collapse_local_whittaker(double s_prime, const Rational& q) {
    if (q == 0) throw domain_error("local Whittaker collapse: q must be nonzero");
    CollapsedLocal out;
    out.zeta_arg = 2.0 * s_prime;
    if (den(q) != 1) {
        out.vanishes = true; // gamma_p kills any non-integer
        return out;
    }
    out.sigma = divisor_sum(2.0 * s_prime - 1.0, int_abs(num(q)));
    return out;
}

} // namespace padic
} // namespace slw

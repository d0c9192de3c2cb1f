#pragma once

#include <vector>

#include "slw/rational.hpp"

namespace slw {
namespace padic {

bool is_prime(const Int& p);

// Primes dividing |n|. n = 0 yields an empty list.
std::vector<Int> prime_factors(const Int& n);

// Primes dividing the numerator or denominator of q.
std::vector<Int> prime_support(const Rational& q);

// p-adic valuation v_p(q); q must be nonzero.
long valuation(const Rational& q, const Int& p);

// |q|_p = p^(-v_p(q)) as an exact rational. |0|_p = 0 by convention
// (flagged zero, not an error: the gcd formula tolerates zero entries).
Rational norm(const Rational& q, const Int& p);

// Product over all places of |x|_p including |x|_infty; exactly 1 for
// every nonzero rational.
Rational product_formula_check(const Rational& x);

// gcd computed through prod_p (max_i |x_i|_p)^(-1). Zeros are ignored;
// an all-zero list is a domain error.
Int gcd_from_norms(const std::vector<Int>& xs);

// sigma_{-s}(m) = sum over divisors d of m of d^(-s), m >= 1.
double divisor_sum(double s, const Int& m);

// Exact value of sigma_{-s}(m) for integer s.
Rational divisor_sum_exact(long s, const Int& m);

// 1 iff |x|_p <= 1.
int gaussian(const Rational& x, const Int& p);

// The exact collapse of one local Whittaker Euler product
//   prod_p gamma_p(q) (1 - p^{-2s'}) (1 - p^{-(2s'-1)} |q|_p^{2s'-1}) / (1 - p^{-(2s'-1)})
// over the finitely many primes dividing q:
//   gamma gate  ->  vanishes unless q is an integer,
//   sigma part  ->  sigma_{1-2s'}(|q|),
//   zeta part   ->  1/zeta(2s'), left as the argument for the caller to
//                   absorb into the completed-zeta assembly.
struct CollapsedLocal {
    bool vanishes = false;
    double sigma = 1.0;     // sigma_{1-2s'}(|q|); 1 when vanishes
    double zeta_arg = 0.0;  // 2s'
};

CollapsedLocal collapse_local_whittaker(double s_prime, const Rational& q);

} // namespace padic
} // namespace slw

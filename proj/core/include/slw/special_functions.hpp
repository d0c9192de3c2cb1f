#pragma once

#include <complex>

namespace slw {

// Accuracy knobs shared by the numeric kernels. rel_tol is capped at 1e-6
// from above; abs_floor is the underflow threshold below which quadrature
// tails are dropped.
struct Precision {
    double rel_tol = 1e-12;
    double abs_floor = 1e-300;

    void validate() const;
};

namespace sf {

using cplx = std::complex<double>;

// Riemann zeta on the real axis, s > 1 (Euler-Maclaurin).
double zeta(double s);

// Euler product over primes p <= pbound; test oracle, not used in the
// evaluation pipeline.
double zeta_euler_product(double s, long pbound);

// Gamma via Lanczos; reflection below Re z = 1/2.
cplx gamma(cplx z);

// Completed zeta xi(s) = Gamma(s/2) pi^{-s/2} zeta(s), with the
// functional equation xi(s) = xi(1-s) supplying Re s < 1/2.
// Poles at s = 0 and s = 1 raise pole_error.
cplx xi(cplx s);
double xi_real(double s);

// Modified Bessel K_nu(x) for x > 0 through the cosh integral
// int_0^inf exp(-x cosh t) cosh(nu t) dt, trapezoid refinement until the
// relative change is below prec.rel_tol. Values below prec.abs_floor
// return a flagged zero.
double bessel_k(double nu, double x, const Precision& prec = Precision{});

} // namespace sf
} // namespace slw

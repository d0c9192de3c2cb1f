#include "slw/special_functions.hpp"

#include <cmath>
#include <vector>

#include "slw/errors.hpp"

namespace slw {

void Precision::validate() const {
    if (!(rel_tol > 0.0) || rel_tol > 1e-6)
        throw domain_error("rel_tol must lie in (0, 1e-6]");
    if (!(abs_floor >= 0.0)) throw domain_error("abs_floor must be nonnegative");
}

namespace sf {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Bernoulli numbers B_2, B_4, ..., B_16 for the Euler-Maclaurin tail.
constexpr double kBernoulli[8] = {
    1.0 / 6.0,   -1.0 / 30.0, 1.0 / 42.0,  -1.0 / 30.0,
    5.0 / 66.0, -691.0 / 2730.0, 7.0 / 6.0, -3617.0 / 510.0,
};

// Euler-Maclaurin with N = 24 terms and 8 corrections; remainder is far
// below double precision for Re s >= -1, which is all xi() needs after
// reflection.
cplx zeta_em(cplx s) {
    const int N = 24;
    cplx acc = 0.0;
    for (int n = 1; n < N; ++n) acc += std::pow(cplx(n, 0.0), -s);
    const cplx Nc(N, 0.0);
    acc += std::pow(Nc, 1.0 - s) / (s - 1.0);
    acc += 0.5 * std::pow(Nc, -s);
    cplx rising = s; // s (s+1) ... (s + 2k - 2)
    double fact = 2.0; // (2k)!
    for (int k = 1; k <= 8; ++k) {
        acc += kBernoulli[k - 1] / fact * rising * std::pow(Nc, -s - (2.0 * k - 1.0));
        rising *= (s + (2.0 * k - 1.0)) * (s + (2.0 * k));
        fact *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
    }
    return acc;
}

// Lanczos g = 7, n = 9.
constexpr double kLanczos[9] = {
    0.99999999999980993,   676.5203681218851,     -1259.1392167224028,
    771.32342877765313,    -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,  9.9843695780195716e-6, 1.5056327351493116e-7,
};

} // namespace

double zeta(double s) {
    if (!(s > 1.0)) throw domain_error("zeta(s) implemented for real s > 1");
    return zeta_em(cplx(s, 0.0)).real();
}

double zeta_euler_product(double s, long pbound) {
    if (!(s > 1.0)) throw domain_error("zeta(s) implemented for real s > 1");
    double prod = 1.0;
    std::vector<bool> sieve(pbound + 1, true);
    for (long p = 2; p <= pbound; ++p) {
        if (!sieve[p]) continue;
        for (long q = 2 * p; q <= pbound; q += p) sieve[q] = false;
        prod /= 1.0 - std::pow(static_cast<double>(p), -s);
    }
    return prod;
}

cplx gamma(cplx z) {
    if (z.real() < 0.5) return kPi / (std::sin(kPi * z) * gamma(1.0 - z));
    z -= 1.0;
    cplx x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + cplx(i, 0.0));
    const cplx t = z + 7.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

cplx xi(cplx s) {
    const double eps = 1e-14;
    if (std::abs(s) < eps || std::abs(s - 1.0) < eps)
        throw pole_error("xi has a pole at s = 0, 1");
    if (s.real() < 0.5) s = 1.0 - s; // functional equation
    return gamma(0.5 * s) * std::pow(kPi, -0.5 * s) * zeta_em(s);
}

double xi_real(double s) { return xi(cplx(s, 0.0)).real(); }

double bessel_k(double nu, double x, const Precision& prec) {
    prec.validate();
    if (!(x > 0.0)) throw domain_error("bessel_k needs x > 0");
    nu = std::fabs(nu); // K is even in nu

    // truncation point: integrand below abs_floor relative to scale
    const double log_floor = std::log(std::max(prec.abs_floor, 1e-320));
    double T = 1.0;
    auto log_integrand = [&](double t) { return -x * std::cosh(t) + nu * t; };
    while (log_integrand(T) > log_floor - 5.0 && T < 750.0) T += 0.5;

    auto f = [&](double t) { return std::exp(-x * std::cosh(t)) * std::cosh(nu * t); };

    // trapezoid with midpoint refinement; the integrand is even and smooth,
    // so convergence is spectral in 1/h
    int steps = 64;
    double h = T / steps;
    double sum = 0.5 * (f(0.0) + f(T));
    for (int i = 1; i < steps; ++i) sum += f(i * h);
    double val = sum * h;
    for (int iter = 0; iter < 12; ++iter) {
        double mid = 0.0;
        for (int i = 0; i < steps; ++i) mid += f((i + 0.5) * h);
        const double next = 0.5 * val + 0.5 * h * mid;
        steps *= 2;
        h *= 0.5;
        const bool done = std::fabs(next - val) <= 0.25 * prec.rel_tol * std::fabs(next);
        val = next;
        if (done && iter >= 2) break;
    }
    if (std::fabs(val) < prec.abs_floor) return 0.0;
    return val;
}

} // namespace sf
} // namespace slw

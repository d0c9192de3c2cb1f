#pragma once

#include <complex>

namespace slw {
namespace oracle {

// Truncation of the lattice-sum ground truth: coefficient box and the
// number of quadrature points of the mode extraction.
struct LatticeTruncation {
    long coeff_bound = 200;
    long quadrature_points = 256;

    void validate() const; // bound >= 10, points a power of two >= 64
};

// Truncated SL_2 Eisenstein series sum over coprime pairs modulo sign,
//   E(s, z) = sum y^s / |c z + d|^{2s},   s > 1, Im z > 0,
// normalized so the pair (0, 1) contributes the leading y^s.
double eisenstein_sl2(double s, std::complex<double> z, const LatticeTruncation& trunc);

// m-th Fourier mode of E(s, x + i y) in x by uniform quadrature on [0, 1).
double fourier_mode_numeric(double s, double y, long m, const LatticeTruncation& trunc);

} // namespace oracle
} // namespace slw

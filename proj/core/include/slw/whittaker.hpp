#pragma once

#include <complex>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "slw/iwasawa.hpp"
#include "slw/matrix.hpp"
#include "slw/root_system.hpp"
#include "slw/special_functions.hpp"

namespace slw {
namespace whittaker {

// Ratio of completed-zeta factors prod xi(num_i) / prod xi(den_i) with
// arguments held as affine functions of s. Arguments are canonicalized
// through xi(x) = xi(1-x) onto the representative with positive leading
// coefficient (ties at a = 0 keep b >= 1/2) and cancelled as multisets.
struct XiRatio {
    std::vector<AffineInS> numerator;
    std::vector<AffineInS> denominator;

    static AffineInS canonical_arg(const AffineInS& x);
    // Builds prod_c xi(c)/xi(c+1) over the inversion pairings c.
    static XiRatio from_inversion_args(const std::vector<AffineInS>& args);

    bool operator==(const XiRatio& o) const {
        return numerator == o.numerator && denominator == o.denominator;
    }

    std::string str() const;
    // pole_error when any argument evaluates to 0 or 1 at this s.
    double eval(double s) const;
};

// One row of the reduction-formula table for a degenerate character.
struct ReductionTerm {
    WeylWord word;                        // w_c
    std::map<int, AffineInS> support_ip;  // <w_c^{-1} lambda + rho | alpha_j>
    std::optional<XiRatio> m_factor;      // intertwiner; absent when not evaluated
    std::vector<AffineInS> weight_exponents; // (w_c w_0')^{-1} lambda + rho, fundamental basis
    bool contributes = false;
};

// Rows of the reduction formula for weight lambda and the character
// supported on the given pairwise non-adjacent simple roots: minimal
// coset representatives of W/W' whose intertwiner does not vanish
// identically, ordered by (length, lexicographic word). A row contributes
// when every support inner product is a nonzero affine form.
std::vector<ReductionTerm> reduction_terms(std::size_t n, const Weight& lambda,
                                           const std::set<int>& support);

// m_i -> m_i' = (y_i^2 / (y_{i-1} y_{i+1})) m_i with y_0 = y_n = 1.
struct TwistedParams {
    std::map<int, double> m_per_root;
};

TwistedParams twist_character(const std::map<int, double>& m, const std::vector<double>& y);

// Global SL_2 Whittaker mode: 0 for non-integer m, else
// (2/xi(2s')) y^{1/2} |m|^{s'-1/2} sigma_{1-2s'}(|m|) K_{s'-1/2}(2 pi |m| y).
double sl2_whittaker(double s_prime, const Rational& m, double y,
                     const Precision& prec = Precision{});

// Exact non-archimedean data of a rational translate: the eta-norm
// products and, per support root, the collapsed local profile (gamma gate
// plus the integer carrying the sigma factor).
struct LocalProfile {
    bool integral = true;
    Int q = 1; // positive; valid when integral
};

struct NonArchData {
    std::vector<Rational> eta_products;   // E_i = prod_p |eta_i(l)|_p
    std::map<int, LocalProfile> profiles; // per support root
};

NonArchData nonarch_data(const QMatrix& l, const std::set<int>& support,
                         const std::map<int, Int>& m_params);

// Degenerate Whittaker coefficient of E(lambda) at the adelic point
// (g_inf, I, I, ...) translated by l in SL_n(Q): exact Euler data from l,
// archimedean data from the real Iwasawa decomposition of l * g_inf, one
// SL_2 Bessel factor per support root, summed over contributing rows.
std::complex<double> evaluate_whittaker(std::size_t n, const Weight& lambda,
                                        const std::set<int>& support,
                                        const std::map<int, Int>& m_params, const QMatrix& l,
                                        const DMatrix& g_inf, double s,
                                        const Precision& prec = Precision{});

// Deterministic pairwise summation in the given order.
std::complex<double> pairwise_sum(const std::vector<std::complex<double>>& xs);

} // namespace whittaker
} // namespace slw

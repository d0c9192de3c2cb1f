#pragma once

#include <set>
#include <vector>

#include "slw/matrix.hpp"

namespace slw {
namespace orbits {

using Partition = std::vector<long>; // weakly decreasing positive parts

// F-rational nilpotent orbit label (partition, d) with d taken in
// F^x/(F^x)^k, k = gcd of the parts; d = 1 whenever k = 1.
struct OrbitLabel {
    Partition partition;
    Rational d{1};

    OrbitLabel(Partition p, Rational d_ = Rational(1));
};

long partition_sum(const Partition& p);
long partition_gcd(const Partition& p);
std::vector<Partition> partitions_of(long n);

// Representative of d in Q^x/(Q^x)^k: exponents reduced mod k on the
// prime support; the sign survives only for even k.
Rational canonical_class_rep(const Rational& d, long k);

// Partition of a nilpotent u read off the rank sequence of its powers.
// Throws domain_error when u is not nilpotent.
Partition jordan_type(const QMatrix& u);

// Prefix-sum partial order on partitions of the same total.
bool dominance_leq(const Partition& p, const Partition& q);

// D(d) * J_p, the standard lower-triangular representative.
QMatrix orbit_representative(const OrbitLabel& label);

struct SemisimpleElement {
    std::vector<Rational> diag; // trace zero

    explicit SemisimpleElement(std::vector<Rational> d);
    static SemisimpleElement trdiag(const std::vector<Rational>& entries);
    std::size_t n() const { return diag.size(); }
};

// trdiag(2(i-1), 2(i-2), ..., 0, -2, ..., -2): N_s = V_i.
SemisimpleElement s_Vi(std::size_t n, std::size_t i);
// trdiag(2i,...,2i, 2(i-1),...,2,0, -2,...,-2): N_s = U_m^i.
SemisimpleElement s_Umi(std::size_t n, std::size_t m, std::size_t i);
// trdiag(1,...,1,-1,...,-1) with m ones: N_s = U_m.
SemisimpleElement s_m(std::size_t n, std::size_t m);

// Positions (row, col), 0-based, spanning n_s = g^s_{>1} + (g^s_1 cap g_u)
// for the Whittaker pair (s, u). Requires the intersection with the
// eigenvalue-1 space to be spanned by matrix positions, which holds for
// every pair used here; otherwise unsupported_error.
std::set<std::pair<std::size_t, std::size_t>> whittaker_pair_subgroup(
    const SemisimpleElement& s, const QMatrix& u);

// y(Y_r(d)) inside sl_n for the maximal parabolic P_m: the (n-m) x m
// block Y placed below the diagonal.
QMatrix y_of_Y(std::size_t n, std::size_t m, const QMatrix& Y);
QMatrix Y_r(std::size_t n, std::size_t m, std::size_t r, const Rational& d = Rational(1));

struct LeviNormalForm {
    std::size_t rank;
    Rational d;
    QMatrix A; // (n-m) x (n-m)
    QMatrix B; // m x m, A * Y * B = Y_r(d), det(A) det(B) = 1
};

// Row/column reduction of Y onto the anti-diagonal normal form Y_r(d);
// d = 1 unless n = 2r = 2m.
LeviNormalForm levi_normal_form(const QMatrix& Y, std::size_t n, std::size_t m);

enum class Rep { min, ntm };

// Theorem-level vanishing predicate: true iff jordan_type(u) is NOT below
// the representation's cap partition in dominance order.
bool coefficient_vanishes(Rep rep, const QMatrix& u);

Partition cap_partition(Rep rep, long n);

} // namespace orbits
} // namespace slw

#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "slw/matrix.hpp"
#include "slw/rational.hpp"

namespace slw {

// a*s + b with exact rational coefficients; the scalar type of all
// weight and inner-product bookkeeping.
struct AffineInS {
    Rational a{0};
    Rational b{0};

    AffineInS() = default;
    AffineInS(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {}
    static AffineInS constant(Rational c) { return AffineInS(Rational(0), std::move(c)); }

    AffineInS operator+(const AffineInS& o) const { return {a + o.a, b + o.b}; }
    AffineInS operator-(const AffineInS& o) const { return {a - o.a, b - o.b}; }
    AffineInS operator-() const { return {-a, -b}; }
    bool operator==(const AffineInS& o) const { return a == o.a && b == o.b; }
    bool operator!=(const AffineInS& o) const { return !(*this == o); }
    bool operator<(const AffineInS& o) const { return a != o.a ? a < o.a : b < o.b; }

    bool is_zero() const { return a == 0 && b == 0; }
    double eval(double s) const { return rat_to_double(a) * s + rat_to_double(b); }

    // "2s-3", "s", "-1", "1/2s+3" style rendering.
    std::string str() const;
};

// Weight of SL_n stored in epsilon coordinates (length n, defined up to a
// common shift); simple reflections act by swapping adjacent coordinates.
class Weight {
public:
    Weight() = default;
    explicit Weight(std::vector<AffineInS> eps) : eps_(std::move(eps)) {}

    // 2s*Lambda_k - rho for SL_n.
    static Weight eisenstein(std::size_t n, std::size_t k);

    std::size_t n() const { return eps_.size(); }
    const AffineInS& eps(std::size_t i) const { return eps_[i]; }
    AffineInS& eps(std::size_t i) { return eps_[i]; }

    // <lambda | alpha_i> in the normalization <Lambda_i|alpha_j> = delta_ij,
    // <rho|alpha_i> = 1. Simple roots are 1-based.
    AffineInS pair_simple(std::size_t i) const;
    // <lambda | e_i - e_j> for a general root (1-based, i != j).
    AffineInS pair_root(std::size_t i, std::size_t j) const;

    // Coordinates in the fundamental-weight basis, length n-1.
    std::vector<AffineInS> fundamental() const;

    Weight plus_rho() const;

    bool operator==(const Weight& o) const { return fundamental() == o.fundamental(); }

private:
    std::vector<AffineInS> eps_;
};

// Weyl group element of A_{n-1} as the permutation sending coordinate i
// to position perm[i] (0-based internally). w . e_i = e_{perm(i)}.
class WeylElement {
public:
    WeylElement() = default;
    explicit WeylElement(std::vector<std::size_t> perm) : perm_(std::move(perm)) {}

    static WeylElement identity(std::size_t n);
    static WeylElement simple(std::size_t n, std::size_t i); // s_i, 1-based
    static WeylElement from_word(std::size_t n, const std::vector<int>& letters);

    std::size_t n() const { return perm_.size(); }
    std::size_t image(std::size_t i) const { return perm_[i]; } // 0-based

    WeylElement operator*(const WeylElement& o) const; // composition: (this o)(x) = this(o(x))
    WeylElement inverse() const;
    bool operator==(const WeylElement& o) const { return perm_ == o.perm_; }
    bool operator<(const WeylElement& o) const { return perm_ < o.perm_; }

    Weight act(const Weight& w) const;

    // Image of the root e_i - e_j (1-based); positive iff first < second.
    std::pair<std::size_t, std::size_t> act_root(std::size_t i, std::size_t j) const;
    bool maps_root_negative(std::size_t i, std::size_t j) const;

    std::size_t length() const; // inversion count
    // Positive roots alpha with w(alpha) < 0, as (i, j) pairs i < j.
    std::vector<std::pair<std::size_t, std::size_t>> inversions() const;

    // Lexicographically smallest reduced word (greedy least left descent).
    std::vector<int> reduced_word() const;

    // Realization as a torus permutation matrix with determinant fixed
    // to +1 by a sign on the first flipped row.
    QMatrix permutation_matrix() const;

private:
    std::vector<std::size_t> perm_;
};

// Reduced word in simple reflections; letters are 1-based indices.
struct WeylWord {
    std::vector<int> letters;

    WeylWord() = default;
    explicit WeylWord(std::vector<int> l) : letters(std::move(l)) {}

    bool operator==(const WeylWord& o) const { return letters == o.letters; }
    std::string str() const; // "123" or "e" for the identity
};

// Character on N supported on pairwise non-adjacent simple roots, with an
// integer parameter per support root.
struct CharacterSupport {
    std::set<int> support;      // 1-based simple-root indices
    std::map<int, Int> params;  // m_i per support index

    static CharacterSupport unramified(const std::set<int>& roots);

    // Throws unsupported_error when two support roots are adjacent.
    void check_non_adjacent() const;
};

namespace weyl {

// A_{n-1} Cartan matrix (n >= 2).
std::vector<std::vector<int>> cartan_matrix(std::size_t n);

Weight weyl_act(std::size_t n, const WeylWord& w, const Weight& lambda);

// All n! elements; n is capped (resource error beyond the cap).
std::vector<WeylElement> enumerate(std::size_t n);

// All w with w(alpha_j) < 0 for every j in support.
std::vector<WeylElement> c_psi_set(std::size_t n, const std::set<int>& support);

// Minimal-length representatives of W/W' for the parabolic W' generated
// by the support: w(alpha_j) > 0 for every support j. Ordered by
// (length, lexicographic reduced word).
std::vector<WeylElement> minimal_coset_reps(std::size_t n, const std::set<int>& support);

// Longest element of the parabolic subgroup generated by the given simple
// roots (orthogonal components allowed).
WeylElement longest_element(std::size_t n, const std::set<int>& subsystem);

} // namespace weyl
} // namespace slw

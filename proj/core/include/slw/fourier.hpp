#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "slw/cosets.hpp"
#include "slw/orbits.hpp"
#include "slw/root_system.hpp"
#include "slw/whittaker.hpp"

namespace slw {
namespace fourier {

// Reference to one coset family in an expansion term, with its embedding
// and the character conditioning it.
struct CosetRef {
    cosets::FamilyKind kind;
    std::size_t n = 0;
    std::size_t index = 0;
    cosets::Embedding embedding = cosets::Embedding::none;
    std::set<int> psi0_support;

    bool operator==(const CosetRef& o) const = default;
};

// Non-compact leftover of a term: a list of root-group positions summed or
// integrated over a full affine space (kept symbolic, never evaluated).
struct NoncompactDescriptor {
    std::string label;
    std::vector<std::pair<int, int>> positions; // 1-based (row, col)

    bool operator==(const NoncompactDescriptor& o) const = default;
};

// One symbolic term of a Fourier expansion: character data, coset chain,
// optional Weyl twist and non-compact leftover.
struct TermPlan {
    std::string label;
    CharacterSupport character;                       // simple-root part
    std::vector<std::pair<int, int>> character_positions; // u-positions of the character
    std::vector<CosetRef> coset_chain;
    std::optional<WeylWord> weyl_twist;
    std::optional<WeylElement> weyl_twist_element;
    std::optional<NoncompactDescriptor> noncompact;
};

// Expansion of an automorphic form in the minimal or next-to-minimal
// representation: constant term, single-root families, and (ntm) the
// double-root families over non-adjacent pairs. n >= 5.
std::vector<TermPlan> theorem_a_plan(std::size_t n, orbits::Rep rep);

// Rank-2 coefficient on the maximal parabolic P_m: character psi_{y(Y_2)},
// the Weyl twist, and the non-compact column groups C_1 C_2.
TermPlan theorem_b_rank2_plan(std::size_t n, std::size_t m_node);

// Orbit-coefficient plans: the [2 1^{n-2}] coefficient as a Y(F)-translate
// sum of the U_1 coefficient, and the [2^2 1^{n-4}] coefficient as a
// twisted Y'(F)-translate sum of the U_2 coefficient.
TermPlan theorem_c_plan(std::size_t n);
TermPlan theorem_d_plan(std::size_t n);

struct VanishingCertificate {
    orbits::Partition orbit;
    orbits::Partition cap;
    std::string reason;
};

struct EvalResult {
    std::complex<double> value{0.0, 0.0};
    double truncation_tail = 0.0;
    long term_count = 0;
    std::string status; // ok | vanishes | unsupported-rank | constant-term-not-implemented | plan-only
    std::optional<VanishingCertificate> certificate;
};

// Numeric rank-0/1 coefficient of E(2s Lambda_1 - rho) (min) or
// E(2s Lambda_2 - rho) (ntm) on the maximal parabolic P_m at the adelic
// point (g_inf, I, ...). Rank above the representation bound returns an
// exact zero with a dominance certificate and no numeric work.
EvalResult theorem_b_eval(std::size_t n, std::size_t m_node, orbits::Rep rep, int rank,
                          const Int& character_scale, const DMatrix& g_inf, double s,
                          long height_bound, const Precision& prec = Precision{},
                          unsigned workers = 1);

enum class ClosedForm { min_5_2, ntm_part1, ntm_part2, ntm_part3, ntm_part4 };

// Hand-derived SL_5 closed forms, written out term by term and kept
// independent of the reduction-formula pipeline; they serve as the
// cross-check path for the rank-1 evaluations.
std::complex<double> transcribed_closed_forms(ClosedForm which, double s, const DMatrix& g_inf,
                                              long truncation, const Int& k_scale = Int(1),
                                              const Precision& prec = Precision{});

} // namespace fourier
} // namespace slw

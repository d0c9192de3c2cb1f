#pragma once

#include <optional>
#include <set>
#include <vector>

#include "slw/matrix.hpp"

namespace slw {
namespace cosets {

enum class FamilyKind { Gamma, Lambda, GLcoset, Torus };
enum class Embedding { none, iota_bottom_right, iota_hat_top_left };

// One parametrized matrix template. Scalar slots are flattened: a vector
// parameter of length L contributes L scalar slots.
struct Branch {
    int a = -1; // index within the a-indexed union, -1 for the primary branch
    std::size_t nonzero_slots = 0; // leading slots that must be nonzero (x')
    std::size_t free_slots = 0;    // remaining slots (y and the v components)
};

// Explicit representative family for one of the coset spaces of the
// expansion: Gamma_i (bottom-right SL_{n-i} block), Lambda_j (top-left
// SL_j block), the GL_k \ S_k space, or the one-parameter torus family
// diag(z, 1, ..., 1, 1/z).
class CosetFamily {
public:
    FamilyKind kind;
    std::size_t n;     // ambient SL_n
    std::size_t index; // i (Gamma), j (Lambda), k (GLcoset); 0 for torus
    std::size_t k;     // template size
    Embedding embedding;
    std::vector<Branch> branches;

    // k x k template at the given branch with params packed nonzero-first.
    QMatrix instantiate(std::size_t branch, const std::vector<Rational>& values) const;
    // ambient n x n matrix
    QMatrix embed(const QMatrix& small) const;
    QMatrix instantiate_embedded(std::size_t branch, const std::vector<Rational>& values) const;
};

CosetFamily gamma_family(std::size_t n, std::size_t i);   // 1 <= i <= n-2
CosetFamily lambda_family(std::size_t n, std::size_t j);  // 2 <= j <= n
CosetFamily gl_coset_family(std::size_t k);               // GL_k \ S_k
// Diagonal family realizing the torus quotient for target root 1 or n-1;
// psi0 must be trivial along the target and along some adjacent pair
// avoiding it.
CosetFamily torus_family(std::size_t n, const std::set<int>& psi0_support, int target_root);

enum class ParamDomain { rationals, integers };

struct Instantiation {
    QMatrix matrix; // embedded, n x n
    std::size_t branch;
    std::vector<Rational> params;
};

// Deterministic stream over all instantiations with reduced-fraction
// parameters of height (max of |numerator|, denominator) at most the
// bound, ordered branch by branch, slots odometer-style, each slot by
// (height, numerator, denominator).
class EnumerationStream {
public:
    EnumerationStream(CosetFamily family, long height_bound, ParamDomain domain);

    std::optional<Instantiation> next();

private:
    CosetFamily family_;
    std::vector<Rational> nonzero_values_;
    std::vector<Rational> free_values_;
    std::size_t branch_ = 0;
    std::vector<std::size_t> odo_;
    bool branch_fresh_ = true;

    bool advance();
};

std::vector<Instantiation> enumerate_all(const CosetFamily& family, long height_bound,
                                         ParamDomain domain = ParamDomain::rationals);

// Scalar parameter values of height <= bound in canonical order.
std::vector<Rational> parameter_values(long height_bound, bool include_zero, ParamDomain domain);

} // namespace cosets
} // namespace slw

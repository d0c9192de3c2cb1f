#include "slw/cosets.hpp"

#include <numeric>

#include "slw/errors.hpp"

namespace slw {
namespace cosets {

QMatrix CosetFamily::instantiate(std::size_t branch, const std::vector<Rational>& values) const {
    if (branch >= branches.size()) throw domain_error("branch index out of range");
    const Branch& br = branches[branch];
    if (values.size() != br.nonzero_slots + br.free_slots)
        throw domain_error("wrong parameter count for branch");
    for (std::size_t i = 0; i < br.nonzero_slots; ++i)
        if (values[i] == 0) throw domain_error("nonzero parameter slot holds zero");

    QMatrix m(k, k);
    switch (kind) {
        case FamilyKind::Gamma: {
            // The v-block carries w/x' rather than a free v: the rational
            // family is the same, but integral parameter tuples are then
            // exactly the points surviving the non-archimedean gate of the
            // translate sums.
            if (br.a < 0) {
                // [[x'^{-1}, 0, 0], [y, x', 0], [w/x', 0, I]]
                const Rational& x = values[0];
                m(0, 0) = Rational(1) / x;
                m(1, 0) = values[1];
                m(1, 1) = x;
                for (std::size_t t = 0; t + 2 < k; ++t) {
                    m(2 + t, 0) = values[2 + t] / x;
                    m(2 + t, 2 + t) = 1;
                }
            } else {
                // [[0, 0, (-1)^{a+1} x'^{-1}, 0], [x', 0, 0, 0],
                //  [0, I_a, 0, 0], [0, 0, w/x', I]]
                const std::size_t a = static_cast<std::size_t>(br.a);
                const Rational& x = values[0];
                m(0, a + 1) = Rational((a % 2 == 0) ? -1 : 1) / x;
                m(1, 0) = x;
                for (std::size_t t = 0; t < a; ++t) m(2 + t, 1 + t) = 1;
                for (std::size_t t = 0; a + 2 + t < k; ++t) {
                    m(a + 2 + t, a + 1) = values[1 + t] / x;
                    m(a + 2 + t, a + 2 + t) = 1;
                }
            }
            break;
        }
        case FamilyKind::Lambda: {
            // Parametrized through u = x'^{-1}, the form the worked SL_5
            // representatives take; the last block row (v, y, u) is what
            // the bottom-row minors see, so integral parameters are again
            // exactly the surviving points.
            if (br.a < 0) {
                // [[I, 0, 0], [0, u^{-1}, 0], [v^T, y, u]]
                const Rational& u = values[0];
                for (std::size_t t = 0; t + 2 < k; ++t) m(t, t) = 1;
                m(k - 2, k - 2) = Rational(1) / u;
                m(k - 1, k - 2) = values[1];
                m(k - 1, k - 1) = u;
                for (std::size_t t = 0; t + 2 < k; ++t) m(k - 1, t) = values[2 + t];
            } else {
                // [[I_a, 0, 0, 0], [0, 0, I, 0], [0, 0, 0, u^{-1}],
                //  [0, (-1)^{k+a+1} u, v^T, 0]]
                const std::size_t a = static_cast<std::size_t>(br.a);
                const Rational& u = values[0];
                for (std::size_t t = 0; t < a; ++t) m(t, t) = 1;
                for (std::size_t t = 0; a + t + 2 < k; ++t) m(a + t, a + 1 + t) = 1;
                m(k - 2, k - 1) = Rational(1) / u;
                m(k - 1, a) = Rational(((k + a + 1) % 2 == 0) ? 1 : -1) * u;
                for (std::size_t t = 0; a + 1 + t < k - 1; ++t) m(k - 1, a + 1 + t) = values[1 + t];
            }
            break;
        }
        case FamilyKind::GLcoset: {
            // [[0, 0, 0], [I_a, 0, 0], [0, v, I]]
            const std::size_t a = static_cast<std::size_t>(br.a);
            for (std::size_t t = 0; t < a; ++t) m(1 + t, t) = 1;
            for (std::size_t t = 0; a + 1 + t < k; ++t) {
                m(a + 1 + t, a) = values[t];
                m(a + 1 + t, a + 1 + t) = 1;
            }
            break;
        }
        case FamilyKind::Torus: {
            const Rational& z = values[0];
            m = QMatrix::identity(k);
            m(0, 0) = z;
            m(k - 1, k - 1) = Rational(1) / z;
            break;
        }
    }
    return m;
}

QMatrix CosetFamily::embed(const QMatrix& small) const {
    if (embedding == Embedding::none) return small;
    QMatrix m = QMatrix::identity(n);
    const std::size_t off = (embedding == Embedding::iota_bottom_right) ? n - k : 0;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m(off + i, off + j) = small(i, j);
    return m;
}

QMatrix CosetFamily::instantiate_embedded(std::size_t branch,
                                          const std::vector<Rational>& values) const {
    return embed(instantiate(branch, values));
}

CosetFamily gamma_family(std::size_t n, std::size_t i) {
    if (i < 1 || i > n - 2) throw domain_error("gamma family needs 1 <= i <= n-2");
    CosetFamily f;
    f.kind = FamilyKind::Gamma;
    f.n = n;
    f.index = i;
    f.k = n - i;
    f.embedding = Embedding::iota_bottom_right;
    f.branches.push_back(Branch{-1, 1, f.k - 1}); // x'; y and v
    for (std::size_t a = 0; a + 2 <= f.k; ++a)
        f.branches.push_back(Branch{static_cast<int>(a), 1, f.k - a - 2});
    return f;
}

CosetFamily lambda_family(std::size_t n, std::size_t j) {
    if (j < 2 || j > n) throw domain_error("lambda family needs 2 <= j <= n");
    CosetFamily f;
    f.kind = FamilyKind::Lambda;
    f.n = n;
    f.index = j;
    f.k = j;
    f.embedding = (j == n) ? Embedding::none : Embedding::iota_hat_top_left;
    f.branches.push_back(Branch{-1, 1, f.k - 1});
    for (std::size_t a = 0; a + 2 <= f.k; ++a)
        f.branches.push_back(Branch{static_cast<int>(a), 1, f.k - a - 2});
    return f;
}

CosetFamily gl_coset_family(std::size_t k) {
    if (k < 1) throw domain_error("GL coset family needs k >= 1");
    CosetFamily f;
    f.kind = FamilyKind::GLcoset;
    f.n = k;
    f.index = k;
    f.k = k;
    f.embedding = Embedding::none;
    for (std::size_t a = 0; a < k; ++a)
        f.branches.push_back(Branch{static_cast<int>(a), 0, k - a - 1});
    return f;
}

CosetFamily torus_family(std::size_t n, const std::set<int>& psi0_support, int target_root) {
    if (n < 4) throw domain_error("torus family needs n >= 4");
    if (target_root != 1 && target_root != static_cast<int>(n) - 1)
        throw domain_error("torus family targets alpha_1 or alpha_{n-1}");
    if (psi0_support.count(target_root))
        throw unsupported_error("torus family: psi0 supported on the target root");
    // need a free adjacent pair away from the target for the stabilizer map
    bool pair_found = false;
    for (int j = 1; j + 1 <= static_cast<int>(n) - 1 && !pair_found; ++j) {
        if (j == target_root || j + 1 == target_root) continue;
        if (!psi0_support.count(j) && !psi0_support.count(j + 1)) pair_found = true;
    }
    if (!pair_found)
        throw unsupported_error("torus family: psi0 not trivial along two adjacent roots");
    CosetFamily f;
    f.kind = FamilyKind::Torus;
    f.n = n;
    f.index = 0;
    f.k = n;
    f.embedding = Embedding::none;
    f.branches.push_back(Branch{-1, 1, 0}); // z in Q^x
    return f;
}

std::vector<Rational> parameter_values(long height_bound, bool include_zero, ParamDomain domain) {
    if (height_bound < 1) throw domain_error("height bound must be >= 1");
    std::vector<Rational> out;
    if (include_zero) out.push_back(0);
    for (long h = 1; h <= height_bound; ++h) {
        if (domain == ParamDomain::integers) {
            out.push_back(Rational(-h));
            out.push_back(Rational(h));
            continue;
        }
        // shell of reduced p/q with max(|p|, q) = h, ordered by (p, q)
        for (long p = -h; p <= h; ++p) {
            if (p == 0) continue;
            for (long q = 1; q <= h; ++q) {
                if (std::max(std::labs(p), q) != h) continue;
                if (std::gcd(std::labs(p), q) != 1) continue;
                out.push_back(Rational(p, q));
            }
        }
    }
    return out;
}

EnumerationStream::EnumerationStream(CosetFamily family, long height_bound, ParamDomain domain)
    : family_(std::move(family)),
      nonzero_values_(parameter_values(height_bound, false, domain)),
      free_values_(parameter_values(height_bound, true, domain)) {}

bool EnumerationStream::advance() {
    while (branch_ < family_.branches.size()) {
        const Branch& br = family_.branches[branch_];
        const std::size_t slots = br.nonzero_slots + br.free_slots;
        if (branch_fresh_) {
            odo_.assign(slots, 0);
            branch_fresh_ = false;
            bool empty = false;
            if (br.nonzero_slots > 0 && nonzero_values_.empty()) empty = true;
            if (br.free_slots > 0 && free_values_.empty()) empty = true;
            if (!empty) return true;
        } else {
            // odometer increment, last slot fastest
            std::size_t i = slots;
            while (i > 0) {
                --i;
                const std::size_t limit =
                    (i < br.nonzero_slots) ? nonzero_values_.size() : free_values_.size();
                if (odo_[i] + 1 < limit) {
                    ++odo_[i];
                    for (std::size_t j = i + 1; j < slots; ++j) odo_[j] = 0;
                    return true;
                }
            }
        }
        ++branch_;
        branch_fresh_ = true;
    }
    return false;
}

std::optional<Instantiation> EnumerationStream::next() {
    if (!advance()) return std::nullopt;
    const Branch& br = family_.branches[branch_];
    std::vector<Rational> vals;
    vals.reserve(odo_.size());
    for (std::size_t i = 0; i < odo_.size(); ++i)
        vals.push_back(i < br.nonzero_slots ? nonzero_values_[odo_[i]] : free_values_[odo_[i]]);
    Instantiation inst{family_.instantiate_embedded(branch_, vals), branch_, vals};
    return inst;
}

std::vector<Instantiation> enumerate_all(const CosetFamily& family, long height_bound,
                                         ParamDomain domain) {
    EnumerationStream s(family, height_bound, domain);
    std::vector<Instantiation> out;
    while (auto inst = s.next()) out.push_back(std::move(*inst));
    return out;
}

} // namespace cosets
} // namespace slw

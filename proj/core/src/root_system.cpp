#include "slw/root_system.hpp"

#include <algorithm>

#include "slw/errors.hpp"

namespace slw {

namespace {
constexpr std::size_t kWeylRankCap = 7; // n! enumeration cap
}

std::string AffineInS::str() const {
    std::string out;
    if (a != 0) {
        if (a == -1)
            out += "-";
        else if (a != 1)
            out += rat_to_string(a);
        out += "s";
        if (b != 0) {
            out += (b > 0 ? "+" : "-");
            out += rat_to_string(rat_abs(b));
        }
    } else {
        out = rat_to_string(b);
    }
    return out;
}

Weight Weight::eisenstein(std::size_t n, std::size_t k) {
    if (n < 2 || k < 1 || k > n - 1)
        throw domain_error("eisenstein weight: need n >= 2, 1 <= k <= n-1");
    std::vector<AffineInS> eps(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Rational rho_part = -Rational(static_cast<long>(n - 1 - i));
        eps[i] = (i < k) ? AffineInS(Rational(2), rho_part)
                         : AffineInS(Rational(0), rho_part);
    }
    return Weight(std::move(eps));
}

AffineInS Weight::pair_simple(std::size_t i) const {
    if (i < 1 || i >= eps_.size()) throw domain_error("simple root index out of range");
    return eps_[i - 1] - eps_[i];
}

AffineInS Weight::pair_root(std::size_t i, std::size_t j) const {
    if (i < 1 || j < 1 || i > eps_.size() || j > eps_.size() || i == j)
        throw domain_error("root indices out of range");
    return eps_[i - 1] - eps_[j - 1];
}

std::vector<AffineInS> Weight::fundamental() const {
    std::vector<AffineInS> out;
    out.reserve(eps_.size() - 1);
    for (std::size_t i = 1; i < eps_.size(); ++i) out.push_back(pair_simple(i));
    return out;
}

Weight Weight::plus_rho() const {
    std::vector<AffineInS> eps = eps_;
    const std::size_t n = eps.size();
    for (std::size_t i = 0; i < n; ++i)
        eps[i].b += Rational(static_cast<long>(n - 1 - i));
    return Weight(std::move(eps));
}

WeylElement WeylElement::identity(std::size_t n) {
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    return WeylElement(std::move(p));
}

WeylElement WeylElement::simple(std::size_t n, std::size_t i) {
    if (i < 1 || i >= n) throw domain_error("simple reflection index out of range");
    WeylElement w = identity(n);
    std::swap(w.perm_[i - 1], w.perm_[i]);
    return w;
}

WeylElement WeylElement::from_word(std::size_t n, const std::vector<int>& letters) {
    WeylElement w = identity(n);
    for (int l : letters) w = w * simple(n, static_cast<std::size_t>(l));
    return w;
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
    if (n() != o.n()) throw domain_error("Weyl composition rank mismatch");
    std::vector<std::size_t> p(n());
    for (std::size_t i = 0; i < n(); ++i) p[i] = perm_[o.perm_[i]];
    return WeylElement(std::move(p));
}

WeylElement WeylElement::inverse() const {
    std::vector<std::size_t> p(n());
    for (std::size_t i = 0; i < n(); ++i) p[perm_[i]] = i;
    return WeylElement(std::move(p));
}

Weight WeylElement::act(const Weight& w) const {
    if (w.n() != n()) throw domain_error("Weyl action rank mismatch");
    std::vector<AffineInS> eps(n());
    for (std::size_t i = 0; i < n(); ++i) eps[perm_[i]] = w.eps(i);
    return Weight(std::move(eps));
}

std::pair<std::size_t, std::size_t> WeylElement::act_root(std::size_t i, std::size_t j) const {
    return {perm_[i - 1] + 1, perm_[j - 1] + 1};
}

bool WeylElement::maps_root_negative(std::size_t i, std::size_t j) const {
    const auto [a, b] = act_root(i, j);
    return (i < j) ? a > b : a < b;
}

std::size_t WeylElement::length() const { return inversions().size(); }

std::vector<std::pair<std::size_t, std::size_t>> WeylElement::inversions() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 1; i <= n(); ++i)
        for (std::size_t j = i + 1; j <= n(); ++j)
            if (perm_[i - 1] > perm_[j - 1]) out.emplace_back(i, j);
    return out;
}

std::vector<int> WeylElement::reduced_word() const {
    std::vector<int> word;
    WeylElement w = *this;
    // Peel the smallest left descent each step: yields the lexicographically
    // smallest reduced word.
    while (true) {
        const WeylElement winv = w.inverse();
        int descent = 0;
        for (std::size_t k = 1; k < n(); ++k) {
            if (winv.perm_[k - 1] > winv.perm_[k]) {
                descent = static_cast<int>(k);
                break;
            }
        }
        if (descent == 0) break;
        word.push_back(descent);
        w = simple(n(), static_cast<std::size_t>(descent)) * w;
    }
    return word;
}

QMatrix WeylElement::permutation_matrix() const {
    QMatrix m(n(), n());
    for (std::size_t i = 0; i < n(); ++i) m(perm_[i], i) = 1;
    if (m.det() == -1) {
        // flip the sign of the row holding the image of coordinate 0
        for (std::size_t j = 0; j < n(); ++j) m(perm_[0], j) = -m(perm_[0], j);
    }
    return m;
}

std::string WeylWord::str() const {
    if (letters.empty()) return "e";
    std::string s;
    for (int l : letters) s += std::to_string(l);
    return s;
}

CharacterSupport CharacterSupport::unramified(const std::set<int>& roots) {
    CharacterSupport c;
    c.support = roots;
    for (int r : roots) c.params[r] = 1;
    c.check_non_adjacent();
    return c;
}

void CharacterSupport::check_non_adjacent() const {
    int prev = -10;
    for (int r : support) {
        if (r - prev < 2)
            throw unsupported_error("character support has adjacent simple roots");
        prev = r;
    }
}

namespace weyl {

std::vector<std::vector<int>> cartan_matrix(std::size_t n) {
    if (n < 2) throw domain_error("Cartan matrix needs n >= 2");
    const std::size_t r = n - 1;
    std::vector<std::vector<int>> a(r, std::vector<int>(r, 0));
    for (std::size_t i = 0; i < r; ++i) {
        a[i][i] = 2;
        if (i + 1 < r) {
            a[i][i + 1] = -1;
            a[i + 1][i] = -1;
        }
    }
    return a;
}

Weight weyl_act(std::size_t n, const WeylWord& w, const Weight& lambda) {
    for (int l : w.letters)
        if (l < 1 || static_cast<std::size_t>(l) >= n)
            throw domain_error("Weyl word letter out of range");
    return WeylElement::from_word(n, w.letters).act(lambda);
}

std::vector<WeylElement> enumerate(std::size_t n) {
    if (n > kWeylRankCap)
        throw unsupported_error("Weyl enumeration capped at n = " + std::to_string(kWeylRankCap));
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    std::vector<WeylElement> out;
    do {
        out.emplace_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

namespace {
void check_support(std::size_t n, const std::set<int>& support) {
    if (support.empty()) throw domain_error("empty simple-root set");
    for (int j : support)
        if (j < 1 || static_cast<std::size_t>(j) >= n)
            throw domain_error("support root index out of range");
}
} // namespace

std::vector<WeylElement> c_psi_set(std::size_t n, const std::set<int>& support) {
    check_support(n, support);
    std::vector<WeylElement> out;
    for (const WeylElement& w : enumerate(n)) {
        bool all_neg = true;
        for (int j : support)
            if (!w.maps_root_negative(j, j + 1)) {
                all_neg = false;
                break;
            }
        if (all_neg) out.push_back(w);
    }
    return out;
}

std::vector<WeylElement> minimal_coset_reps(std::size_t n, const std::set<int>& support) {
    check_support(n, support);
    std::vector<WeylElement> out;
    for (const WeylElement& w : enumerate(n)) {
        bool all_pos = true;
        for (int j : support)
            if (w.maps_root_negative(j, j + 1)) {
                all_pos = false;
                break;
            }
        if (all_pos) out.push_back(w);
    }
    std::sort(out.begin(), out.end(), [](const WeylElement& x, const WeylElement& y) {
        const auto lx = x.length(), ly = y.length();
        if (lx != ly) return lx < ly;
        return x.reduced_word() < y.reduced_word();
    });
    return out;
}

WeylElement longest_element(std::size_t n, const std::set<int>& subsystem) {
    for (int j : subsystem)
        if (j < 1 || static_cast<std::size_t>(j) >= n)
            throw domain_error("subsystem root index out of range");
    // Each connected run [a..b] of simple roots contributes the order
    // reversal of coordinates a..b+1.
    WeylElement w = WeylElement::identity(n);
    auto it = subsystem.begin();
    while (it != subsystem.end()) {
        int a = *it, b = a;
        auto jt = std::next(it);
        while (jt != subsystem.end() && *jt == b + 1) {
            b = *jt;
            ++jt;
        }
        std::vector<std::size_t> p(n);
        for (std::size_t i = 0; i < n; ++i) p[i] = i;
        for (int i = a - 1; i <= b; ++i) p[i] = static_cast<std::size_t>(b + (a - 1) - i);
        w = w * WeylElement(std::move(p));
        it = jt;
    }
    return w;
}

} // namespace weyl
} // namespace slw

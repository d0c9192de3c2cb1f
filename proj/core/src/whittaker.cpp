#include "slw/whittaker.hpp"

#include <algorithm>
#include <cmath>

#include "slw/errors.hpp"
#include "slw/padic.hpp"

namespace slw {
namespace whittaker {

namespace {
constexpr double kTwoPi = 6.28318530717958647692;
}

AffineInS XiRatio::canonical_arg(const AffineInS& x) {
    const AffineInS reflected(-x.a, Rational(1) - x.b);
    if (x.a > 0) return x;
    if (x.a < 0) return reflected;
    return x.b >= Rational(1, 2) ? x : reflected;
}

XiRatio XiRatio::from_inversion_args(const std::vector<AffineInS>& args) {
    std::vector<AffineInS> num, den;
    for (const AffineInS& c : args) {
        if (c.a == 0 && (c.b == 0 || c.b == 1))
            throw pole_error("intertwiner factor pinned to a xi pole");
        num.push_back(canonical_arg(c));
        den.push_back(canonical_arg(AffineInS(c.a, c.b + 1)));
    }
    std::sort(num.begin(), num.end());
    std::sort(den.begin(), den.end());
    XiRatio r;
    // multiset cancellation on the canonical forms
    std::size_t i = 0, j = 0;
    while (i < num.size() && j < den.size()) {
        if (num[i] == den[j]) {
            ++i;
            ++j;
        } else if (num[i] < den[j]) {
            r.numerator.push_back(num[i++]);
        } else {
            r.denominator.push_back(den[j++]);
        }
    }
    for (; i < num.size(); ++i) r.numerator.push_back(num[i]);
    for (; j < den.size(); ++j) r.denominator.push_back(den[j]);
    return r;
}

std::string XiRatio::str() const {
    auto side = [](const std::vector<AffineInS>& v) {
        std::string s;
        std::size_t i = 0;
        while (i < v.size()) {
            std::size_t j = i;
            while (j < v.size() && v[j] == v[i]) ++j;
            if (!s.empty()) s += "*";
            s += "xi(" + v[i].str() + ")";
            if (j - i > 1) s += "^" + std::to_string(j - i);
            i = j;
        }
        return s;
    };
    std::string top = numerator.empty() ? "1" : side(numerator);
    if (denominator.empty()) return top;
    std::string bot = side(denominator);
    if (denominator.size() > 1) bot = "(" + bot + ")";
    return top + "/" + bot;
}

double XiRatio::eval(double s) const {
    auto factor = [&](const AffineInS& arg) {
        const double x = arg.eval(s);
        if (std::fabs(x) < 1e-12 || std::fabs(x - 1.0) < 1e-12)
            throw pole_error("xi(" + arg.str() + ") hits a pole at s = " + std::to_string(s));
        return sf::xi_real(x);
    };
    double v = 1.0;
    for (const AffineInS& a : numerator) v *= factor(a);
    for (const AffineInS& a : denominator) v /= factor(a);
    return v;
}

std::vector<ReductionTerm> reduction_terms(std::size_t n, const Weight& lambda,
                                           const std::set<int>& support) {
    if (lambda.n() != n) throw domain_error("weight rank mismatch");
    CharacterSupport::unramified(support); // validates non-adjacency
    if (n > 7) throw unsupported_error("reduction terms capped at n = 7");

    const WeylElement w0p = weyl::longest_element(n, support);
    std::vector<ReductionTerm> rows;
    std::set<std::vector<AffineInS>> seen; // group key: w_c^{-1} lambda
    for (const WeylElement& wc : weyl::minimal_coset_reps(n, support)) {
        const WeylElement winv = wc.inverse();
        const Weight wl = winv.act(lambda);

        // intertwiner over the inversion set of w_c^{-1}; a factor with
        // constant argument -1 makes the whole row vanish identically
        bool vanishes = false;
        std::vector<AffineInS> args;
        for (const auto& [i, j] : winv.inversions()) {
            const AffineInS c = lambda.pair_root(i, j);
            if (c.a == 0 && c.b == -1) {
                vanishes = true;
                break;
            }
            args.push_back(c);
        }
        if (vanishes) continue;

        // one minimal-length representative per value of w_c^{-1} lambda
        const std::vector<AffineInS> key = wl.fundamental();
        if (!seen.insert(key).second) continue;

        ReductionTerm t;
        t.word = WeylWord(wc.reduced_word());
        const Weight wl_rho = wl.plus_rho();
        bool contributes = true;
        for (int j : support) {
            const AffineInS ip = wl_rho.pair_simple(static_cast<std::size_t>(j));
            t.support_ip[j] = ip;
            if (ip.is_zero()) contributes = false;
        }
        t.contributes = contributes;
        t.weight_exponents = (wc * w0p).inverse().act(lambda).plus_rho().fundamental();
        if (contributes || t.word.letters.empty())
            t.m_factor = XiRatio::from_inversion_args(args);
        rows.push_back(std::move(t));
    }
    return rows;
}

TwistedParams twist_character(const std::map<int, double>& m, const std::vector<double>& y) {
    const std::size_t n = y.size() + 1;
    for (double yi : y)
        if (!(yi > 0.0)) throw domain_error("twist needs positive torus coordinates");
    TwistedParams out;
    for (const auto& [i, mi] : m) {
        if (i < 1 || static_cast<std::size_t>(i) >= n) throw domain_error("root index out of range");
        const double yi = y[i - 1];
        const double ylo = (i >= 2) ? y[i - 2] : 1.0;
        const double yhi = (static_cast<std::size_t>(i) < n - 1) ? y[i] : 1.0;
        out.m_per_root[i] = yi * yi / (ylo * yhi) * mi;
    }
    return out;
}

double sl2_whittaker(double s_prime, const Rational& m, double y, const Precision& prec) {
    if (m == 0) throw domain_error("sl2 whittaker needs m != 0");
    if (!(y > 0.0)) throw domain_error("sl2 whittaker needs y > 0");
    if (den(m) != 1) return 0.0; // non-integer mode dies non-archimedeanly
    const double two_s = 2.0 * s_prime;
    if (std::fabs(two_s) < 1e-12 || std::fabs(two_s - 1.0) < 1e-12)
        throw pole_error("sl2 whittaker at a xi pole");
    const Int mz = int_abs(num(m));
    const double mabs = mz.convert_to<double>();
    return 2.0 / sf::xi_real(two_s) * std::sqrt(y) * std::pow(mabs, s_prime - 0.5) *
           padic::divisor_sum(two_s - 1.0, mz) *
           sf::bessel_k(s_prime - 0.5, kTwoPi * mabs * y, prec);
}

NonArchData nonarch_data(const QMatrix& l, const std::set<int>& support,
                         const std::map<int, Int>& m_params) {
    const std::size_t n = l.rows();
    NonArchData out;
    out.eta_products.assign(n - 1, Rational(1));

    // only primes in entry denominators can move an eta norm off 1
    std::vector<Int> primes;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (const Int& p : padic::prime_factors(den(l(i, j))))
                if (std::find(primes.begin(), primes.end(), p) == primes.end())
                    primes.push_back(p);
    std::sort(primes.begin(), primes.end());

    std::map<Int, std::vector<Rational>> norms; // per prime: |eta_1|..|eta_{n-1}|
    for (const Int& p : primes) {
        norms[p] = iwasawa::padic_eta_norms(l, p).eta_norms;
        for (std::size_t i = 0; i < n - 1; ++i) out.eta_products[i] *= norms[p][i];
    }

    for (int j : support) {
        auto it = m_params.find(j);
        const Rational mj = (it == m_params.end()) ? Rational(1) : Rational(it->second);
        LocalProfile prof;
        std::vector<Int> all = primes;
        if (mj != 0)
            for (const Int& p : padic::prime_support(mj))
                if (std::find(all.begin(), all.end(), p) == all.end()) all.push_back(p);
        for (const Int& p : all) {
            Rational t = padic::norm(mj, p);
            if (norms.count(p)) {
                const auto& e = norms[p];
                t *= e[j - 1] * e[j - 1];
                if (j >= 2) t /= e[j - 2];
                if (static_cast<std::size_t>(j) <= n - 2) t /= e[j];
            }
            if (t > 1) {
                prof.integral = false;
                break;
            }
            // |t|_p = p^{-v}, v >= 0: multiply p^v into the sigma carrier
            prof.q *= den(t);
        }
        out.profiles[j] = prof;
    }
    return out;
}

std::complex<double> pairwise_sum(const std::vector<std::complex<double>>& xs) {
    if (xs.empty()) return {0.0, 0.0};
    std::vector<std::complex<double>> level = xs;
    while (level.size() > 1) {
        std::vector<std::complex<double>> next;
        next.reserve((level.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < level.size(); i += 2) next.push_back(level[i] + level[i + 1]);
        if (level.size() % 2 == 1) next.push_back(level.back());
        level = std::move(next);
    }
    return level[0];
}

std::complex<double> evaluate_whittaker(std::size_t n, const Weight& lambda,
                                        const std::set<int>& support,
                                        const std::map<int, Int>& m_params, const QMatrix& l,
                                        const DMatrix& g_inf, double s, const Precision& prec) {
    if (l.rows() != n || l.cols() != n) throw domain_error("translate has wrong shape");
    if (l.det() != 1) throw domain_error("translate must have determinant 1");
    for (int j : support) {
        auto it = m_params.find(j);
        if (it != m_params.end() && it->second == 0) return {0.0, 0.0};
    }

    // exact gate first: a non-integral local profile kills the coefficient
    // before any numeric work
    const NonArchData na = nonarch_data(l, support, m_params);
    for (const auto& [j, prof] : na.profiles)
        if (!prof.integral) return {0.0, 0.0};

    const std::vector<ReductionTerm> terms = reduction_terms(n, lambda, support);
    const iwasawa::RealIwasawa iw = iwasawa::real_iwasawa(DMatrix::from_rational(l) * g_inf);

    double phase_arg = 0.0;
    std::map<int, double> m_real;
    for (int j : support) {
        auto it = m_params.find(j);
        const double mj = (it == m_params.end()) ? 1.0 : it->second.convert_to<double>();
        m_real[j] = mj;
        phase_arg += mj * iw.x_at(static_cast<std::size_t>(j), static_cast<std::size_t>(j) + 1);
    }
    const TwistedParams twisted = twist_character(m_real, iw.y);

    std::vector<std::complex<double>> vals;
    for (const ReductionTerm& t : terms) {
        if (!t.contributes) continue;
        double v = 1.0;
        for (std::size_t i = 1; i <= n - 1; ++i) {
            const double c = t.weight_exponents[i - 1].eval(s);
            v *= std::pow(iw.y_at(i), c);
            const double ei = rat_to_double(na.eta_products[i - 1]);
            if (ei != 1.0) v *= std::pow(ei, c);
        }
        if (!t.m_factor) throw pole_error("contributing term without intertwiner");
        try {
            v *= t.m_factor->eval(s);
            for (int j : support) {
                const double sp = t.support_ip.at(j).eval(s) / 2.0;
                const double two_s = 2.0 * sp;
                if (std::fabs(two_s) < 1e-12 || std::fabs(two_s - 1.0) < 1e-12)
                    throw pole_error("support factor at a xi pole");
                const double mprime = std::fabs(twisted.m_per_root.at(j));
                v *= 2.0 / sf::xi_real(two_s) * std::pow(mprime, sp - 0.5) *
                     sf::bessel_k(sp - 0.5, kTwoPi * mprime, prec) *
                     padic::divisor_sum(two_s - 1.0, na.profiles.at(j).q);
            }
        } catch (const pole_error& e) {
            throw pole_error(std::string(e.what()) + " [term w_c = " + t.word.str() + "]");
        }
        vals.push_back({v, 0.0});
    }
    const std::complex<double> phase(std::cos(kTwoPi * phase_arg), std::sin(kTwoPi * phase_arg));
    return phase * pairwise_sum(vals);
}

} // namespace whittaker
} // namespace slw

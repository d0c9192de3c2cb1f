#include "slw/fourier.hpp"

#include <cmath>
#include <future>
#include <numeric>

#include "slw/errors.hpp"
#include "slw/padic.hpp"

namespace slw {
namespace fourier {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

CosetRef gamma_ref(std::size_t n, std::size_t i, const std::set<int>& psi0) {
    if (i <= n - 2)
        return CosetRef{cosets::FamilyKind::Gamma, n, i, cosets::Embedding::iota_bottom_right, {}};
    return CosetRef{cosets::FamilyKind::Torus, n, i, cosets::Embedding::none, psi0};
}

std::vector<std::pair<int, int>> simple_positions(const std::set<int>& support) {
    std::vector<std::pair<int, int>> out;
    for (int j : support) out.emplace_back(j, j + 1);
    return out;
}

} // namespace

std::vector<TermPlan> theorem_a_plan(std::size_t n, orbits::Rep rep) {
    if (n < 5) throw domain_error("expansion plans need n >= 5");
    std::vector<TermPlan> plans;

    TermPlan constant;
    constant.label = "constant";
    plans.push_back(constant);

    for (std::size_t i = 1; i <= n - 1; ++i) {
        TermPlan p;
        p.label = "single alpha_" + std::to_string(i);
        p.character = CharacterSupport::unramified({static_cast<int>(i)});
        p.character_positions = simple_positions(p.character.support);
        p.coset_chain.push_back(gamma_ref(n, i, {}));
        plans.push_back(std::move(p));
    }

    if (rep == orbits::Rep::ntm) {
        for (std::size_t j = 1; j <= n - 3; ++j)
            for (std::size_t i = j + 2; i <= n - 1; ++i) {
                TermPlan p;
                p.label = "pair alpha_" + std::to_string(j) + ",alpha_" + std::to_string(i);
                p.character =
                    CharacterSupport::unramified({static_cast<int>(j), static_cast<int>(i)});
                p.character_positions = simple_positions(p.character.support);
                p.coset_chain.push_back(gamma_ref(n, i, {static_cast<int>(j)}));
                p.coset_chain.push_back(gamma_ref(n, j, {}));
                plans.push_back(std::move(p));
            }
    }
    return plans;
}

TermPlan theorem_b_rank2_plan(std::size_t n, std::size_t m_node) {
    if (m_node < 1 || m_node > n - 1) throw domain_error("node out of range");
    const std::size_t m = m_node;
    if (std::min(m, n - m) < 2) throw domain_error("no rank-2 character on this parabolic");

    TermPlan p;
    p.label = "rank-2 on P_" + std::to_string(m);
    p.character_positions = {{static_cast<int>(m), static_cast<int>(m) + 1},
                             {static_cast<int>(m) - 1, static_cast<int>(m) + 2}};
    // after the twist the surviving character sits on alpha_1 and alpha_3
    p.character = CharacterSupport::unramified({1, 3});

    // omega: (t_1, ..., t_n) -> (t_{m-1}, t_{m+2}, t_m, t_{m+1}, t_1, ..., t_{m-2}, t_{m+3}, ...)
    std::vector<std::size_t> perm(n);
    perm[m - 2] = 0;
    perm[m + 1] = 1;
    perm[m - 1] = 2;
    perm[m] = 3;
    for (std::size_t c = 1; c + 1 <= m - 1; ++c) perm[c - 1] = 3 + c; // t_1 .. t_{m-2}
    for (std::size_t c = m + 3; c <= n; ++c) perm[c - 1] = c - 1;
    WeylElement omega(perm);
    p.weyl_twist_element = omega;
    p.weyl_twist = WeylWord(omega.reduced_word());

    NoncompactDescriptor c;
    c.label = "adelic column groups C1 C2";
    c.positions.emplace_back(static_cast<int>(m), static_cast<int>(m) + 2);
    for (std::size_t i = 1; i + 2 <= m; ++i)
        c.positions.emplace_back(static_cast<int>(i), static_cast<int>(m) + 2);
    for (std::size_t i = 1; i + 2 <= m; ++i)
        c.positions.emplace_back(static_cast<int>(i), static_cast<int>(m) + 1);
    p.noncompact = std::move(c);
    return p;
}

TermPlan theorem_c_plan(std::size_t n) {
    if (n < 5) throw domain_error("expansion plans need n >= 5");
    TermPlan p;
    p.label = "orbit [2 1^(n-2)] via U_1 translates";
    p.character = CharacterSupport::unramified({1});
    p.character_positions = simple_positions(p.character.support);
    NoncompactDescriptor y;
    y.label = "lattice translate sum Y";
    for (std::size_t i = 3; i <= n; ++i) y.positions.emplace_back(static_cast<int>(i), 2);
    p.noncompact = std::move(y);
    return p;
}

TermPlan theorem_d_plan(std::size_t n) {
    if (n < 5) throw domain_error("expansion plans need n >= 5");
    TermPlan p;
    p.label = "orbit [2^2 1^(n-4)] via twisted U_2 translates";
    p.character_positions = {{2, 3}, {1, 4}}; // psi(u_{2,3} + u_{1,4}) on U_2
    p.character = CharacterSupport::unramified({1, 3});

    // omega: (t_1, t_2, t_3, t_4, ...) -> (t_1, t_3, t_4, t_2, ...)
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    perm[2] = 1; // t_3 to slot 2
    perm[3] = 2; // t_4 to slot 3
    perm[1] = 3; // t_2 to slot 4
    WeylElement omega(perm);
    p.weyl_twist_element = omega;
    p.weyl_twist = WeylWord(omega.reduced_word());

    NoncompactDescriptor y;
    y.label = "lattice translate sum Y'";
    for (std::size_t i = 5; i <= n; ++i) y.positions.emplace_back(static_cast<int>(i), 4);
    for (std::size_t i = 5; i <= n; ++i) y.positions.emplace_back(static_cast<int>(i), 3);
    p.noncompact = std::move(y);
    return p;
}

namespace {

// one family's translate sum, grouped by parameter height for the tail report
struct FamilySum {
    std::complex<double> value{0.0, 0.0};
    double last_shell = 0.0;
    long nonzero_terms = 0;
};

long param_height(const std::vector<Rational>& params) {
    Int h = 1;
    for (const Rational& p : params) {
        h = std::max(h, int_abs(num(p)));
        h = std::max(h, den(p));
    }
    return h.convert_to<long>();
}

FamilySum sum_family(const cosets::CosetFamily& family, std::size_t n, const Weight& lambda,
                     const std::set<int>& support, const std::map<int, Int>& m_params,
                     const DMatrix& g_inf, double s, long bound, const Precision& prec,
                     unsigned workers) {
    // The non-archimedean gate kills every non-integral parameter point of
    // these families (property-tested), so the translate sum runs over the
    // integer sub-family.
    std::vector<cosets::Instantiation> insts =
        cosets::enumerate_all(family, bound, cosets::ParamDomain::integers);

    std::vector<std::complex<double>> vals(insts.size());
    auto eval_range = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i)
            vals[i] = whittaker::evaluate_whittaker(n, lambda, support, m_params, insts[i].matrix,
                                                    g_inf, s, prec);
    };
    if (workers <= 1 || insts.size() < 64) {
        eval_range(0, insts.size());
    } else {
        std::vector<std::future<void>> futs;
        const std::size_t chunk = (insts.size() + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::size_t lo = std::min<std::size_t>(w * chunk, insts.size());
            const std::size_t hi = std::min<std::size_t>(lo + chunk, insts.size());
            if (lo < hi) futs.push_back(std::async(std::launch::async, eval_range, lo, hi));
        }
        for (auto& f : futs) f.get();
    }

    FamilySum out;
    std::vector<std::complex<double>> shell(bound + 1, {0.0, 0.0});
    for (std::size_t i = 0; i < insts.size(); ++i) {
        if (vals[i] != std::complex<double>(0.0, 0.0)) ++out.nonzero_terms;
        shell[param_height(insts[i].params)] += vals[i];
    }
    out.value = whittaker::pairwise_sum(shell);
    out.last_shell = std::abs(shell[bound]);
    return out;
}

} // namespace

EvalResult theorem_b_eval(std::size_t n, std::size_t m_node, orbits::Rep rep, int rank,
                          const Int& character_scale, const DMatrix& g_inf, double s,
                          long height_bound, const Precision& prec, unsigned workers) {
    if (m_node < 1 || m_node > n - 1) throw domain_error("node out of range");
    if (character_scale == 0) throw domain_error("character scale must be nonzero");
    const std::size_t m = m_node;
    EvalResult res;

    if (rank == 0) {
        res.status = "constant-term-not-implemented";
        return res;
    }
    if (rank < 0 || static_cast<std::size_t>(rank) > std::min(m, n - m)) {
        res.status = "unsupported-rank";
        return res; // exact zero: no such character on this parabolic
    }
    const int r_pi = (rep == orbits::Rep::min) ? 1 : 2;
    if (rank > r_pi) {
        // dominance route: exact zero with a certificate, no numeric work
        const QMatrix u = orbits::y_of_Y(n, m, orbits::Y_r(n, m, rank));
        const orbits::Partition orbit = orbits::jordan_type(u);
        const orbits::Partition cap = orbits::cap_partition(rep, static_cast<long>(n));
        if (!orbits::coefficient_vanishes(rep, u))
            throw domain_error("internal: expected vanishing certificate");
        res.status = "vanishes";
        res.certificate = VanishingCertificate{
            orbit, cap, "orbit of the rank-" + std::to_string(rank) +
                            " character is not dominated by the wave-front cap"};
        return res;
    }
    if (rank == 2) {
        res.status = "plan-only"; // non-compact leftover: see theorem_b_rank2_plan
        return res;
    }

    const Weight lambda = Weight::eisenstein(n, rep == orbits::Rep::min ? 1 : 2);
    const int mnode = static_cast<int>(m);
    std::vector<std::complex<double>> parts;

    // bare term
    {
        std::map<int, Int> mp{{mnode, character_scale}};
        parts.push_back(whittaker::evaluate_whittaker(n, lambda, {mnode}, mp,
                                                      QMatrix::identity(n), g_inf, s, prec));
        res.term_count += parts.back() != std::complex<double>(0.0, 0.0) ? 1 : 0;
    }

    if (rep == orbits::Rep::ntm) {
        // column families Lambda_j, j <= m-2
        for (std::size_t j = 1; j + 2 <= m; ++j) {
            const cosets::CosetFamily fam =
                (j == 1) ? cosets::torus_family(n, {mnode}, 1)
                         : cosets::lambda_family(n, j);
            std::map<int, Int> mp{{static_cast<int>(j), Int(1)}, {mnode, character_scale}};
            const FamilySum fs = sum_family(fam, n, lambda, {static_cast<int>(j), mnode}, mp,
                                            g_inf, s, height_bound, prec, workers);
            parts.push_back(fs.value);
            res.term_count += fs.nonzero_terms;
            res.truncation_tail += fs.last_shell;
        }
        // row families Gamma_i, i >= m+2
        for (std::size_t i = m + 2; i <= n - 1; ++i) {
            const cosets::CosetFamily fam =
                (i <= n - 2) ? cosets::gamma_family(n, i)
                             : cosets::torus_family(n, {mnode}, static_cast<int>(n) - 1);
            std::map<int, Int> mp{{mnode, character_scale}, {static_cast<int>(i), Int(1)}};
            const FamilySum fs = sum_family(fam, n, lambda, {mnode, static_cast<int>(i)}, mp,
                                            g_inf, s, height_bound, prec, workers);
            parts.push_back(fs.value);
            res.term_count += fs.nonzero_terms;
            res.truncation_tail += fs.last_shell;
        }
    }

    res.value = whittaker::pairwise_sum(parts);
    res.status = "ok";
    return res;
}

namespace {

struct Iwa {
    std::vector<double> y;
    double x12, x23, x45;
};

Iwa iwa_of(const DMatrix& g) {
    const iwasawa::RealIwasawa d = iwasawa::real_iwasawa(g);
    return Iwa{d.y, d.x_at(1, 2), d.x_at(2, 3), d.x_at(4, 5)};
}

std::complex<double> unit_phase(double arg) {
    return {std::cos(kTwoPi * arg), std::sin(kTwoPi * arg)};
}

QMatrix l_z(long z) {
    QMatrix l = QMatrix::identity(5);
    l(0, 0) = z;
    l(4, 4) = Rational(1) / Rational(z);
    return l;
}

QMatrix l_xy(long x, long y) {
    QMatrix l = QMatrix::identity(5);
    l(0, 0) = Rational(1) / Rational(x);
    l(1, 0) = y;
    l(1, 1) = x;
    return l;
}

QMatrix l_x(long x) {
    QMatrix l = QMatrix::identity(5);
    l(0, 0) = 0;
    l(0, 1) = Rational(-1) / Rational(x);
    l(1, 0) = x;
    l(1, 1) = 0;
    return l;
}

} // namespace

std::complex<double> transcribed_closed_forms(ClosedForm which, double s, const DMatrix& g_inf,
                                              long truncation, const Int& k_scale,
                                              const Precision& prec) {
    if (g_inf.rows() != 5 || g_inf.cols() != 5)
        throw domain_error("the transcribed closed forms are the SL_5 worked examples");
    if (truncation < 1) throw domain_error("truncation bound must be >= 1");
    auto xi = [](double t) { return sf::xi_real(t); };
    auto K = [&](double nu, double arg) { return sf::bessel_k(nu, arg, prec); };
    auto sig = [](double t, const Int& mz) { return padic::divisor_sum(-t, mz); };

    switch (which) {
        case ClosedForm::min_5_2: {
            // 2 e(k x45) y4^{5-2s} sigma_{4-2s}(k) |k y4^2/y3|^{s-2}
            //   K_{s-2}(2 pi |k| y4^2/y3) / xi(2s)
            const Iwa w = iwa_of(g_inf);
            const double k = int_abs(k_scale).convert_to<double>();
            const double arg = w.y[3] * w.y[3] / w.y[2];
            const double val = 2.0 / xi(2.0 * s) * std::pow(w.y[3], 5.0 - 2.0 * s) *
                               padic::divisor_sum(2.0 * s - 4.0, int_abs(k_scale)) *
                               std::pow(k * arg, s - 2.0) * K(s - 2.0, kTwoPi * k * arg);
            return unit_phase(k_scale.convert_to<double>() * w.x45) * val;
        }
        case ClosedForm::ntm_part1: {
            // 2 e(x45) [ y1^{2s-1} y3^{3/2-s} y4 / xi(2s)
            //          + y1^{3-2s} y2^{2s-2} y3^{3/2-s} y4 xi(2s-2)/(xi(2s) xi(2s-1))
            //          + y2^{4-2s} y3^{s-3/2} y4 xi(2s-3)/(xi(2s) xi(2s-1)) ]
            //   K_{s-3/2}(2 pi y4^2/y3)
            const Iwa w = iwa_of(g_inf);
            const double y1 = w.y[0], y2 = w.y[1], y3 = w.y[2], y4 = w.y[3];
            const double bracket =
                std::pow(y1, 2.0 * s - 1.0) * std::pow(y3, 1.5 - s) * y4 / xi(2.0 * s) +
                std::pow(y1, 3.0 - 2.0 * s) * std::pow(y2, 2.0 * s - 2.0) *
                    std::pow(y3, 1.5 - s) * y4 * xi(2.0 * s - 2.0) /
                    (xi(2.0 * s) * xi(2.0 * s - 1.0)) +
                std::pow(y2, 4.0 - 2.0 * s) * std::pow(y3, s - 1.5) * y4 * xi(2.0 * s - 3.0) /
                    (xi(2.0 * s) * xi(2.0 * s - 1.0));
            return unit_phase(w.x45) * 2.0 * bracket * K(s - 1.5, kTwoPi * y4 * y4 / y3);
        }
        case ClosedForm::ntm_part2: {
            // sum over z != 0: 4 e(x12 + x45) y1 y2^{s-1} y3^{3/2-s} y4
            //   |z|^{2s-5} K_{s-1}(2 pi y1^2/y2) K_{s-3/2}(2 pi y4^2/y3)
            //   sigma_{2-2s}(|z|) sigma_{3-2s}(|z|) / (xi(2s) xi(2s-1))
            std::vector<std::complex<double>> terms;
            for (long z = -truncation; z <= truncation; ++z) {
                if (z == 0) continue;
                const Iwa w = iwa_of(DMatrix::from_rational(l_z(z)) * g_inf);
                const double y1 = w.y[0], y2 = w.y[1], y3 = w.y[2], y4 = w.y[3];
                const double za = std::labs(z);
                const double val = 4.0 / (xi(2.0 * s) * xi(2.0 * s - 1.0)) * y1 *
                                   std::pow(y2, s - 1.0) * std::pow(y3, 1.5 - s) * y4 *
                                   std::pow(za, 2.0 * s - 5.0) *
                                   K(s - 1.0, kTwoPi * y1 * y1 / y2) *
                                   K(s - 1.5, kTwoPi * y4 * y4 / y3) *
                                   sig(2.0 - 2.0 * s, Int(std::labs(z))) *
                                   sig(3.0 - 2.0 * s, Int(std::labs(z)));
                terms.push_back(unit_phase(w.x12 + w.x45) * val);
            }
            return whittaker::pairwise_sum(terms);
        }
        case ClosedForm::ntm_part3: {
            // sum over x != 0, y: 4 e(x23 + x45) y1^{3/2-s} y2 y4
            //   K_{s-3/2}(2 pi y2^2/(y1 y3)) K_{s-3/2}(2 pi y4^2/y3)
            //   sigma_{3-2s}(gcd(|x|, |y|)) / (xi(2s) xi(2s-1))
            std::vector<std::complex<double>> terms;
            for (long x = -truncation; x <= truncation; ++x) {
                if (x == 0) continue;
                for (long y = -truncation; y <= truncation; ++y) {
                    const Iwa w = iwa_of(DMatrix::from_rational(l_xy(x, y)) * g_inf);
                    const double y1 = w.y[0], y2 = w.y[1], y3 = w.y[2], y4 = w.y[3];
                    const Int k = padic::gcd_from_norms({Int(x), Int(y)});
                    const double val = 4.0 / (xi(2.0 * s) * xi(2.0 * s - 1.0)) *
                                       std::pow(y1, 1.5 - s) * y2 * y4 *
                                       K(s - 1.5, kTwoPi * y2 * y2 / (y1 * y3)) *
                                       K(s - 1.5, kTwoPi * y4 * y4 / y3) *
                                       sig(3.0 - 2.0 * s, k);
                    terms.push_back(unit_phase(w.x23 + w.x45) * val);
                }
            }
            return whittaker::pairwise_sum(terms);
        }
        case ClosedForm::ntm_part4: {
            std::vector<std::complex<double>> terms;
            for (long x = -truncation; x <= truncation; ++x) {
                if (x == 0) continue;
                const Iwa w = iwa_of(DMatrix::from_rational(l_x(x)) * g_inf);
                const double y1 = w.y[0], y2 = w.y[1], y3 = w.y[2], y4 = w.y[3];
                const double val = 4.0 / (xi(2.0 * s) * xi(2.0 * s - 1.0)) *
                                   std::pow(y1, 1.5 - s) * y2 * y4 *
                                   K(s - 1.5, kTwoPi * y2 * y2 / (y1 * y3)) *
                                   K(s - 1.5, kTwoPi * y4 * y4 / y3) *
                                   sig(3.0 - 2.0 * s, Int(std::labs(x)));
                terms.push_back(unit_phase(w.x23 + w.x45) * val);
            }
            return whittaker::pairwise_sum(terms);
        }
    }
    throw domain_error("unknown closed form selector");
}

} // namespace fourier
} // namespace slw

#include <doctest.h>

#include <random>

#include "slw/cosets.hpp"
#include "slw/errors.hpp"
#include "slw/padic.hpp"
#include "slw/whittaker.hpp"
#include "testutil.hpp"

using namespace slw;
using whittaker::ReductionTerm;
using whittaker::XiRatio;

namespace {

const ReductionTerm& row_by_word(const std::vector<ReductionTerm>& rows, const std::string& w) {
    for (const auto& r : rows)
        if (r.word.str() == w) return r;
    REQUIRE_MESSAGE(false, ("missing row " + w).c_str());
    static ReductionTerm dummy;
    return dummy;
}

AffineInS aff(long a, long b) { return AffineInS(Rational(a), Rational(b)); }

} // namespace

TEST_CASE("xi-ratio canonicalization and rendering") {
    // arguments reflect onto positive leading coefficient
    CHECK(XiRatio::canonical_arg(aff(-2, 5)) == aff(2, -4));
    CHECK(XiRatio::canonical_arg(aff(0, -2)) == aff(0, 3));
    CHECK(XiRatio::canonical_arg(aff(0, 1)) == aff(0, 1));

    const XiRatio r = XiRatio::from_inversion_args({aff(2, -1), aff(2, -2), aff(2, -3)});
    CHECK(r.str() == "xi(2s-3)/xi(2s)");
    const XiRatio r2 = XiRatio::from_inversion_args({aff(2, -2), aff(2, -3), aff(2, -1), aff(2, -2)});
    CHECK(r2.str() == "xi(2s-3)*xi(2s-2)/(xi(2s-1)*xi(2s))");
}

TEST_CASE("reduction terms reproduce the four SL_5 tables") {
    const Weight lam1 = Weight::eisenstein(5, 1);
    const Weight lam2 = Weight::eisenstein(5, 2);

    SUBCASE("lambda = 2s L1 - rho, support {4}") {
        const auto rows = whittaker::reduction_terms(5, lam1, {4});
        REQUIRE(rows.size() == 4);
        CHECK(rows[0].word.str() == "e");
        CHECK(rows[1].word.str() == "1");
        CHECK(rows[2].word.str() == "12");
        CHECK(rows[3].word.str() == "123");
        for (int i = 0; i < 3; ++i) CHECK(!rows[i].contributes);
        CHECK(rows[3].contributes);
        CHECK(rows[3].support_ip.at(4) == aff(2, -3));
        CHECK(rows[3].m_factor->str() == "xi(2s-3)/xi(2s)");
        CHECK(rows[3].weight_exponents ==
              std::vector<AffineInS>{aff(0, 0), aff(0, 0), aff(0, 0), aff(-2, 5)});
        // identity row renders the empty ratio
        CHECK(rows[0].m_factor->str() == "1");
    }

    SUBCASE("lambda = 2s L2 - rho, support {4}") {
        const auto rows = whittaker::reduction_terms(5, lam2, {4});
        REQUIRE(rows.size() == 7);
        const std::vector<std::string> words{"e", "2", "21", "23", "213", "2132", "213243"};
        for (std::size_t i = 0; i < words.size(); ++i) CHECK(rows[i].word.str() == words[i]);
        int stars = 0;
        for (const auto& r : rows) stars += r.contributes ? 1 : 0;
        CHECK(stars == 3);

        const auto& w23 = row_by_word(rows, "23");
        CHECK(w23.contributes);
        CHECK(w23.support_ip.at(4) == aff(2, -2));
        CHECK(w23.m_factor->str() == "xi(2s-2)/xi(2s)");
        CHECK(w23.weight_exponents ==
              std::vector<AffineInS>{aff(2, -1), aff(0, 0), aff(0, 0), aff(-2, 4)});

        const auto& w213 = row_by_word(rows, "213");
        CHECK(w213.contributes);
        CHECK(w213.m_factor->str() == "xi(2s-2)^2/(xi(2s-1)*xi(2s))");
        CHECK(w213.weight_exponents ==
              std::vector<AffineInS>{aff(-2, 3), aff(2, -2), aff(0, 0), aff(-2, 4)});

        const auto& w2132 = row_by_word(rows, "2132");
        CHECK(w2132.contributes);
        CHECK(w2132.m_factor->str() == "xi(2s-3)*xi(2s-2)/(xi(2s-1)*xi(2s))");
        CHECK(w2132.weight_exponents ==
              std::vector<AffineInS>{aff(0, 0), aff(-2, 4), aff(2, -3), aff(-2, 4)});
    }

    SUBCASE("lambda = 2s L2 - rho, support {1, 4}") {
        const auto rows = whittaker::reduction_terms(5, lam2, {1, 4});
        REQUIRE(rows.size() == 5);
        const std::vector<std::string> words{"e", "2", "23", "2132", "213243"};
        for (std::size_t i = 0; i < words.size(); ++i) CHECK(rows[i].word.str() == words[i]);
        const auto& w23 = row_by_word(rows, "23");
        CHECK(w23.contributes);
        CHECK(w23.support_ip.at(1) == aff(2, -1));
        CHECK(w23.support_ip.at(4) == aff(2, -2));
        CHECK(w23.m_factor->str() == "xi(2s-2)/xi(2s)");
        CHECK(w23.weight_exponents ==
              std::vector<AffineInS>{aff(-2, 3), aff(2, -2), aff(0, 0), aff(-2, 4)});
        int stars = 0;
        for (const auto& r : rows) stars += r.contributes ? 1 : 0;
        CHECK(stars == 1);
    }

    SUBCASE("lambda = 2s L2 - rho, support {2, 4}") {
        const auto rows = whittaker::reduction_terms(5, lam2, {2, 4});
        REQUIRE(rows.size() == 5);
        const std::vector<std::string> words{"e", "21", "23", "213", "213243"};
        for (std::size_t i = 0; i < words.size(); ++i) CHECK(rows[i].word.str() == words[i]);
        const auto& w213 = row_by_word(rows, "213");
        CHECK(w213.contributes);
        CHECK(w213.support_ip.at(2) == aff(2, -2));
        CHECK(w213.support_ip.at(4) == aff(2, -2));
        CHECK(w213.m_factor->str() == "xi(2s-2)^2/(xi(2s-1)*xi(2s))");
        CHECK(w213.weight_exponents ==
              std::vector<AffineInS>{aff(0, 0), aff(-2, 4), aff(2, -3), aff(-2, 4)});
        // identity row pairs nontrivially with alpha_2 but not alpha_4
        const auto& id = row_by_word(rows, "e");
        CHECK(id.support_ip.at(2) == aff(2, 0));
        CHECK(id.support_ip.at(4) == aff(0, 0));
        CHECK(!id.contributes);
    }

    CHECK_THROWS_AS(whittaker::reduction_terms(5, lam2, {2, 3}), unsupported_error);
}

TEST_CASE("twisted character parameters") {
    const auto flat = whittaker::twist_character({{1, 1.0}, {4, 1.0}}, {1.0, 1.0, 1.0, 1.0});
    CHECK(flat.m_per_root.at(1) == doctest::Approx(1.0));
    CHECK(flat.m_per_root.at(4) == doctest::Approx(1.0));

    const std::vector<double> y{2.0, 3.0, 5.0, 7.0};
    const auto t = whittaker::twist_character({{4, 2.0}}, y);
    CHECK(t.m_per_root.at(4) == doctest::Approx(2.0 * 7.0 * 7.0 / 5.0));

    // explicit SL_3 check: conjugate x_{alpha_1}(u) by the torus and read
    // the scaled entry directly
    const std::vector<double> y3{2.0, 3.0};
    DMatrix a(3, 3);
    a(0, 0) = y3[0];
    a(1, 1) = y3[1] / y3[0];
    a(2, 2) = 1.0 / y3[1];
    DMatrix x(3, 3);
    x = DMatrix::identity(3);
    const double u = 0.37;
    x(0, 1) = u;
    // a x a^{-1}
    DMatrix ainv(3, 3);
    ainv(0, 0) = 1.0 / a(0, 0);
    ainv(1, 1) = 1.0 / a(1, 1);
    ainv(2, 2) = 1.0 / a(2, 2);
    const DMatrix conj = a * x * ainv;
    const auto tw = whittaker::twist_character({{1, u}}, y3);
    CHECK(conj(0, 1) == doctest::Approx(tw.m_per_root.at(1)).epsilon(1e-14));
}

TEST_CASE("sl2 whittaker closed form") {
    CHECK(whittaker::sl2_whittaker(1.3, Rational(1, 2), 1.0) == 0.0);
    CHECK(whittaker::sl2_whittaker(1.3, Rational(-3), 0.8) ==
          whittaker::sl2_whittaker(1.3, Rational(3), 0.8));
    // m = 1, y = 1, s' = 1.25: (2/xi(2.5)) K_{0.75}(2 pi)
    const double expect = 2.0 / sf::xi_real(2.5) * sf::bessel_k(0.75, 2.0 * M_PI);
    CHECK(whittaker::sl2_whittaker(1.25, Rational(1), 1.0) ==
          doctest::Approx(expect).epsilon(1e-12));
    CHECK_THROWS_AS(whittaker::sl2_whittaker(1.3, Rational(0), 1.0), domain_error);
    CHECK_THROWS_AS(whittaker::sl2_whittaker(0.5, Rational(1), 1.0), pole_error);
}

TEST_CASE("non-archimedean data: identity, torus, and the stabilizer block") {
    const auto id = whittaker::nonarch_data(QMatrix::identity(5), {4}, {{4, Int(6)}});
    CHECK(id.profiles.at(4).integral);
    CHECK(id.profiles.at(4).q == 6);
    for (const Rational& e : id.eta_products) CHECK(e == Rational(1));

    // torus translate: q picks up |z| on both support roots
    QMatrix l = QMatrix::identity(5);
    l(0, 0) = 6;
    l(4, 4) = Rational(1, 6);
    const auto tor = whittaker::nonarch_data(l, {1, 4}, {{1, Int(1)}, {4, Int(1)}});
    CHECK(tor.profiles.at(1).integral);
    CHECK(tor.profiles.at(1).q == 6);
    CHECK(tor.profiles.at(4).q == 6);
    for (const Rational& e : tor.eta_products) CHECK(e == Rational(1, 6));

    QMatrix lhalf = QMatrix::identity(5);
    lhalf(0, 0) = Rational(1, 2);
    lhalf(4, 4) = 2;
    const auto bad = whittaker::nonarch_data(lhalf, {1, 4}, {{1, Int(1)}, {4, Int(1)}});
    CHECK(!bad.profiles.at(1).integral);

    // the 2x2 stabilizer-quotient block: q = gcd through the norm maxima
    QMatrix lxy = QMatrix::identity(5);
    lxy(0, 0) = Rational(1, 4);
    lxy(1, 0) = 6;
    lxy(1, 1) = 4;
    const auto g = whittaker::nonarch_data(lxy, {2, 4}, {{2, Int(1)}, {4, Int(1)}});
    CHECK(g.profiles.at(2).integral);
    CHECK(g.profiles.at(2).q == padic::gcd_from_norms({4, 6}));
    CHECK(g.profiles.at(4).q == 1);
}

TEST_CASE("evaluate whittaker: phase periodicity and orthogonal invariance") {
    std::mt19937_64 rng(87);
    const Weight lam1 = Weight::eisenstein(5, 1);
    const DMatrix g = testutil::random_sl_n_real(rng, 5);
    const double s = 1.4;
    const auto base = whittaker::evaluate_whittaker(5, lam1, {4}, {{4, Int(1)}},
                                                    QMatrix::identity(5), g, s);

    // right multiplication by an orthogonal matrix leaves the value
    const DMatrix k = testutil::random_orthogonal(rng, 5);
    const auto rot = whittaker::evaluate_whittaker(5, lam1, {4}, {{4, Int(1)}},
                                                   QMatrix::identity(5), g * k, s);
    CHECK(std::abs(rot - base) <= 1e-9 * std::abs(base));

    // left multiplication by x_{45}(1) shifts the phase by e(m) = 1
    DMatrix shift = DMatrix::identity(5);
    shift(3, 4) = 1.0;
    const auto shifted = whittaker::evaluate_whittaker(5, lam1, {4}, {{4, Int(1)}},
                                                       QMatrix::identity(5), shift * g, s);
    CHECK(std::abs(shifted - base) <= 1e-9 * std::abs(base));

    // and by x_{45}(1/2) rotates it by e(1/2) = -1
    DMatrix half = DMatrix::identity(5);
    half(3, 4) = 0.5;
    const auto rotated = whittaker::evaluate_whittaker(5, lam1, {4}, {{4, Int(1)}},
                                                       QMatrix::identity(5), half * g, s);
    CHECK(std::abs(rotated + base) <= 1e-9 * std::abs(base));
}

TEST_CASE("evaluate whittaker: integral unimodular translates move into g") {
    std::mt19937_64 rng(91);
    const Weight lam2 = Weight::eisenstein(5, 2);
    const DMatrix g = testutil::random_sl_n_real(rng, 5);
    for (int t = 0; t < 5; ++t) {
        const QMatrix l = testutil::random_unimodular(rng, 5, 8, 2);
        const auto a = whittaker::evaluate_whittaker(5, lam2, {4}, {{4, Int(1)}}, l, g, 1.35);
        const auto b = whittaker::evaluate_whittaker(5, lam2, {4}, {{4, Int(1)}},
                                                     QMatrix::identity(5),
                                                     DMatrix::from_rational(l) * g, 1.35);
        CHECK(std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b)));
    }
}

TEST_CASE("evaluate whittaker: the gamma gate kills non-integral translates") {
    std::mt19937_64 rng(93);
    const Weight lam2 = Weight::eisenstein(5, 2);
    const DMatrix g = testutil::random_sl_n_real(rng, 5);

    // torus family with non-integer z
    const auto torus = cosets::torus_family(5, {4}, 1);
    for (const auto& inst : cosets::enumerate_all(torus, 2)) {
        bool integral = true;
        for (const Rational& p : inst.params) integral = integral && den(p) == 1;
        if (integral) continue;
        const auto v = whittaker::evaluate_whittaker(5, lam2, {1, 4}, {{1, Int(1)}, {4, Int(1)}},
                                                     inst.matrix, g, 1.35);
        CHECK(v == std::complex<double>(0.0, 0.0));
    }

    // gamma family with non-integer parameters (support {1, 3}, node 1)
    const auto gam = cosets::gamma_family(5, 3);
    int checked = 0;
    for (const auto& inst : cosets::enumerate_all(gam, 2)) {
        bool integral = true;
        for (const Rational& p : inst.params) integral = integral && den(p) == 1;
        if (integral || checked > 40) continue;
        ++checked;
        const auto v = whittaker::evaluate_whittaker(5, lam2, {1, 3}, {{1, Int(1)}, {3, Int(1)}},
                                                     inst.matrix, g, 1.35);
        CHECK(v == std::complex<double>(0.0, 0.0));
    }
    CHECK(checked > 0);

    // vector-parameter families at n = 6: gamma (k = 3) and lambda (j = 3)
    std::mt19937_64 rng6(97);
    const Weight lam2_6 = Weight::eisenstein(6, 2);
    const DMatrix g6 = testutil::random_sl_n_real(rng6, 6);
    int checked6 = 0;
    for (const auto& inst : cosets::enumerate_all(cosets::gamma_family(6, 3), 2)) {
        bool integral = true;
        for (const Rational& p : inst.params) integral = integral && den(p) == 1;
        if (integral || checked6 > 25) continue;
        ++checked6;
        const auto v = whittaker::evaluate_whittaker(6, lam2_6, {1, 3}, {{1, Int(1)}, {3, Int(1)}},
                                                     inst.matrix, g6, 1.4);
        CHECK(v == std::complex<double>(0.0, 0.0));
    }
    for (const auto& inst : cosets::enumerate_all(cosets::lambda_family(6, 3), 2)) {
        bool integral = true;
        for (const Rational& p : inst.params) integral = integral && den(p) == 1;
        if (integral || checked6 > 50) continue;
        ++checked6;
        const auto v = whittaker::evaluate_whittaker(6, lam2_6, {3, 5}, {{3, Int(1)}, {5, Int(1)}},
                                                     inst.matrix, g6, 1.4);
        CHECK(v == std::complex<double>(0.0, 0.0));
    }
    CHECK(checked6 > 20);

    // and the converse sanity: integral parameters pass the exact gate
    for (const auto& inst :
         cosets::enumerate_all(cosets::gamma_family(6, 3), 2, cosets::ParamDomain::integers)) {
        const auto na = whittaker::nonarch_data(inst.matrix, {1, 3}, {{1, Int(1)}, {3, Int(1)}});
        CHECK(na.profiles.at(3).integral);
    }
}

TEST_CASE("evaluate whittaker: pole reporting names the term") {
    const Weight lam1 = Weight::eisenstein(5, 1);
    const DMatrix g = DMatrix::identity(5);
    // s = 3/2 puts xi(2s-3) on its pole inside the contributing term
    try {
        whittaker::evaluate_whittaker(5, lam1, {4}, {{4, Int(1)}}, QMatrix::identity(5), g, 1.5);
        CHECK(false);
    } catch (const pole_error& e) {
        CHECK(std::string(e.what()).find("123") != std::string::npos);
    }
}

TEST_CASE("pairwise sum matches plain summation") {
    std::mt19937_64 rng(95);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    std::vector<std::complex<double>> xs;
    std::complex<double> plain{0.0, 0.0};
    for (int i = 0; i < 37; ++i) {
        xs.push_back({d(rng), d(rng)});
        plain += xs.back();
    }
    CHECK(std::abs(whittaker::pairwise_sum(xs) - plain) < 1e-12);
}

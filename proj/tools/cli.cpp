#include "cli.hpp"

#include <CLI11.hpp>

#include <complex>
#include <iostream>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "slw/config.hpp"
#include "slw/cosets.hpp"
#include "slw/errors.hpp"
#include "slw/fourier.hpp"
#include "slw/iwasawa.hpp"
#include "slw/jsonio.hpp"
#include "slw/oracle.hpp"
#include "slw/orbits.hpp"
#include "slw/root_system.hpp"
#include "slw/whittaker.hpp"

namespace slw {
namespace cli {

namespace {

using jsonio::json;

// weight mini-language: "2s*Lk-rho"
std::size_t parse_lambda_index(const std::string& text) {
    static const std::regex re(R"(^2s\*L(\d+)-rho$)");
    std::smatch m;
    if (!std::regex_match(text, m, re))
        throw domain_error("weight must have the form 2s*Lk-rho");
    return static_cast<std::size_t>(std::stoul(m[1].str()));
}

std::set<int> parse_support(const std::string& text) {
    std::set<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.insert(std::stoi(item));
    }
    if (out.empty()) throw domain_error("empty support list");
    return out;
}

json affine_list(const std::vector<AffineInS>& v) {
    json out = json::array();
    for (const AffineInS& a : v) out.push_back(a.str());
    return out;
}

json term_rows(const std::vector<whittaker::ReductionTerm>& rows, const std::set<int>& support) {
    json out = json::array();
    for (const auto& t : rows) {
        json row;
        row["word"] = t.word.str();
        row["contributes"] = t.contributes;
        json ip;
        for (int j : support) ip["alpha" + std::to_string(j)] = t.support_ip.at(j).str();
        row["inner_products"] = std::move(ip);
        row["intertwiner"] = t.m_factor ? t.m_factor->str() : "...";
        row["weights"] = affine_list(t.weight_exponents);
        out.push_back(std::move(row));
    }
    return out;
}

json plan_json(const fourier::TermPlan& p) {
    json out;
    out["label"] = p.label;
    json ch;
    json sup = json::array();
    for (int r : p.character.support) sup.push_back(r);
    ch["support"] = std::move(sup);
    json pos = json::array();
    for (const auto& [r, c] : p.character_positions) pos.push_back(json::array({r, c}));
    ch["positions"] = std::move(pos);
    out["character"] = std::move(ch);
    json chain = json::array();
    for (const auto& ref : p.coset_chain) {
        json f;
        switch (ref.kind) {
            case cosets::FamilyKind::Gamma: f["kind"] = "gamma"; break;
            case cosets::FamilyKind::Lambda: f["kind"] = "lambda"; break;
            case cosets::FamilyKind::GLcoset: f["kind"] = "gl-coset"; break;
            case cosets::FamilyKind::Torus: f["kind"] = "torus"; break;
        }
        f["index"] = ref.index;
        f["embedding"] = ref.embedding == cosets::Embedding::iota_bottom_right
                             ? "bottom-right"
                             : (ref.embedding == cosets::Embedding::iota_hat_top_left ? "top-left"
                                                                                      : "none");
        json psi0 = json::array();
        for (int r : ref.psi0_support) psi0.push_back(r);
        f["psi0_support"] = std::move(psi0);
        chain.push_back(std::move(f));
    }
    out["coset_chain"] = std::move(chain);
    if (p.weyl_twist) out["weyl_twist"] = p.weyl_twist->str();
    if (p.noncompact) {
        json nc;
        nc["label"] = p.noncompact->label;
        json pos2 = json::array();
        for (const auto& [r, c] : p.noncompact->positions) pos2.push_back(json::array({r, c}));
        nc["positions"] = std::move(pos2);
        out["noncompact"] = std::move(nc);
    }
    return out;
}

void emit(const json& j) { std::cout << jsonio::dump(j, 2) << "\n"; }

int run_iwasawa(const std::string& matrix_path, long prime) {
    const json jm = jsonio::load_file(matrix_path);
    json out;
    if (prime > 0) {
        const QMatrix g = jsonio::matrix_from_json(jm);
        const auto norms = iwasawa::padic_eta_norms(g, Int(prime));
        out["prime"] = prime;
        json e = json::array();
        for (const Rational& q : norms.eta_norms) e.push_back(rat_to_string(q));
        out["eta_norms"] = std::move(e);
    } else {
        const DMatrix g = jsonio::dmatrix_from_json(jm);
        const auto d = iwasawa::real_iwasawa(g);
        json x = json::array();
        for (std::size_t mu = 1; mu < d.n; ++mu) {
            json row = json::array();
            for (std::size_t nu = mu + 1; nu <= d.n; ++nu) row.push_back(d.x_at(mu, nu));
            x.push_back(std::move(row));
        }
        json y = json::array();
        for (double v : d.y) y.push_back(v);
        out["x"] = std::move(x);
        out["y"] = std::move(y);
    }
    emit(out);
    return 0;
}

int run_orbits(long n) {
    const auto parts = orbits::partitions_of(n);
    json out;
    out["n"] = n;
    json plist = json::array();
    for (const auto& p : parts) {
        json e;
        json pj = json::array();
        for (long x : p) pj.push_back(x);
        e["partition"] = std::move(pj);
        e["gcd"] = orbits::partition_gcd(p);
        e["representative"] = jsonio::matrix_to_json(orbits::orbit_representative(orbits::OrbitLabel(p)));
        plist.push_back(std::move(e));
    }
    out["partitions"] = std::move(plist);
    // dominance cover relations (Hasse diagram edges p < q)
    json edges = json::array();
    for (std::size_t a = 0; a < parts.size(); ++a)
        for (std::size_t b = 0; b < parts.size(); ++b) {
            if (a == b || !orbits::dominance_leq(parts[a], parts[b])) continue;
            bool cover = true;
            for (std::size_t c = 0; c < parts.size() && cover; ++c) {
                if (c == a || c == b) continue;
                if (orbits::dominance_leq(parts[a], parts[c]) &&
                    orbits::dominance_leq(parts[c], parts[b]))
                    cover = false;
            }
            if (cover) edges.push_back(json::array({static_cast<long>(a), static_cast<long>(b)}));
        }
    out["dominance_edges"] = std::move(edges);
    emit(out);
    return 0;
}

int run_weyl_table(long n, const std::string& lambda_text, const std::string& support_text) {
    const std::size_t k = parse_lambda_index(lambda_text);
    const std::set<int> support = parse_support(support_text);
    const Weight lambda = Weight::eisenstein(static_cast<std::size_t>(n), k);
    const auto rows = whittaker::reduction_terms(static_cast<std::size_t>(n), lambda, support);
    json out;
    out["n"] = n;
    out["lambda"] = lambda_text;
    json sup = json::array();
    for (int j : support) sup.push_back(j);
    out["support"] = std::move(sup);
    out["rows"] = term_rows(rows, support);
    emit(out);
    return 0;
}

int run_whittaker(long n, const std::string& lambda_text, const std::string& support_text,
                  double s, const std::string& g_path, const std::string& translate_path,
                  const std::string& m_text, const Config& cfg) {
    const std::size_t nn = static_cast<std::size_t>(n);
    const std::size_t k = parse_lambda_index(lambda_text);
    const std::set<int> support = parse_support(support_text);
    const Weight lambda = Weight::eisenstein(nn, k);
    const DMatrix g = jsonio::dmatrix_from_json(jsonio::load_file(g_path));
    QMatrix l = QMatrix::identity(nn);
    if (!translate_path.empty()) l = jsonio::matrix_from_json(jsonio::load_file(translate_path));
    std::map<int, Int> m_params;
    if (!m_text.empty()) {
        std::vector<long> ms;
        std::stringstream ss(m_text);
        std::string item;
        while (std::getline(ss, item, ',')) ms.push_back(std::stol(item));
        if (ms.size() != support.size())
            throw domain_error("need one character parameter per support root");
        std::size_t idx = 0;
        for (int j : support) m_params[j] = Int(ms[idx++]);
    } else {
        for (int j : support) m_params[j] = 1;
    }
    const std::complex<double> v =
        whittaker::evaluate_whittaker(nn, lambda, support, m_params, l, g, s, cfg.precision);
    json out;
    out["value_re"] = v.real();
    out["value_im"] = v.imag();
    emit(out);
    return 0;
}

int run_fourier(long n, long node, const std::string& rep_text, int rank, long scale, double s,
                const std::string& g_path, long bound, const Config& cfg) {
    const orbits::Rep rep = (rep_text == "min") ? orbits::Rep::min : orbits::Rep::ntm;
    if (rep_text != "min" && rep_text != "ntm") throw domain_error("rep must be min or ntm");
    DMatrix g = DMatrix::identity(static_cast<std::size_t>(n));
    if (!g_path.empty()) g = jsonio::dmatrix_from_json(jsonio::load_file(g_path));
    const auto res = fourier::theorem_b_eval(static_cast<std::size_t>(n),
                                             static_cast<std::size_t>(node), rep, rank, Int(scale),
                                             g, s, bound, cfg.precision, cfg.parallelism);
    json out;
    out["value_re"] = res.value.real();
    out["value_im"] = res.value.imag();
    out["truncation_tail"] = res.truncation_tail;
    out["term_count"] = res.term_count;
    out["status"] = res.status;
    if (res.certificate) {
        json cert;
        json orb = json::array();
        for (long x : res.certificate->orbit) orb.push_back(x);
        json cap = json::array();
        for (long x : res.certificate->cap) cap.push_back(x);
        cert["orbit"] = std::move(orb);
        cert["cap"] = std::move(cap);
        cert["reason"] = res.certificate->reason;
        out["certificate"] = std::move(cert);
    }
    emit(out);
    return 0;
}

int run_oracle_compare(double s, double y, long m, long bound, long quad) {
    oracle::LatticeTruncation t;
    t.coeff_bound = bound;
    t.quadrature_points = quad;
    const double numeric = oracle::fourier_mode_numeric(s, y, m, t);
    const double closed = whittaker::sl2_whittaker(s, Rational(m), y);
    json out;
    out["oracle"] = numeric;
    out["closed_form"] = closed;
    out["rel_err"] = std::abs(numeric - closed) / std::abs(closed);
    emit(out);
    return 0;
}

int run_plan(const std::string& theorem, long n, const std::string& rep_text, long node) {
    json out;
    if (theorem == "a") {
        const orbits::Rep rep = (rep_text == "ntm") ? orbits::Rep::ntm : orbits::Rep::min;
        json plans = json::array();
        for (const auto& p : fourier::theorem_a_plan(static_cast<std::size_t>(n), rep))
            plans.push_back(plan_json(p));
        out["plans"] = std::move(plans);
    } else if (theorem == "b3") {
        out["plan"] = plan_json(fourier::theorem_b_rank2_plan(static_cast<std::size_t>(n),
                                                              static_cast<std::size_t>(node)));
    } else if (theorem == "c") {
        out["plan"] = plan_json(fourier::theorem_c_plan(static_cast<std::size_t>(n)));
    } else if (theorem == "d") {
        out["plan"] = plan_json(fourier::theorem_d_plan(static_cast<std::size_t>(n)));
    } else {
        throw domain_error("theorem must be one of a, b3, c, d");
    }
    emit(out);
    return 0;
}

} // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"degenerate Whittaker functions and Eisenstein Fourier coefficients on SL_n"};
    app.require_subcommand(1);

    Config cfg;
    try {
        cfg = Config::from_env();
    } catch (const std::exception& e) {
        std::cerr << "bad environment override: " << e.what() << "\n";
        return 2;
    }

    // iwasawa
    auto* c_iw = app.add_subcommand("iwasawa", "Iwasawa coordinates or p-adic torus norms");
    std::string iw_matrix;
    long iw_prime = 0;
    c_iw->add_option("--matrix", iw_matrix, "matrix JSON file")->required();
    c_iw->add_option("--prime", iw_prime, "prime for the non-archimedean norms");

    // orbits
    auto* c_orb = app.add_subcommand("orbits", "nilpotent orbit catalogue");
    long orb_n = 5;
    bool orb_list = false;
    c_orb->add_option("--n", orb_n, "rank of SL_n")->required();
    c_orb->add_flag("--list", orb_list, "list partitions and dominance data");

    // weyl-table
    auto* c_wt = app.add_subcommand("weyl-table", "reduction-formula rows");
    long wt_n = 5;
    std::string wt_lambda, wt_support;
    c_wt->add_option("--n", wt_n)->required();
    c_wt->add_option("--lambda", wt_lambda, "weight, e.g. 2s*L1-rho")->required();
    c_wt->add_option("--support", wt_support, "comma-separated simple roots")->required();

    // whittaker
    auto* c_wh = app.add_subcommand("whittaker", "evaluate a degenerate Whittaker coefficient");
    long wh_n = 5;
    std::string wh_lambda, wh_support, wh_g, wh_translate, wh_m;
    double wh_s = 1.3;
    c_wh->add_option("--n", wh_n)->required();
    c_wh->add_option("--lambda", wh_lambda)->required();
    c_wh->add_option("--support", wh_support)->required();
    c_wh->add_option("--s", wh_s)->required();
    c_wh->add_option("--g", wh_g, "archimedean matrix JSON")->required();
    c_wh->add_option("--translate", wh_translate, "rational translate JSON");
    c_wh->add_option("--m", wh_m, "character parameters per support root");

    // fourier
    auto* c_f = app.add_subcommand("fourier", "maximal-parabolic Fourier coefficient");
    long f_n = 5, f_node = 4, f_bound = 0, f_scale = 1;
    int f_rank = 1;
    std::string f_rep = "min", f_g, f_out = "json";
    double f_s = 1.3;
    c_f->add_option("--n", f_n)->required();
    c_f->add_option("--node", f_node)->required();
    c_f->add_option("--rep", f_rep, "min or ntm")->required();
    c_f->add_option("--rank", f_rank)->required();
    c_f->add_option("--scale", f_scale, "character scale k");
    c_f->add_option("--s", f_s)->required();
    c_f->add_option("--g", f_g, "archimedean matrix JSON");
    c_f->add_option("--bound", f_bound, "coset height bound");
    c_f->add_option("--out", f_out);

    // oracle-compare
    auto* c_or = app.add_subcommand("oracle-compare", "lattice-sum oracle vs closed form");
    double or_s = 1.25, or_y = 1.0;
    long or_m = 1, or_bound = 200, or_quad = 256;
    c_or->add_option("--s", or_s)->required();
    c_or->add_option("--y", or_y)->required();
    c_or->add_option("--m", or_m)->required();
    c_or->add_option("--bound", or_bound);
    c_or->add_option("--quad", or_quad);

    // plan
    auto* c_pl = app.add_subcommand("plan", "symbolic expansion plans");
    std::string pl_theorem = "a", pl_rep = "min";
    long pl_n = 5, pl_node = 2;
    c_pl->add_option("--theorem", pl_theorem, "a, b3, c or d")->required();
    c_pl->add_option("--n", pl_n)->required();
    c_pl->add_option("--rep", pl_rep);
    c_pl->add_option("--node", pl_node);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e); // CLI11 prints usage; nonzero on error
    }

    try {
        if (*c_iw) return run_iwasawa(iw_matrix, iw_prime);
        if (*c_orb) return run_orbits(orb_n);
        if (*c_wt) return run_weyl_table(wt_n, wt_lambda, wt_support);
        if (*c_wh)
            return run_whittaker(wh_n, wh_lambda, wh_support, wh_s, wh_g, wh_translate, wh_m, cfg);
        if (*c_f) {
            const long bound = f_bound > 0 ? f_bound : cfg.height_bound;
            return run_fourier(f_n, f_node, f_rep, f_rank, f_scale, f_s, f_g, bound, cfg);
        }
        if (*c_or) return run_oracle_compare(or_s, or_y, or_m, or_bound, or_quad);
        if (*c_pl) return run_plan(pl_theorem, pl_n, pl_rep, pl_node);
    } catch (const pole_error& e) {
        std::cerr << "pole: " << e.what() << "\n";
        return 3;
    } catch (const unsupported_error& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return 3;
    } catch (const domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}

} // namespace cli
} // namespace slw

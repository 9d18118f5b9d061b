// Batch driver: every suite and computation behind one executable with
// reproducible JSON/CSV reports. Exit codes: 0 all checks pass, 1 check
// failures, 2 configuration errors.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <functional>
#include <random>

#include "daha/center.hpp"
#include "daha/cm.hpp"
#include "daha/daha_suites.hpp"
#include "daha/macdonald.hpp"
#include "daha/poisson.hpp"
#include "daha/report.hpp"
#include "daha/rtt.hpp"
#include "daha/uqrep.hpp"

using namespace daha;
using nlohmann::json;

namespace {

struct Output {
    std::string path;       // empty: stdout
    std::string format = "json";
    bool timings = false;
};

int finish(Report& rep, const Output& out, json data = json()) {
    rep.include_timings = out.timings;
    std::string payload;
    if (out.format == "csv") {
        payload = rep.emit_csv();
        if (data.contains("hilbert")) {
            payload = "degree,dimension,expected,match\n";
            for (const auto& row : data["hilbert"])
                payload += std::to_string(row["degree"].get<long>()) + "," +
                           std::to_string(row["dimension"].get<long>()) + "," +
                           std::to_string(row["expected"].get<long>()) + "," +
                           std::to_string(row["match"].get<bool>() ? 1 : 0) + "\n";
        }
    } else {
        json j = rep.to_json();
        if (!data.is_null()) j["data"] = data;
        payload = j.dump(2) + "\n";
    }
    if (out.path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream f(out.path, std::ios::binary);
        if (!f) fail(Err::IoError, "cannot open output path " + out.path);
        f << payload;
    }
    return rep.all_pass() ? 0 : 1;
}

json scalar_vec_json(const std::vector<QTScalar>& v) {
    json a = json::array();
    for (const auto& s : v) a.push_back(s.str());
    return a;
}

json cm_point_json(const CMPoint<QTScalar>& p) {
    json j;
    const int n = p.n();
    j["n"] = n;
    json g = json::array(), gp = json::array(), v = json::array(), phi = json::array();
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            g.push_back(p.g(i, k).str());
            gp.push_back(p.gp(i, k).str());
        }
    for (int i = 0; i < n; ++i) {
        v.push_back(p.v(i).str());
        phi.push_back(p.phi(i).str());
    }
    j["g"] = g;
    j["gp"] = gp;
    j["v"] = v;
    j["phi"] = phi;
    j["zeta2l"] = p.zeta2l.str();
    return j;
}

CMPoint<QTScalar> cm_point_from_json(const json& jin) {
    // accept both a bare point and a full report produced by `cm point --out`
    const json& j = (!jin.contains("n") && jin.contains("data")) ? jin.at("data") : jin;
    CMPoint<QTScalar> p;
    int n = j.at("n").get<int>();
    p.g = zero_mat(n, n, QTScalar(0l));
    p.gp = zero_mat(n, n, QTScalar(0l));
    p.v = Vec<QTScalar>(n);
    p.phi = RowVec<QTScalar>(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            p.g(i, k) = parse_qt_scalar(j.at("g")[static_cast<std::size_t>(i * n + k)]);
            p.gp(i, k) = parse_qt_scalar(j.at("gp")[static_cast<std::size_t>(i * n + k)]);
        }
    for (int i = 0; i < n; ++i) {
        p.v(i) = parse_qt_scalar(j.at("v")[static_cast<std::size_t>(i)]);
        p.phi(i) = parse_qt_scalar(j.at("phi")[static_cast<std::size_t>(i)]);
    }
    p.zeta2l = parse_qt_scalar(j.at("zeta2l").get<std::string>());
    return p;
}

std::vector<std::int64_t> parse_int_list(const std::string& s) {
    std::vector<std::int64_t> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(std::stoll(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(std::stoll(cur));
    return out;
}

json load_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) fail(Err::IoError, "cannot read " + path);
    json j;
    f >> j;
    return j;
}

const QtField kGeneric;

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact DAHA / Macdonald / Calogero-Moser batch driver"};
    app.require_subcommand(1);

    Output out;
    int n = 2;
    int degree = 3;
    int window = 3;
    unsigned l = 3;
    std::int64_t kk = 0, mm = 1;
    std::uint64_t seed = 1;
    std::string weight_str_opt = "1,0";
    std::string point_path;
    std::string kind = "reflection_F";
    std::string model = "both";
    int max_degree = 4;
    int cdeg = 2;
    int count = 200;
    int max_len = 5;
    int max_power = 2;
    int maxlen = 2;
    bool mutate = false;
    bool allow_even_l = false;
    std::string h_list = "2,3", hp_list = "1,4", zeta_str = "5";

    app.add_option("--out", out.path, "output path (default stdout)");
    app.add_option("--format", out.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_flag("--timings", out.timings, "include wall-clock timings in the report");
    app.add_option("--seed", seed, "seed for randomized suites");

    auto* verify = app.add_subcommand("verify", "presentation and PBW suites");
    verify->require_subcommand(1);
    auto* vrel = verify->add_subcommand("relations", "defining relations as operator identities");
    vrel->add_option("--n", n, "rank");
    vrel->add_option("--degree", degree, "monomial window bound");
    vrel->add_flag("--mutate-t1", mutate, "control run with a broken t_1");
    auto* vpbw = verify->add_subcommand("pbw", "straightening round trip on random words");
    vpbw->add_option("--n", n, "rank");
    vpbw->add_option("--count", count, "number of random words");
    vpbw->add_option("--max-len", max_len, "maximal word length");
    vpbw->add_option("--degree", degree, "oracle monomial window bound");
    auto* vsph = verify->add_subcommand("spherical", "o^2 = a_o o by explicit multiplication");
    vsph->add_option("--n", n, "rank");

    auto* mac = app.add_subcommand("macdonald", "Macdonald polynomial via the dominance solve");
    mac->add_option("--n", n, "rank");
    mac->add_option("--weight", weight_str_opt, "dominant weight, comma separated");

    auto* hc = app.add_subcommand("hc", "Macdonald-Ruijsenaars operator suites");
    hc->require_subcommand(1);
    auto* hcc = hc->add_subcommand("commute", "commuting family check");
    hcc->add_option("--n", n, "rank");
    hcc->add_option("--degree", degree, "action window bound");
    auto* hccmp = hc->add_subcommand("compare", "spherical side against the dual family");
    hccmp->add_option("--n", n, "rank");
    hccmp->add_option("--degree", degree, "symmetric test set degree bound");

    auto* cen = app.add_subcommand("center", "centrality at a curve point");
    cen->add_option("--n", n, "rank");
    cen->add_option("--l", l, "order of tau");
    cen->add_option("--k", kk, "curve exponent k (q^k = t^m)");
    cen->add_option("--m", mm, "curve exponent m");
    cen->add_option("--window", window, "certification window bound");
    cen->add_flag("--allow-even-l", allow_even_l, "override the odd-l default");

    auto* cm = app.add_subcommand("cm", "Calogero-Moser geometry");
    cm->require_subcommand(1);
    auto* cmp_ = cm->add_subcommand("point", "explicit solved point from a diagonal pair");
    cmp_->add_option("--diag", h_list, "h entries, comma separated integers or fractions p/q");
    cmp_->add_option("--diagp", hp_list, "h' entries");
    cmp_->add_option("--zeta2l", zeta_str, "the constant zeta^{2l}");
    auto* cmc = cm->add_subcommand("check", "moment map and cyclicity of a point file");
    cmc->add_option("--point", point_path, "CMPoint JSON path")->required();
    auto* cmn = cm->add_subcommand("normal-form", "diagonal chart normal form");
    cmn->add_option("--point", point_path, "CMPoint JSON path")->required();
    auto* cmi = cm->add_subcommand("invariants", "invariant record of a point");
    cmi->add_option("--point", point_path, "CMPoint JSON path")->required();
    cmi->add_option("--maxlen", maxlen, "monomial word length bound");
    auto* cmf = cm->add_subcommand("fourier", "parameter-inverting point map");
    cmf->add_option("--point", point_path, "CMPoint JSON path")->required();
    auto* cmb = cm->add_subcommand("bracket", "r-matrix bracket table suites");
    cmb->add_option("--n", n, "rank");
    cmb->add_option("--max-power", max_power, "trace power bound for the rs report");

    auto* rtt = app.add_subcommand("rtt", "quadratic exchange algebras");
    rtt->require_subcommand(1);
    auto* rdim = rtt->add_subcommand("dims", "graded dimensions against the flat expectation");
    rdim->add_option("--kind", kind, "reflection_F or double_D")
        ->check(CLI::IsMember({"reflection_F", "double_D"}));
    rdim->add_option("--n", n, "rank");
    rdim->add_option("--max-degree", max_degree, "top degree");
    auto* rcen = rtt->add_subcommand("center", "degree-d center");
    rcen->add_option("--kind", kind, "reflection_F or double_D")
        ->check(CLI::IsMember({"reflection_F", "double_D"}));
    rcen->add_option("--n", n, "rank");
    rcen->add_option("--d", cdeg, "degree");
    auto* rybe = rtt->add_subcommand("ybe", "Yang-Baxter and Hecke guards");
    rybe->add_option("--n", n, "rank");

    auto* uq = app.add_subcommand("uq", "deformed-module and torus relation suites");
    uq->require_subcommand(1);
    auto* uqc = uq->add_subcommand("check", "full defining-relation suite");
    uqc->add_option("--n", n, "rank");
    uqc->add_option("--grid", window, "weight grid bound");
    uqc->add_option("--model", model, "wt, torus, or both")
        ->check(CLI::IsMember({"wt", "torus", "both"}));
    uqc->add_flag("--mutate", mutate, "drop the deformation factors in the f action");

    // global options may follow the subcommand
    std::function<void(CLI::App*)> allow_fallthrough = [&](CLI::App* a) {
        a->fallthrough();
        for (auto* sub : a->get_subcommands({})) allow_fallthrough(sub);
    };
    allow_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Report rep;
    rep.config["seed"] = seed;
    auto t0 = std::chrono::steady_clock::now();
    auto record_time = [&](const std::string& name) {
        auto t1 = std::chrono::steady_clock::now();
        rep.timings[name] =
            std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    };

    try {
        if (vrel->parsed()) {
            rep.config["cmd"] = "verify relations";
            rep.config["n"] = n;
            rep.config["degree"] = degree;
            rep.config["mutate_t1"] = mutate;
            DahaRep<QtField> drep(kGeneric, n);
            PresentationOptions opts;
            opts.mutate_t1 = mutate;
            rep.suites.push_back(verify_presentation(drep, degree, opts));
            record_time("verify-relations");
            return finish(rep, out);
        }
        if (vpbw->parsed()) {
            rep.config["cmd"] = "verify pbw";
            rep.config["n"] = n;
            rep.config["count"] = count;
            rep.config["max_len"] = max_len;
            rep.config["degree"] = degree;
            DahaRep<QtField> drep(kGeneric, n);
            std::mt19937_64 rng(seed);
            Suite s{"pbw-round-trip", {}};
            for (int trial = 0; trial < count; ++trial) {
                std::vector<Token> toks;
                int len = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_len));
                for (int i = 0; i < len; ++i) {
                    switch (rng() % 4) {
                        case 0: toks.push_back(Token::t(static_cast<int>(rng() % static_cast<unsigned>(n)))); break;
                        case 1: toks.push_back(Token::pi((rng() % 2) ? 1 : -1)); break;
                        case 2: {
                            Weight lam = zero_weight(n);
                            lam[rng() % static_cast<unsigned>(n)] = (rng() % 2) ? 1 : -1;
                            toks.push_back(Token::x(lam));
                            break;
                        }
                        default: toks.push_back(Token::tinv(static_cast<int>(rng() % static_cast<unsigned>(n))));
                    }
                }
                DahaWord<QTScalar> w;
                w.add(QTScalar(1l), toks);
                auto e = drep.pbw_straighten(w);
                bool ok = true;
                std::string witness;
                for_each_monomial(n, degree, [&](const Weight& mu) {
                    if (!ok) return;
                    auto f = drep.monomial(mu);
                    if (!(drep.apply_daha_word(w, f) - drep.apply_element(e, f)).is_zero()) {
                        ok = false;
                        witness = "x^(" + weight_str(mu) + ")";
                    }
                });
                s.check("word " + std::to_string(trial), ok, witness);
            }
            rep.suites.push_back(std::move(s));
            record_time("verify-pbw");
            return finish(rep, out);
        }
        if (vsph->parsed()) {
            rep.config["cmd"] = "verify spherical";
            rep.config["n"] = n;
            DahaRep<QtField> drep(kGeneric, n);
            auto sd = spherical_data(drep);
            Suite s{"spherical", {}};
            QTScalar expect(0l);
            for (const auto& w : all_perms(n)) expect = expect + QTScalar::t(2 * w.length());
            s.check("a_o equals the Poincare sum", sd.a_o == expect);
            s.check("o^2 = a_o o", spherical_idempotent_check(drep, sd));
            rep.suites.push_back(std::move(s));
            json data;
            data["a_o"] = sd.a_o.str();
            record_time("verify-spherical");
            return finish(rep, out, data);
        }
        if (mac->parsed()) {
            rep.config["cmd"] = "macdonald";
            rep.config["n"] = n;
            rep.config["weight"] = weight_str_opt;
            Weight lam = parse_int_list(weight_str_opt);
            if (static_cast<int>(lam.size()) != n) fail(Err::ConfigError, "weight length != n");
            auto P = macdonald_poly(kGeneric, n, lam);
            std::vector<QTScalar> eig;
            bool joint = is_joint_eigenfunction(kGeneric, n, P, &eig);
            Suite s{"macdonald", {}};
            s.check("joint eigenfunction of the full family", joint);
            rep.suites.push_back(std::move(s));
            json data;
            json mexp = json::object();
            for (const auto& [mu, c] : P.mexp) mexp["m(" + weight_str(mu) + ")"] = c.str();
            data["m_expansion"] = mexp;
            data["eigenvalues"] = scalar_vec_json(eig);
            record_time("macdonald");
            return finish(rep, out, data);
        }
        if (hcc->parsed()) {
            rep.config["cmd"] = "hc commute";
            rep.config["n"] = n;
            rep.config["degree"] = degree;
            rep.suites.push_back(commuting_family_check(kGeneric, n, degree));
            record_time("hc-commute");
            return finish(rep, out);
        }
        if (hccmp->parsed()) {
            rep.config["cmd"] = "hc compare";
            rep.config["n"] = n;
            rep.config["degree"] = degree;
            DahaRep<QtField> drep(kGeneric, n);
            std::vector<LaurentPoly<QTScalar>> tests;
            tests.push_back(LaurentPoly<QTScalar>::constant(n, QTScalar(1l)));
            for_each_monomial(n, degree, [&](const Weight& mu) {
                if (!is_dominant(mu)) return;
                std::int64_t total = 0;
                for (auto v : mu) total += v < 0 ? -v : v;
                if (total == 0 || total > degree) return;
                tests.push_back(monomial_symmetric<QTScalar>(kGeneric, n, mu));
            });
            Suite s{"spherical-hc-compare", {}};
            json kappas = json::object();
            for (int i = 1; i <= n; ++i) {
                auto res = spherical_hc_compare(drep, i, tests);
                s.check("single constant for i = " + std::to_string(i), res.consistent,
                        res.witness);
                if (res.consistent) kappas["i=" + std::to_string(i)] = res.kappa.str();
            }
            s.check("x side is plain multiplication",
                    spherical_x_side_check(drep, 1, tests.front()) &&
                        spherical_x_side_check(drep, 1, tests.back()));
            rep.suites.push_back(std::move(s));
            json data;
            data["kappa"] = kappas;
            data["test_set_size"] = tests.size();
            record_time("hc-compare");
            return finish(rep, out, data);
        }
        if (cen->parsed()) {
            rep.config["cmd"] = "center";
            rep.config["n"] = n;
            rep.config["l"] = l;
            rep.config["k"] = kk;
            rep.config["m"] = mm;
            rep.config["window"] = window;
            if (l % 2 == 0 && !allow_even_l)
                fail(Err::ConfigError, "even l requires --allow-even-l (odd orders are the default)");
            SpecMap s(l, kk, mm);
            rep.config["conductor"] = s.h;
            rep.config["odd_l"] = s.odd_l();
            CycField cf(s);
            DahaRep<CycField> crep(cf, n);
            DahaRep<QtField> grep(kGeneric, n);
            Suite suite{"center-at-curve-point", {}};
            auto cands = central_generators(n, l);
            cands.push_back(sigma_x(n, l));
            cands.push_back(sigma_y(grep, l));
            for (const auto& cand : cands) {
                auto res = is_central_at(crep, cand, window);
                suite.check(cand.name, res.central, res.witness);
            }
            // generic non-centrality controls
            Suite controls{"generic-non-centrality-controls", {}};
            for (const auto& cand : central_generators(n, l)) {
                if (cand.name != "p_1(x^l)" && cand.name != "p_1(y^l)") continue;
                auto res = is_central(grep, cand.elt, window >= 2 ? 2 : window);
                controls.check(cand.name + " fails at generic parameters", !res.central,
                               res.central ? "unexpectedly central" : "");
            }
            rep.suites.push_back(std::move(suite));
            rep.suites.push_back(std::move(controls));
            record_time("center");
            return finish(rep, out);
        }
        if (cmp_->parsed()) {
            rep.config["cmd"] = "cm point";
            DiagPair<QTScalar> d;
            for (const auto& v : parse_int_list(h_list)) d.h.push_back(QTScalar(Int(v)));
            for (const auto& v : parse_int_list(hp_list)) d.hp.push_back(QTScalar(Int(v)));
            auto p = point_from_pair(d, parse_qt_scalar(zeta_str), QTScalar(0l), QTScalar(1l));
            Suite s{"cm-point", {}};
            s.check("moment_plus vanishes", on_variety(p));
            rep.suites.push_back(std::move(s));
            record_time("cm-point");
            return finish(rep, out, cm_point_json(p));
        }
        if (cmc->parsed()) {
            rep.config["cmd"] = "cm check";
            auto p = cm_point_from_json(load_json(point_path));
            Suite s{"cm-check", {}};
            bool zero = on_variety(p);
            s.check("moment_plus_zero", zero);
            rep.suites.push_back(std::move(s));
            json data;
            data["moment_plus_zero"] = zero;
            data["cyclic"] = is_cyclic(p, QTScalar(0l), QTScalar(1l));
            record_time("cm-check");
            return finish(rep, out, data);
        }
        if (cmn->parsed()) {
            rep.config["cmd"] = "cm normal-form";
            auto p = cm_point_from_json(load_json(point_path));
            auto d = normal_form(p, QTScalar(0l), QTScalar(1l));
            json data;
            data["h"] = scalar_vec_json(d.h);
            data["hp"] = scalar_vec_json(d.hp);
            Suite s{"cm-normal-form", {}};
            auto back = point_from_pair(d, p.zeta2l, QTScalar(0l), QTScalar(1l));
            s.check("normal form lies on the variety", on_variety(back));
            rep.suites.push_back(std::move(s));
            record_time("cm-normal-form");
            return finish(rep, out, data);
        }
        if (cmi->parsed()) {
            rep.config["cmd"] = "cm invariants";
            rep.config["maxlen"] = maxlen;
            auto p = cm_point_from_json(load_json(point_path));
            auto recd = invariants(p, maxlen, QTScalar(0l), QTScalar(1l));
            json data = json::object();
            for (const auto& [k2, v] : recd) data[k2] = v.str();
            Suite s{"cm-invariants", {}};
            s.check("record computed", true);
            rep.suites.push_back(std::move(s));
            record_time("cm-invariants");
            return finish(rep, out, data);
        }
        if (cmf->parsed()) {
            rep.config["cmd"] = "cm fourier";
            auto p = cm_point_from_json(load_json(point_path));
            auto f = fourier_point(p);
            Suite s{"cm-fourier", {}};
            s.check("image solves the inverted-parameter equation",
                    !on_variety(p) || on_variety(with_zeta(f, p.zeta2l.inverse())));
            rep.suites.push_back(std::move(s));
            record_time("cm-fourier");
            return finish(rep, out, cm_point_json(f));
        }
        if (cmb->parsed()) {
            rep.config["cmd"] = "cm bracket";
            rep.config["n"] = n;
            rep.config["max_power"] = max_power;
            if (n > 3) fail(Err::ConfigError, "symbolic bracket mode is desk scale (n <= 3)");
            PoissonTable tab(n);
            Suite s{"bracket-axioms", {}};
            std::string w;
            bool anti = tab.antisymmetry_check(w);
            s.check("antisymmetry on generators", anti, w);
            bool jac = tab.jacobi_check(w);
            s.check("jacobi on generator triples", jac, w);
            rep.suites.push_back(std::move(s));
            rep.suites.push_back(tab.rs_report(max_power));
            record_time("cm-bracket");
            return finish(rep, out);
        }
        if (rdim->parsed()) {
            rep.config["cmd"] = "rtt dims";
            rep.config["kind"] = kind;
            rep.config["n"] = n;
            rep.config["max_degree"] = max_degree;
            auto alg = build_algebra(
                kind == "reflection_F" ? AlgebraKind::ReflectionF : AlgebraKind::DoubleD, n);
            Suite s{"hilbert-series", {}};
            json rows = json::array();
            for (int d = 0; d <= max_degree; ++d) {
                std::int64_t dim = graded_dim(alg, d);
                // flat expectation: binomial(gens - 1 + d, d)
                std::int64_t expect = 1;
                for (int i = 1; i <= d; ++i)
                    expect = expect * (alg.gens - 1 + i) / i;
                bool match = dim == expect;
                rows.push_back({{"degree", d},
                                {"dimension", dim},
                                {"expected", expect},
                                {"match", match}});
                s.check("degree " + std::to_string(d), match,
                        "dim " + std::to_string(dim) + " vs " + std::to_string(expect));
            }
            rep.suites.push_back(std::move(s));
            json data;
            data["hilbert"] = rows;
            record_time("rtt-dims");
            return finish(rep, out, data);
        }
        if (rcen->parsed()) {
            rep.config["cmd"] = "rtt center";
            rep.config["kind"] = kind;
            rep.config["n"] = n;
            rep.config["d"] = cdeg;
            auto alg = build_algebra(
                kind == "reflection_F" ? AlgebraKind::ReflectionF : AlgebraKind::DoubleD, n);
            auto cb = central_elements(alg, cdeg);
            Suite s{"central-elements", {}};
            for (std::size_t i = 0; i < cb.basis.size(); ++i)
                s.check("re-verify element " + std::to_string(i),
                        central_reverify(alg, cb.basis[i], cdeg));
            rep.suites.push_back(std::move(s));
            json data;
            data["dimension"] = cb.basis.size();
            data["representatives"] = cb.pretty;
            record_time("rtt-center");
            return finish(rep, out, data);
        }
        if (rybe->parsed()) {
            rep.config["cmd"] = "rtt ybe";
            rep.config["n"] = n;
            Suite s{"ybe", {}};
            auto res = ybe_check(n);
            s.check("Yang-Baxter identity", res.pass, res.witness);
            s.check("Hecke spectral identity", hecke_identity_check(n));
            rep.suites.push_back(std::move(s));
            record_time("rtt-ybe");
            return finish(rep, out);
        }
        if (uqc->parsed()) {
            rep.config["cmd"] = "uq check";
            rep.config["n"] = n;
            rep.config["grid"] = window;
            rep.config["model"] = model;
            rep.config["mutate"] = mutate;
            if (model == "wt" || model == "both")
                rep.suites.push_back(uq_relation_check(kGeneric, n, window, UqModel::Wt, mutate));
            if (model == "torus" || model == "both")
                rep.suites.push_back(uq_relation_check(kGeneric, n, window, UqModel::Torus, mutate));
            record_time("uq-check");
            return finish(rep, out);
        }
        fail(Err::ConfigError, "no subcommand matched");
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == Err::ConfigError || e.code() == Err::IoError ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

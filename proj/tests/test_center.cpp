#include <doctest.h>

#include "daha/center.hpp"

using namespace daha;

namespace {
const QtField QF;
}

TEST_CASE("central generator lists") {
    auto gens = central_generators(2, 3);
    // contains x_1^3 + x_2^3
    bool found = false;
    for (const auto& g : gens) {
        if (g.name != "p_1(x^l)") continue;
        found = true;
        DahaElement<QTScalar> expect;
        expect[PBWKey{{3, 0}, Perm(2), {0, 0}}] = QTScalar(1l);
        expect[PBWKey{{0, 3}, Perm(2), {0, 0}}] = QTScalar(1l);
        CHECK(g.elt == expect);
    }
    CHECK(found);

    // y-side power sum y_1^3 + y_2^3 present
    found = false;
    for (const auto& g : gens) {
        if (g.name != "p_1(y^l)") continue;
        found = true;
        DahaElement<QTScalar> expect;
        expect[PBWKey{{0, 0}, Perm(2), {3, 0}}] = QTScalar(1l);
        expect[PBWKey{{0, 0}, Perm(2), {0, 3}}] = QTScalar(1l);
        CHECK(g.elt == expect);
    }
    CHECK(found);

    // n = 1, l = 2: units x_1^{±2}, y_1^{±2} and the power sums coincide up
    // to naming; all supported on 2 ZZ
    auto g1 = central_generators(1, 2);
    for (const auto& g : g1) {
        for (const auto& [k, c] : g.elt) {
            for (auto v : k.x) CHECK(v % 2 == 0);
            for (auto v : k.y) CHECK(v % 2 == 0);
        }
    }
}

TEST_CASE("sigma_x explicit form for n = 2") {
    // (X^l - 1)(X^{-l} - 1)(X^l - t^{2l})(X^{-l} - t^{2l}) with X = x_1/x_2
    unsigned l = 3;
    auto sx = sigma_x(2, l);
    // expand the expected product over the x-monomial lattice
    DahaElement<QTScalar> expect;
    auto mul_binom = [&](DahaElement<QTScalar> acc, std::int64_t e, QTScalar c) {
        DahaElement<QTScalar> next;
        for (const auto& [k, v] : acc) {
            add_to(next, PBWKey{wsum(k.x, Weight{e, -e}), k.w, k.y}, v);
            add_to(next, k, -(v * c));
        }
        return next;
    };
    expect[PBWKey{{0, 0}, Perm(2), {0, 0}}] = QTScalar(1l);
    expect = mul_binom(expect, 3, QTScalar(1l));
    expect = mul_binom(expect, -3, QTScalar(1l));
    expect = mul_binom(expect, 3, QTScalar::t(6));
    expect = mul_binom(expect, -3, QTScalar::t(6));
    CHECK(sx.elt == expect);

    // n = 1: empty product = 1
    auto s1 = sigma_x(1, 3);
    DahaElement<QTScalar> one;
    one[PBWKey{{0}, Perm(1), {0}}] = QTScalar(1l);
    CHECK(s1.elt == one);
}

TEST_CASE("centrality at a Gamma_c point, n = 2, l = 3") {
    SpecMap s(3, 2, 1);  // tau of order 3, zeta = tau^2
    CycField CF(s);
    DahaRep<CycField> rep(CF, 2);
    for (const auto& cand : central_generators(2, 3)) {
        auto res = is_central_at(rep, cand, 2);
        INFO(cand.name, " witness: ", res.witness);
        CHECK(res.central);
    }
    DahaRep<QtField> grep(QF, 2);
    for (const auto& cand : {sigma_x(2, 3), sigma_y(grep, 3)}) {
        auto res = is_central_at(rep, cand, 2);
        INFO(cand.name, " witness: ", res.witness);
        CHECK(res.central);
    }
    // trivial candidate
    CenterCandidate one{"1", 3, {}};
    one.elt[PBWKey{{0, 0}, Perm(2), {0, 0}}] = QTScalar(1l);
    CHECK(is_central_at(rep, one, 2).central);
}

TEST_CASE("non-centrality controls at generic parameters") {
    DahaRep<QtField> rep(QF, 2);
    // x_1 + x_2 commutes with the finite Hecke generators and with x's but
    // fails against a y-side generator
    DahaElement<QTScalar> e1;
    e1[PBWKey{{1, 0}, Perm(2), {0, 0}}] = QTScalar(1l);
    e1[PBWKey{{0, 1}, Perm(2), {0, 0}}] = QTScalar(1l);
    auto res = is_central(rep, e1, 2);
    CHECK(!res.central);
    CHECK(!res.witness.empty());
    // the witness generator is a y-side one (t_0 or t_pi), not t_1 or x
    CHECK(res.witness.find("x_eps1") == std::string::npos);
    CHECK(res.witness.find("t_1 ") == std::string::npos);

    // power sums of x^l at generic (q, t) are also non-central
    for (const auto& cand : central_generators(2, 3)) {
        if (cand.name != "p_1(x^l)") continue;
        auto r2 = is_central(rep, cand.elt, 2);
        CHECK(!r2.central);
    }
}

TEST_CASE("wrong specialization order is rejected") {
    SpecMap s(5, 2, 1);
    CycField CF(s);
    DahaRep<CycField> rep(CF, 2);
    auto gens = central_generators(2, 3);
    CHECK_THROWS_AS(is_central_at(rep, gens[0], 1), Error);
}

TEST_CASE("o-compressed centrality evidence, n = 2, l = 3") {
    SpecMap s(3, 2, 1);
    CycField CF(s);
    DahaRep<CycField> rep(CF, 2);
    auto gens = central_generators(2, 3);
    // spot-check the two x-side candidates (cheapest) and one y-side
    int checked = 0;
    for (const auto& cand : gens) {
        if (cand.name != "p_1(x^l)" && cand.name != "(x_1...x_n)^l" && cand.name != "p_1(y^l)")
            continue;
        auto res = spherical_center_evidence(rep, specialize_element(cand.elt, s), 1);
        INFO(cand.name, " witness: ", res.witness);
        CHECK(res.central);
        ++checked;
    }
    CHECK(checked == 3);
}
